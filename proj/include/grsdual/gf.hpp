#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grsdual {

// Field element in canonical integer encoding: the residue-class
// representative sum c_i x^i (0 <= c_i < p) is stored as sum c_i p^i.
// The encoding is a bijection between GF(p^m) and [0, p^m).
struct Elem {
    std::uint32_t enc = 0;
    constexpr auto operator<=>(const Elem&) const = default;
};

/// Exact arithmetic in GF(p^m) for an odd prime p.
///
/// The field model is deterministic in (p, m): the modulus is the
/// lexicographically smallest monic irreducible polynomial of degree m
/// over GF(p) (coefficient tuples (c_{m-1}, ..., c_0) compared as
/// integers), and g is the nonzero element of smallest canonical
/// encoding whose multiplicative order is q - 1. All multiplicative
/// structure runs on dual exp/log tables, bounded by q <= 2^26.
///
/// A Field is immutable after construction; every operation is
/// read-only and safe for unrestricted concurrent use.
class Field {
public:
    static constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 26;
    static constexpr std::uint32_t kMaxDegree = 12;

    /// Deterministic field for (p, m); builds the exp/log tables.
    static Field make(std::uint32_t p, std::uint32_t m);

    /// Field from an explicit model (e.g. parsed from a code-spec file).
    /// Validates that `modulus` is monic irreducible of degree m with
    /// constant term first and that g_enc has order exactly q - 1.
    static Field from_spec(std::uint32_t p, std::uint32_t m,
                           std::vector<std::uint32_t> modulus, std::uint32_t g_enc);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field(Field&&) = default;
    Field& operator=(Field&&) = default;

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t order() const { return ord_; }  // q - 1
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem g() const { return g_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }

    /// Element from a canonical encoding, range-checked.
    Elem element(std::uint64_t enc) const {
        if (enc >= q_) throw std::invalid_argument("element encoding out of range");
        return Elem{static_cast<std::uint32_t>(enc)};
    }

    /// The integer n embedded in the prime subfield (n mod p).
    Elem from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return Elem{static_cast<std::uint32_t>(r)};
    }

    Elem add(Elem a, Elem b) const {
        if (m_ == 1) {
            std::uint32_t s = a.enc + b.enc;
            return Elem{s >= p_ ? s - p_ : s};
        }
        return add_digits(a, b);
    }

    Elem neg(Elem a) const {
        if (m_ == 1) return Elem{a.enc == 0 ? 0 : p_ - a.enc};
        return neg_digits(a);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.enc == 0 || b.enc == 0) return Elem{0};
        return Elem{exp_[log_[a.enc] + log_[b.enc]]};
    }

    Elem inv(Elem a) const {
        if (a.enc == 0) throw std::domain_error("inversion of zero");
        return Elem{exp_[ord_ - log_[a.enc]]};
    }

    Elem div(Elem a, Elem b) const {
        if (b.enc == 0) throw std::domain_error("division by zero");
        if (a.enc == 0) return Elem{0};
        return Elem{exp_[log_[a.enc] + ord_ - log_[b.enc]]};
    }

    /// a^e with the convention a^0 = 1 (including a = 0).
    Elem pow(Elem a, std::int64_t e) const {
        if (a.enc == 0) {
            if (e == 0) return one();
            if (e < 0) throw std::domain_error("negative power of zero");
            return zero();
        }
        std::int64_t er = e % static_cast<std::int64_t>(ord_);
        if (er < 0) er += static_cast<std::int64_t>(ord_);
        std::uint64_t idx = (static_cast<std::uint64_t>(log_[a.enc]) * static_cast<std::uint64_t>(er)) % ord_;
        return Elem{exp_[idx]};
    }

    /// g^e for arbitrary (possibly negative) integer exponent.
    Elem g_pow(std::int64_t e) const {
        std::int64_t er = e % static_cast<std::int64_t>(ord_);
        if (er < 0) er += static_cast<std::int64_t>(ord_);
        return Elem{exp_[er]};
    }

    /// Discrete log base g; defined for nonzero elements only.
    std::uint32_t dlog(Elem a) const {
        if (a.enc == 0) throw std::domain_error("discrete log of zero");
        return log_[a.enc];
    }

    /// True iff a is a nonzero square (zero is not in QR_q).
    bool is_qr(Elem a) const { return a.enc != 0 && (log_[a.enc] & 1u) == 0; }

    /// Canonical square root: of the two roots of a residue, the one
    /// with the smaller canonical encoding; sqrt(0) = 0.
    Elem sqrt(Elem a) const {
        if (a.enc == 0) return Elem{0};
        std::uint32_t la = log_[a.enc];
        if (la & 1u) throw std::domain_error("square root of a non-residue");
        Elem w{exp_[la / 2]};
        Elem w2 = neg(w);
        return w.enc <= w2.enc ? w : w2;
    }

    bool same_spec(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ && g_ == other.g_;
    }

private:
    Field() = default;
    void init(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
              std::uint32_t g_enc);

    Elem add_digits(Elem a, Elem b) const;
    Elem neg_digits(Elem a) const;

    std::uint32_t div_p(std::uint32_t x) const {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(x) * pmagic_) >> 64);
    }
    std::uint32_t mod_p(std::uint32_t x) const { return x - div_p(x) * p_; }

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t ord_ = 0;
    std::uint64_t pmagic_ = 0;  // floor(2^64 / p) + 1, for division by p
    std::vector<std::uint32_t> modulus_;  // constant term first, monic, length m + 1
    Elem g_{};
    std::vector<std::uint32_t> exp_;  // size 2 * ord: exp_[e] = enc(g^e), doubled to skip a mod
    std::vector<std::uint32_t> log_;  // size q: log_[enc] = e with g^e = enc; log_[0] unused
};

bool is_prime(std::uint64_t n);

}  // namespace grsdual
