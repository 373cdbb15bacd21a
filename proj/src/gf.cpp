#include "grsdual/gf.hpp"

#include <algorithm>

namespace grsdual {
namespace {

// Polynomial helpers over GF(p) used only during field construction.
// Polynomials are coefficient vectors, constant term first, no implied
// normalization (callers trim when needed).

using Poly = std::vector<std::uint32_t>;

std::size_t degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    return out;
}

// Remainder of f by a monic divisor d.
Poly poly_rem(Poly f, const Poly& d, std::uint32_t p) {
    std::size_t dd = degree(d);
    while (!is_zero(f) && degree(f) >= dd) {
        std::size_t df = degree(f);
        std::uint32_t lead = f[df];
        for (std::size_t i = 0; i <= dd; ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(lead) * d[i] % p;
            std::uint32_t& c = f[df - dd + i];
            c = static_cast<std::uint32_t>((c + p - t) % p);
        }
    }
    f.resize(dd == 0 ? 1 : dd, 0);
    f.resize(degree(f) + 1);
    return f;
}

std::uint32_t poly_enc(const Poly& f, std::uint32_t p) {
    std::uint64_t enc = 0, place = 1;
    for (std::uint32_t c : f) {
        enc += c * place;
        place *= p;
    }
    return static_cast<std::uint32_t>(enc);
}

Poly poly_dec(std::uint64_t enc, std::uint32_t p, std::uint32_t len) {
    Poly f(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        f[i] = static_cast<std::uint32_t>(enc % p);
        enc /= p;
    }
    return f;
}

// Irreducibility over GF(p) by trial division against every monic
// polynomial of degree 1 .. deg(f)/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t m = degree(f);
    if (m == 1) return true;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div = poly_dec(v, p, static_cast<std::uint32_t>(d + 1));
            div[d] = 1;
            if (is_zero(poly_rem(f, div, p))) return false;
        }
    }
    return true;
}

Poly canonical_modulus(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return Poly{0, 1};  // x: GF(p) itself
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f = poly_dec(v, p, m + 1);
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    return poly_rem(poly_mul(a, b, p), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly acc{1};
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return acc;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool has_order_q_minus_1(const Poly& e, const Poly& mod, std::uint32_t p, std::uint64_t ord,
                         const std::vector<std::uint64_t>& ord_factors) {
    for (std::uint64_t f : ord_factors) {
        Poly t = poly_powmod(e, ord / f, mod, p);
        if (degree(t) == 0 && t[0] == 1) return false;
    }
    // Order divides ord and divides no maximal proper divisor, so it is ord.
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("extension degree out of range [1, 12]");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxCardinality) throw std::invalid_argument("p^m exceeds the table bound 2^26");
    }

    Poly mod = canonical_modulus(p, m);
    std::uint64_t ord = q - 1;
    auto factors = prime_factors(ord);
    for (std::uint64_t enc = 2; enc < q; ++enc) {
        Poly cand = poly_dec(enc, p, m);
        if (has_order_q_minus_1(cand, mod, p, ord, factors)) {
            Field f;
            f.init(p, m, std::move(mod), static_cast<std::uint32_t>(enc));
            return f;
        }
    }
    throw std::logic_error("no primitive element found");  // unreachable
}

Field Field::from_spec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                       std::uint32_t g_enc) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("extension degree out of range [1, 12]");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxCardinality) throw std::invalid_argument("p^m exceeds the table bound 2^26");
    }
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (std::uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    if (g_enc == 0 || g_enc >= q) throw std::invalid_argument("g encoding out of range");
    auto factors = prime_factors(q - 1);
    if (!has_order_q_minus_1(poly_dec(g_enc, p, m), modulus, p, q - 1, factors))
        throw std::invalid_argument("g is not primitive");

    Field f;
    f.init(p, m, std::move(modulus), g_enc);
    return f;
}

void Field::init(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                 std::uint32_t g_enc) {
    p_ = p;
    m_ = m;
    q_ = 1;
    for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
    ord_ = q_ - 1;
    pmagic_ = ~std::uint64_t{0} / p + 1;
    modulus_ = std::move(modulus);
    g_ = Elem{g_enc};

    exp_.assign(2 * ord_, 0);
    log_.assign(q_, 0);
    Poly g = poly_dec(g_enc, p, m);
    Poly cur{1};
    for (std::uint64_t e = 0; e < ord_; ++e) {
        std::uint32_t enc = poly_enc(cur, p);
        exp_[e] = enc;
        exp_[e + ord_] = enc;
        log_[enc] = static_cast<std::uint32_t>(e);
        cur = poly_mulmod(cur, g, modulus_, p);
    }
    if (degree(cur) != 0 || cur[0] != 1) throw std::logic_error("primitive element order mismatch");
}

Elem Field::add_digits(Elem a, Elem b) const {
    std::uint32_t res = 0, place = 1;
    std::uint32_t x = a.enc, y = b.enc;
    for (std::uint32_t d = 0; d < m_; ++d) {
        std::uint32_t xd = x - div_p(x) * p_;
        std::uint32_t yd = y - div_p(y) * p_;
        std::uint32_t s = xd + yd;
        if (s >= p_) s -= p_;
        res += s * place;
        place *= p_;
        x = div_p(x);
        y = div_p(y);
    }
    return Elem{res};
}

Elem Field::neg_digits(Elem a) const {
    std::uint32_t res = 0, place = 1;
    std::uint32_t x = a.enc;
    for (std::uint32_t d = 0; d < m_; ++d) {
        std::uint32_t xd = x - div_p(x) * p_;
        res += (xd == 0 ? 0 : p_ - xd) * place;
        place *= p_;
        x = div_p(x);
    }
    return Elem{res};
}

}  // namespace grsdual
