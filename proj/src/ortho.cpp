#include "grsdual/ortho.hpp"

#include <algorithm>

#include "grsdual/errors.hpp"

namespace grsdual {
namespace {

constexpr std::uint64_t kSearchBudget = 10000000;

std::uint32_t max_dimension(std::size_t n, bool extended) {
    return static_cast<std::uint32_t>(extended ? (n + 1) / 2 : n / 2);
}

void check_dimension(std::size_t n, std::uint32_t k, bool extended) {
    if (k < 1 || k > max_dimension(n, extended))
        throw std::invalid_argument("dimension k out of range for the self-orthogonality criterion");
}

// n - 2k, nonnegative for plain certificates; -1 at most for extended.
std::int64_t degree_bound(std::size_t n, std::uint32_t k) {
    return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(k);
}

std::vector<Elem> l_inverses(const EvalPoints& points) {
    const Field& f = points.field();
    std::vector<Elem> out(points.n());
    for (std::size_t i = 0; i < points.n(); ++i) out[i] = f.inv(l_value(points, i));
    return out;
}

std::uint64_t candidate_count(std::uint64_t q, std::uint32_t free_coeffs) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < free_coeffs; ++i) {
        if (count > kSearchBudget / q + 1) return kSearchBudget + 1;
        count *= q;
        if (count > kSearchBudget) return kSearchBudget + 1;
    }
    return count;
}

}  // namespace

LambdaPoly::LambdaPoly(const Field& field, std::vector<Elem> c, bool ext)
    : coeffs(std::move(c)), extended(ext) {
    if (coeffs.empty()) throw std::invalid_argument("lambda polynomial must have coefficients");
    for (Elem e : coeffs)
        if (e.enc >= field.q()) throw std::invalid_argument("lambda coefficient out of range");
    if (extended) {
        if (coeffs.back() != field.from_int(-1))
            throw std::invalid_argument("extended lambda must have leading coefficient -1");
    } else {
        while (coeffs.size() > 1 && coeffs.back().enc == 0) coeffs.pop_back();
        if (coeffs.size() == 1 && coeffs[0].enc == 0)
            throw std::invalid_argument("lambda polynomial must be nonzero");
    }
}

Elem LambdaPoly::eval(const Field& field, Elem x) const {
    Elem acc = field.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), coeffs[i]);
    return acc;
}

QrViolationError::QrViolationError(std::size_t idx, Elem val)
    : std::runtime_error("lambda(a_i)/L(a_i) is not a nonzero square at index " + std::to_string(idx)),
      index(idx),
      value(val) {}

LambdaZeroError::LambdaZeroError(std::size_t idx)
    : std::runtime_error("lambda(a_i) = 0 at index " + std::to_string(idx)), index(idx) {}

Scaling scaling_from_lambda(const EvalPoints& points, std::uint32_t k, const LambdaPoly& lam) {
    const Field& f = points.field();
    std::size_t n = points.n();
    check_dimension(n, k, lam.extended);
    std::int64_t bound = degree_bound(n, k);
    if (lam.extended) {
        if (static_cast<std::int64_t>(lam.degree()) != bound + 1)
            throw std::invalid_argument("extended lambda must have degree exactly n - 2k + 1");
    } else {
        if (static_cast<std::int64_t>(lam.degree()) > bound)
            throw std::invalid_argument("lambda degree exceeds n - 2k");
    }

    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem li = lam.eval(f, points.at(i));
        if (li.enc == 0) throw LambdaZeroError(i);
        Elem w = f.div(li, l_value(points, i));
        if (!f.is_qr(w)) throw QrViolationError(i, w);
        v[i] = f.sqrt(w);
    }
    return Scaling(f, std::move(v));
}

std::optional<LambdaPoly> search_lambda(const EvalPoints& points, std::uint32_t k, bool extended) {
    const Field& f = points.field();
    std::size_t n = points.n();
    check_dimension(n, k, extended);
    std::uint32_t free_coeffs = static_cast<std::uint32_t>(degree_bound(n, k) + 1);
    std::uint64_t count = candidate_count(f.q(), free_coeffs);
    if (count > kSearchBudget)
        throw BudgetExceededError("lambda search space q^(n-2k+1) exceeds 10^7");

    std::vector<Elem> linv = l_inverses(points);
    Elem minus_one = f.from_int(-1);
    std::vector<Elem> coeffs(free_coeffs + (extended ? 1 : 0));
    if (extended) coeffs.back() = minus_one;

    for (std::uint64_t c = extended ? 0 : 1; c < count; ++c) {
        std::uint64_t rest = c;
        for (std::uint32_t i = 0; i < free_coeffs; ++i) {
            coeffs[i] = Elem{static_cast<std::uint32_t>(rest % f.q())};
            rest /= f.q();
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Elem acc = f.zero();
            for (std::size_t j = coeffs.size(); j-- > 0;) acc = f.add(f.mul(acc, points.at(i)), coeffs[j]);
            ok = acc.enc != 0 && f.is_qr(f.mul(acc, linv[i]));
        }
        if (ok) return LambdaPoly(f, coeffs, extended);
    }
    return std::nullopt;
}

std::optional<Scaling> selfdual_constant(const EvalPoints& points) {
    const Field& f = points.field();
    std::size_t n = points.n();
    if (n % 2 != 0) throw std::invalid_argument("self-dual constant scan requires even n");
    std::vector<Elem> linv = l_inverses(points);
    for (std::uint64_t lam = 1; lam < f.q(); ++lam) {
        Elem l{static_cast<std::uint32_t>(lam)};
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = f.is_qr(f.mul(l, linv[i]));
        if (!ok) continue;
        std::vector<Elem> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = f.sqrt(f.mul(l, linv[i]));
        return Scaling(f, std::move(v));
    }
    return std::nullopt;
}

std::optional<Scaling> selfdual_extended(const EvalPoints& points) {
    const Field& f = points.field();
    std::size_t n = points.n();
    if (n % 2 != 1) throw std::invalid_argument("extended self-dual construction requires odd n");
    std::vector<Elem> linv = l_inverses(points);
    Elem minus_one = f.from_int(-1);
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem w = f.mul(minus_one, linv[i]);
        if (!f.is_qr(w)) return std::nullopt;
        v[i] = f.sqrt(w);
    }
    return Scaling(f, std::move(v));
}

std::vector<Elem> interpolate(const Field& f, const std::vector<Elem>& xs,
                              const std::vector<Elem>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolation needs matching nonempty inputs");
    std::size_t n = xs.size();

    // master(x) = prod_j (x - x_j), built incrementally
    std::vector<Elem> master(n + 1, f.zero());
    master[0] = f.one();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j + 1; i-- > 0;) {
            master[i + 1] = f.add(master[i + 1], master[i]);
            master[i] = f.mul(master[i], f.neg(xs[j]));
        }
    }

    std::vector<Elem> out(n, f.zero());
    std::vector<Elem> quot(n);
    for (std::size_t i = 0; i < n; ++i) {
        // synthetic division: quot = master / (x - x_i)
        Elem carry = master[n];
        for (std::size_t d = n; d-- > 0;) {
            quot[d] = carry;
            carry = f.add(master[d], f.mul(carry, xs[i]));
        }
        // quot(x_i) = prod_{j != i} (x_i - x_j) = L(x_i)
        Elem denom = f.zero();
        for (std::size_t d = n; d-- > 0;) denom = f.add(f.mul(denom, xs[i]), quot[d]);
        Elem scale = f.div(ys[i], denom);
        for (std::size_t d = 0; d < n; ++d) out[d] = f.add(out[d], f.mul(scale, quot[d]));
    }
    return out;
}

std::optional<LambdaPoly> recover_lambda(const EvalPoints& points, std::uint32_t k,
                                         const Scaling& scaling, bool extended) {
    const Field& f = points.field();
    std::size_t n = points.n();
    check_dimension(n, k, extended);
    if (scaling.size() != n) throw std::invalid_argument("scaling length must match point count");

    std::vector<Elem> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem vi = scaling.at(i);
        ys[i] = f.mul(f.mul(vi, vi), l_value(points, i));
    }
    std::vector<Elem> coeffs = interpolate(f, points.points(), ys);
    std::size_t deg = coeffs.size();
    while (deg > 1 && coeffs[deg - 1].enc == 0) --deg;
    coeffs.resize(deg);

    std::int64_t bound = degree_bound(n, k);
    if (extended) {
        if (static_cast<std::int64_t>(coeffs.size()) != bound + 2 || coeffs.back() != f.from_int(-1))
            return std::nullopt;
        return LambdaPoly(f, std::move(coeffs), true);
    }
    if (static_cast<std::int64_t>(coeffs.size()) > bound + 1) return std::nullopt;
    return LambdaPoly(f, std::move(coeffs), false);
}

}  // namespace grsdual
