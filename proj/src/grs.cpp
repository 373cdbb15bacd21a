#include "grsdual/grs.hpp"

#include <algorithm>
#include <unordered_set>

namespace grsdual {

EvalPoints::EvalPoints(const Field& field, std::vector<Elem> a) : field_(&field), a_(std::move(a)) {
    if (a_.empty()) throw std::invalid_argument("evaluation points must be nonempty");
    if (a_.size() > field.q()) throw std::invalid_argument("more evaluation points than field elements");
    std::unordered_set<std::uint32_t> seen;
    for (Elem e : a_) {
        if (e.enc >= field.q()) throw std::invalid_argument("evaluation point out of range");
        if (!seen.insert(e.enc).second) throw std::invalid_argument("evaluation points must be distinct");
    }
}

Scaling::Scaling(const Field& field, std::vector<Elem> v) : v_(std::move(v)) {
    for (Elem e : v_) {
        if (e.enc == 0) throw std::invalid_argument("scaling entries must be nonzero");
        if (e.enc >= field.q()) throw std::invalid_argument("scaling entry out of range");
    }
}

GrsCode::GrsCode(EvalPoints points_, Scaling scaling_, std::uint32_t k_, bool extended_)
    : points(std::move(points_)), scaling(std::move(scaling_)), k(k_), extended(extended_) {
    if (scaling.size() != points.n()) throw std::invalid_argument("scaling length must match point count");
    std::size_t kmax = points.n() + (extended ? 1 : 0);
    if (k < 1 || k > kmax) throw std::invalid_argument("dimension k out of range");
}

Elem l_value(const EvalPoints& points, std::size_t i) {
    if (i >= points.n()) throw std::invalid_argument("point index out of range");
    const Field& f = points.field();
    Elem ai = points.at(i);
    Elem acc = f.one();
    for (std::size_t j = 0; j < points.n(); ++j) {
        if (j == i) continue;
        acc = f.mul(acc, f.sub(ai, points.at(j)));
    }
    return acc;
}

Elem power_sum_check(const EvalPoints& points, std::uint32_t m) {
    if (m >= points.n()) throw std::invalid_argument("exponent m must satisfy 0 <= m <= n-1");
    const Field& f = points.field();
    Elem acc = f.zero();
    for (std::size_t i = 0; i < points.n(); ++i) {
        Elem term = f.div(f.pow(points.at(i), m), l_value(points, i));
        acc = f.add(acc, term);
    }
    return acc;
}

GenMatrix generator_matrix(const GrsCode& code) {
    const Field& f = code.field();
    std::size_t n = code.n();
    GenMatrix g(code.k, code.length());
    for (std::uint32_t row = 0; row < code.k; ++row) {
        for (std::size_t i = 0; i < n; ++i)
            g.at(row, i) = f.mul(code.scaling.at(i), f.pow(code.points.at(i), row));
        if (code.extended) g.at(row, n) = (row + 1 == code.k) ? f.one() : f.zero();
    }
    return g;
}

Elem coset_product(const Field& field, std::uint64_t mdiv, std::uint64_t i) {
    if (mdiv == 0 || field.order() % mdiv != 0)
        throw std::invalid_argument("mdiv must divide q - 1");
    if (i < 1 || i > mdiv) throw std::invalid_argument("i must lie in [1, mdiv]");
    std::int64_t step = static_cast<std::int64_t>(field.order() / mdiv);
    Elem alpha_i = field.g_pow(step * static_cast<std::int64_t>(i));
    Elem direct = field.one();
    for (std::uint64_t j = 1; j <= mdiv; ++j) {
        if (j == i) continue;
        direct = field.mul(direct, field.sub(alpha_i, field.g_pow(step * static_cast<std::int64_t>(j))));
    }
    Elem closed = field.mul(field.from_int(static_cast<std::int64_t>(mdiv)),
                            field.g_pow(-step * static_cast<std::int64_t>(i)));
    if (direct != closed) throw std::logic_error("root-of-unity product identity violated");
    return closed;
}

}  // namespace grsdual
