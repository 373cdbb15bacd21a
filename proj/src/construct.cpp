#include "grsdual/construct.hpp"

#include <map>
#include <unordered_set>

#include "grsdual/ortho.hpp"

namespace grsdual {
namespace {

using i64 = std::int64_t;

// g-exponent of gamma: (r+1)/2 for the r = 1 (mod 4) layout, (r-1)/2
// for r = 3 (mod 4).
i64 gamma_exp(const CosetPlan& plan) {
    return plan.r % 4 == 1 ? (plan.r + 1) / 2 : (plan.r - 1) / 2;
}

Elem apow(const CosetPlan& p, i64 e) { return p.field->g_pow((i64(p.r) + 1) * e); }
Elem bpow(const CosetPlan& p, i64 e) { return p.field->g_pow((i64(p.r) - 1) * e); }
Elem cpow(const CosetPlan& p, i64 e) { return p.field->g_pow(gamma_exp(p) * e); }

int parity(i64 e) { return static_cast<int>(((e % 2) + 2) % 2); }

bool is_odd_prime_power(std::uint32_t r) {
    if (r < 3 || r % 2 == 0) return false;
    std::uint32_t p = 3;
    while (p * p <= r && r % p != 0) p += 2;
    if (r % p != 0) p = r;  // r itself prime
    std::uint32_t v = r;
    while (v % p == 0) v /= p;
    return v == 1;
}

}  // namespace

std::string to_string(PlanCase c) {
    switch (c) {
        case PlanCase::thm1_i: return "thm1-i";
        case PlanCase::thm1_ii: return "thm1-ii";
        case PlanCase::thm2_case1: return "thm2-case1";
        case PlanCase::thm2_case2: return "thm2-case2";
        case PlanCase::thm3_i: return "thm3-i";
        case PlanCase::thm3_ii: return "thm3-ii";
    }
    return "?";
}

PlanCase plan_case_from_string(const std::string& s) {
    if (s == "thm1-i") return PlanCase::thm1_i;
    if (s == "thm1-ii") return PlanCase::thm1_ii;
    if (s == "thm2-case1") return PlanCase::thm2_case1;
    if (s == "thm2-case2") return PlanCase::thm2_case2;
    if (s == "thm3-i") return PlanCase::thm3_i;
    if (s == "thm3-ii") return PlanCase::thm3_ii;
    throw std::invalid_argument("unknown construction case: " + s);
}

std::string to_string(CodeKind k) {
    switch (k) {
        case CodeKind::selfdual: return "selfdual";
        case CodeKind::selforthogonal: return "selforthogonal";
        case CodeKind::almost_selfdual: return "almost";
    }
    return "?";
}

CodeKind code_kind_from_string(const std::string& s) {
    if (s == "selfdual") return CodeKind::selfdual;
    if (s == "selforthogonal") return CodeKind::selforthogonal;
    if (s == "almost") return CodeKind::almost_selfdual;
    throw std::invalid_argument("unknown code kind: " + s);
}

std::uint32_t coset_root(const Field& field) {
    if (field.m() % 2 != 0)
        throw std::invalid_argument("field cardinality is not the square of an odd prime power");
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < field.m() / 2; ++i) r *= field.p();
    return static_cast<std::uint32_t>(r);
}

CosetPlan CosetPlan::make(const Field& field, PlanCase tag, std::uint32_t s, std::uint32_t t) {
    std::uint32_t r = coset_root(field);
    bool wants_mod1 = tag == PlanCase::thm1_i || tag == PlanCase::thm2_case1 || tag == PlanCase::thm3_i;
    if (wants_mod1 != (r % 4 == 1))
        throw std::invalid_argument("construction case " + to_string(tag) + " requires r = " +
                                    (wants_mod1 ? std::string("1") : std::string("3")) + " (mod 4)");
    if (s < 1 || s > (r + 1) / 2) throw std::invalid_argument("s must lie in [1, (r+1)/2]");
    if (t < 1 || t > (r - 1) / 2) throw std::invalid_argument("t must lie in [1, (r-1)/2]");
    if (tag == PlanCase::thm1_i && s % 2 != 0)
        throw std::invalid_argument("self-dual case (i) requires s even when r = 1 (mod 4)");
    if (tag == PlanCase::thm1_ii && s % 2 != 1)
        throw std::invalid_argument("self-dual case (ii) requires s odd when r = 3 (mod 4)");
    if (tag == PlanCase::thm3_i && s % 2 != 1)
        throw std::invalid_argument("almost self-dual case (i) requires s odd when r = 1 (mod 4)");
    if (tag == PlanCase::thm3_ii && s % 2 != 0)
        throw std::invalid_argument("almost self-dual case (ii) requires s even when r = 3 (mod 4)");

    CosetPlan plan;
    plan.field = &field;
    plan.r = r;
    plan.s = s;
    plan.t = t;
    plan.tag = tag;
    plan.alpha = field.g_pow(i64(r) + 1);
    plan.beta = field.g_pow(i64(r) - 1);
    plan.n = s * (r - 1) + t * (r + 1) + (plan.appends_zero() ? 1 : 0);
    plan.gamma = field.g_pow(gamma_exp(plan));
    return plan;
}

EvalPoints assemble_points(const CosetPlan& plan) {
    const Field& f = *plan.field;
    i64 r = plan.r;
    std::vector<Elem> a;
    a.reserve(plan.n);
    if (plan.style_i()) {
        for (std::uint32_t i = 0; i < plan.s; ++i)
            for (i64 j = 0; j < r - 1; ++j) a.push_back(f.g_pow((r - 1) * i + (r + 1) * j));
        for (std::uint32_t i = 0; i < plan.t; ++i)
            for (i64 j = 0; j < r + 1; ++j)
                a.push_back(f.g_pow(gamma_exp(plan) * (2 * i64(i) + 1) + (r - 1) * j));
    } else {
        for (std::uint32_t i = 0; i < plan.t; ++i)
            for (i64 j = 0; j < r + 1; ++j) a.push_back(f.g_pow((r + 1) * i + (r - 1) * j));
        for (std::uint32_t i = 0; i < plan.s; ++i)
            for (i64 j = 0; j < r - 1; ++j)
                a.push_back(f.g_pow(gamma_exp(plan) * (2 * i64(i) + 1) + (r + 1) * j));
    }
    if (plan.appends_zero()) a.push_back(f.zero());

    std::unordered_set<std::uint32_t> seen;
    for (Elem e : a)
        if (!seen.insert(e.enc).second)
            throw std::logic_error("coset plan produced duplicate evaluation points");
    return EvalPoints(f, std::move(a));
}

std::size_t point_index(const CosetPlan& plan, PointCoord c) {
    std::uint32_t first_cosets = plan.style_i() ? plan.s : plan.t;
    std::uint32_t first_len = plan.style_i() ? plan.r - 1 : plan.r + 1;
    std::uint32_t second_cosets = plan.style_i() ? plan.t : plan.s;
    std::uint32_t second_len = plan.style_i() ? plan.r + 1 : plan.r - 1;
    switch (c.block) {
        case CosetBlock::first:
            if (c.i >= first_cosets || c.j >= first_len)
                throw std::invalid_argument("coset coordinates out of range");
            return std::size_t{c.i} * first_len + c.j;
        case CosetBlock::second:
            if (c.i >= second_cosets || c.j >= second_len)
                throw std::invalid_argument("coset coordinates out of range");
            return std::size_t{first_cosets} * first_len + std::size_t{c.i} * second_len + c.j;
        case CosetBlock::zero:
            if (!plan.appends_zero())
                throw std::invalid_argument("plan has no zero evaluation point");
            return plan.n - 1;
    }
    throw std::invalid_argument("bad coset block");
}

PointCoord coord_of_index(const CosetPlan& plan, std::size_t index) {
    if (index >= plan.n) throw std::invalid_argument("point index out of range");
    if (plan.appends_zero() && index == std::size_t{plan.n} - 1) return {CosetBlock::zero, 0, 0};
    std::uint32_t first_cosets = plan.style_i() ? plan.s : plan.t;
    std::uint32_t first_len = plan.style_i() ? plan.r - 1 : plan.r + 1;
    std::uint32_t second_len = plan.style_i() ? plan.r + 1 : plan.r - 1;
    std::size_t first_total = std::size_t{first_cosets} * first_len;
    if (index < first_total)
        return {CosetBlock::first, static_cast<std::uint32_t>(index / first_len),
                static_cast<std::uint32_t>(index % first_len)};
    index -= first_total;
    return {CosetBlock::second, static_cast<std::uint32_t>(index / second_len),
            static_cast<std::uint32_t>(index % second_len)};
}

Elem closed_form_u(const CosetPlan& plan, PointCoord c) {
    const Field& f = *plan.field;
    i64 s = plan.s, i = c.i, j = c.j;
    Elem u = f.one();
    if (plan.style_i()) {
        if (c.block == CosetBlock::first) {
            // prod_{l != i} (beta^{-2i} - beta^{-2l})
            for (i64 l = 0; l < s; ++l)
                if (l != i) u = f.mul(u, f.sub(bpow(plan, -2 * i), bpow(plan, -2 * l)));
        } else if (c.block == CosetBlock::second) {
            // prod_h (beta^{-2j} + beta^{-2h})
            for (i64 h = 0; h < s; ++h) u = f.mul(u, f.add(bpow(plan, -2 * j), bpow(plan, -2 * h)));
        }
    } else {
        if (c.block == CosetBlock::first) {
            // prod_h (beta^{j(r-1)} - gamma^{(2h+1)(r-1)})
            i64 r = plan.r;
            for (i64 h = 0; h < s; ++h)
                u = f.mul(u, f.sub(f.g_pow((r - 1) * (r - 1) * j),
                                   cpow(plan, (2 * h + 1) * (r - 1))));
        } else if (c.block == CosetBlock::second) {
            // prod_{l != i} (gamma^{(2i+1)(r-1)} - gamma^{(2l+1)(r-1)})
            i64 r = plan.r;
            for (i64 l = 0; l < s; ++l)
                if (l != i)
                    u = f.mul(u, f.sub(cpow(plan, (2 * i + 1) * (r - 1)),
                                       cpow(plan, (2 * l + 1) * (r - 1))));
        }
    }
    return u;
}

int u_parity_claim(const CosetPlan& plan, PointCoord c) {
    i64 r = plan.r, s = plan.s, i = c.i, j = c.j;
    if (plan.style_i()) {
        if (c.block == CosetBlock::first)
            return parity((r + 1) * (s - 1) / 2 + 2 * ((s - 2) * i + s * (s - 1) / 2));
        if (c.block == CosetBlock::second) return parity(2 * (s * j + s * (s - 1) / 2));
    } else {
        if (c.block == CosetBlock::first)
            return parity((r + 1) * s / 2 - (s * s + 2 * s * j) * (r - 1) / 2);
        if (c.block == CosetBlock::second)
            return parity((r + 1) * (s - 1) / 2 - (r - 1) / 2 * ((s - 2) * (2 * i + 1) + s * s));
    }
    throw std::invalid_argument("no u factor at the zero point");
}

Elem closed_form_l(const CosetPlan& plan, PointCoord c) {
    const Field& f = *plan.field;
    i64 r = plan.r, s = plan.s, t = plan.t, i = c.i, j = c.j;
    bool zero_variant = plan.appends_zero();

    if (c.block == CosetBlock::zero) {
        if (!zero_variant) throw std::invalid_argument("plan has no zero evaluation point");
        if (plan.style_i()) {
            Elem acc = apow(plan, (r - 2) * (r - 1) * s / 2);
            acc = f.mul(acc, bpow(plan, ((r - 1) * (s - 1) * s + r * (r + 1) * t) / 2));
            return f.mul(acc, cpow(plan, (r + 1) * t * t));
        }
        Elem acc = apow(plan, ((r + 1) * (t - 1) * t + (r - 2) * (r - 1) * s) / 2);
        acc = f.mul(acc, bpow(plan, r * (r + 1) * t / 2));
        return f.mul(acc, cpow(plan, (r - 1) * s * s));
    }

    Elem u = closed_form_u(plan, c);
    if (plan.style_i()) {
        if (c.block == CosetBlock::first) {
            // point beta^i alpha^j
            Elem w = f.one();
            for (i64 l = 0; l < t; ++l)
                w = f.mul(w, f.sub(apow(plan, j * (r + 1)), cpow(plan, (2 * l + 1) * (r + 1))));
            Elem head = zero_variant ? bpow(plan, i * (r - 1))
                                     : f.mul(bpow(plan, i * (r - 2)), apow(plan, -j));
            return f.mul(f.mul(head, f.from_int(r - 1)), f.mul(u, w));
        }
        // point gamma^{2i+1} beta^j
        Elem prod = f.one();
        for (i64 l = 0; l < t; ++l)
            if (l != i)
                prod = f.mul(prod, f.sub(cpow(plan, (2 * i + 1) * (r + 1)),
                                         cpow(plan, (2 * l + 1) * (r + 1))));
        Elem head = zero_variant ? cpow(plan, (r + 1) * (2 * i + 1))
                                 : f.mul(cpow(plan, r * (2 * i + 1)), bpow(plan, -j));
        Elem sign = f.from_int(s % 2 == 0 ? 1 : -1);
        return f.mul(f.mul(head, f.from_int(r + 1)), f.mul(prod, f.mul(sign, u)));
    }

    if (c.block == CosetBlock::first) {
        // point alpha^i beta^j
        Elem prod = f.one();
        for (i64 l = 0; l < t; ++l)
            if (l != i) prod = f.mul(prod, f.sub(apow(plan, i * (r + 1)), apow(plan, l * (r + 1))));
        Elem head = zero_variant ? apow(plan, i * (r + 1))
                                 : f.mul(apow(plan, i * r), bpow(plan, -j));
        return f.mul(f.mul(head, f.from_int(r + 1)), f.mul(prod, u));
    }
    // point gamma^{2i+1} alpha^j
    Elem prod = f.one();
    for (i64 h = 0; h < t; ++h)
        prod = f.mul(prod, f.sub(f.neg(apow(plan, j * (r + 1))), apow(plan, h * (r + 1))));
    Elem head = zero_variant ? cpow(plan, (r - 1) * (2 * i + 1))
                             : f.mul(cpow(plan, (r - 2) * (2 * i + 1)), apow(plan, -j));
    return f.mul(f.mul(head, f.from_int(r - 1)), f.mul(u, prod));
}

TheoremContradictionError::TheoremContradictionError(std::uint64_t q_, std::uint32_t s_,
                                                     std::uint32_t t_, std::size_t index_)
    : std::runtime_error("construction contradicts its theorem: the square condition fails at q=" +
                         std::to_string(q_) + " s=" + std::to_string(s_) + " t=" +
                         std::to_string(t_) + " index=" + std::to_string(index_)),
      q(q_),
      s(s_),
      t(t_),
      index(index_) {}

namespace {

GrsCode certify(const CosetPlan& plan, const LambdaPoly& lam, std::uint32_t k) {
    EvalPoints points = assemble_points(plan);
    try {
        Scaling v = scaling_from_lambda(points, k, lam);
        return GrsCode(std::move(points), std::move(v), k, false);
    } catch (const QrViolationError& e) {
        throw TheoremContradictionError(plan.field->q(), plan.s, plan.t, e.index);
    } catch (const LambdaZeroError& e) {
        throw TheoremContradictionError(plan.field->q(), plan.s, plan.t, e.index);
    }
}

}  // namespace

Construction build_selfdual(const Field& field, std::uint32_t s, std::uint32_t t) {
    std::uint32_t r = coset_root(field);
    CosetPlan plan = CosetPlan::make(field, r % 4 == 1 ? PlanCase::thm1_i : PlanCase::thm1_ii, s, t);
    LambdaPoly lam(field, {plan.gamma}, false);
    GrsCode code = certify(plan, lam, plan.n / 2);
    return {plan, std::move(code)};
}

Construction build_selforthogonal(const Field& field, std::uint32_t s, std::uint32_t t,
                                  std::uint32_t k) {
    std::uint32_t r = coset_root(field);
    CosetPlan plan =
        CosetPlan::make(field, r % 4 == 1 ? PlanCase::thm2_case1 : PlanCase::thm2_case2, s, t);
    if (k < 1 || k > plan.n / 2 - 1)
        throw std::invalid_argument("self-orthogonal dimension requires 1 <= k <= n/2 - 1");
    // gamma certifies the s parity that matches the self-dual case; the
    // identity polynomial x certifies the opposite parity.
    bool gamma_parity = (r % 4 == 1) ? (s % 2 == 0) : (s % 2 == 1);
    LambdaPoly lam = gamma_parity ? LambdaPoly(field, {plan.gamma}, false)
                                  : LambdaPoly(field, {field.zero(), field.one()}, false);
    GrsCode code = certify(plan, lam, k);
    return {plan, std::move(code)};
}

Construction build_almost_selfdual(const Field& field, std::uint32_t s, std::uint32_t t) {
    std::uint32_t r = coset_root(field);
    CosetPlan plan = CosetPlan::make(field, r % 4 == 1 ? PlanCase::thm3_i : PlanCase::thm3_ii, s, t);
    LambdaPoly lam(field, {field.one()}, false);
    GrsCode code = certify(plan, lam, (plan.n - 1) / 2);
    return {plan, std::move(code)};
}

std::vector<LengthWitness> enumerate_lengths_r(std::uint32_t r, CodeKind kind) {
    if (!is_odd_prime_power(r))
        throw std::invalid_argument("q must be the square of an odd prime power");
    std::map<std::uint32_t, LengthWitness> by_n;
    std::uint32_t extra = kind == CodeKind::almost_selfdual ? 1 : 0;
    for (std::uint32_t s = 1; s <= (r + 1) / 2; ++s) {
        if (kind == CodeKind::selfdual) {
            bool want_even = r % 4 == 1;
            if ((s % 2 == 0) != want_even) continue;
        } else if (kind == CodeKind::almost_selfdual) {
            bool want_odd = r % 4 == 1;
            if ((s % 2 == 1) != want_odd) continue;
        }
        for (std::uint32_t t = 1; t <= (r - 1) / 2; ++t) {
            std::uint32_t n = s * (r - 1) + t * (r + 1) + extra;
            by_n.try_emplace(n, LengthWitness{n, s, t});  // first hit = smallest s, then t
        }
    }
    std::vector<LengthWitness> out;
    out.reserve(by_n.size());
    for (auto& [n, w] : by_n) out.push_back(w);
    return out;
}

std::vector<LengthWitness> enumerate_lengths(const Field& field, CodeKind kind) {
    return enumerate_lengths_r(coset_root(field), kind);
}

}  // namespace grsdual
