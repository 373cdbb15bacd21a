#include "grsdual/census.hpp"

#include <string>
#include <unordered_set>

#include "grsdual/errors.hpp"
#include "grsdual/ortho.hpp"
#include "grsdual/verify.hpp"

namespace grsdual {
namespace {

constexpr std::uint64_t kSetBudget = 1000000;      // point sets
constexpr std::uint64_t kScanBudget = 10000000;    // scalings per set / lambda candidates

std::uint64_t pow_capped(std::uint64_t base, std::uint32_t e, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (acc > cap / base) return cap + 1;
        acc *= base;
        if (acc > cap) return cap + 1;
    }
    return acc;
}

std::string pack(const std::vector<std::uint32_t>& w) {
    std::string s(w.size() * 4, '\0');
    for (std::size_t i = 0; i < w.size(); ++i)
        for (int b = 0; b < 4; ++b) s[4 * i + b] = static_cast<char>((w[i] >> (8 * b)) & 0xff);
    return s;
}

}  // namespace

CensusResult run_census(const Field& field, std::uint32_t n, std::uint32_t k, bool extended) {
    std::uint64_t q = field.q();
    std::uint32_t kmax = extended ? (n + 1) / 2 : n / 2;
    if (n < 1) throw std::invalid_argument("census needs n >= 1");
    if (k < 1 || k > kmax)
        throw std::invalid_argument("census dimension k out of range for the criterion");

    CensusResult res;
    if (n > q) {
        res.vacuous = true;  // no n-subsets of F_q exist; agreement holds vacuously
        return res;
    }

    std::uint32_t free_coeffs = static_cast<std::uint32_t>(
        static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(k) + 1);
    if (binomial_capped(q, n, kSetBudget) > kSetBudget)
        throw BudgetExceededError("census point-set count C(q, n) exceeds 10^6");
    std::uint64_t vcount = pow_capped(q - 1, n, kScanBudget);
    if (vcount > kScanBudget)
        throw BudgetExceededError("census scaling enumeration (q-1)^n exceeds 10^7");
    std::uint64_t lcount = pow_capped(q, free_coeffs, kScanBudget);
    if (lcount > kScanBudget)
        throw BudgetExceededError("lambda search space q^(n-2k+1) exceeds 10^7");

    std::vector<std::uint32_t> combo(n);
    for (std::uint32_t i = 0; i < n; ++i) combo[i] = i;

    while (true) {
        res.point_sets++;
        std::vector<Elem> a(n);
        for (std::uint32_t i = 0; i < n; ++i) a[i] = Elem{combo[i]};
        EvalPoints points(field, a);

        std::vector<Elem> linv(n);
        for (std::uint32_t i = 0; i < n; ++i) linv[i] = field.inv(l_value(points, i));

        // All value vectors (lambda(a_i)/L(a_i))_i with nonzero entries,
        // over the full certificate space.
        std::unordered_set<std::string> achievable;
        bool set_lambda_ok = false;
        {
            std::vector<Elem> coeffs(free_coeffs + (extended ? 1 : 0));
            if (extended) coeffs.back() = field.from_int(-1);
            std::vector<std::uint32_t> w(n);
            for (std::uint64_t c = extended ? 0 : 1; c < lcount; ++c) {
                std::uint64_t rest = c;
                for (std::uint32_t i = 0; i < free_coeffs; ++i) {
                    coeffs[i] = Elem{static_cast<std::uint32_t>(rest % q)};
                    rest /= q;
                }
                bool nonzero = true, all_qr = true;
                for (std::uint32_t i = 0; i < n && nonzero; ++i) {
                    Elem acc = field.zero();
                    for (std::size_t d = coeffs.size(); d-- > 0;)
                        acc = field.add(field.mul(acc, a[i]), coeffs[d]);
                    if (acc.enc == 0) {
                        nonzero = false;
                        break;
                    }
                    Elem val = field.mul(acc, linv[i]);
                    w[i] = val.enc;
                    all_qr = all_qr && field.is_qr(val);
                }
                if (!nonzero) continue;
                achievable.insert(pack(w));
                set_lambda_ok = set_lambda_ok || all_qr;
            }
        }
        if (search_lambda(points, k, extended).has_value() != set_lambda_ok)
            throw std::logic_error("census: search_lambda disagrees with full enumeration");

        bool set_gram_ok = false;
        std::vector<std::uint32_t> vdig(n, 1);
        std::vector<Elem> v(n);
        std::vector<std::uint32_t> vsq(n);
        while (true) {
            for (std::uint32_t i = 0; i < n; ++i) {
                v[i] = Elem{vdig[i]};
                vsq[i] = field.mul(v[i], v[i]).enc;
            }
            GrsCode code(points, Scaling(field, v), k, extended);
            bool gram = gram_check(field, generator_matrix(code));
            bool certified = achievable.count(pack(vsq)) > 0;
            res.pairs++;
            if (gram) {
                res.self_orthogonal_pairs++;
                set_gram_ok = true;
                if (extended && !recover_lambda(points, k, code.scaling, true).has_value())
                    res.leading_coeff_violations++;
            }
            if (gram != certified) res.pair_disagreements++;

            std::uint32_t pos = 0;
            while (pos < n && vdig[pos] == q - 1) vdig[pos++] = 1;
            if (pos == n) break;
            vdig[pos]++;
        }

        if (set_gram_ok) res.gram_achievable++;
        if (set_lambda_ok) res.lambda_certifiable++;
        if (set_gram_ok != set_lambda_ok) res.set_disagreements++;

        // next n-combination of [0, q)
        std::int64_t i = static_cast<std::int64_t>(n) - 1;
        while (i >= 0 && combo[i] == q - n + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < n; ++j) combo[j] = combo[j - 1] + 1;
    }
    return res;
}

}  // namespace grsdual
