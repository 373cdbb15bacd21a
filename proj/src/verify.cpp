#include "grsdual/verify.hpp"

#include <algorithm>
#include <random>

#include "grsdual/errors.hpp"

namespace grsdual {
namespace {

constexpr std::uint64_t kExhaustiveBudget = 1000000;

// Rank of the square submatrix of g formed by the given columns; early
// exit as soon as a pivotless column proves singularity.
bool columns_invertible(const Field& f, const GenMatrix& g, const std::vector<std::uint32_t>& cols) {
    std::size_t k = g.rows();
    std::vector<Elem> w(k * k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) w[r * k + c] = g.at(r, cols[c]);

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && w[pivot * k + col].enc == 0) ++pivot;
        if (pivot == k) return false;
        if (pivot != col)
            for (std::size_t c = col; c < k; ++c) std::swap(w[pivot * k + c], w[col * k + c]);
        Elem pinv = f.inv(w[col * k + col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            Elem factor = f.mul(w[r * k + col], pinv);
            if (factor.enc == 0) continue;
            for (std::size_t c = col; c < k; ++c)
                w[r * k + c] = f.sub(w[r * k + c], f.mul(factor, w[col * k + c]));
        }
    }
    return true;
}

}  // namespace

std::string to_string(MdsStatus s) {
    switch (s) {
        case MdsStatus::proved: return "proved";
        case MdsStatus::sampled_consistent: return "sampled-consistent";
        case MdsStatus::disproved: return "disproved";
        case MdsStatus::skipped: return "skipped";
    }
    return "unknown";
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

MdsMode MdsMode::auto_mode(std::size_t cols, std::uint32_t k, std::uint32_t fallback) {
    if (binomial_capped(cols, k, kExhaustiveBudget) <= kExhaustiveBudget) return exhaustive();
    return sampled(fallback);
}

bool gram_check(const Field& f, const GenMatrix& g) {
    for (std::size_t r1 = 0; r1 < g.rows(); ++r1) {
        for (std::size_t r2 = r1; r2 < g.rows(); ++r2) {
            Elem acc = f.zero();
            for (std::size_t c = 0; c < g.cols(); ++c)
                acc = f.add(acc, f.mul(g.at(r1, c), g.at(r2, c)));
            if (acc.enc != 0) return false;
        }
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> rank_and_dual_dim(const Field& f, const GenMatrix& g) {
    std::size_t rows = g.rows(), cols = g.cols();
    std::vector<Elem> w(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) w[r * cols + c] = g.at(r, c);

    std::uint32_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && w[pivot * cols + col].enc == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols; ++c) std::swap(w[pivot * cols + c], w[rank * cols + c]);
        Elem pinv = f.inv(w[rank * cols + col]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            Elem factor = f.mul(w[r * cols + col], pinv);
            if (factor.enc == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                w[r * cols + c] = f.sub(w[r * cols + c], f.mul(factor, w[rank * cols + c]));
        }
        ++rank;
    }
    return {rank, static_cast<std::uint32_t>(cols) - rank};
}

MdsResult mds_check(const Field& f, const GenMatrix& g, const MdsMode& mode) {
    if (mode.kind == MdsMode::Kind::skip) return {MdsStatus::skipped, std::nullopt};

    std::size_t n = g.cols();
    std::uint32_t k = static_cast<std::uint32_t>(g.rows());
    if (k == 0 || k > n) throw std::invalid_argument("generator shape unsuitable for MDS check");

    if (mode.kind == MdsMode::Kind::exhaustive) {
        if (binomial_capped(n, k, kExhaustiveBudget) > kExhaustiveBudget)
            throw BudgetExceededError("C(N, k) exceeds the exhaustive MDS budget of 10^6");
        std::vector<std::uint32_t> cols(k);
        for (std::uint32_t i = 0; i < k; ++i) cols[i] = i;
        while (true) {
            if (!columns_invertible(f, g, cols)) return {MdsStatus::disproved, cols};
            // next lexicographic k-combination of [0, n)
            std::int64_t i = static_cast<std::int64_t>(k) - 1;
            while (i >= 0 && cols[i] == n - k + i) --i;
            if (i < 0) break;
            ++cols[i];
            for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
        }
        return {MdsStatus::proved, std::nullopt};
    }

    std::mt19937_64 rng(mode.seed);
    std::vector<std::uint32_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> cols(k);
    for (std::uint32_t s = 0; s < mode.samples; ++s) {
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> dist(i, n - 1);
            std::swap(all[i], all[dist(rng)]);
            cols[i] = all[i];
        }
        std::sort(cols.begin(), cols.end());
        if (!columns_invertible(f, g, cols)) return {MdsStatus::disproved, cols};
    }
    return {MdsStatus::sampled_consistent, std::nullopt};
}

VerifyReport full_report(const GrsCode& code, const MdsMode& mode) {
    const Field& f = code.field();
    GenMatrix g = generator_matrix(code);

    VerifyReport rep;
    rep.gram_zero = gram_check(f, g);
    auto [rank, dual] = rank_and_dual_dim(f, g);
    rep.rank = rank;
    rep.dual_dim = dual;
    rep.self_orthogonal = rep.gram_zero && rank == code.k;
    rep.self_dual = rep.self_orthogonal && dual == code.k;
    rep.almost_self_dual = rep.self_orthogonal && dual == code.k + 1;
    MdsResult mds = mds_check(f, g, mode);
    rep.mds = mds.status;
    rep.mds_witness = std::move(mds.witness);
    return rep;
}

}  // namespace grsdual
