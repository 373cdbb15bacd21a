#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grsdual/grs.hpp"

namespace grsdual {

enum class MdsStatus { proved, sampled_consistent, disproved, skipped };

std::string to_string(MdsStatus s);

/// How mds_check establishes (or declines to establish) MDS-ness.
struct MdsMode {
    enum class Kind { exhaustive, sampled, skip };
    Kind kind = Kind::exhaustive;
    std::uint32_t samples = 0;
    std::uint64_t seed = 0x6a09e667f3bcc908ull;  // fixed for reproducibility

    static MdsMode exhaustive() { return {Kind::exhaustive, 0, 0x6a09e667f3bcc908ull}; }
    static MdsMode sampled(std::uint32_t count) { return {Kind::sampled, count, 0x6a09e667f3bcc908ull}; }
    static MdsMode skip() { return {Kind::skip, 0, 0}; }
    /// Exhaustive when C(N, k) fits the budget, else sampled(fallback).
    static MdsMode auto_mode(std::size_t cols, std::uint32_t k, std::uint32_t fallback = 10000);
};

struct MdsResult {
    MdsStatus status = MdsStatus::skipped;
    std::optional<std::vector<std::uint32_t>> witness;  // failing column subset, sorted
};

/// Independent measurements of a candidate code. The flags are pinned to
/// the linear-algebra facts: self_orthogonal <=> gram_zero and rank = k;
/// self_dual additionally needs dual_dim = k; almost self-dual needs
/// dual_dim = k + 1.
struct VerifyReport {
    bool gram_zero = false;
    std::uint32_t rank = 0;
    std::uint32_t dual_dim = 0;
    bool self_orthogonal = false;
    bool self_dual = false;
    bool almost_self_dual = false;
    MdsStatus mds = MdsStatus::skipped;
    std::optional<std::vector<std::uint32_t>> mds_witness;
};

/// True iff every pairwise Euclidean inner product of rows of G is zero
/// (G * G^T = 0 over the field).
bool gram_check(const Field& field, const GenMatrix& g);

/// (rank, N - rank) by row reduction with exact field arithmetic.
std::pair<std::uint32_t, std::uint32_t> rank_and_dual_dim(const Field& field, const GenMatrix& g);

/// MDS test via column subsets: the code is MDS iff every k columns of a
/// full-rank k x N generator are linearly independent. Exhaustive mode
/// requires C(N, k) <= 10^6 and yields proved/disproved with the
/// lexicographically smallest witness; sampled mode never claims proved.
MdsResult mds_check(const Field& field, const GenMatrix& g, const MdsMode& mode);

VerifyReport full_report(const GrsCode& code, const MdsMode& mode);

/// C(n, k) capped at `cap` (returns cap + 1 when the true value exceeds it).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace grsdual
