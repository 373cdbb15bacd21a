#pragma once

#include <cstdint>

#include "grsdual/gf.hpp"

namespace grsdual {

/// Exhaustive two-sided validation of the self-orthogonality criterion
/// over GF(q): for every n-subset of the field (points up to
/// reordering), the Gram oracle (generator times its transpose, over all
/// scalings v in (F_q^*)^n) is compared against the lambda criterion
/// (full enumeration of certificate polynomials).
///
/// Agreement is tracked at two granularities. Per point set: some v
/// makes the code self-orthogonal iff some all-square certificate
/// exists. Per (a, v) pair: the code is self-orthogonal iff some
/// enumerated lambda matches v_i^2 = lambda(a_i)/L(a_i) exactly. For
/// extended runs, every self-orthogonal pair additionally has its
/// certificate recovered by interpolation and checked for the forced
/// leading coefficient -1 at degree n - 2k + 1.
struct CensusResult {
    std::uint64_t point_sets = 0;
    std::uint64_t gram_achievable = 0;
    std::uint64_t lambda_certifiable = 0;
    std::uint64_t pairs = 0;
    std::uint64_t self_orthogonal_pairs = 0;
    std::uint64_t pair_disagreements = 0;
    std::uint64_t set_disagreements = 0;
    std::uint64_t leading_coeff_violations = 0;  // extended runs only
    bool vacuous = false;                        // n > q: no point sets exist

    bool fully_agrees() const { return pair_disagreements == 0 && set_disagreements == 0; }
};

CensusResult run_census(const Field& field, std::uint32_t n, std::uint32_t k, bool extended);

}  // namespace grsdual
