#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grsdual/grs.hpp"

namespace grsdual {

/// The polynomial certifying self-orthogonality of a GRS code: the code
/// GRS_k(a, v) is self-orthogonal iff v_i^2 = lambda(a_i) / L(a_i) != 0
/// for all i, for some nonzero lambda of degree <= n - 2k. For the
/// extended code the certificate has degree exactly n - 2k + 1 with
/// leading coefficient -1 (the `extended` flag marks that shape).
struct LambdaPoly {
    std::vector<Elem> coeffs;  // constant term first
    bool extended = false;

    LambdaPoly(const Field& field, std::vector<Elem> coeffs, bool extended);

    std::size_t degree() const { return coeffs.size() - 1; }
    Elem eval(const Field& field, Elem x) const;
};

/// lambda(a_i) / L(a_i) failed the nonzero-square requirement at `index`.
class QrViolationError : public std::runtime_error {
public:
    QrViolationError(std::size_t index, Elem value);
    std::size_t index;
    Elem value;
};

/// lambda(a_index) = 0, violating the criterion's nonzero clause.
class LambdaZeroError : public std::runtime_error {
public:
    explicit LambdaZeroError(std::size_t index);
    std::size_t index;
};

/// Scaling with v_i = canonical sqrt(lambda(a_i) / L(a_i)); throws
/// LambdaZeroError / QrViolationError at the first offending index.
Scaling scaling_from_lambda(const EvalPoints& points, std::uint32_t k, const LambdaPoly& lam);

/// First certifying lambda in lexicographic coefficient order (constant
/// coefficient varying fastest), or nullopt after a full scan. The
/// candidate space q^(n-2k+1) must stay within 10^7.
std::optional<LambdaPoly> search_lambda(const EvalPoints& points, std::uint32_t k, bool extended);

/// Constant-certificate scan for an [n, n/2] self-dual code (n even):
/// first lambda in F_q^* with lambda / L(a_i) a square for all i.
std::optional<Scaling> selfdual_constant(const EvalPoints& points);

/// lambda = -1 certificate for an extended [n+1, (n+1)/2] self-dual code
/// (n odd): succeeds iff -1 / L(a_i) is a square for all i.
std::optional<Scaling> selfdual_extended(const EvalPoints& points);

/// Interpolates the unique polynomial P of degree <= n-1 through
/// (a_i, v_i^2 L(a_i)) and returns it as the certificate when it has the
/// shape required by the criterion; nullopt otherwise. By the criterion
/// this succeeds iff the (extended) code GRS_k(a, v) is self-orthogonal.
std::optional<LambdaPoly> recover_lambda(const EvalPoints& points, std::uint32_t k,
                                         const Scaling& scaling, bool extended);

/// Lagrange interpolation: the coefficients (constant first) of the
/// unique polynomial of degree < xs.size() through (xs_i, ys_i).
std::vector<Elem> interpolate(const Field& field, const std::vector<Elem>& xs,
                              const std::vector<Elem>& ys);

}  // namespace grsdual
