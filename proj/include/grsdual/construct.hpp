#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grsdual/grs.hpp"

namespace grsdual {

enum class PlanCase { thm1_i, thm1_ii, thm2_case1, thm2_case2, thm3_i, thm3_ii };
enum class CodeKind { selfdual, selforthogonal, almost_selfdual };

std::string to_string(PlanCase c);
PlanCase plan_case_from_string(const std::string& s);
std::string to_string(CodeKind k);
CodeKind code_kind_from_string(const std::string& s);

/// Coset construction parameters over GF(r^2): the evaluation set is a
/// union of s cosets of <alpha> (order r-1) and t cosets of <beta>
/// (order r+1), shifted by odd powers of gamma, in one of two layouts
/// selected by r mod 4; the almost-self-dual variant appends 0.
///
///   alpha = g^(r+1), beta = g^(r-1),
///   gamma = g^((r+1)/2) when r = 1 (mod 4), g^((r-1)/2) when r = 3 (mod 4).
struct CosetPlan {
    const Field* field;
    std::uint32_t r, s, t;
    PlanCase tag;
    Elem alpha, beta, gamma;
    std::uint32_t n;  // code length, including the appended zero point

    /// Validates the case conditions (r mod 4 and the parity of s where
    /// the construction demands one) and the ranges 1 <= s <= (r+1)/2,
    /// 1 <= t <= (r-1)/2; requires the field cardinality to be the
    /// square of an odd prime power.
    static CosetPlan make(const Field& field, PlanCase tag, std::uint32_t s, std::uint32_t t);

    bool appends_zero() const { return tag == PlanCase::thm3_i || tag == PlanCase::thm3_ii; }
    /// Layout: true when cosets of <alpha> come first (the r = 1 mod 4 cases).
    bool style_i() const {
        return tag == PlanCase::thm1_i || tag == PlanCase::thm2_case1 || tag == PlanCase::thm3_i;
    }
};

/// Coset coordinates of an evaluation point: which block of the layout,
/// which coset (i) and which exponent within it (j).
enum class CosetBlock { first, second, zero };
struct PointCoord {
    CosetBlock block = CosetBlock::first;
    std::uint32_t i = 0;
    std::uint32_t j = 0;
};

/// Evaluation points in the plan's fixed order: first block of cosets,
/// second block, then (almost-self-dual only) the zero element. Within a
/// coset x<alpha> the order is x, x*alpha, x*alpha^2, ...
/// Throws std::logic_error if the assembled points are not distinct.
EvalPoints assemble_points(const CosetPlan& plan);

std::size_t point_index(const CosetPlan& plan, PointCoord c);
PointCoord coord_of_index(const CosetPlan& plan, std::size_t index);

/// L(point) by the closed-form product for the plan (grouped coset
/// factors plus the u factor evaluated as a direct product). Must agree
/// with l_value at point_index; that agreement is a tested property, not
/// assumed here.
Elem closed_form_l(const CosetPlan& plan, PointCoord c);

/// The u factor of the closed form (1 for coordinates without one).
Elem closed_form_u(const CosetPlan& plan, PointCoord c);

/// Parity (0 or 1) of dlog(u) asserted by the exponent congruence
/// u = g^(...) + m*(r+1); well-defined because r+1 is even.
int u_parity_claim(const CosetPlan& plan, PointCoord c);

/// The construction's square condition failed where the underlying
/// theorem says it cannot; carries the witness (q, s, t, index).
class TheoremContradictionError : public std::runtime_error {
public:
    TheoremContradictionError(std::uint64_t q, std::uint32_t s, std::uint32_t t, std::size_t index);
    std::uint64_t q;
    std::uint32_t s, t;
    std::size_t index;
};

struct Construction {
    CosetPlan plan;
    GrsCode code;
};

/// [n, n/2] self-dual code, certified by the constant lambda = gamma.
Construction build_selfdual(const Field& field, std::uint32_t s, std::uint32_t t);

/// [n, k] self-orthogonal code for 1 <= k <= n/2 - 1; lambda is the
/// constant gamma or the identity polynomial x depending on the parity
/// of s.
Construction build_selforthogonal(const Field& field, std::uint32_t s, std::uint32_t t,
                                  std::uint32_t k);

/// [n, (n-1)/2] almost self-dual code of odd length (0 is an evaluation
/// point), certified by the constant lambda = 1.
Construction build_almost_selfdual(const Field& field, std::uint32_t s, std::uint32_t t);

struct LengthWitness {
    std::uint32_t n, s, t;
};

/// Every achievable length for the kind over GF(r^2), each with its
/// (smallest-s, then smallest-t) witness, sorted by n. Distinct (s, t)
/// pairs in range always give distinct n.
std::vector<LengthWitness> enumerate_lengths(const Field& field, CodeKind kind);
std::vector<LengthWitness> enumerate_lengths_r(std::uint32_t r, CodeKind kind);

/// The square root r of the field cardinality when q = r^2 with r an odd
/// prime power; throws std::invalid_argument otherwise.
std::uint32_t coset_root(const Field& field);

}  // namespace grsdual
