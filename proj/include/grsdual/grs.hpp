#pragma once

#include <cstddef>
#include <vector>

#include "grsdual/gf.hpp"

namespace grsdual {

/// Ordered, pairwise-distinct evaluation points over a field.
/// Holds a reference to the field; the Field must outlive the points.
class EvalPoints {
public:
    EvalPoints(const Field& field, std::vector<Elem> a);

    const Field& field() const { return *field_; }
    std::size_t n() const { return a_.size(); }
    Elem at(std::size_t i) const { return a_[i]; }
    const std::vector<Elem>& points() const { return a_; }

private:
    const Field* field_;
    std::vector<Elem> a_;
};

/// Column scaling vector; every entry nonzero, repetitions allowed.
class Scaling {
public:
    Scaling(const Field& field, std::vector<Elem> v);

    std::size_t size() const { return v_.size(); }
    Elem at(std::size_t i) const { return v_[i]; }
    const std::vector<Elem>& values() const { return v_; }

private:
    std::vector<Elem> v_;
};

/// A (possibly extended) GRS code instance. The extended code appends
/// one coordinate carrying the top coefficient of the evaluated
/// polynomial; its length is n + 1.
struct GrsCode {
    GrsCode(EvalPoints points, Scaling scaling, std::uint32_t k, bool extended);

    const Field& field() const { return points.field(); }
    std::size_t n() const { return points.n(); }
    std::size_t length() const { return points.n() + (extended ? 1 : 0); }

    EvalPoints points;
    Scaling scaling;
    std::uint32_t k;
    bool extended;
};

/// Dense row-major matrix of field elements.
class GenMatrix {
public:
    GenMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// L(a_i) = prod_{j != i} (a_i - a_j); nonzero by distinctness. 0-based i.
Elem l_value(const EvalPoints& points, std::size_t i);

/// sum_i a_i^m / L(a_i), which is 0 for 0 <= m <= n-2 and 1 for m = n-1.
/// Computed directly; callers assert the expected value.
Elem power_sum_check(const EvalPoints& points, std::uint32_t m);

/// Row m of the generator is (v_1 a_1^m, ..., v_n a_n^m); the extended
/// code appends a column that is 1 in row k-1 and 0 elsewhere.
GenMatrix generator_matrix(const GrsCode& code);

/// Both sides of the primitive-root product identity
/// prod_{j != i} (alpha^i - alpha^j) = mdiv * alpha^{-i} with
/// alpha = g^{(q-1)/mdiv}, for 1 <= i <= mdiv. Computes the direct
/// product and the closed form, throws std::logic_error if they ever
/// disagree, and returns the common value.
Elem coset_product(const Field& field, std::uint64_t mdiv, std::uint64_t i);

}  // namespace grsdual
