#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gral/scalar.hpp"

namespace gral {

/// Sparse vector: strictly increasing indices, no explicit zeros.
using SVec = std::vector<std::pair<int32_t, Scalar>>;

SVec svec_scale(const SVec& v, const Scalar& c);
/// a + c*b
SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b);
SVec svec_from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> svec_to_dense(const SVec& v, int32_t dim, Field f);
/// Offsets every index; used to place a vector inside a larger block space.
SVec svec_shift(const SVec& v, int32_t offset);

/// Dense row-major matrix over one field.
struct Mat {
    Field f;
    int32_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(Field f, int32_t rows, int32_t cols)
        : f(f), rows(rows), cols(cols), a(size_t(rows) * cols, Scalar::zero(f)) {}

    Scalar& at(int32_t i, int32_t j) { return a[size_t(i) * cols + j]; }
    const Scalar& at(int32_t i, int32_t j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(Field f, int32_t n);
    Mat times(const Mat& o) const;
    SVec apply(const SVec& v) const;     // matrix * column vector
    SVec apply_row(int32_t j) const;     // j-th column as sparse vector
    bool operator==(const Mat& o) const = default;
};

struct RrefResult {
    Mat r;
    int32_t rank = 0;
    std::vector<int32_t> pivots;
};

/// Reduced row-echelon form with leftmost pivots; unique over a field.
RrefResult rref(const Mat& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

class Subspace;

/// Incremental echelon-form accumulator. Rows are kept with pivot
/// coefficient 1 and are only forward-reduced until finish().
class SpanBuilder {
public:
    SpanBuilder(Field f, int32_t ambient) : f_(f), ambient_(ambient) {}

    /// Returns true when the vector enlarged the span.
    bool insert(SVec v);
    bool insert_dense(const std::vector<Scalar>& v) { return insert(svec_from_dense(v)); }

    int32_t rank() const { return int32_t(rows_.size()); }
    bool is_full() const { return rank() == ambient_; }
    /// Forward-reduce only: zero residual means membership.
    bool contains(SVec v) const;

    Subspace finish() const;

private:
    Field f_;
    int32_t ambient_;
    std::map<int32_t, SVec> rows_;  // pivot index -> row
};

/// Linear subspace in canonical form: the rows of `basis()` are the unique
/// reduced row-echelon basis, so equal subspaces compare equal entry-wise.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(Field f, int32_t ambient);
    static Subspace full(Field f, int32_t ambient);
    static Subspace span(Field f, int32_t ambient, const std::vector<SVec>& vectors);
    static Subspace span_dense(Field f, int32_t ambient, const std::vector<std::vector<Scalar>>& vectors);

    Field field() const { return f_; }
    int32_t ambient_dim() const { return ambient_; }
    int32_t rank() const { return int32_t(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rank() == ambient_; }
    const std::vector<SVec>& basis() const { return rows_; }
    const std::vector<int32_t>& pivots() const { return pivots_; }
    std::vector<Scalar> basis_row_dense(int32_t i) const;

    bool contains(const SVec& v) const;
    bool contains_dense(const std::vector<Scalar>& v) const { return contains(svec_from_dense(v)); }
    /// Coordinates of v over basis(); nullopt when v is not a member.
    std::optional<std::vector<Scalar>> coordinates(const SVec& v) const;
    /// Same, but sparse over basis indices.
    std::optional<SVec> coordinates_sparse(const SVec& v) const;
    /// Linear combination of basis rows with the given sparse coordinates.
    SVec from_coordinates(const SVec& coords) const;

    bool is_subspace_of(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

    friend Subspace sum(const Subspace& u, const Subspace& v);
    friend Subspace intersect(const Subspace& u, const Subspace& v);

private:
    void check_compatible(const Subspace& o) const;

    Field f_ = Field::q();
    int32_t ambient_ = 0;
    std::vector<SVec> rows_;
    std::vector<int32_t> pivots_;

    friend class SpanBuilder;
};

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus stacked-basis intersection.
Subspace intersect(const Subspace& u, const Subspace& v);

}  // namespace gral
