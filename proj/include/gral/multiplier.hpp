#pragma once

#include "gral/algebra.hpp"

namespace gral {

/// Multiplier: a compatible pair of left/right multiplication-like maps.
struct Multiplier {
    Mat left;   // L, dim x dim
    Mat right;  // R, dim x dim

    static Multiplier identity(Field f, int32_t dim) {
        return {Mat::identity(f, dim), Mat::identity(f, dim)};
    }
    /// (L, R)(L', R') = (L L', R' R).
    Multiplier times(const Multiplier& o) const { return {left.times(o.left), o.right.times(right)}; }
    bool is_idempotent() const { return left.times(left) == left && right.times(right) == right; }
};

/// L(ab) = L(a)b, R(ab) = aR(b) and R(a)b = aL(b) on basis pairs.
bool is_multiplier(const Algebra& a, const Multiplier& w);
/// wB_s <= B_{ts} and B_s w <= B_{st}.
bool multiplier_has_degree(const GradedAlgebra& b, const Multiplier& w, int32_t t);

/// (L_b, R_b) for a fixed element b.
Multiplier multiplication_by(const Algebra& a, const SVec& b);

/// Multiplier pairs live in a 2*dim^2 coordinate space: L entries row-major,
/// then R entries row-major.
SVec multiplier_coords(const Multiplier& w);
Multiplier multiplier_from_coords(Field f, int32_t dim, const SVec& coords);

/// The degreewise multiplier spaces of a graded algebra, computed as literal
/// solution spaces of the defining linear system, together with the checks
/// that they multiply into each other and that the natural map from the
/// algebra is a degree-preserving homomorphism with ideal image.
struct GradedMultiplierAlgebra {
    std::vector<Subspace> components;  // per degree t, in pair coordinates
    Subspace mu_image;                 // image of b -> (L_b, R_b)
    bool mu_injective = false;
    VerificationReport report;

    int32_t dim_of(int32_t t) const { return components.at(size_t(t)).rank(); }
};

GradedMultiplierAlgebra graded_multipliers(const GradedAlgebra& b);

/// Null space of the row span of a linear system.
Subspace nullspace_of_rowspace(const Subspace& rows, int32_t ncols);

}  // namespace gral
