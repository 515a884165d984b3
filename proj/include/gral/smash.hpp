#pragma once

#include "gral/paction.hpp"

namespace gral {

/// Matrix-style algebra over a graded base: basis vectors are labelled
/// (k, r, s) with k a base basis index and (r, s) a matrix position, graded
/// by r*s^-1. For the full matrix algebra every label occurs; the smash
/// product keeps the labels with deg(k) = r^-1 s.
struct SmashAlgebra {
    enum class Kind { full_matrix, smash };

    Kind kind = Kind::smash;
    GradedAlgebra carrier;
    GradedAlgebra base;

    struct Label {
        int32_t k, r, s;
        bool operator==(const Label&) const = default;
    };
    std::vector<Label> labels;               // carrier index -> label
    std::vector<std::vector<int32_t>> slot;  // [r*n+s][k] -> carrier index or -1

    int32_t index_of(int32_t k, int32_t r, int32_t s) const;
    /// Places a base vector lying in one component at position (r, s);
    /// coordinates outside the labelled set must vanish.
    SVec place(const SVec& base_vec, int32_t r, int32_t s) const;
    /// Subspace spanned by e_vec * position for all basis vectors of a
    /// base subspace (entries outside the label set are rejected).
    Subspace place(const Subspace& base_space, int32_t r, int32_t s) const;
};

/// All |G| x |G| matrices over the base, graded by position.
SmashAlgebra fmat(const GradedAlgebra& b);
/// The subalgebra of matrices whose (r, s) entry lies in the degree r^-1 s
/// component of the base.
SmashAlgebra smash(const GradedAlgebra& b);

/// Translation action t . (b e_{r,s}) = b e_{tr,ts} on either construction.
GlobalAction dual_action(const SmashAlgebra& s);

/// The embedding b -> matrix with entry b_{r^-1 s} at (r, s); injective,
/// multiplicative, fixed by the dual action. Lands in the smash product.
LinearMap diagonal_embedding(const SmashAlgebra& s);
/// Fixed points of the dual action on the carrier.
Subspace dual_action_fixed_points(const SmashAlgebra& s);

/// Induced map A#G -> B#G of a degree-preserving homomorphism A -> B.
/// Errors: NotGraded. Injectivity matches injectivity of the input (checked).
LinearMap smash_functor(const SmashAlgebra& from, const SmashAlgebra& to, const LinearMap& phi);

/// The ideal with entry space B_{r^-1} B_s at position (r, s), as a subspace
/// of the smash carrier; verified to be a two-sided ideal, and equal to the
/// whole smash product iff the base is strongly graded.
Subspace partial_smash(const SmashAlgebra& s);

/// The canonical partial action on the partial smash ideal of a partially
/// strongly graded base: the restriction of the dual action. Also checks
/// that the domains match the displayed spans both ways and that the orbit
/// of the ideal is everything. Errors: PreconditionFailed.
struct CanonicalPartialAction {
    SmashAlgebra smash_algebra;
    Subspace ideal;           // inside the smash carrier
    GlobalAction dual;        // on the smash carrier
    PartialAction action;     // carrier: the ideal itself
    VerificationReport report;
};
CanonicalPartialAction canonical_partial_action(const GradedAlgebra& b, const std::string& fixture = "");

/// The isomorphism from the skew algebra of the dual action onto the full
/// matrix algebra: (b e_{r,s}) delta_t -> b e_{r, t^-1 s}. Verified to be a
/// bijective, multiplicative, degree-compatible label permutation.
struct DualityIso {
    SkewAlgebra crossed;  // (B#G) skewed by the dual action
    SmashAlgebra matrix_algebra;
    LinearMap psi;
    VerificationReport report;
};
DualityIso duality_iso(const GradedAlgebra& b, const std::string& fixture = "");

/// Image of the crossed product of the canonical partial action under the
/// duality isomorphism; asserted equal to the span with entry spaces
/// sum_t B_{r^-1} B_t B_s. Errors: PreconditionFailed, VerificationFailed.
Subspace partial_duality_image(const GradedAlgebra& b);

}  // namespace gral
