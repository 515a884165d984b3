#pragma once

#include "gral/algebra.hpp"

namespace gral {

/// Action of a finite group on an algebra by automorphisms.
struct GlobalAction {
    FiniteGroup group = FiniteGroup::cyclic(1);
    Algebra algebra;
    std::vector<Mat> maps;  // per group element, dim x dim

    /// Checks that every map is an invertible automorphism, the identity
    /// acts trivially, and the maps compose along the group law.
    static GlobalAction validate(FiniteGroup g, Algebra a, std::vector<Mat> maps);

    SVec apply(int32_t t, const SVec& v) const { return maps.at(size_t(t)).apply(v); }
    Subspace apply(int32_t t, const Subspace& u) const;
};

/// Partial action: per group element an ideal domain and an isomorphism
/// from the domain of the inverse element. `flavor` records which set of
/// axioms the value was validated against.
class PartialAction {
public:
    enum class Flavor { partial, product };

    const FiniteGroup& group() const { return group_; }
    const Algebra& algebra() const { return alg_; }
    Flavor flavor() const { return flavor_; }
    const Subspace& domain(int32_t t) const { return dom_.at(size_t(t)); }
    /// Columns are the images of the canonical basis of domain(t^-1).
    const Mat& map(int32_t t) const { return map_.at(size_t(t)); }

    SVec apply(int32_t t, const SVec& v) const;
    SVec apply_inverse(int32_t t, const SVec& v) const;
    Subspace apply(int32_t t, const Subspace& u) const;

    bool is_global() const;
    bool domains_idempotent() const;

    /// Definition with intersections. Errors: NotIdeal, NotIsomorphism,
    /// NotMultiplicative, IdentityMapNotTrivial, IntersectionAxiomFailed,
    /// CompositionFailed.
    static PartialAction validate_partial(FiniteGroup g, Algebra a, std::vector<Subspace> domains,
                                          std::vector<Mat> maps);
    /// Definition with products. Errors additionally: DomainNotIdempotent,
    /// DomainsDontCommute, ProductAxiomFailed.
    static PartialAction validate_product(FiniteGroup g, Algebra a, std::vector<Subspace> domains,
                                          std::vector<Mat> maps);

    /// A global action repackaged with full domains (a product partial action).
    static PartialAction from_global(const GlobalAction& beta);

    bool operator==(const PartialAction& o) const;

private:
    static PartialAction build(FiniteGroup g, Algebra a, std::vector<Subspace> domains,
                               std::vector<Mat> maps, Flavor flavor);
    void check_common() const;
    void check_partial_axioms() const;
    void check_product_axioms() const;

    FiniteGroup group_ = FiniteGroup::cyclic(1);
    Algebra alg_;
    std::vector<Subspace> dom_;
    std::vector<Mat> map_;
    std::vector<Mat> inv_;  // inverse of map(t) in domain coordinates
    Flavor flavor_ = Flavor::partial;
};

/// Restriction of a global action to an idempotent two-sided ideal with
/// commuting translates; the carrier of the result is the ideal itself,
/// with domains ideal * beta_t(ideal). Errors: NotIdempotentIdeal,
/// CommutationHypothesisFailed.
PartialAction restrict_global(const GlobalAction& beta, const Subspace& ideal);

/// True when the translates of the ideal span the whole algebra.
bool is_minimal_globalization(const GlobalAction& beta, const Subspace& ideal);

/// Skew group algebra: one block of coordinates per group element, block t
/// carrying the canonical basis of domain(t), graded by the block.
struct SkewAlgebra {
    GradedAlgebra carrier;
    std::vector<int32_t> offsets;  // block start per group element
    PartialAction action;

    int32_t index(int32_t t, int32_t j) const { return offsets.at(size_t(t)) + j; }
    /// Embeds a vector of domain(t) as an element of block t.
    SVec embed(int32_t t, const SVec& v) const;
    Subspace embed(int32_t t, const Subspace& u) const;
    Subspace block(int32_t t) const;
};

/// Errors: AssociativityFailed when an invalid action slipped through.
SkewAlgebra skew_group_algebra(const PartialAction& action);

/// Morphism of partial actions: an algebra homomorphism carrying domains
/// into domains and commuting with the maps. Errors: NotEquivariant.
struct PartialActionMorphism {
    LinearMap phi;

    static PartialActionMorphism validate(const PartialAction& from, const PartialAction& to,
                                          LinearMap phi);
};

/// Induced homomorphism between skew group algebras; multiplicativity is
/// re-checked on basis pairs.
LinearMap skew_morphism(const PartialActionMorphism& m, const SkewAlgebra& from, const SkewAlgebra& to);

/// For an idempotent-domain partial action: the skew algebra is partially
/// strongly graded exactly when the action passes the product axioms. The
/// agreement of the two routes is asserted; the common verdict is returned.
bool check_pa_prp_equivalence(const PartialAction& action);

}  // namespace gral
