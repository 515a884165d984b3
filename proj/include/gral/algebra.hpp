#pragma once

#include <optional>

#include "gral/group.hpp"
#include "gral/linalg.hpp"
#include "gral/report.hpp"

namespace gral {

/// Finite-dimensional associative algebra given by structure constants on a
/// distinguished basis. Products of basis pairs are stored sparsely; most
/// constructions in this library are monomial-like and stay very sparse.
class Algebra {
public:
    Algebra() = default;
    Algebra(Field f, int32_t dim) : f_(f), dim_(dim), rows_(size_t(dim)) {}

    Field field() const { return f_; }
    int32_t dim() const { return dim_; }

    void set_product(int32_t i, int32_t j, SVec value);
    /// b_i * b_j, or nullptr when zero.
    const SVec* product(int32_t i, int32_t j) const;
    SVec multiply(const SVec& u, const SVec& v) const;

    /// Exhaustive associativity check over basis triples.
    /// Throws NonAssociative("i,j,k").
    void check_associativity() const;

    /// span{ u*v : u in basis(U), v in basis(V) }.
    Subspace product_span(const Subspace& u, const Subspace& v) const;
    bool is_two_sided_ideal(const Subspace& u) const;
    bool is_idempotent_subspace(const Subspace& u) const;
    Subspace full_space() const { return Subspace::full(f_, dim_); }

    std::optional<SVec> two_sided_unit() const;
    /// { b : bA = 0 = Ab }.
    Subspace two_sided_annihilator() const;

    bool operator==(const Algebra& o) const { return f_ == o.f_ && dim_ == o.dim_ && rows_ == o.rows_; }

private:
    Field f_ = Field::q();
    int32_t dim_ = 0;
    // rows_[i]: sorted list of (j, b_i*b_j).
    std::vector<std::vector<std::pair<int32_t, SVec>>> rows_;
};

/// Restricts the product of `amb` to a subspace that is closed under it.
/// The result's basis is the canonical echelon basis of `sub`.
Algebra algebra_on_subspace(const Algebra& amb, const Subspace& sub);

/// G-graded algebra: every basis vector carries a group degree and products
/// respect degrees. component(t) is the span of the degree-t basis vectors.
class GradedAlgebra {
public:
    GradedAlgebra() = default;

    /// Verifies associativity and grading compatibility exhaustively.
    /// Throws NonAssociative or GradingViolation.
    static GradedAlgebra validate(Algebra alg, FiniteGroup grp, std::vector<int32_t> degrees);

    /// Normalizes a grading given as a direct-sum decomposition into
    /// homogeneous-basis form: the new basis is the concatenation of the
    /// component bases and the product is rewritten accordingly.
    /// Throws GradingViolation when the components do not decompose the
    /// space or the rewritten product is incompatible.
    static GradedAlgebra from_components(const Algebra& alg, FiniteGroup grp,
                                         const std::vector<Subspace>& components);

    const Algebra& algebra() const { return alg_; }
    const FiniteGroup& group() const { return grp_; }
    const std::vector<int32_t>& degrees() const { return deg_; }
    Field field() const { return alg_.field(); }
    int32_t dim() const { return alg_.dim(); }
    int32_t degree(int32_t i) const { return deg_.at(size_t(i)); }

    Subspace component(int32_t t) const;
    SVec multiply(const SVec& u, const SVec& v) const { return alg_.multiply(u, v); }
    Subspace product_span(const Subspace& u, const Subspace& v) const { return alg_.product_span(u, v); }

    /// B_t * B_{t^-1}; checked to be a two-sided ideal of the identity component.
    Subspace degree_ideal(int32_t t) const;

    bool is_idempotent_graded() const;
    bool is_partially_strongly_graded() const;
    bool is_strongly_graded() const;

    /// The standard identities of a partially strong grading: both
    /// three-term product identities, the degree-ideal commutation and
    /// translation laws, unitality of each component over the identity
    /// component, and idempotence of each degree ideal.
    /// Throws PreconditionFailed when the grading is not partially strong.
    VerificationReport psg_identity_report(const std::string& fixture = "") const;

    /// A subspace is graded iff every canonical basis row is homogeneous
    /// (basis vectors of one degree only).
    bool subspace_is_graded(const Subspace& u) const;
    /// Degree of a homogeneous sparse vector; nullopt for 0 or mixed.
    std::optional<int32_t> homogeneous_degree(const SVec& v) const;
    /// Span of the degree-t canonical basis rows of a graded subspace.
    Subspace homogeneous_part(const Subspace& u, int32_t t) const;

    bool operator==(const GradedAlgebra& o) const {
        return alg_ == o.alg_ && grp_ == o.grp_ && deg_ == o.deg_;
    }

private:
    Algebra alg_;
    FiniteGroup grp_ = FiniteGroup::cyclic(1);
    std::vector<int32_t> deg_;
};

/// Restricts a graded algebra to a graded, product-closed subspace.
GradedAlgebra graded_algebra_on_subspace(const GradedAlgebra& amb, const Subspace& sub);

/// Linear map between algebras, stored column-wise on the source basis.
struct LinearMap {
    Mat m;  // target_dim x source_dim

    SVec apply(const SVec& v) const { return m.apply(v); }
    int32_t rank() const { return rref(m).rank; }
    bool is_injective() const { return rank() == m.cols; }
    bool is_bijective() const { return m.rows == m.cols && rank() == m.cols; }
};

bool is_multiplicative(const Algebra& src, const Algebra& dst, const LinearMap& phi);
/// phi maps each degree-t component of src into the degree-t component of dst.
bool is_degree_preserving(const GradedAlgebra& src, const GradedAlgebra& dst, const LinearMap& phi);

/// Certificate of an isomorphism of graded algebras: a concrete bijective,
/// multiplicative, degree-preserving linear map. Throws VerificationFailed.
void require_graded_iso(const GradedAlgebra& src, const GradedAlgebra& dst, const LinearMap& phi);

}  // namespace gral
