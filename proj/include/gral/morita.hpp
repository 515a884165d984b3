#pragma once

#include "gral/multiplier.hpp"
#include "gral/smash.hpp"

namespace gral {

/// Coordinate space with a group degree per coordinate.
struct GradedSpace {
    Field f = Field::q();
    int32_t dim = 0;
    std::vector<int32_t> deg;
};

/// Bilinear table on basis pairs, stored like structure constants.
class BilinTable {
public:
    BilinTable() = default;
    explicit BilinTable(int32_t left_dim) : rows_(size_t(left_dim)) {}

    void set(int32_t i, int32_t j, SVec value);
    const SVec* at(int32_t i, int32_t j) const;
    SVec apply(const SVec& u, const SVec& v) const;
    bool operator==(const BilinTable&) const = default;

private:
    std::vector<std::vector<std::pair<int32_t, SVec>>> rows_;
};

/// Morita context given by raw data: two graded algebras, two graded
/// bimodule coordinate spaces, four module actions and two pairings.
struct AbstractContext {
    GradedAlgebra A, B;
    GradedSpace X, Y;
    BilinTable ax, xb, by, ya;  // A x X -> X, X x B -> X, B x Y -> Y, Y x A -> Y
    BilinTable xy, yx;          // pairings X x Y -> A and Y x X -> B
};

/// Morita context realized by four subspaces of one ambient graded algebra;
/// all products are the ambient product.
struct EmbeddedContext {
    GradedAlgebra C;
    Subspace A, B, X, Y;
};

/// Closure and gradedness of the four pieces.
/// Errors: ClosureViolation, GradingViolation.
void validate_embedded(const EmbeddedContext& ctx);

/// Extracts tables over the canonical bases of the four subspaces.
AbstractContext to_abstract(const EmbeddedContext& ctx);
/// (A, A, A, A) with all maps given by the product.
AbstractContext trivial_context(const GradedAlgebra& a);
/// (B, A, Y, X) with the pairings swapped.
AbstractContext reverse_context(const AbstractContext& ctx);
/// Transports a context along graded isomorphisms of its outer algebras
/// (either map may be the identity by passing nullptr).
AbstractContext transport_context(const AbstractContext& ctx, const GradedAlgebra* newA,
                                  const LinearMap* isoA, const GradedAlgebra* newB,
                                  const LinearMap* isoB);

/// The linking algebra of a context: blocks [A | X | Y | B], products from
/// the tables, graded by component degrees, with the degree-1 idempotent
/// multiplier cutting the corners. Building it validates the context: the
/// block algebra must be associative (the mixed associativity identities)
/// and graded. Errors: BalanceViolation, GradingViolation.
struct Linking {
    GradedAlgebra L;
    Multiplier e;
    int32_t offA = 0, offX = 0, offY = 0, offB = 0;
    EmbeddedContext inside;  // the same context embedded in L
};
Linking linking_algebra(const AbstractContext& ctx);

/// Linking algebra checks of a graded equivalence: fullness LeL = L = L(1-e)L,
/// corner isomorphisms, idempotence; for a strong equivalence between
/// partially strongly graded algebras additionally the degree-ideal corner
/// identities and the partial strong grading of L itself.
VerificationReport linking_report(const AbstractContext& ctx, const std::string& fixture = "");

/// Corner context of a degree-1 idempotent multiplier:
/// (eCe, (1-e)C(1-e), eC(1-e), (1-e)Ce). Errors: NotIdempotent,
/// NotDegreeOne, NotMultiplier, FullnessFailed, VerificationFailed.
EmbeddedContext corner_context(const GradedAlgebra& c, const Multiplier& e);

/// Pairings surjective and all four modules unital, as span equalities.
bool is_graded_equivalence(const EmbeddedContext& ctx);
bool is_graded_equivalence(const AbstractContext& ctx);

/// Degreewise unitality over the degree ideals (requires those ideals to be
/// idempotent); the equivalence form additionally requires surjective
/// pairings and degreewise surjectivity onto the degree ideals.
bool is_strong_context(const EmbeddedContext& ctx);
bool is_strong_graded_equivalence(const EmbeddedContext& ctx);
bool is_strong_graded_equivalence(const AbstractContext& ctx);

/// The standard consequences of a strong context between partially strongly
/// graded algebras: translation identities for the module components,
/// degree-ideal exchange, pairing factorizations, fully-unital
/// characterizations, and the degreewise Morita equivalences.
VerificationReport check_strong_props(const EmbeddedContext& ctx, const std::string& fixture = "");

/// X tensor_A Y as an explicit quotient of the pure-tensor coordinate
/// space; quotient coordinates are the free pure tensors.
struct TensorQuotient {
    GradedSpace space;
    std::vector<int32_t> free_index;     // (i * dimY + j) -> quotient coord or -1
    std::vector<std::vector<SVec>> proj; // projection of each pure tensor
};
TensorQuotient tensor_over(const GradedSpace& x, const FiniteGroup& g, int32_t mid_dim,
                           const BilinTable& xa, const BilinTable& ay, const GradedSpace& y);

/// Composition of contexts over a shared middle algebra.
/// Errors: MiddleAlgebraMismatch; the composite is validated.
AbstractContext compose_contexts(const AbstractContext& m, const AbstractContext& n);

/// Morita equivalence of partial actions: an ungraded Morita equivalence
/// blockwise inside its linking algebra, a product partial action theta on
/// that algebra with block-form domains, restricting to the two given
/// actions on the corners.
struct ActionEquivalence {
    Algebra C;
    Subspace A, X, Y, B;     // blocks of C, direct sum decomposition
    PartialAction theta;     // on C
    PartialAction alpha;     // on the algebra carried by block A
    PartialAction alphap;    // on the algebra carried by block B
    // Columns give the C-coordinates of the carrier basis of alpha/alphap.
    Mat bridge_a, bridge_b;
};

VerificationReport validate_action_equivalence(const ActionEquivalence& ae,
                                               const std::string& fixture = "");

/// The trivial self-equivalence of an action on the 2x2 block pattern.
ActionEquivalence self_equivalence(const PartialAction& alpha);

/// Skewing the equivalence: C skew theta with the blockwise degree-1
/// multiplier satisfies the strong linking-algebra identities, and its
/// corner context is a strong graded equivalence between the skew algebras
/// of the two actions.
struct ActionToSge {
    SkewAlgebra crossed;
    Multiplier e;
    EmbeddedContext context;
    LinearMap corner_iso_a;  // corner algebra of e -> skew algebra of alpha
    LinearMap corner_iso_b;
    VerificationReport report;
};
ActionToSge action_equivalence_to_sge(const ActionEquivalence& ae, const std::string& fixture = "");

/// Restriction of an equivalence of global actions to an idempotent ideal
/// of the left algebra (given inside the left block of C): produces the
/// Morita equivalence between the restricted partial actions.
struct RestrictedEquivalence {
    ActionEquivalence equivalence;
    Subspace ideal_right;  // the corresponding ideal of the right algebra, in C
    VerificationReport report;
};
RestrictedEquivalence restrict_action_equivalence(const ActionEquivalence& ae, const Subspace& ideal,
                                                  const std::string& fixture = "");

/// Smashing a graded context: the smash of the linking algebra decomposes
/// into the smashes of the blocks; the dual actions of the outer algebras
/// become Morita equivalent via the dual action of the linking algebra.
struct SmashedContext {
    Linking linked;
    SmashAlgebra carrier;        // smash of the linking algebra
    EmbeddedContext context;     // (A#G, B#G, X#G, Y#G) inside the carrier
    SmashAlgebra smash_a, smash_b;
    bool is_equivalence = false;
    ActionEquivalence actions;   // dual action of A ~ dual action of B (equivalences only)
    VerificationReport report;
};
SmashedContext smash_context(const AbstractContext& m, const std::string& fixture = "");

/// For a strong graded equivalence between partially strongly graded
/// algebras: transport of the partial smash ideal across the smashed
/// context recovers the other partial smash ideal, and restriction yields a
/// Morita equivalence between the two canonical partial actions.
struct CanonicalEquivalence {
    SmashedContext smashed;
    RestrictedEquivalence restricted;
    VerificationReport report;
};
CanonicalEquivalence sge_to_canonical_action_equivalence(const AbstractContext& m,
                                                         const std::string& fixture = "");

}  // namespace gral
