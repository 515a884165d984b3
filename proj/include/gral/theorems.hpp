#pragma once

#include "gral/morita.hpp"

namespace gral {

/// One routine per constructive statement; each builds the explicit witness
/// from scratch and records every defining span equality.

/// The double crossed product of the dual action is the full matrix algebra,
/// via an explicit bijective multiplicative degree-compatible map. When a
/// graded endomorphism of the base is supplied, the naturality square is
/// checked as well.
VerificationReport verify_duality(const GradedAlgebra& b, const std::string& fixture = "",
                                  const LinearMap* morphism = nullptr);

/// Naturality of the duality isomorphism along a graded homomorphism
/// between two bases: carrying the morphism through the crossed products
/// agrees with carrying it through the matrix algebras.
VerificationReport verify_duality_naturality(const GradedAlgebra& a, const GradedAlgebra& b,
                                             const LinearMap& phi, const std::string& fixture = "");

/// The explicit context between the double crossed product and a copy of the
/// base: all six span equalities plus the graded isomorphism of the copy.
/// Errors: PreconditionFailed when the base is not idempotent graded.
VerificationReport verify_geq(const GradedAlgebra& b, const std::string& fixture = "");

/// The context between the skew algebras of a product partial action and a
/// minimal globalization. Errors: NotMinimal.
VerificationReport verify_globalization(const GlobalAction& beta, const Subspace& ideal,
                                        const std::string& fixture = "");

/// The strong equivalence between a partially strongly graded algebra and
/// the crossed product of its canonical partial action, with explicit
/// module spans and their degreewise identities. Errors: PreconditionFailed.
VerificationReport verify_sg(const GradedAlgebra& b, const std::string& fixture = "");

/// Canonical partial action plus the globalization context applied to the
/// dual action. Errors: PreconditionFailed.
VerificationReport verify_partialrep(const GradedAlgebra& b, const std::string& fixture = "");

/// Strong gradings match on the two sides of a strong graded equivalence.
VerificationReport verify_invsgeq(const AbstractContext& m, const std::string& fixture = "");

/// Strongly graded algebras that are graded-equivalent are strongly graded
/// equivalent: the witness is assembled by composing the crossed-product
/// equivalences of the two sides with the smashed context of the input.
VerificationReport verify_eq_strong_gr(const AbstractContext& m, const std::string& fixture = "");

/// The in-scope consequences of the Morita enveloping theorem for a product
/// partial action: canonical action on the skew algebra, the strong
/// equivalence with its crossed product, duality, and the composed graded
/// equivalence with the double crossed product.
VerificationReport verify_moritaglob(const PartialAction& alpha, const std::string& fixture = "");

/// Witness context of verify_sg in reusable form: the embedded context, the
/// ambient double crossed product, and the isomorphism of the base copy.
struct SgWitness {
    SkewAlgebra crossed;         // (B#G) skewed by the dual action
    SmashAlgebra smash_algebra;  // B#G
    EmbeddedContext ctx;         // (I x G, B', X', Y') in the crossed product
    LinearMap bprime_to_b;       // graded isomorphism of the B' block onto b
    VerificationReport report;
};
SgWitness sg_witness(const GradedAlgebra& b, const std::string& fixture = "");

/// Witness context of verify_geq: (everything, B', X, Y) in the double
/// crossed product with the isomorphism of the base copy.
struct GeqWitness {
    SkewAlgebra crossed;
    EmbeddedContext ctx;
    LinearMap bprime_to_b;
    VerificationReport report;
};
GeqWitness geq_witness(const GradedAlgebra& b, const std::string& fixture = "");

}  // namespace gral
