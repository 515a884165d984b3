#include <doctest.h>

#include "gral/morita.hpp"
#include "test_util.hpp"

using namespace gral;
using testutil::sc;

namespace {

const Field Q = Field::q();

SVec unit(int32_t i, Field f = Q) { return {{i, Scalar::one(f)}}; }

PartialAction swap_restriction() {
    Algebra diag(Q, 2);
    diag.set_product(0, 0, unit(0));
    diag.set_product(1, 1, unit(1));
    Mat swp(Q, 2, 2);
    swp.at(1, 0) = swp.at(0, 1) = Scalar::one(Q);
    GlobalAction beta =
        GlobalAction::validate(FiniteGroup::cyclic(2), diag, {Mat::identity(Q, 2), swp});
    return restrict_global(beta, Subspace::span(Q, 2, {unit(0)}));
}

PartialAction cycle_restriction() {
    Algebra diag(Q, 3);
    for (int32_t i = 0; i < 3; ++i) diag.set_product(i, i, unit(i));
    Mat cyc(Q, 3, 3);
    cyc.at(1, 0) = cyc.at(2, 1) = cyc.at(0, 2) = Scalar::one(Q);
    GlobalAction beta = GlobalAction::validate(FiniteGroup::cyclic(3), diag,
                                               {Mat::identity(Q, 3), cyc, cyc.times(cyc)});
    return restrict_global(beta, Subspace::span(Q, 3, {unit(0), unit(1)}));
}

}  // namespace

TEST_CASE("trivial context and its linking algebra") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    AbstractContext ctx = trivial_context(f1);
    CHECK(is_graded_equivalence(ctx));
    Linking lk = linking_algebra(ctx);
    CHECK(lk.L.dim() == 8);  // a 2x2 block pattern over the group algebra
    CHECK(lk.L.is_strongly_graded());
    VerificationReport rep = linking_report(ctx, "trivial-c2");
    CHECK(rep.pass());
}

TEST_CASE("failing contexts") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    // Zero Y against nonzero algebras: not an equivalence.
    AbstractContext ctx = trivial_context(f1);
    ctx.Y = GradedSpace{Q, 0, {}};
    ctx.by = BilinTable(2);
    ctx.ya = BilinTable(0);
    ctx.xy = BilinTable(2);
    ctx.yx = BilinTable(0);
    CHECK(!is_graded_equivalence(ctx));
    CHECK_THROWS_WITH_AS(linking_report(ctx, ""), "context is not a graded equivalence", Error);

    // Regrading X breaks the linking grading.
    AbstractContext shifted = trivial_context(f1);
    shifted.X.deg = {1, 0};
    CHECK_THROWS_AS(linking_algebra(shifted), Error);

    // A context whose pairing violates the balance identities.
    AbstractContext broken = trivial_context(f1);
    broken.xy.set(0, 0, unit(1));
    CHECK_THROWS_WITH_AS(linking_algebra(broken), doctest::Contains("linking algebra"), Error);
}

TEST_CASE("corner contexts") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    Linking lk = linking_algebra(trivial_context(f1));
    EmbeddedContext corner = corner_context(lk.L, lk.e);
    // The corner context recovers the blocks of the linking algebra.
    CHECK(corner.A == lk.inside.A);
    CHECK(corner.B == lk.inside.B);
    CHECK(corner.X == lk.inside.X);
    CHECK(corner.Y == lk.inside.Y);
    CHECK(graded_algebra_on_subspace(lk.L, corner.A) == f1);
    // The pairing tables of the recovered context agree entry for entry.
    AbstractContext original = trivial_context(f1);
    AbstractContext recovered = to_abstract(corner);
    CHECK(recovered.xy == original.xy);
    CHECK(recovered.yx == original.yx);
    CHECK(recovered.ax == original.ax);
    CHECK(recovered.ya == original.ya);

    // The identity multiplier has a vanishing complementary corner.
    CHECK_THROWS_WITH_AS(corner_context(f1, Multiplier::identity(Q, 2)),
                         "corner multiplier is not full", Error);

    // Cutting the matrix algebra by a diagonal idempotent.
    GradedAlgebra f4 = testutil::mat2_graded(Q);
    Multiplier e11 = multiplication_by(f4.algebra(), unit(0));
    EmbeddedContext cc = corner_context(f4, e11);
    CHECK(cc.A == Subspace::span(Q, 4, {unit(0)}));
    CHECK(cc.B == Subspace::span(Q, 4, {unit(1)}));
    CHECK(cc.X == Subspace::span(Q, 4, {unit(2)}));
    CHECK(cc.Y == Subspace::span(Q, 4, {unit(3)}));
    CHECK(is_graded_equivalence(cc));
    // Not strong: the nontrivial-degree ideal of the rank-one corner
    // vanishes while the off-diagonal piece does not.
    CHECK(!is_strong_graded_equivalence(cc));

    // With the trivial grading the same corner is a strong equivalence.
    GradedAlgebra m2_trivial = GradedAlgebra::validate(f4.algebra(), FiniteGroup::cyclic(1),
                                                       {0, 0, 0, 0});
    EmbeddedContext ct = corner_context(m2_trivial, e11);
    CHECK(is_strong_graded_equivalence(ct));
}

TEST_CASE("strong context predicates") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    Linking lk1 = linking_algebra(trivial_context(f1));
    CHECK(is_strong_context(lk1.inside));
    CHECK(is_strong_graded_equivalence(lk1.inside));
    CHECK(check_strong_props(lk1.inside, "trivial-c2").pass());

    GradedAlgebra f4 = testutil::mat2_graded(Q);
    Linking lk4 = linking_algebra(trivial_context(f4));
    CHECK(is_strong_graded_equivalence(lk4.inside));
    CHECK(check_strong_props(lk4.inside, "trivial-mat2").pass());

    // Not partially strong: the trivial context of the dual numbers.
    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    Linking lk2 = linking_algebra(trivial_context(f2));
    CHECK(is_graded_equivalence(lk2.inside));
    CHECK(!is_strong_context(lk2.inside));
    CHECK(!is_strong_graded_equivalence(lk2.inside));
    CHECK_THROWS_AS(check_strong_props(lk2.inside, ""), Error);
}

TEST_CASE("tensor quotients") {
    FiniteGroup c1 = FiniteGroup::cyclic(1);
    // k tensor_k k = k.
    GradedSpace line{Q, 1, {0}};
    BilinTable mult(1);
    mult.set(0, 0, unit(0));
    TensorQuotient t = tensor_over(line, c1, 1, mult, mult, line);
    CHECK(t.space.dim == 1);

    // k^2 tensor_k k = k^2 with the diagonal action.
    GradedSpace plane{Q, 2, {0, 0}};
    BilinTable xa(2);
    xa.set(0, 0, unit(0));
    xa.set(1, 0, unit(1));
    TensorQuotient t2 = tensor_over(plane, c1, 1, xa, mult, line);
    CHECK(t2.space.dim == 2);
}

TEST_CASE("composition of contexts") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    AbstractContext m = trivial_context(f1);
    AbstractContext composite = compose_contexts(m, m);
    // The module tensored over the algebra collapses back: B (x)_B B = B.
    CHECK(composite.X.dim == 2);
    CHECK(composite.Y.dim == 2);
    CHECK(is_graded_equivalence(composite));
    CHECK(is_strong_graded_equivalence(composite));

    GradedAlgebra f4 = testutil::mat2_graded(Q);
    AbstractContext m4 = trivial_context(f4);
    AbstractContext comp4 = compose_contexts(m4, m4);
    CHECK(is_strong_graded_equivalence(comp4));

    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    CHECK_THROWS_AS(compose_contexts(m, trivial_context(f2)), Error);

    // Composing with the trivial context preserves dimensions and spans.
    Multiplier e11m = multiplication_by(testutil::mat2_graded(Q).algebra(),
                                        {{0, Scalar::one(Q)}});
    AbstractContext corner = to_abstract(corner_context(testutil::mat2_graded(Q), e11m));
    AbstractContext padded = compose_contexts(corner, trivial_context(corner.B));
    CHECK(padded.X.dim == corner.X.dim);
    CHECK(padded.Y.dim == corner.Y.dim);
    CHECK(is_graded_equivalence(padded));
}

TEST_CASE("composition with a corner context round trips") {
    // Context between mat2 and k through the diagonal idempotent, composed
    // with its reverse: a self-equivalence of mat2.
    GradedAlgebra f4 = testutil::mat2_graded(Q);
    Multiplier e11 = multiplication_by(f4.algebra(), unit(0));
    AbstractContext ctx = to_abstract(corner_context(f4, e11));
    AbstractContext back = compose_contexts(ctx, reverse_context(ctx));
    CHECK(is_graded_equivalence(back));
    CHECK(is_strong_graded_equivalence(back));
    CHECK(back.A == ctx.A);
}

TEST_CASE("transport along graded isomorphisms") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    AbstractContext ctx = trivial_context(f1);
    Mat s = Mat::identity(Q, 2);
    s.at(1, 1) = sc(Q, -1);  // the sign character
    LinearMap iso{s};
    AbstractContext moved = transport_context(ctx, &f1, &iso, nullptr, nullptr);
    CHECK(is_graded_equivalence(moved));
    CHECK(is_strong_graded_equivalence(moved));
}

TEST_CASE("self equivalence of a partial action") {
    PartialAction f3 = swap_restriction();
    ActionEquivalence ae = self_equivalence(f3);
    CHECK(ae.C.dim() == 4);
    VerificationReport rep = validate_action_equivalence(ae, "swap-self");
    CHECK(rep.pass());

    PartialAction f6 = cycle_restriction();
    ActionEquivalence ae6 = self_equivalence(f6);
    CHECK(ae6.C.dim() == 8);
    CHECK(validate_action_equivalence(ae6, "cycle-self").pass());
}

TEST_CASE("action equivalence to strong graded equivalence") {
    PartialAction f3 = swap_restriction();
    ActionToSge s3 = action_equivalence_to_sge(self_equivalence(f3), "swap-self");
    CHECK(s3.report.pass());
    CHECK(is_strong_graded_equivalence(s3.context));

    PartialAction f6 = cycle_restriction();
    ActionToSge s6 = action_equivalence_to_sge(self_equivalence(f6), "cycle-self");
    CHECK(s6.report.pass());
}

TEST_CASE("restriction of an equivalence of global actions") {
    Algebra diag(Q, 2);
    diag.set_product(0, 0, unit(0));
    diag.set_product(1, 1, unit(1));
    Mat swp(Q, 2, 2);
    swp.at(1, 0) = swp.at(0, 1) = Scalar::one(Q);
    GlobalAction beta =
        GlobalAction::validate(FiniteGroup::cyclic(2), diag, {Mat::identity(Q, 2), swp});
    ActionEquivalence ae = self_equivalence(PartialAction::from_global(beta));
    CHECK(validate_action_equivalence(ae, "swap-global-self").pass());

    // Restrict to the first coordinate inside the A block.
    Subspace ideal = Subspace::span(Q, 8, {unit(0)});
    RestrictedEquivalence r = restrict_action_equivalence(ae, ideal, "swap-to-first");
    CHECK(r.report.pass());
    CHECK(r.equivalence.alpha.domain(0).rank() == 1);
    CHECK(r.equivalence.alpha.domain(1).rank() == 0);
    CHECK(r.equivalence.alphap.domain(1).rank() == 0);

    // Restricting to the whole block leaves the equivalence global.
    Subspace whole_block = Subspace::span(Q, 8, {unit(0), unit(1)});
    RestrictedEquivalence rw = restrict_action_equivalence(ae, whole_block, "swap-whole");
    CHECK(rw.report.pass());
    CHECK(rw.equivalence.alpha.is_global());
}

TEST_CASE("linking algebra of the globalization context") {
    // The context between the two skew algebras of the swap restriction:
    // blocks of dimensions 4, 1, 2, 2 by explicit basis enumeration.
    Algebra diag(Q, 2);
    diag.set_product(0, 0, unit(0));
    diag.set_product(1, 1, unit(1));
    Mat swp(Q, 2, 2);
    swp.at(1, 0) = swp.at(0, 1) = Scalar::one(Q);
    GlobalAction beta =
        GlobalAction::validate(FiniteGroup::cyclic(2), diag, {Mat::identity(Q, 2), swp});
    Subspace ideal = Subspace::span(Q, 2, {unit(0)});
    SkewAlgebra big = skew_group_algebra(PartialAction::from_global(beta));

    SpanBuilder xb(Q, 4), yb(Q, 4), ab(Q, 4);
    for (int32_t t = 0; t < 2; ++t) {
        Subspace tr = beta.apply(t, ideal);
        for (const auto& row : tr.basis()) xb.insert(svec_shift(row, big.offsets[size_t(t)]));
        for (const auto& row : ideal.basis()) yb.insert(svec_shift(row, big.offsets[size_t(t)]));
        Subspace dt = diag.product_span(ideal, tr);
        for (const auto& row : dt.basis()) ab.insert(svec_shift(row, big.offsets[size_t(t)]));
    }
    EmbeddedContext ctx{big.carrier, Subspace::full(Q, 4), ab.finish(), xb.finish(), yb.finish()};
    validate_embedded(ctx);
    CHECK(ctx.A.rank() == 4);
    CHECK(ctx.B.rank() == 1);
    CHECK(ctx.X.rank() == 2);
    CHECK(ctx.Y.rank() == 2);
    Linking lk = linking_algebra(to_abstract(ctx));
    CHECK(lk.L.dim() == 9);
    CHECK(linking_report(to_abstract(ctx), "swap-globalization").pass());
}

TEST_CASE("corrupted action equivalences are reported") {
    PartialAction f6 = cycle_restriction();
    ActionEquivalence good = self_equivalence(f6);
    CHECK(validate_action_equivalence(good, "good").pass());

    // Swapping the module blocks breaks the pairing spans.
    ActionEquivalence swapped = good;
    std::swap(swapped.X, swapped.Y);
    CHECK(!validate_action_equivalence(swapped, "swapped").pass());

    // A mismatched corner action breaks the restriction checks.
    ActionEquivalence wrong_corner = good;
    wrong_corner.alpha = PartialAction::from_global(GlobalAction::validate(
        f6.group(), f6.algebra(),
        {Mat::identity(Q, 2), Mat::identity(Q, 2), Mat::identity(Q, 2)}));
    wrong_corner.alphap = wrong_corner.alpha;
    CHECK(!validate_action_equivalence(wrong_corner, "wrong-corner").pass());
}

TEST_CASE("smashing the trivial context") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    SmashedContext sm = smash_context(trivial_context(f1), "trivial-c2");
    CHECK(sm.report.pass());
    CHECK(sm.is_equivalence);
    CHECK(sm.carrier.carrier.dim() == 16);
    CHECK(sm.context.A.rank() == 4);
    CHECK(sm.context.B.rank() == 4);
}

TEST_CASE("canonical action equivalence from a strong equivalence") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    CanonicalEquivalence ce = sge_to_canonical_action_equivalence(trivial_context(f1), "trivial-c2");
    CHECK(ce.report.pass());

    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    CHECK_THROWS_AS(sge_to_canonical_action_equivalence(trivial_context(f2), ""), Error);
}
