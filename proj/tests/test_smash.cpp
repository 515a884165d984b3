#include <doctest.h>

#include "gral/smash.hpp"
#include "test_util.hpp"

using namespace gral;
using testutil::sc;

namespace {

const Field Q = Field::q();

SVec unit(int32_t i, Field f = Q) { return {{i, Scalar::one(f)}}; }

// The skew algebra of the coordinate-swap restriction: a one-dimensional
// algebra graded by C2 with trivial support in the nontrivial degree.
GradedAlgebra skew_of_swap_restriction() {
    Algebra a(Q, 1);
    a.set_product(0, 0, unit(0));
    return GradedAlgebra::validate(std::move(a), FiniteGroup::cyclic(2), {0});
}

// Skew algebra of the cycle restriction, built through the action modules.
GradedAlgebra skew_of_cycle_restriction() {
    Algebra diag(Q, 3);
    for (int32_t i = 0; i < 3; ++i) diag.set_product(i, i, unit(i));
    Mat cyc(Q, 3, 3);
    cyc.at(1, 0) = cyc.at(2, 1) = cyc.at(0, 2) = Scalar::one(Q);
    Mat cyc2 = cyc.times(cyc);
    GlobalAction beta = GlobalAction::validate(FiniteGroup::cyclic(3), diag,
                                               {Mat::identity(Q, 3), cyc, cyc2});
    PartialAction alpha = restrict_global(beta, Subspace::span(Q, 3, {unit(0), unit(1)}));
    return skew_group_algebra(alpha).carrier;
}

}  // namespace

TEST_CASE("matrix algebra dimensions and grading") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    SmashAlgebra m = fmat(f1);
    CHECK(m.carrier.dim() == 8);  // four positions, base dimension two

    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    SmashAlgebra m2 = fmat(f2);
    CHECK(m2.carrier.dim() == 8);
    CHECK(m2.carrier.component(0).rank() == 4);  // positions with r = s

    // Trivial group: the matrix algebra is the base itself.
    GradedAlgebra triv = testutil::zero_product_algebra(Q);
    CHECK(fmat(triv).carrier.dim() == 1);
}

TEST_CASE("smash product dimensions") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    CHECK(smash(f1).carrier.dim() == 4);
    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    CHECK(smash(f2).carrier.dim() == 4);
    GradedAlgebra f5 = testutil::group_algebra(FiniteGroup::cyclic(3), Q);
    CHECK(smash(f5).carrier.dim() == 9);
}

TEST_CASE("dual action translates labels") {
    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    SmashAlgebra s = smash(f2);
    GlobalAction beta = dual_action(s);
    // x e_{1,g} -> x e_{g,1} under the nontrivial translation.
    int32_t from = s.index_of(1, 0, 1);
    int32_t to = s.index_of(1, 1, 0);
    REQUIRE(from >= 0);
    REQUIRE(to >= 0);
    CHECK(beta.apply(1, unit(from)) == unit(to));
    // Order two.
    CHECK(beta.maps[1].times(beta.maps[1]) == Mat::identity(Q, s.carrier.dim()));
}

TEST_CASE("diagonal embedding") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    SmashAlgebra s = smash(f1);
    LinearMap eta = diagonal_embedding(s);
    CHECK(eta.apply({}).empty());
    // 1 -> e_{1,1} + e_{g,g}
    SVec img1 = eta.apply(unit(0));
    CHECK(img1 == svec_axpy(unit(s.index_of(0, 0, 0)), Scalar::one(Q), unit(s.index_of(0, 1, 1))));
    // u_g -> u_g e_{1,g} + u_g e_{g,1}
    SVec img2 = eta.apply(unit(1));
    CHECK(img2 == svec_axpy(unit(s.index_of(1, 0, 1)), Scalar::one(Q), unit(s.index_of(1, 1, 0))));

    // Every image is fixed by the dual action, and the fixed points are
    // exactly the image for a finite group.
    GlobalAction beta = dual_action(s);
    for (int32_t t = 0; t < 2; ++t) {
        CHECK(beta.apply(t, img1) == img1);
        CHECK(beta.apply(t, img2) == img2);
    }
    Subspace fixed = dual_action_fixed_points(s);
    CHECK(fixed.rank() == 2);
    CHECK(fixed.contains(img1));
    CHECK(fixed.contains(img2));
}

TEST_CASE("smash functor") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    SmashAlgebra s = smash(f1);
    LinearMap lifted = smash_functor(s, s, LinearMap{Mat::identity(Q, 2)});
    CHECK(lifted.m == Mat::identity(Q, 4));

    // The zero map drops rank to zero.
    CHECK(smash_functor(s, s, LinearMap{Mat(Q, 2, 2)}).rank() == 0);

    // Inclusion of the identity component of the dual numbers.
    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    Subspace comp0 = f2.component(0);
    GradedAlgebra sub = graded_algebra_on_subspace(f2, comp0);
    Mat inc(Q, 2, 1);
    inc.at(0, 0) = sc(Q, 1);
    LinearMap lift = smash_functor(smash(sub), smash(f2), LinearMap{inc});
    CHECK(lift.is_injective());

    // A degree-breaking map is rejected.
    Mat bad(Q, 2, 2);
    bad.at(0, 1) = sc(Q, 1);
    CHECK_THROWS_AS(smash_functor(s, s, LinearMap{bad}), Error);
}

TEST_CASE("partial smash products") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    SmashAlgebra s1 = smash(f1);
    Subspace i1 = partial_smash(s1);
    CHECK(i1.rank() == 4);  // strongly graded: the whole smash product

    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    SmashAlgebra s2 = smash(f2);
    Subspace i2 = partial_smash(s2);
    CHECK(i2.rank() == 3);  // entry at (g, g) vanishes

    GradedAlgebra f4 = testutil::mat2_graded(Q);
    CHECK(partial_smash(smash(f4)).is_full());
}

TEST_CASE("canonical partial action on strongly graded bases is global") {
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    CanonicalPartialAction cpa = canonical_partial_action(f1, "c2-group-algebra");
    CHECK(cpa.report.pass());
    CHECK(cpa.ideal.is_full());
    CHECK(cpa.action.is_global());

    GradedAlgebra f4 = testutil::mat2_graded(Q);
    CanonicalPartialAction cpa4 = canonical_partial_action(f4, "mat2");
    CHECK(cpa4.report.pass());
    CHECK(cpa4.action.is_global());
}

TEST_CASE("canonical partial action on a properly partial base") {
    GradedAlgebra b = skew_of_cycle_restriction();
    CanonicalPartialAction cpa = canonical_partial_action(b, "cycle-skew");
    CHECK(cpa.report.pass());
    CHECK(!cpa.ideal.is_full());
    CHECK(!cpa.action.is_global());
    // Not invariant under the dual action, matching the non-strong grading.
    bool invariant = true;
    for (int32_t t = 0; t < 3; ++t)
        if (!(cpa.dual.apply(t, cpa.ideal) == cpa.ideal)) invariant = false;
    CHECK(!invariant);

    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    CHECK_THROWS_AS(canonical_partial_action(f2), Error);
}

TEST_CASE("duality isomorphism") {
    for (const auto& b : {testutil::group_algebra(FiniteGroup::cyclic(2), Q),
                          testutil::dual_numbers_graded(Q), testutil::mat2_graded(Q),
                          testutil::group_algebra(FiniteGroup::cyclic(3), Q)}) {
        DualityIso d = duality_iso(b, "case");
        CHECK(d.report.pass());
        CHECK(d.crossed.carrier.dim() == b.group().order() * b.group().order() * b.dim());
    }
    // Trivial group: the isomorphism is the identity permutation.
    GradedAlgebra z = testutil::zero_product_algebra(Q);
    DualityIso d = duality_iso(z, "trivial");
    CHECK(d.report.pass());
    CHECK(d.psi.m == Mat::identity(Q, 1));
}

TEST_CASE("partial duality image") {
    // Strongly graded bases fill the whole matrix algebra.
    GradedAlgebra f1 = testutil::group_algebra(FiniteGroup::cyclic(2), Q);
    CHECK(partial_duality_image(f1).is_full());
    GradedAlgebra f4 = testutil::mat2_graded(Q);
    CHECK(partial_duality_image(f4).is_full());

    // The skew algebra of the swap restriction gives a proper subalgebra.
    GradedAlgebra b3 = skew_of_swap_restriction();
    Subspace img = partial_duality_image(b3);
    CHECK(img.rank() == 1);
    CHECK(fmat(b3).carrier.dim() == 4);

    GradedAlgebra f2 = testutil::dual_numbers_graded(Q);
    CHECK_THROWS_AS(partial_duality_image(f2), Error);
}
