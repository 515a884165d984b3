// Acceptance suite: one criterion per function, one printed line each.
// The CLI path for the end-to-end criterion comes from the GRAL_CLI
// environment variable (set by ctest).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gral/fixtures.hpp"
#include "gral/io.hpp"
#include "gral/theorems.hpp"

using namespace gral;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failed = 0;

    void criterion(int number, const std::string& what, bool ok) {
        std::printf("criterion %2d: %s  %s\n", number, ok ? "PASS" : "FAIL", what.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
};

const std::vector<Field> kFields = {Field::q(), Field::fp(101)};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<GradedAlgebra> registered_algebras(Field f) {
    std::vector<GradedAlgebra> out;
    for (const auto* id : {"F1", "F2", "F4", "F5"}) out.push_back(*fixture(id, f).algebra);
    return out;
}

GradedAlgebra skew_of(const std::string& id, Field f) {
    return skew_group_algebra(*fixture(id, f).action).carrier;
}

bool check_has(const VerificationReport& rep, const std::string& prefix) {
    for (const auto& c : rep.checks)
        if (c.name.rfind(prefix, 0) == 0) return true;
    return false;
}

// 1. Duality with the dimension identity, under a per-fixture time budget.
bool crit_duality() {
    bool ok = true;
    for (const Field& f : kFields) {
        std::vector<std::pair<std::string, GradedAlgebra>> cases;
        for (const auto* id : {"F1", "F2", "F4", "F5"}) cases.emplace_back(id, *fixture(id, f).algebra);
        const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                                 FiniteGroup::klein4()};
        for (uint64_t seed = 0; seed < 10; ++seed)
            cases.emplace_back("seed-" + std::to_string(seed),
                               random_graded_algebra(seed, groups[size_t(seed % 3)], f, 12));
        for (const auto& [name, b] : cases) {
            auto start = Clock::now();
            VerificationReport rep = verify_duality(b, name);
            const double ms = ms_since(start);
            const int32_t n = b.group().order();
            bool dims = false;
            for (const auto& c : rep.checks)
                if (c.name == "dimension-identity")
                    dims = c.pass && c.expected == std::to_string(n * n * b.dim());
            ok = ok && rep.pass() && dims && ms < 2000.0;
        }
    }
    return ok;
}

// 2. The six span equalities of the crossed-product context, for every
// idempotent-graded fixture.
bool crit_geq() {
    bool ok = true;
    const char* names[6] = {"XY-is-everything", "EX=X", "YX=B'", "XB'=X", "B'Y=Y", "YE=Y"};
    for (const Field& f : kFields) {
        std::vector<GradedAlgebra> cases = registered_algebras(f);
        cases.push_back(skew_of("F3", f));
        cases.push_back(skew_of("F6", f));
        for (const auto& b : cases) {
            if (!b.is_idempotent_graded()) continue;
            VerificationReport rep = verify_geq(b);
            int seen = 0;
            for (const auto& c : rep.checks)
                for (const auto* n : names)
                    if (c.name == n) seen += c.pass ? 1 : -100;
            ok = ok && rep.pass() && seen == 6;
        }
    }
    return ok;
}

// 3. Hierarchy of grading conditions on generated algebras, with witnesses
// separating every implication.
bool crit_hierarchy() {
    bool ok = true;
    for (const Field& f : kFields) {
        int count = 0;
        const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                                 FiniteGroup::cyclic(4), FiniteGroup::klein4()};
        for (uint64_t seed = 0; seed < 100; ++seed) {
            GradedAlgebra b = random_graded_algebra(seed, groups[size_t(seed % 4)], f, 12);
            ++count;
            if (b.is_strongly_graded() && !b.is_partially_strongly_graded()) ok = false;
            if (b.is_partially_strongly_graded() && !b.is_idempotent_graded()) ok = false;
        }
        ok = ok && count >= 100;
        // Separating witnesses.
        GradedAlgebra f1 = *fixture("F1", f).algebra;
        GradedAlgebra f4 = *fixture("F4", f).algebra;
        GradedAlgebra f2 = *fixture("F2", f).algebra;
        GradedAlgebra s3 = skew_of("F3", f);
        ok = ok && f1.is_strongly_graded() && f4.is_strongly_graded();
        ok = ok && s3.is_partially_strongly_graded() && !s3.is_strongly_graded();
        ok = ok && f2.is_idempotent_graded() && !f2.is_partially_strongly_graded();
    }
    return ok;
}

// 4. Skew-algebra laws on generated actions, plus the product-axiom
// biconditional on every generated idempotent partial action.
bool crit_skew_laws() {
    bool ok = true;
    for (const Field& f : kFields) {
        const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                                 FiniteGroup::klein4()};
        for (uint64_t seed = 0; seed < 25; ++seed) {
            PartialAction alpha =
                random_product_partial_action(seed, groups[size_t(seed % 3)], f, 12, nullptr);
            SkewAlgebra sk = skew_group_algebra(alpha);  // validates associativity
            ok = ok && sk.carrier.is_partially_strongly_graded();
            ok = ok && sk.carrier.is_strongly_graded() == alpha.is_global();
            ok = ok && alpha.domains_idempotent() && check_pa_prp_equivalence(alpha);
        }
    }
    return ok;
}

// 5. Canonical partial action on every partially strong fixture; the
// invariance characterization checked in both directions.
bool crit_canonical_action() {
    bool ok = true;
    for (const Field& f : kFields) {
        std::vector<std::pair<std::string, GradedAlgebra>> cases = {
            {"F1", *fixture("F1", f).algebra},  {"F4", *fixture("F4", f).algebra},
            {"F5", *fixture("F5", f).algebra},  {"skew-F3", skew_of("F3", f)},
            {"skew-F6", skew_of("F6", f)},
        };
        for (const auto& [name, b] : cases) {
            if (!b.is_partially_strongly_graded()) {
                ok = false;
                continue;
            }
            CanonicalPartialAction cpa = canonical_partial_action(b, name);
            ok = ok && cpa.report.pass();
            ok = ok && check_has(cpa.report, "domain-two-sided") &&
                 check_has(cpa.report, "domain-displayed-span") &&
                 check_has(cpa.report, "orbit-spans-smash");
        }
        // Both directions of the invariance characterization.
        CanonicalPartialAction strong_case = canonical_partial_action(*fixture("F1", f).algebra);
        bool invariant = true;
        for (int32_t t = 0; t < 2; ++t)
            invariant = invariant && strong_case.dual.apply(t, strong_case.ideal) == strong_case.ideal;
        ok = ok && invariant;

        GradedAlgebra s6 = skew_of("F6", f);
        CanonicalPartialAction partial_case = canonical_partial_action(s6);
        bool inv6 = true;
        for (int32_t t = 0; t < 3; ++t)
            inv6 = inv6 && partial_case.dual.apply(t, partial_case.ideal) == partial_case.ideal;
        ok = ok && !inv6 && !s6.is_strongly_graded();
    }
    return ok;
}

// 6. The crossed-product strong equivalence witness.
bool crit_sg() {
    bool ok = true;
    for (const Field& f : kFields) {
        std::vector<std::pair<std::string, GradedAlgebra>> cases = {
            {"F1", *fixture("F1", f).algebra},
            {"F4", *fixture("F4", f).algebra},
            {"skew-F3", skew_of("F3", f)},
            {"skew-F6", skew_of("F6", f)},
        };
        const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                                 FiniteGroup::klein4()};
        for (uint64_t seed = 0; seed < 10; ++seed) {
            // Skew algebras of generated actions are partially strong.
            PartialAction alpha =
                random_product_partial_action(seed, groups[size_t(seed % 3)], f, 8, nullptr);
            cases.emplace_back("seed-" + std::to_string(seed), skew_group_algebra(alpha).carrier);
        }
        for (const auto& [name, b] : cases) {
            VerificationReport rep = verify_sg(b, name);
            ok = ok && rep.pass() && check_has(rep, "degreewise-A-side") &&
                 check_has(rep, "X'Y'-is-crossed-product");
        }
    }
    return ok;
}

// 7. The globalization context for the two restriction fixtures, and the
// minimality detector on the padded counter-fixture.
bool crit_globalization() {
    bool ok = true;
    for (const Field& f : kFields) {
        for (const auto* id : {"F3", "F6"}) {
            Fixture fx = fixture(id, f);
            ok = ok && verify_globalization(*fx.global, *fx.ideal, id).pass();
        }
        // Padded counter-fixture: a swap inside k^3 whose orbit misses e3.
        Algebra k3(f, 3);
        for (int32_t i = 0; i < 3; ++i) k3.set_product(i, i, {{i, Scalar::one(f)}});
        Mat swap01(f, 3, 3);
        swap01.at(1, 0) = swap01.at(0, 1) = swap01.at(2, 2) = Scalar::one(f);
        GlobalAction padded =
            GlobalAction::validate(FiniteGroup::cyclic(2), k3, {Mat::identity(f, 3), swap01});
        Subspace ideal = Subspace::span(f, 3, {{{0, Scalar::one(f)}}});
        ok = ok && !is_minimal_globalization(padded, ideal);
        bool threw = false;
        try {
            (void)verify_globalization(padded, ideal, "padded");
        } catch (const Error& e) {
            threw = std::string(e.code()) == "NotMinimal";
        }
        ok = ok && threw;
    }
    return ok;
}

// 8. The action-equivalence pipeline with the degreewise ideal equivalences.
bool crit_action_pipeline() {
    bool ok = true;
    for (const Field& f : kFields) {
        for (const auto* id : {"F3", "F6"}) {
            PartialAction alpha = *fixture(id, f).action;
            ActionEquivalence self = self_equivalence(alpha);
            VerificationReport val = validate_action_equivalence(self, id);
            ok = ok && val.pass() && check_has(val, "XtYt=D") && check_has(val, "ideal-unital-X");
            ActionToSge sge = action_equivalence_to_sge(self, id);
            ok = ok && sge.report.pass();
            ok = ok && verify_invsgeq(to_abstract(sge.context), id).pass();
        }
        // Restriction outputs run through the same pipeline.
        Fixture f3 = fixture("F3", f);
        ActionEquivalence global_self = self_equivalence(PartialAction::from_global(*f3.global));
        SpanBuilder ideal(f, 8);
        ideal.insert({{0, Scalar::one(f)}});
        RestrictedEquivalence restricted =
            restrict_action_equivalence(global_self, ideal.finish(), "restricted-swap");
        ok = ok && restricted.report.pass();
        ActionToSge sge2 = action_equivalence_to_sge(restricted.equivalence, "restricted-swap");
        ok = ok && sge2.report.pass();
        ok = ok && verify_invsgeq(to_abstract(sge2.context), "restricted-swap").pass();

        // The canonical route from a strong equivalence is itself a
        // restriction output.
        CanonicalEquivalence ce =
            sge_to_canonical_action_equivalence(trivial_context(skew_of("F3", f)), "skew-F3");
        ok = ok && ce.report.pass();
    }
    return ok;
}

// 9. Smashing a context: block decomposition and Morita-context checks.
bool crit_smash_context() {
    bool ok = true;
    for (const Field& f : kFields) {
        SmashedContext triv = smash_context(trivial_context(*fixture("F1", f).algebra), "trivial-F1");
        ok = ok && triv.report.pass() && triv.is_equivalence;

        GeqWitness w = geq_witness(*fixture("F2", f).algebra, "F2");
        ok = ok && w.report.pass();
        SmashedContext geq = smash_context(to_abstract(w.ctx), "geq-F2");
        ok = ok && geq.report.pass() && geq.is_equivalence;
        ok = ok && check_has(geq.report, "block-A-is-smash") &&
             check_has(geq.report, "restrictions-are-dual-actions");
    }
    return ok;
}

// 10. Linking/corner round trips on generated equivalences and composition
// closure on composable pairs.
bool crit_roundtrip_compose() {
    bool ok = true;
    for (const Field& f : kFields) {
        const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                                 FiniteGroup::klein4()};
        int round_trips = 0;
        for (uint64_t seed = 0; seed < 10; ++seed) {
            PartialAction alpha =
                random_product_partial_action(seed, groups[size_t(seed % 3)], f, 8, nullptr);
            GradedAlgebra b = skew_group_algebra(alpha).carrier;
            AbstractContext m = trivial_context(b);
            Linking lk = linking_algebra(m);
            ok = ok && linking_report(m).pass();
            EmbeddedContext corner = corner_context(lk.L, lk.e);
            ok = ok && corner.A == lk.inside.A && corner.B == lk.inside.B &&
                 corner.X == lk.inside.X && corner.Y == lk.inside.Y;
            ok = ok && graded_algebra_on_subspace(lk.L, corner.A) == m.A;
            ++round_trips;

            // Composition preserves both levels of equivalence.
            AbstractContext composite = compose_contexts(m, m);
            ok = ok && is_graded_equivalence(composite);
            if (is_strong_graded_equivalence(m))
                ok = ok && is_strong_graded_equivalence(composite);
            if (seed < 3) {
                SgWitness w = sg_witness(b);
                AbstractContext sgctx = to_abstract(w.ctx);
                AbstractContext back = compose_contexts(sgctx, reverse_context(sgctx));
                ok = ok && is_graded_equivalence(back) && is_strong_graded_equivalence(back);
            }
        }
        ok = ok && round_trips >= 10;
    }
    return ok;
}

// 11. Full CLI suite run, twice, byte-identical machine reports, exit 0.
bool crit_cli_suite() {
    const char* cli = std::getenv("GRAL_CLI");
    if (!cli) {
        std::fprintf(stderr, "GRAL_CLI is not set\n");
        return false;
    }
    auto run = [&](const std::string& out) {
        std::string cmd = std::string(cli) + " suite --seeds 25 --report machine > " + out;
        auto start = Clock::now();
        int rc = std::system(cmd.c_str());
        return std::make_pair(rc, ms_since(start));
    };
    auto [rc1, ms1] = run("/tmp/gral_suite_run1.json");
    auto [rc2, ms2] = run("/tmp/gral_suite_run2.json");
    if (rc1 != 0 || rc2 != 0) return false;
    if (ms1 >= 120000.0 || ms2 >= 120000.0) return false;
    std::ifstream a("/tmp/gral_suite_run1.json"), b("/tmp/gral_suite_run2.json");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    if (sa.str().empty() || sa.str() != sb.str()) return false;
    // The machine report parses back and passes.
    auto reports = reports_from_machine(sa.str());
    for (const auto& rep : reports)
        if (!rep.pass()) return false;
    return true;
}

}  // namespace

int main() {
    Harness h;
    auto guard = [&](int n, const std::string& what, bool (*fn)()) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %d raised: %s\n", n, e.what());
            ok = false;
        }
        h.criterion(n, what, ok);
    };
    guard(1, "duality isomorphism with dimension identity", crit_duality);
    guard(2, "crossed-product context span equalities", crit_geq);
    guard(3, "grading hierarchy with separating witnesses", crit_hierarchy);
    guard(4, "skew-algebra laws and product-axiom biconditional", crit_skew_laws);
    guard(5, "canonical partial action and invariance characterization", crit_canonical_action);
    guard(6, "strong equivalence with the canonical crossed product", crit_sg);
    guard(7, "globalization context and minimality detector", crit_globalization);
    guard(8, "action-equivalence pipeline", crit_action_pipeline);
    guard(9, "smashed contexts", crit_smash_context);
    guard(10, "linking round trip and composition closure", crit_roundtrip_compose);
    guard(11, "full CLI suite, deterministic and within budget", crit_cli_suite);
    if (h.failed) {
        std::printf("%d criteria FAILED\n", h.failed);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
