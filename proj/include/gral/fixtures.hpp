#pragma once

#include <optional>

#include "gral/paction.hpp"

namespace gral {

/// Deterministic 64-bit stream, identical on every platform.
struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int64_t below(int64_t n) { return int64_t(next() % uint64_t(n)); }
    bool chance(int64_t num, int64_t den) { return below(den) < num; }
};

/// Named fixture: a graded algebra, or a partial action together with the
/// global action and ideal it was restricted from.
struct Fixture {
    std::string id;
    std::string description;
    std::optional<GradedAlgebra> algebra;
    std::optional<PartialAction> action;
    std::optional<GlobalAction> global;
    std::optional<Subspace> ideal;

    bool is_action() const { return action.has_value(); }
};

/// Registered ids: F1..F6. Errors: UnknownFixture.
Fixture fixture(const std::string& id, Field f);
std::vector<std::string> fixture_ids();

/// Valid graded algebra built from generative constructions: scaled group
/// algebras, matrix-position corners, direct sums, skew algebras of
/// generated actions, nilpotent extensions, and an occasional zero-product
/// algebra. Never rejection-sampled.
GradedAlgebra random_graded_algebra(uint64_t seed, const FiniteGroup& g, Field f, int32_t max_dim);

/// Product partial action generated by restricting a generated global
/// action (permutation orbits or permuted matrix blocks) to a generated
/// idempotent ideal. `rerolls` counts hypothesis-violating draws that were
/// redrawn (structurally these do not occur; the counter is kept honest).
PartialAction random_product_partial_action(uint64_t seed, const FiniteGroup& g, Field f,
                                            int32_t max_dim, int32_t* rerolls = nullptr);

}  // namespace gral
