#pragma once

#include <string>
#include <vector>

namespace gral {

/// One named check inside a verification run. `expected`/`computed` are
/// short printable summaries (dimensions, booleans, span descriptions).
struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::string theorem;
    std::string fixture;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void record(const std::string& name, const std::string& expected, const std::string& computed,
                bool ok) {
        checks.push_back({name, expected, computed, ok});
    }
    void record_bool(const std::string& name, bool expected, bool got) {
        record(name, expected ? "true" : "false", got ? "true" : "false", expected == got);
    }
    void record_eq_dims(const std::string& name, int lhs_dim, int rhs_dim, bool equal) {
        record(name, "equal spans", "dims " + std::to_string(lhs_dim) + "/" + std::to_string(rhs_dim),
               equal);
    }
};

}  // namespace gral
