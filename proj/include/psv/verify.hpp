#pragma once

#include <string>
#include <vector>

namespace psv::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// selector: farey | waring | meanvalue | sieve | atlas.
/// Runs the module's invariants at fixed desk-scale parameters.
VerifyReport verify_suite(const std::string& selector);

/// All five suites in order.
std::vector<VerifyReport> verify_all();

}  // namespace psv::verify
