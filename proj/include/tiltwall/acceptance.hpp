#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltwall::accept {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;  // filled on failure
};

/// Runs the full verification suite: fixed fixtures plus seeded random
/// property sweeps. Hermetic and deterministic.
std::vector<CriterionResult> run_all();

/// Prints one PASS/FAIL line per criterion; returns the number of failures.
int report(std::ostream& os);

}  // namespace tiltwall::accept
