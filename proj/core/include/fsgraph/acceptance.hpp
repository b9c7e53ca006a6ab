#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    bool slow = false;      // include the minutes-scale girth check
    int threads = 0;        // 0 = hardware concurrency
    uint64_t seed = 20240801;
};

// Runs the full acceptance table; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// Prints "PASS"/"FAIL" lines; returns true iff everything passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace fsg
