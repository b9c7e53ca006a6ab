// Acceptance suite runner: one PASS/FAIL line per criterion, nonzero exit on
// any failure. Pass --slow to include the minutes-scale girth check.

#include <cstring>
#include <iostream>

#include "fsgraph/acceptance.hpp"

int main(int argc, char** argv) {
    fsg::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) opts.slow = true;
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            opts.threads = std::atoi(argv[++i]);
    }
    auto results = fsg::run_acceptance(opts);
    bool ok = fsg::report_acceptance(results, std::cout);
    return ok ? 0 : 1;
}
