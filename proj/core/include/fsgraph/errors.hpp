#pragma once

#include <stdexcept>
#include <string>

namespace fsg {

// Malformed or out-of-contract input (bad graph file, invalid swap, ...).
// CLI maps this to exit code 3.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource budget was exceeded (state count, program length,
// subgraph enumeration, dense-matrix size). CLI maps this to exit code 4.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fsg
