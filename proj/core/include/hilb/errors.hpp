#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

// Bad user input: malformed algebra files, out-of-budget requests.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity that should hold failed; carries a counterexample
// description where available.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant broken (pole at a degeneration limit, inconsistent
// operator recursion). Always a bug, never a data problem.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace hilb
