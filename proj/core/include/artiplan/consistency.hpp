#pragma once

#include <string>
#include <vector>

#include "artiplan/instance_io.hpp"

namespace artiplan {

/// One failed consistency rule. Rule ids follow the fixed check catalogue
/// (c1a..c14 for the chain model, c3a', c15..c25 for the extended models).
struct Violation {
    std::string rule;
    std::vector<std::string> facts; // rendered offending fact(s)
    std::string message;

    bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// Runs every applicable check and returns the complete violation set,
/// deterministically ordered and independent of fact order in the file.
/// An empty result means the instance is consistent.
std::vector<Violation> check(const Instance& inst);

} // namespace artiplan
