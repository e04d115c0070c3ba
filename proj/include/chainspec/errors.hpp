#pragma once

#include <stdexcept>
#include <string>

namespace chainspec {

// Exception taxonomy used across the library.  Everything derives from
// chainspec::error so callers can catch the whole family at once; the CLI
// maps the concrete types to distinct exit codes.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range caller input (bad degree string, p > q, ...).
struct invalid_input : error {
    using error::error;
};

// A search or enumeration exceeded its configured work budget.
struct resource_limit : error {
    using error::error;
};

// A numeric operation left its domain (negative discriminant, overflow,
// no eigensolver convergence).
struct numeric_domain : error {
    using error::error;
};

// Structurally valid input that falls outside a theorem's hypotheses.
struct out_of_hypothesis : error {
    using error::error;
};

// A constrained minimization whose feasible set is empty.
struct empty_feasible : error {
    using error::error;
};

// Command-line usage problem (unknown flag, missing parameter).
struct usage_error : error {
    using error::error;
};

} // namespace chainspec
