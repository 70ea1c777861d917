#pragma once

#include <stdexcept>
#include <string>

namespace qmock {

// Base class for all library errors. Subclasses map to the CLI exit-code
// classes: usage/rejected input (2), resource or accuracy limits (3).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument: order mismatch, bad constructor input, unknown id, ...
struct rejected_input : error {
    using error::error;
};

struct order_mismatch : rejected_input {
    using rejected_input::rejected_input;
};

struct division_by_zero : error {
    using error::error;
};

// Result truncation would not even determine a leading coefficient.
struct degenerate_result : error {
    using error::error;
};

// tau -> s*tau + b would need a root of unity outside Q(zeta_N).
struct unsupported_substitution : error {
    using error::error;
};

struct exponent_out_of_range : rejected_input {
    using rejected_input::rejected_input;
};

// Composition enumeration (or similar) above the configured bound.
struct size_limit : error {
    using error::error;
};

// Pole of order >= 2 at q = 1, or evaluation at a lattice point of mu.
struct pole_error : error {
    using error::error;
};

struct accuracy_error : error {
    using error::error;
};

struct domain_error : rejected_input {
    using rejected_input::rejected_input;
};

} // namespace qmock
