#pragma once

#include <stdexcept>
#include <string>

namespace ta {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or malformed input: bad weight strings, broken invariants on
// constructor arguments, out-of-range letters.
struct validation_error : error {
    using error::error;
};

// An exact enumeration would exceed the configured cap.
struct cap_exceeded : error {
    using error::error;
};

// A numerical routine failed to converge within its iteration budget.
struct numerics_error : error {
    using error::error;
};

}  // namespace ta
