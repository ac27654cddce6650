#pragma once
#include <stdexcept>
#include <string>

namespace nf {

// Error hierarchy mapped to CLI exit codes: usage 1, spec 2, guard 3.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or preconditions violated by a caller-supplied value.
struct usage_error : error {
    using error::error;
};

// A field spec failed validation (hard failure, not a warning).
struct spec_error : error {
    using error::error;
};

// A computation guard tripped (closure overflow, value-range overflow, ...).
struct guard_error : error {
    using error::error;
};

} // namespace nf
