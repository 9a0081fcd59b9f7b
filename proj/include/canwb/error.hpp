#pragma once

#include <stdexcept>

namespace canwb {

// Bad or malformed input (files, configs, argument contracts).
// The CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid data that cannot support the requested computation
// (single-class labels, empty variant sets, ...). CLI exit code 3.
struct DegenerateData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace canwb
