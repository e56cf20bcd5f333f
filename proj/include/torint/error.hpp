#pragma once

#include <stdexcept>
#include <string>

namespace torint {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing values from different quadratic fields, or mismatched dimensions.
struct field_mismatch : error {
    explicit field_mismatch(const std::string& what) : error(what) {}
};

/// Malformed input: bad document, bad grammar, violated precondition.
struct invalid_input : error {
    explicit invalid_input(const std::string& what) : error(what) {}
};

}  // namespace torint
