#pragma once

#include <stdexcept>
#include <string>

namespace logder {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic between values of different cyclotomic fields.
struct field_mismatch_error : error {
    explicit field_mismatch_error(const std::string& msg) : error(msg) {}
};

/// Malformed textual input; carries the 1-based line number when known.
struct parse_error : error {
    parse_error(const std::string& msg, int line_no = 0)
        : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

/// A homogeneous value was required (graded submodules, Saito bases).
struct homogeneity_error : error {
    explicit homogeneity_error(const std::string& msg) : error(msg) {}
};

} // namespace logder
