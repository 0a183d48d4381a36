#ifndef LINTERM_ERRORS_HPP
#define LINTERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linterm {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or empty mathematical input (zero polynomial where a nonzero one
// is required, empty matrix, out-of-range benchmark config, ...).
struct degenerate_input : error {
    using error::error;
};

// Division by zero in Q or inversion of 0 in a number field.
struct division_by_zero : error {
    using error::error;
};

// Two number-field elements with different moduli met in one operation, or an
// algebraic number was paired with a field it does not belong to.
struct field_mismatch : error {
    using error::error;
};

// Matrix/vector shapes do not line up.
struct dimension_mismatch : error {
    using error::error;
};

// The loop guard is identically zero, so "guard > 0" never holds.
struct degenerate_guard : error {
    using error::error;
};

// Witness synthesis was asked for an eigenvalue whose membership test passed.
struct not_a_failure : error {
    using error::error;
};

// More than one guard inequality; the decision procedure handles exactly one.
struct unsupported_guard_count : error {
    using error::error;
};

// Guard comparator other than strict ">".
struct unsupported_comparator : error {
    using error::error;
};

// Loop body with no assignments.
struct degenerate_body : error {
    using error::error;
};

// Syntax error in the loop DSL, with source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int column_)
        : error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace linterm

#endif
