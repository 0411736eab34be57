/**
 * @file fieldfile.hpp
 * @brief Plain-text field specification files.
 *
 * Grammar (one declaration per line; '#' starts a comment):
 *
 *     hamiltonian: true|false
 *     component <r> symbolic
 *     component <r>:
 *     p[<a>,<b>] = <gaussrat>
 *
 * Coefficient lines attach to the most recent component header and may
 * assign independent coefficients only. Unknown keys, duplicate
 * assignments and constraint violations are rejected with positions.
 */
#pragma once

#include "isochron/constraints.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace isochron {

struct FieldParseError : std::runtime_error {
    int line;
    int column;
    FieldParseError(int line_, int column_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

/// Parses and validates a field specification. Throws FieldParseError on
/// syntax errors; constraint errors carry the offending position too.
FieldSpec parse_field(std::string_view text);

/// Canonical rendering; parse_field(render_field(spec)) == spec.
std::string render_field(const FieldSpec& spec);

FieldSpec load_field_file(const std::string& path);  // throws std::runtime_error on I/O

}  // namespace isochron
