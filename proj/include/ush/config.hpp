// Line-oriented field configuration files:
//
//   # comment
//   mode = table            (or: rational, real-quadratic)
//   degree = 2
//   disc_F = 5
//   disc_rel_norm = 16
//   bound = 100
//   [place]
//   p = 2
//   Nv = 4
//   splitting = ramified
//   e = 0
//   count = 1               (optional: number of identical places)
//
// Rational mode takes `D = ...`, real-quadratic takes `m = ...` and `d = ...`.
// Unknown keys, syntax errors, and invariant violations are reported with
// line numbers.
#pragma once

#include <istream>

#include "ush/numberfield.hpp"

namespace ush {

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

FieldData load_field_config(std::istream& in);
FieldData load_field_config_file(const std::string& path);

}  // namespace ush
