#pragma once

#include <string>
#include <string_view>

#include "ivif/matrix.hpp"

namespace ivif {

/// Serialize as {"rows": m, "cols": n, "entries": [[{"mu": [lo, hi], "nu":
/// [lo, hi]}, ...], ...]} with entries in row-major order. Bounds that are
/// exactly 0 or 1 print as integers; everything else prints in the shortest
/// decimal form that round-trips, so write/read is bit-exact.
std::string write_matrix(const Matrix& a);

/// Strict inverse of write_matrix. Unknown or missing keys, wrong JSON
/// types, and shape mismatches raise ParseError; entries that break the
/// value constraints raise ValidationError.
Matrix read_matrix(std::string_view doc);

/// A single value as {"mu": [lo, hi], "nu": [lo, hi]}.
std::string write_value(const Value& v);

} // namespace ivif
