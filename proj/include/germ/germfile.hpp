#pragma once

#include "germ/parser.hpp"
#include "germ/presentation.hpp"

namespace germ {

/// Parses the germ description format, one germ per text:
///
///   target T X Y Z;
///   branch f1 source t x y : t, x, y^3 + t*y, x*y + y^5;
///   branch f2 source u v w : u, v, w, u;
///
/// Statements end with ';'. The target statement comes first; each branch
/// lists its own source variables and one component polynomial per target
/// variable, comma-separated. Throws parse_error (with line and column in the
/// message) on malformed input and germ::error on mathematically invalid
/// germs.
MultiGerm parse_germ_file(const std::string& text);

/// parse_germ_file applied to the contents of a file; the path is included in
/// error messages.
MultiGerm load_germ_file(const std::string& path);

/// Canonical serialization; parses back to an equivalent germ.
std::string to_germ_file(const MultiGerm& g);

}  // namespace germ
