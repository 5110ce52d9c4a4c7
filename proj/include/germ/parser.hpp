#pragma once

#include <string>

#include "germ/polynomial.hpp"

namespace germ {

/// Syntax or name error, with 0-based character offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Parses the polynomial grammar: identifiers [A-Za-z][A-Za-z0-9_']*, integer
/// literals, + - * ^ and parentheses; ^ binds tightest, then *, then + -.
/// Implicit multiplication is rejected.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace germ
