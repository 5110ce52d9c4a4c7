#pragma once

#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Computed basis of an ideal with respect to a monomial order. For global
/// orders this is the reduced Groebner basis (monic, tail-reduced, unique);
/// for local orders it is a minimal monic standard basis (Mora), which is
/// deterministic but not tail-reduced.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elements;
    bool reduced = false;

    std::vector<Monomial> lead_monomials() const;
    /// True iff the basis generates the unit ideal (for local orders: the unit
    /// ideal of the local ring at the origin).
    bool is_unit() const;
    bool is_zero() const { return elements.empty(); }
};

/// Remainder of p on division by `basis`. Global orders use the full division
/// algorithm (no term of the result is divisible by a leading monomial of the
/// basis); local orders use Mora's weak normal form, so the result is p modulo
/// the ideal up to a unit and is zero iff p lies in the local ideal.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Buchberger / Mora standard basis of <gens>, deterministic for a fixed
/// generator order.
GroebnerBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Minimal generating monomials of the leading-term ideal.
std::vector<Monomial> leading_ideal(const GroebnerBasis& gb);

}  // namespace germ
