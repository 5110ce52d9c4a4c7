#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/order.hpp"
#include "germ/ring.hpp"

namespace germ {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficients stored; the term map is the canonical form.
/// Immutable in spirit: all operations return new values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpq_class>;

    Polynomial() = default;  // invalid placeholder; only for containers

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial m, const mpq_class& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value at the origin.
    mpq_class constant_term() const;
    std::size_t term_count() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const mpq_class& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned n) const;

    int total_degree() const;  // -1 for zero
    int degree_in(std::size_t var) const;

    /// Coefficient polynomials with respect to one variable: result[d] is the
    /// coefficient of var^d and does not involve var.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;

    Polynomial derivative(std::size_t var) const;

    /// Full substitution: images[i] replaces variable i; all images live in a
    /// common target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// In-ring substitution of a single variable.
    Polynomial substitute_var(std::size_t var, const Polynomial& image) const;

    /// Transport into another ring; var_map[i] is the index of old variable i
    /// in the new ring, or -1 if dropped (then the variable must be unused).
    Polynomial map_ring(const RingPtr& new_ring, const std::vector<int>& var_map) const;

    /// Rational content (positive), 0 for the zero polynomial.
    mpq_class content() const;
    /// Content-free with positive leading (degrevlex) coefficient. This is a
    /// normalization operation; plain arithmetic never rescales.
    Polynomial normalized() const;

    const Monomial& lead_monomial(const MonomialOrder& order) const;
    const mpq_class& lead_coeff(const MonomialOrder& order) const;

    /// Ecart: total degree minus total degree of the leading monomial.
    int ecart(const MonomialOrder& order) const;

    /// Exact division; throws germ::error if b is zero or the remainder is
    /// nonzero.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
    void add_term(const Monomial& m, const mpq_class& c);

    RingPtr ring_;
    TermMap terms_;
};

inline Polynomial operator*(const mpq_class& c, const Polynomial& p) { return p * c; }

}  // namespace germ
