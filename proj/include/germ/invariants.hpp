#pragma once

#include "germ/source.hpp"

namespace germ {

/// Seeded stand-in for "generic" choices: identical seed, identical numbers,
/// identical results. Every draw is checked for stability against a second
/// draw before a value is accepted.
struct RandomizationPolicy {
    unsigned seed = 1;
    int height = 9;   // nonzero coefficients drawn from [-height, height]
    int retries = 3;  // extra draws allowed before giving up
};

/// Multiplicity m0 of a curve germ at the origin: local colength of I plus a
/// seeded random linear form, stable across two independent draws.
long multiplicity_m0(const Ideal& I, const RandomizationPolicy& policy = {});

/// First polar multiplicity m1 of the curve germ V(I): local colength at the
/// origin of the critical scheme of a seeded generic linear form on the
/// curve, i.e. of I plus the maximal minors of the Jacobian of the given
/// generators stacked with the gradient of the form. This counts the
/// critical points of the form on a smoothing that collapse to the origin.
/// Stable across two draws; 0 for a smooth curve.
long polar_m1(const Ideal& I, const RandomizationPolicy& policy = {});

/// m1 for the determinantal curve cut out by the maximal minors of `mat`.
long polar_m1(const PresentationMatrix& mat, const RandomizationPolicy& policy = {});

/// mu = m1 - m0 + 1.
long milnor_from_polar(long m0, long m1);

/// delta = (mu + r - 1) / 2 for a curve with r branches; throws on parity
/// violation.
long delta_from_milnor(long mu, long r);

/// mu = 2 delta - r + 1.
long milnor_from_delta(long delta, long r);

/// Local intersection number of two curve germs: colength of I + J. Throws
/// when the intersection is positive-dimensional.
long intersection_number(const Ideal& I, const Ideal& J);

/// Delta invariant of a union of curves from its parts, by iterating
/// delta(A ∪ B) = delta(A) + delta(B) + A·B over the list. Each entry is the
/// delta of the part together with its ideal. The result does not depend on
/// the order of the parts.
long hironaka_delta(const std::vector<std::pair<long, Ideal>>& parts);

/// Number of quadruple points of a stable perturbation: the sum over source
/// points of the local colengths of the source quadruple ideals, divided by
/// 4. Throws when some quadruple ideal is not finite.
mpq_class quadruple_count(const MultiGerm& f);

}  // namespace germ
