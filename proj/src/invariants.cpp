#include "germ/invariants.hpp"

#include <functional>
#include <random>

namespace germ {

namespace {

Polynomial random_linear(std::mt19937& rng, const RingPtr& r, int height) {
    std::uniform_int_distribution<int> coef(-height, height);
    Polynomial p = Polynomial::zero(r);
    for (std::size_t v = 0; v < r->arity(); ++v) {
        int c = coef(rng);
        while (c == 0) c = coef(rng);
        p = p + Polynomial::variable(r, v) * mpq_class(c);
    }
    return p;
}

/// Runs a seeded computation until two draws agree on a finite value.
long stable_value(const RandomizationPolicy& policy,
                  const std::function<std::optional<long>(std::mt19937&)>& draw,
                  const char* what) {
    std::mt19937 rng(policy.seed);
    std::optional<long> last;
    for (int attempt = 0; attempt < 2 + policy.retries; ++attempt) {
        auto v = draw(rng);
        if (v && last && *v == *last) return *v;
        last = v;
    }
    throw error(std::string(what) + ": no stable value across random draws");
}

}  // namespace

long multiplicity_m0(const Ideal& I, const RandomizationPolicy& policy) {
    return stable_value(
        policy,
        [&](std::mt19937& rng) {
            auto lin = random_linear(rng, I.ring(), policy.height);
            return colength(sum(I, Ideal(I.ring(), {lin})), Mode::Local);
        },
        "multiplicity_m0");
}

long polar_m1(const Ideal& I, const RandomizationPolicy& policy) {
    const auto& r = I.ring();
    const std::size_t n = r->arity();
    return stable_value(
        policy,
        [&](std::mt19937& rng) {
            auto lin = random_linear(rng, r, policy.height);
            const auto& gens = I.generators();
            PresentationMatrix stacked(r, gens.size() + 1, n);
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t v = 0; v < n; ++v) stacked.at(i, v) = gens[i].derivative(v);
            for (std::size_t v = 0; v < n; ++v) stacked.at(gens.size(), v) = lin.derivative(v);
            std::vector<Polynomial> crit = gens;
            if (gens.size() + 1 >= n)
                for (auto& m : minors(stacked, n)) crit.push_back(std::move(m));
            return colength(Ideal(r, crit), Mode::Local);
        },
        "polar_m1");
}

long polar_m1(const PresentationMatrix& mat, const RandomizationPolicy& policy) {
    return polar_m1(Ideal(mat.ring(), minors(mat, mat.col_count())), policy);
}

long milnor_from_polar(long m0, long m1) {
    if (m0 < 1) throw error("milnor_from_polar: m0 must be positive");
    return m1 - m0 + 1;
}

long delta_from_milnor(long mu, long r) {
    if ((mu + r - 1) % 2 != 0)
        throw error("delta_from_milnor: mu + r - 1 must be even");
    return (mu + r - 1) / 2;
}

long milnor_from_delta(long delta, long r) { return 2 * delta - r + 1; }

long intersection_number(const Ideal& I, const Ideal& J) {
    auto c = colength(sum(I, J), Mode::Local);
    if (!c) throw error("intersection_number: positive-dimensional intersection");
    return *c;
}

long hironaka_delta(const std::vector<std::pair<long, Ideal>>& parts) {
    if (parts.empty()) throw error("hironaka_delta: no parts");
    long delta = parts.front().first;
    Ideal acc = parts.front().second;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        delta += parts[i].first + intersection_number(parts[i].second, acc);
        acc = intersect(acc, parts[i].second);
    }
    return delta;
}

mpq_class quadruple_count(const MultiGerm& f) {
    long total = 0;
    for (const auto& I : source_multipoint(f, 3)) {
        auto c = colength(I, Mode::Local);
        if (!c) throw error("quadruple_count: source quadruple space is not finite");
        total += *c;
    }
    mpq_class q(total, 4);
    q.canonicalize();
    return q;
}

}  // namespace germ
