#include "germ/groebner.hpp"

#include <algorithm>
#include <utility>

namespace germ {

namespace {

// Dense-in-order term list, sorted descending. All basis arithmetic runs on
// this form; conversion back to Polynomial happens at the boundary.
using Term = std::pair<Monomial, mpq_class>;

struct OP {
    std::vector<Term> t;  // descending under the active order

    bool empty() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const mpq_class& lc() const { return t.front().second; }
    int ecart() const {
        int d = 0;
        for (const auto& [m, c] : t) d = std::max(d, m.total_degree());
        return d - lm().total_degree();
    }
};

OP to_op(const Polynomial& p, const MonomialOrder& ord) {
    OP r;
    r.t.reserve(p.terms().size());
    for (const auto& tc : p.terms()) r.t.push_back(tc);
    std::sort(r.t.begin(), r.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    return r;
}

Polynomial from_op(const OP& p, const RingPtr& ring) {
    Polynomial r = Polynomial::zero(ring);
    for (const auto& [m, c] : p.t) r = r + Polynomial::term(ring, m, c);
    return r;
}

// a - c * x^m * b, both sorted descending; linear merge.
OP sub_mul(const OP& a, const mpq_class& c, const Monomial& m, const OP& b,
           const MonomialOrder& ord) {
    OP r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) {
            r.t.push_back(a.t[i++]);
            continue;
        }
        Monomial mb = b.t[j].first * m;
        if (i == a.t.size()) {
            r.t.emplace_back(std::move(mb), -c * b.t[j].second);
            ++j;
            continue;
        }
        int cmp = ord.compare(a.t[i].first, mb);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.emplace_back(std::move(mb), -c * b.t[j].second);
            ++j;
        } else {
            mpq_class nc = a.t[i].second - c * b.t[j].second;
            if (nc != 0) r.t.emplace_back(a.t[i].first, std::move(nc));
            ++i;
            ++j;
        }
    }
    return r;
}

// One head-reduction step of h by g.
OP reduce_step(const OP& h, const OP& g, const MonomialOrder& ord) {
    return sub_mul(h, h.lc() / g.lc(), h.lm() / g.lm(), g, ord);
}

// Divide out rational content and make the leading coefficient positive.
void normalize_content(OP& p) {
    if (p.empty()) return;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.t) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.lc() < 0) content = -content;
    for (auto& [m, c] : p.t) c /= content;
}

void make_monic(OP& p) {
    if (p.empty()) return;
    mpq_class lc = p.lc();
    for (auto& [m, c] : p.t) c /= lc;
}

// Full division remainder (global orders): no term of the result divisible by
// any leading monomial of G.
OP nf_global(OP h, const std::vector<OP>& G, const MonomialOrder& ord) {
    OP r;
    while (!h.empty()) {
        bool reduced = false;
        for (const OP& g : G) {
            if (!g.empty() && g.lm().divides(h.lm())) {
                h = reduce_step(h, g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.t.push_back(h.t.front());
            h.t.erase(h.t.begin());
        }
    }
    return r;
}

// Mora weak normal form with ecart selection; valid for any order. A weak
// normal form is only determined up to a unit factor, so the intermediate
// polynomial is content-normalized to keep coefficients small.
OP nf_mora(OP h, const std::vector<OP>& G, const MonomialOrder& ord) {
    std::vector<OP> T = G;
    while (!h.empty()) {
        normalize_content(h);
        int best = -1, best_ecart = 0;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (T[i].empty() || !T[i].lm().divides(h.lm())) continue;
            int e = T[i].ecart();
            if (best < 0 || e < best_ecart) {
                best = static_cast<int>(i);
                best_ecart = e;
            }
        }
        if (best < 0) return h;
        if (best_ecart > h.ecart()) {
            OP copy = h;
            normalize_content(copy);
            T.push_back(std::move(copy));
        }
        h = reduce_step(h, T[static_cast<std::size_t>(best)], ord);
    }
    return h;
}

OP nf_any(OP h, const std::vector<OP>& G, const MonomialOrder& ord) {
    return ord.is_global() ? nf_global(std::move(h), G, ord) : nf_mora(std::move(h), G, ord);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int deg;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
    std::vector<Monomial> r;
    r.reserve(elements.size());
    for (const auto& p : elements) r.push_back(p.lead_monomial(order));
    return r;
}

bool GroebnerBasis::is_unit() const {
    for (const auto& p : elements)
        if (p.lead_monomial(order).is_one()) return true;
    return false;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    if (p.is_zero()) return p;
    std::vector<OP> G;
    G.reserve(basis.size());
    for (const auto& g : basis) {
        check_same_ring(p.ring(), g.ring(), "normal_form");
        if (!g.is_zero()) G.push_back(to_op(g, order));
    }
    return from_op(nf_any(to_op(p, order), G, order), p.ring());
}

namespace {

// Local standard basis by Lazard's method: homogenize with an extra variable
// ranked above everything, compute a global Groebner basis (all S-polynomial
// reductions stay homogeneous), then dehomogenize. This sidesteps the degree
// climb of running Mora reduction inside Buchberger's loop; Mora normal form
// is still used for reductions against a finished basis.
GroebnerBasis local_basis_by_homogenization(const std::vector<Polynomial>& gens,
                                            const MonomialOrder& order, const RingPtr& ring) {
    std::vector<std::string> hv;
    hv.reserve(ring->arity() + 1);
    hv.push_back("@h");
    for (const auto& v : ring->variables()) hv.push_back(v);
    auto hring = VariableRing::make(ring->name() + "@h", hv);

    std::vector<Polynomial> hgens;
    for (const auto& g : gens) {
        int D = g.total_degree();
        Polynomial p = Polynomial::zero(hring);
        for (const auto& [m, c] : g.terms()) {
            Monomial hm(ring->arity() + 1);
            hm[0] = D - m.total_degree();
            for (std::size_t i = 0; i < ring->arity(); ++i) hm[i + 1] = m[i];
            p = p + Polynomial::term(hring, hm, c);
        }
        hgens.push_back(std::move(p));
    }
    // h-exponent first, then degrevlex: the lead of a homogeneous polynomial
    // dehomogenizes to its local-order lead
    auto hbasis = standard_basis(hgens, MonomialOrder::block(1));

    std::vector<int> var_map(ring->arity() + 1);
    var_map[0] = -1;
    for (std::size_t i = 0; i < ring->arity(); ++i) var_map[i + 1] = static_cast<int>(i);
    std::vector<Polynomial> de;
    for (const auto& e : hbasis.elements)
        de.push_back(
            e.substitute_var(0, Polynomial::constant(hring, 1)).map_ring(ring, var_map));

    // minimalize against the local leading monomials, then make monic
    std::vector<char> keep(de.size(), 1);
    for (std::size_t i = 0; i < de.size(); ++i)
        for (std::size_t j = 0; j < de.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const auto &mi = de[i].lead_monomial(order), &mj = de[j].lead_monomial(order);
            if (mj.divides(mi) && (mj != mi || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    GroebnerBasis out;
    out.ring = ring;
    out.order = order;
    out.reduced = false;
    for (std::size_t i = 0; i < de.size(); ++i)
        if (keep[i]) out.elements.push_back(de[i] * (1 / de[i].lead_coeff(order)));
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order.compare(a.lead_monomial(order), b.lead_monomial(order)) < 0;
              });
    return out;
}

}  // namespace

GroebnerBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    if (gens.empty()) throw error("standard_basis: no generators (ring unknown)");
    RingPtr ring = gens.front().ring();
    if (!order.is_global()) {
        if (order.kind() != MonomialOrder::Kind::NegDegRevLex)
            throw error("standard_basis: unsupported non-global order");
        std::vector<Polynomial> nz;
        for (const auto& g : gens) {
            check_same_ring(ring, g.ring(), "standard_basis");
            if (!g.is_zero()) nz.push_back(g);
        }
        if (nz.empty()) throw error("standard_basis: no nonzero generators");
        return local_basis_by_homogenization(nz, order, ring);
    }
    std::vector<OP> G;
    for (const auto& g : gens) {
        check_same_ring(ring, g.ring(), "standard_basis");
        if (g.is_zero()) continue;
        OP op = to_op(g, order);
        normalize_content(op);
        G.push_back(std::move(op));
    }

    std::vector<Pair> pairs;
    std::vector<std::vector<char>> treated;  // treated[j][i], i<j
    auto add_pairs_for = [&](std::size_t j) {
        treated.resize(j + 1);
        treated[j].assign(j, 0);
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(G[i].lm(), G[j].lm());
            if (G[i].lm().coprime_with(G[j].lm())) {
                treated[j][i] = 1;  // product criterion
                continue;
            }
            pairs.push_back({i, j, l, l.total_degree()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);

    auto pick = [&]() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = k;
                continue;
            }
            int c = order.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    };

    auto chain_criterion = [&](const Pair& p) {
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == p.i || k == p.j || G[k].empty()) continue;
            if (!G[k].lm().divides(p.lcm)) continue;
            std::size_t a = std::min(p.i, k), b = std::max(p.i, k);
            std::size_t c = std::min(p.j, k), d = std::max(p.j, k);
            if (treated[b][a] && treated[d][c]) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        Pair p = pick();
        treated[p.j][p.i] = 1;
        if (chain_criterion(p)) continue;
        const OP &f = G[p.i], &g = G[p.j];
        OP s = sub_mul(OP{}, mpq_class(-1) / f.lc(), p.lcm / f.lm(), f, order);
        s = sub_mul(s, mpq_class(1) / g.lc(), p.lcm / g.lm(), g, order);
        s = nf_any(std::move(s), G, order);
        if (s.empty()) continue;
        normalize_content(s);
        G.push_back(std::move(s));
        add_pairs_for(G.size() - 1);
    }

    // minimalize: drop elements whose lead monomial is divisible by another's
    std::vector<char> keep(G.size(), 1);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (G[j].lm().divides(G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<OP> M;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) M.push_back(std::move(G[i]));

    GroebnerBasis out;
    out.ring = ring;
    out.order = order;
    if (order.is_global()) {
        // tail-reduce each element against the others
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<OP> others;
            for (std::size_t j = 0; j < M.size(); ++j)
                if (j != i) others.push_back(M[j]);
            M[i] = nf_global(std::move(M[i]), others, order);
            make_monic(M[i]);
        }
        out.reduced = true;
    } else {
        for (auto& m : M) make_monic(m);
        out.reduced = false;
    }
    std::sort(M.begin(), M.end(),
              [&](const OP& a, const OP& b) { return order.compare(a.lm(), b.lm()) < 0; });
    for (const auto& m : M) out.elements.push_back(from_op(m, ring));
    return out;
}

std::vector<Monomial> leading_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lms = gb.lead_monomials();
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < lms.size(); ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(lms[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace germ
