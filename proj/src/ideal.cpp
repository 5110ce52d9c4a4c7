#include "germ/ideal.hpp"

#include <algorithm>
#include <set>

namespace germ {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        check_same_ring(ring_, g.ring(), "Ideal");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(order.key());
    if (it != cache_->bases.end()) return it->second;
    GroebnerBasis gb;
    if (gens_.empty()) {
        gb.ring = ring_;
        gb.order = order;
        gb.reduced = true;
    } else {
        gb = standard_basis(gens_, order);
    }
    return cache_->bases.emplace(order.key(), std::move(gb)).first->second;
}

Ideal Ideal::simplified(Mode mode) const {
    const GroebnerBasis& gb = basis(mode);
    Ideal out(ring_, gb.elements);
    {
        std::lock_guard<std::mutex> lock(out.cache_->mu);
        out.cache_->bases.emplace(gb.order.key(), gb);
    }
    return out;
}

std::string Ideal::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    if (gens_.empty()) s += "0";
    return s + ">";
}

Ideal sum(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "sum");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "product");
    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) {
            Polynomial p = (f * g).normalized();
            if (p.is_zero()) continue;
            if (seen.insert(p.to_string()).second) gens.push_back(std::move(p));
        }
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// Extended ring with `extra` fresh internal variables prepended.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = extra;
    vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
    return VariableRing::make(ring->name() + "@ext", std::move(vars));
}

std::vector<int> shift_map(std::size_t arity, std::size_t shift) {
    std::vector<int> m(arity);
    for (std::size_t i = 0; i < arity; ++i) m[i] = static_cast<int>(i + shift);
    return m;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "intersect");
    if (a.has_no_generators() || b.has_no_generators()) return Ideal::zero(a.ring());
    RingPtr ext = extend_ring(a.ring(), {"@t"});
    std::vector<int> up = shift_map(a.ring()->arity(), 1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(t * g.map_ring(ext, up));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_ring(ext, up));
    GroebnerBasis gb = standard_basis(gens, MonomialOrder::block(1));
    std::vector<int> down(ext->arity());
    down[0] = -1;
    for (std::size_t i = 1; i < ext->arity(); ++i) down[i] = static_cast<int>(i - 1);
    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements)
        if (e.degree_in(0) <= 0) kept.push_back(e.map_ring(a.ring(), down));
    return Ideal(a.ring(), std::move(kept));
}

namespace {

// Shared elimination core: returns basis elements free of `vars`, still in the
// permuted ring, plus the maps in and out.
struct Elim {
    RingPtr perm;
    std::vector<int> to_perm;    // original index -> permuted index
    std::vector<Polynomial> kept;
    std::vector<std::size_t> keep_vars;  // original indices, in order
};

Elim eliminate_core(const Ideal& I, const std::vector<std::size_t>& vars) {
    const RingPtr& ring = I.ring();
    std::vector<char> is_elim(ring->arity(), 0);
    for (std::size_t v : vars) {
        if (v >= ring->arity()) throw error("eliminate: variable index out of range");
        is_elim[v] = 1;
    }
    std::vector<std::string> perm_vars;
    std::vector<int> to_perm(ring->arity(), -1);
    for (std::size_t i = 0; i < ring->arity(); ++i)
        if (is_elim[i]) {
            to_perm[i] = static_cast<int>(perm_vars.size());
            perm_vars.push_back(ring->variable(i));
        }
    std::size_t nelim = perm_vars.size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        if (!is_elim[i]) {
            to_perm[i] = static_cast<int>(perm_vars.size());
            perm_vars.push_back(ring->variable(i));
            keep.push_back(i);
        }
    Elim r;
    r.perm = VariableRing::make(ring->name() + "@perm", std::move(perm_vars));
    r.to_perm = to_perm;
    r.keep_vars = std::move(keep);
    if (I.has_no_generators() || nelim == 0) {
        for (const auto& g : I.generators()) r.kept.push_back(g.map_ring(r.perm, to_perm));
        return r;
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.map_ring(r.perm, to_perm));
    GroebnerBasis gb = standard_basis(gens, MonomialOrder::block(nelim));
    for (const auto& e : gb.elements) {
        bool free_of_elim = true;
        for (std::size_t i = 0; i < nelim && free_of_elim; ++i)
            if (e.degree_in(i) > 0) free_of_elim = false;
        if (free_of_elim) r.kept.push_back(e);
    }
    return r;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
    Elim e = eliminate_core(I, vars);
    std::vector<int> back(e.perm->arity(), -1);
    for (std::size_t i = 0; i < e.to_perm.size(); ++i)
        back[static_cast<std::size_t>(e.to_perm[i])] = static_cast<int>(i);
    std::vector<Polynomial> gens;
    for (const auto& p : e.kept) gens.push_back(p.map_ring(I.ring(), back));
    return Ideal(I.ring(), std::move(gens));
}

Ideal project(const Ideal& I, const std::vector<std::size_t>& keep_vars) {
    std::vector<char> keep(I.ring()->arity(), 0);
    for (std::size_t v : keep_vars) keep.at(v) = 1;
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < I.ring()->arity(); ++i)
        if (!keep[i]) drop.push_back(i);
    Elim e = eliminate_core(I, drop);
    std::vector<std::string> sub_vars;
    for (std::size_t v : e.keep_vars) sub_vars.push_back(I.ring()->variable(v));
    RingPtr sub = VariableRing::make(I.ring()->name() + "@sub", std::move(sub_vars));
    // permuted ring = [eliminated..., kept...]; map kept block down
    std::size_t nelim = drop.size();
    std::vector<int> down(e.perm->arity(), -1);
    for (std::size_t i = 0; i < e.keep_vars.size(); ++i)
        down[nelim + i] = static_cast<int>(i);
    std::vector<Polynomial> gens;
    for (const auto& p : e.kept) gens.push_back(p.map_ring(sub, down));
    return Ideal(sub, std::move(gens));
}

bool contains(const Ideal& I, const Polynomial& p, Mode mode) {
    check_same_ring(I.ring(), p.ring(), "contains");
    if (p.is_zero()) return true;
    const GroebnerBasis& gb = I.basis(mode);
    if (gb.is_unit()) return true;
    if (gb.elements.empty()) return false;
    if (mode == Mode::Global) return normal_form(p, gb.elements, gb.order).is_zero();
    // Local membership: Mora reduction can climb degrees without bound on
    // non-members, so decide by leading ideals instead. With I ⊆ I + <p>,
    // equality of leading ideals is equivalent to p ∈ I.
    std::vector<Polynomial> ext = gb.elements;
    ext.push_back(p);
    GroebnerBasis ext_gb = standard_basis(ext, gb.order);
    return leading_ideal(ext_gb) == leading_ideal(gb);
}

bool is_subideal(const Ideal& a, const Ideal& b, Mode mode) {
    for (const auto& g : a.generators())
        if (!contains(b, g, mode)) return false;
    return true;
}

bool equals(const Ideal& a, const Ideal& b, Mode mode) {
    check_same_ring(a.ring(), b.ring(), "equals");
    return is_subideal(a, b, mode) && is_subideal(b, a, mode);
}

bool radical_membership(const Ideal& I, const Polynomial& p) {
    check_same_ring(I.ring(), p.ring(), "radical_membership");
    if (p.is_zero()) return true;
    RingPtr ext = extend_ring(I.ring(), {"@z"});
    std::vector<int> up = shift_map(I.ring()->arity(), 1);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.map_ring(ext, up));
    Polynomial z = Polynomial::variable(ext, 0);
    gens.push_back(Polynomial::constant(ext, 1) - z * p.map_ring(ext, up));
    return standard_basis(gens, MonomialOrder::degrevlex()).is_unit();
}

namespace {

// Max cardinality of a variable subset meeting no generator support: the
// combinatorial dimension of a monomial ideal. Exponential in arity; fine for
// the rings at hand.
int monomial_dimension(const std::vector<Monomial>& gens, std::size_t arity) {
    if (arity > 24) throw error("dimension: too many variables");
    std::vector<std::uint32_t> supports;
    supports.reserve(gens.size());
    for (const auto& m : gens) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < arity; ++i)
            if (m[i] > 0) s |= (1u << i);
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t sub = 0; sub < (1u << arity); ++sub) {
        bool independent = true;
        for (std::uint32_t s : supports)
            if ((s & ~sub) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(sub));
    }
    return best;
}

}  // namespace

int dimension(const Ideal& I, Mode mode) {
    if (I.has_no_generators()) return static_cast<int>(I.ring()->arity());
    const GroebnerBasis& gb = I.basis(mode);
    if (gb.is_unit()) return -1;
    return monomial_dimension(leading_ideal(gb), I.ring()->arity());
}

std::optional<long> colength(const Ideal& I, Mode mode) {
    if (I.has_no_generators())
        return I.ring()->arity() == 0 ? std::optional<long>(1) : std::nullopt;
    const GroebnerBasis& gb = I.basis(mode);
    if (gb.is_unit()) return 0;
    std::vector<Monomial> lead = leading_ideal(gb);
    if (monomial_dimension(lead, I.ring()->arity()) > 0) return std::nullopt;
    // count standard monomials by breadth-first closure from 1
    std::set<Monomial> seen;
    std::vector<Monomial> queue{Monomial(I.ring()->arity())};
    seen.insert(queue.front());
    long count = 0;
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        ++count;
        if (count > 2000000) throw error("colength: runaway standard monomial count");
        for (std::size_t i = 0; i < I.ring()->arity(); ++i) {
            Monomial n = m;
            n[i] += 1;
            bool divisible = false;
            for (const auto& g : lead)
                if (g.divides(n)) {
                    divisible = true;
                    break;
                }
            if (!divisible && seen.insert(n).second) queue.push_back(n);
        }
    }
    return count;
}

Ideal pullback(const Ideal& I, const std::vector<Polynomial>& images) {
    if (images.size() != I.ring()->arity())
        throw error("pullback: arity mismatch");
    RingPtr source = images.empty() ? I.ring() : images.front().ring();
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.substitute(images));
    return Ideal(source, std::move(gens));
}

}  // namespace germ
