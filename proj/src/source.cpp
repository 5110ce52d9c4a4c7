#include "germ/source.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace germ {

namespace {

/// `base` extended by copies of `extra`, each primed until unique.
std::vector<std::string> primed_names(const std::vector<std::string>& base,
                                      const std::vector<std::string>& extra) {
    std::vector<std::string> out = base;
    std::set<std::string> used(base.begin(), base.end());
    for (const auto& name : extra) {
        std::string cand = name + "'";
        while (!used.insert(cand).second) cand += "'";
        out.push_back(cand);
    }
    return out;
}

/// Divided difference of p with respect to substituting `to` for `from`:
/// (p[from := to] - p) / (to - from), exact by construction.
Polynomial divided_difference(const Polynomial& p, std::size_t from, std::size_t to) {
    auto shifted = p.substitute_var(from, Polynomial::variable(p.ring(), to));
    auto denom = Polynomial::variable(p.ring(), to) - Polynomial::variable(p.ring(), from);
    auto num = shifted - p;
    if (num.is_zero()) return num;
    return Polynomial::exact_div(num, denom);
}

}  // namespace

PresentationMatrix alpha_matrix(const BranchGerm& b) {
    const std::size_t n = b.source->arity();
    auto ring = VariableRing::make(b.source->name() + "@double",
                                   primed_names(b.source->variables(), b.source->variables()));
    std::vector<int> into(n);
    for (std::size_t v = 0; v < n; ++v) into[v] = static_cast<int>(v);

    PresentationMatrix alpha(ring, n + 1, n);
    for (std::size_t c = 0; c <= n; ++c) {
        // mixed[j] = f_c(x_1..x_j, x'_{j+1}..x'_n); telescoping differences
        // between consecutive mixed points are divisible by x'_{j} - x_{j}
        auto fc = b.components[c].map_ring(ring, into);
        Polynomial mixed = fc;  // j = n
        std::vector<Polynomial> at(n + 1);
        at[n] = mixed;
        for (std::size_t j = n; j-- > 0;) {
            mixed = mixed.substitute_var(j, Polynomial::variable(ring, n + j));
            at[j] = mixed;
        }
        Polynomial recon = Polynomial::zero(ring);
        for (std::size_t j = 0; j < n; ++j) {
            auto num = at[j] - at[j + 1];
            auto denom = Polynomial::variable(ring, n + j) - Polynomial::variable(ring, j);
            if (!num.is_zero()) alpha.at(c, j) = Polynomial::exact_div(num, denom);
            recon = recon + alpha.at(c, j) * denom;
        }
        if (recon != at[0] - at[n])
            throw error("alpha_matrix: reconstruction identity failed");  // unreachable
    }
    return alpha;
}

std::vector<DoubleSpaceComponent> double_space(const MultiGerm& f) {
    validate(f);
    const std::size_t r = f.branches.size();
    const std::size_t n = f.branches.front().source->arity();
    std::vector<DoubleSpaceComponent> out;

    for (std::size_t i = 0; i < r; ++i) {
        const auto& bi = f.branches[i];
        for (std::size_t j = 0; j < r; ++j) {
            const auto& bj = f.branches[j];
            DoubleSpaceComponent comp;
            comp.i = i;
            comp.j = j;
            comp.base = bi.source;
            for (std::size_t v = 0; v < n; ++v) comp.base_vars.push_back(v);

            if (i == j) {
                comp.kind = DoubleSpaceComponent::Kind::Diagonal;
                auto form = detect_form(bi);
                if (form.kind == BranchForm::Kind::Weierstrass) {
                    // pairs (x, y) != (x, y') with the same image: the
                    // coordinate components pin x' = x, leaving the divided
                    // differences of the two non-coordinate components
                    auto names = primed_names(bi.source->variables(),
                                              {bi.source->variable(form.fiber)});
                    auto ring = VariableRing::make(bi.source->name() + "@diag", names);
                    std::vector<int> into(n);
                    for (std::size_t v = 0; v < n; ++v) into[v] = static_cast<int>(v);
                    std::vector<Polynomial> gens;
                    for (std::size_t p : {form.g_pos, form.w_pos})
                        gens.push_back(divided_difference(bi.components[p].map_ring(ring, into),
                                                          form.fiber, n));
                    comp.ambient = ring;
                    comp.ideal = Ideal(ring, gens);
                } else {
                    // graph branches are immersive embeddings; the alpha
                    // minors contain a unit and the component is empty
                    auto alpha = alpha_matrix(bi);
                    auto ring = alpha.ring();
                    std::vector<int> into(n);
                    for (std::size_t v = 0; v < n; ++v) into[v] = static_cast<int>(v);
                    std::vector<Polynomial> gens;
                    for (std::size_t c = 0; c <= n; ++c) {
                        auto fc = bi.components[c].map_ring(ring, into);
                        Polynomial primed = fc;
                        for (std::size_t v = 0; v < n; ++v)
                            primed = primed.substitute_var(v, Polynomial::variable(ring, n + v));
                        auto g = primed - fc;
                        if (!g.is_zero()) gens.push_back(g);
                    }
                    for (auto& m : minors(alpha, n)) gens.push_back(std::move(m));
                    comp.ambient = ring;
                    comp.ideal = Ideal(ring, gens);
                }
            } else {
                comp.kind = DoubleSpaceComponent::Kind::OffDiagonal;
                auto names = primed_names(bi.source->variables(), bj.source->variables());
                auto ring = VariableRing::make(
                    bi.source->name() + "@x@" + bj.source->name(), names);
                std::vector<int> into_i(n), into_j(n);
                for (std::size_t v = 0; v < n; ++v) {
                    into_i[v] = static_cast<int>(v);
                    into_j[v] = static_cast<int>(n + v);
                }
                std::vector<Polynomial> gens;
                for (std::size_t c = 0; c <= n; ++c) {
                    auto g = bi.components[c].map_ring(ring, into_i) -
                             bj.components[c].map_ring(ring, into_j);
                    if (!g.is_zero()) gens.push_back(g);
                }
                comp.ambient = ring;
                comp.ideal = Ideal(ring, gens);
            }
            out.push_back(std::move(comp));
        }
    }
    return out;
}

PresentationMatrix projection_presentation(const DoubleSpaceComponent& comp) {
    const auto& ring = comp.ambient;
    std::vector<bool> is_base(ring->arity(), false);
    for (std::size_t v : comp.base_vars) is_base[v] = true;

    std::vector<Polynomial> gens;
    for (const auto& g : comp.ideal.generators())
        if (!g.is_zero()) gens.push_back(g);
    for (const auto& g : gens)
        if (g.is_constant())
            return PresentationMatrix(comp.base, 1, 1);  // empty component: [1], zero module

    // substitute away every non-base variable some generator pins linearly
    // with a constant coefficient
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t gi = 0; gi < gens.size() && !progress; ++gi) {
            for (std::size_t v = 0; v < ring->arity() && !progress; ++v) {
                if (is_base[v] || gens[gi].degree_in(v) != 1) continue;
                auto coeffs = gens[gi].coefficients_in(v);
                if (!coeffs[1].is_constant()) continue;
                auto image = coeffs[0] * (-1 / coeffs[1].constant_term());
                std::vector<Polynomial> next;
                for (std::size_t gj = 0; gj < gens.size(); ++gj) {
                    if (gj == gi) continue;
                    auto h = gens[gj].substitute_var(v, image);
                    if (!h.is_zero()) next.push_back(h);
                }
                gens = std::move(next);
                progress = true;
            }
        }
    }

    std::vector<std::size_t> fibers;
    for (std::size_t v = 0; v < ring->arity(); ++v) {
        if (is_base[v]) continue;
        for (const auto& g : gens)
            if (g.degree_in(v) > 0) {
                fibers.push_back(v);
                break;
            }
    }

    std::vector<int> to_base(ring->arity(), -1);
    for (std::size_t t = 0; t < comp.base_vars.size(); ++t)
        to_base[comp.base_vars[t]] = static_cast<int>(t);

    if (fibers.empty()) {
        // the projection embeds the component as V(gens) in the base
        PresentationMatrix out(comp.base, 1, gens.size());
        for (std::size_t s = 0; s < gens.size(); ++s)
            out.at(0, s) = gens[s].map_ring(comp.base, to_base);
        return out;
    }
    if (fibers.size() > 1)
        throw error("projection_presentation: more than one fiber variable remains");

    const std::size_t y = fibers.front();
    std::size_t best = gens.size();
    int best_deg = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int d = gens[gi].degree_in(y);
        if (d < 1) continue;
        if (!gens[gi].coefficients_in(y).at(static_cast<std::size_t>(d)).is_constant()) continue;
        if (best == gens.size() || d < best_deg) {
            best = gi;
            best_deg = d;
        }
    }
    if (best == gens.size())
        throw error("projection_presentation: no generator monic in the fiber variable");

    const auto& modulus = gens[best];
    std::vector<PresentationMatrix> parts;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        if (gi == best) continue;
        parts.push_back(mult_matrix_presentation(modulus, gens[gi], y));
    }
    if (parts.empty())
        return PresentationMatrix(comp.base, static_cast<std::size_t>(best_deg), 0);
    return hconcat(parts).map_ring(comp.base, to_base);
}

std::vector<Ideal> source_multipoint(const MultiGerm& f, int k) {
    if (k < 1) throw error("source_multipoint: k must be at least 1");
    auto comps = double_space(f);
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < f.branches.size(); ++i) {
        const auto& src = f.branches[i].source;
        std::vector<PresentationMatrix> blocks;
        for (const auto& c : comps) {
            if (c.i != i) continue;
            if (c.ideal.is_unit(Mode::Local)) continue;  // empty component
            blocks.push_back(projection_presentation(c));
        }
        if (blocks.empty()) {
            out.push_back(Ideal::unit(src));
            continue;
        }
        FittingLadder ladder(std::move(blocks));
        out.push_back(ladder.total_fitting(k - 1));
    }
    return out;
}

bool preimage_compare(const MultiGerm& f, int k) {
    auto src = source_multipoint(f, k);
    auto target = target_space(f, k + 1);
    for (std::size_t i = 0; i < f.branches.size(); ++i) {
        auto pb = pullback(target, f.branches[i].components);
        if (!equals(src[i], pb, Mode::Local)) return false;
    }
    return true;
}

std::string component_report(const DoubleSpaceComponent& comp) {
    std::ostringstream os;
    os << "component (" << comp.i + 1 << "," << comp.j + 1 << ") "
       << (comp.kind == DoubleSpaceComponent::Kind::Diagonal ? "diagonal" : "off-diagonal")
       << "\n  ambient:";
    for (const auto& v : comp.ambient->variables()) os << ' ' << v;
    os << "\n  ideal: " << comp.ideal.to_string() << "\n";
    try {
        os << "  presentation over";
        for (std::size_t v : comp.base_vars) os << ' ' << comp.ambient->variable(v);
        os << ":\n" << projection_presentation(comp).to_string();
    } catch (const error& e) {
        os << " -- " << e.what() << "\n";
    }
    return os.str();
}

}  // namespace germ
