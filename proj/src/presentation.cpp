#include "germ/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace germ {

void validate(const MultiGerm& g) {
    if (!g.target) throw error("multi-germ: missing target ring");
    const std::size_t np1 = g.target->arity();
    if (np1 < 2) throw error("multi-germ: target must have at least 2 variables");
    if (g.branches.empty()) throw error("multi-germ: no branches");
    for (const auto& b : g.branches) {
        if (!b.source) throw error("branch " + b.name + ": missing source ring");
        if (b.source->arity() + 1 != np1)
            throw error("branch " + b.name + ": source arity must be one less than target");
        if (b.components.size() != np1)
            throw error("branch " + b.name + ": expected " + std::to_string(np1) +
                        " components, got " + std::to_string(b.components.size()));
        for (const auto& c : b.components) {
            check_same_ring(c.ring(), b.source, "branch component");
            if (c.constant_term() != 0)
                throw error("branch " + b.name + ": component does not vanish at the origin");
        }
    }
}

PresentationMatrix::PresentationMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      rows_v_(rows, std::vector<Polynomial>(cols, Polynomial::zero(ring_))) {}

PresentationMatrix PresentationMatrix::map_ring(const RingPtr& new_ring,
                                                const std::vector<int>& var_map) const {
    PresentationMatrix out(new_ring, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = rows_v_[i][j].map_ring(new_ring, var_map);
    return out;
}

std::string PresentationMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rows_v_[i][j].to_string();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

Polynomial det(const PresentationMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    // expand along the row with the most zero entries
    std::size_t best = 0, best_zeros = 0;
    for (std::size_t p = 0; p < k; ++p) {
        std::size_t z = 0;
        for (std::size_t q = 0; q < k; ++q)
            if (m.at(rows[p], cols[q]).is_zero()) ++z;
        if (p == 0 || z > best_zeros) best = p, best_zeros = z;
    }
    std::vector<std::size_t> sub_rows;
    for (std::size_t p = 0; p < k; ++p)
        if (p != best) sub_rows.push_back(rows[p]);
    Polynomial acc = Polynomial::zero(m.ring());
    for (std::size_t q = 0; q < k; ++q) {
        const auto& entry = m.at(rows[best], cols[q]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t qq = 0; qq < k; ++qq)
            if (qq != q) sub_cols.push_back(cols[qq]);
        auto cof = entry * det(m, sub_rows, sub_cols);
        acc = ((best + q) % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Polynomial> minors(const PresentationMatrix& m, std::size_t s) {
    if (s == 0 || s > m.row_count() || s > m.col_count())
        throw error("minors: size out of range");
    std::vector<Polynomial> out;
    std::set<std::string> seen;
    combinations(m.row_count(), s, [&](const std::vector<std::size_t>& rows) {
        combinations(m.col_count(), s, [&](const std::vector<std::size_t>& cols) {
            auto d = det(m, rows, cols);
            if (d.is_zero()) return;
            d = d.normalized();
            if (seen.insert(d.to_string()).second) out.push_back(d);
        });
    });
    return out;
}

PresentationMatrix hconcat(const std::vector<PresentationMatrix>& parts) {
    if (parts.empty()) throw error("hconcat: no parts");
    std::size_t cols = 0;
    for (const auto& p : parts) {
        check_same_ring(p.ring(), parts.front().ring(), "hconcat");
        if (p.row_count() != parts.front().row_count())
            throw error("hconcat: row count mismatch");
        cols += p.col_count();
    }
    PresentationMatrix out(parts.front().ring(), parts.front().row_count(), cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.row_count(); ++i)
            for (std::size_t j = 0; j < p.col_count(); ++j)
                out.at(i, off + j) = p.at(i, j);
        off += p.col_count();
    }
    return out;
}

Ideal fitting_ideal(const PresentationMatrix& m, int k) {
    if (k < 0) return Ideal::zero(m.ring());
    if (static_cast<std::size_t>(k) >= m.row_count()) return Ideal::unit(m.ring());
    std::size_t s = m.row_count() - static_cast<std::size_t>(k);
    if (s > m.col_count()) return Ideal::zero(m.ring());
    return Ideal(m.ring(), minors(m, s));
}

PresentationMatrix mult_matrix_presentation(const Polynomial& modulus, const Polynomial& mult,
                                            std::size_t fiber) {
    const auto& r = modulus.ring();
    check_same_ring(r, mult.ring(), "mult_matrix_presentation");
    const int m = modulus.degree_in(fiber);
    if (m < 1) throw error("mult_matrix_presentation: modulus is constant in the fiber variable");
    auto lead = modulus.coefficients_in(fiber).at(static_cast<std::size_t>(m));
    if (!lead.is_constant())
        throw error("mult_matrix_presentation: modulus not monic in the fiber variable");
    auto monic = modulus * (1 / lead.constant_term());

    auto fiber_power = [&](int d) {
        Monomial mon(r->arity());
        mon[fiber] = d;
        return Polynomial::term(r, mon, 1);
    };
    auto reduce = [&](Polynomial p) {
        while (p.degree_in(fiber) >= m) {
            int d = p.degree_in(fiber);
            auto c = p.coefficients_in(fiber).at(static_cast<std::size_t>(d));
            p = p - c * fiber_power(d - m) * monic;
        }
        return p;
    };

    PresentationMatrix out(r, static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        auto col = reduce(mult * fiber_power(j)).coefficients_in(fiber);
        for (int i = 0; i < m && static_cast<std::size_t>(i) < col.size(); ++i)
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[i];
    }
    return out;
}

namespace {

/// Index of the source variable if the polynomial is exactly that variable.
int bare_variable(const Polynomial& p) {
    if (p.term_count() != 1) return -1;
    const auto& [mon, c] = *p.terms().begin();
    if (c != 1 || mon.total_degree() != 1) return -1;
    for (std::size_t i = 0; i < mon.size(); ++i)
        if (mon[i] == 1) return static_cast<int>(i);
    return -1;
}

}  // namespace

BranchForm detect_form(const BranchGerm& b) {
    const std::size_t n = b.source->arity();
    if (b.components.size() != n + 1)
        throw error("branch " + b.name + ": expected " + std::to_string(n + 1) + " components");

    std::vector<int> bare(n + 1);
    for (std::size_t i = 0; i <= n; ++i) bare[i] = bare_variable(b.components[i]);

    // graph form: some n positions carry the n distinct source variables
    for (std::size_t p = 0; p <= n; ++p) {
        std::vector<int> pos(n, -1);  // source var -> component position
        bool ok = true;
        for (std::size_t i = 0; i <= n && ok; ++i) {
            if (i == p) continue;
            int v = bare[i];
            if (v < 0 || pos[static_cast<std::size_t>(v)] != -1) ok = false;
            else pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        if (!ok) continue;
        BranchForm form;
        form.kind = BranchForm::Kind::Graph;
        form.h_pos = p;
        form.var_pos = std::move(pos);
        return form;
    }

    // Weierstrass form: n-1 positions carry distinct source variables, one of
    // the two leftover components is monic in the leftover source variable.
    // Among the valid choices, take a modulus of minimal fiber degree.
    std::optional<BranchForm> best;
    int best_deg = 0;
    for (std::size_t pg = 0; pg <= n; ++pg) {
        for (std::size_t ph = 0; ph <= n; ++ph) {
            if (ph == pg) continue;
            std::vector<int> pos(n, -1);
            bool ok = true;
            for (std::size_t i = 0; i <= n && ok; ++i) {
                if (i == pg || i == ph) continue;
                int v = bare[i];
                if (v < 0 || pos[static_cast<std::size_t>(v)] != -1) ok = false;
                else pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
            if (!ok) continue;
            std::size_t y = n;
            for (std::size_t v = 0; v < n; ++v)
                if (pos[v] == -1) y = v;
            if (y == n) continue;
            const auto& g = b.components[pg];
            int m = g.degree_in(y);
            if (m < 1) continue;
            if (!g.coefficients_in(y).at(static_cast<std::size_t>(m)).is_constant()) continue;
            if (!best || m < best_deg) {
                BranchForm form;
                form.kind = BranchForm::Kind::Weierstrass;
                form.g_pos = pg;
                form.w_pos = ph;
                form.fiber = y;
                form.var_pos = pos;
                best = std::move(form);
                best_deg = m;
            }
        }
    }
    if (!best)
        throw error("branch " + b.name +
                    ": not in graph or Weierstrass form; no presentation available");
    return *best;
}

PresentationMatrix branch_presentation(const BranchGerm& b, const RingPtr& target) {
    const std::size_t n = b.source->arity();
    if (target->arity() != n + 1 || b.components.size() != n + 1)
        throw error("branch " + b.name + ": arity mismatch with target");
    BranchForm form = detect_form(b);

    if (form.kind == BranchForm::Kind::Graph) {
        std::vector<Polynomial> images(n);
        for (std::size_t v = 0; v < n; ++v)
            images[v] = Polynomial::variable(target, static_cast<std::size_t>(form.var_pos[v]));
        PresentationMatrix lam(target, 1);
        lam.at(0, 0) =
            Polynomial::variable(target, form.h_pos) - b.components[form.h_pos].substitute(images);
        return lam;
    }

    // extend the target ring by the fiber variable, compute the multiplication
    // matrix there, then drop the fiber variable
    auto ext_vars = target->variables();
    ext_vars.push_back("@fiber");
    auto ext = VariableRing::make(target->name() + "@ext", ext_vars);
    std::vector<Polynomial> images(n);
    for (std::size_t v = 0; v < n; ++v)
        images[v] = (v == form.fiber)
                        ? Polynomial::variable(ext, n + 1)
                        : Polynomial::variable(ext, static_cast<std::size_t>(form.var_pos[v]));
    auto g_ext = b.components[form.g_pos].substitute(images) - Polynomial::variable(ext, form.g_pos);
    auto h_ext = b.components[form.w_pos].substitute(images);
    auto M = mult_matrix_presentation(g_ext, h_ext, n + 1);

    PresentationMatrix lam_ext(ext, M.size());
    auto W = Polynomial::variable(ext, form.w_pos);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j)
            lam_ext.at(i, j) = (i == j) ? W - M.at(i, j) : -M.at(i, j);

    std::vector<int> var_map(n + 2);
    for (std::size_t i = 0; i <= n; ++i) var_map[i] = static_cast<int>(i);
    var_map[n + 1] = -1;
    return lam_ext.map_ring(target, var_map);
}

std::vector<PresentationMatrix> branch_presentations(const MultiGerm& g) {
    validate(g);
    std::vector<PresentationMatrix> out;
    out.reserve(g.branches.size());
    for (const auto& b : g.branches) out.push_back(branch_presentation(b, g.target));
    return out;
}

PresentationMatrix block_diagonal(const std::vector<PresentationMatrix>& blocks) {
    if (blocks.empty()) throw error("block_diagonal: no blocks");
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        check_same_ring(b.ring(), blocks.front().ring(), "block_diagonal");
        rows += b.row_count();
        cols += b.col_count();
    }
    PresentationMatrix out(blocks.front().ring(), rows, cols);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.row_count(); ++i)
            for (std::size_t j = 0; j < b.col_count(); ++j)
                out.at(ro + i, co + j) = b.at(i, j);
        ro += b.row_count();
        co += b.col_count();
    }
    return out;
}

}  // namespace germ
