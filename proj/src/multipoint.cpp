#include "germ/multipoint.hpp"

#include <functional>
#include <sstream>

namespace germ {

std::string HypothesisAudit::to_string() const {
    std::ostringstream os;
    for (const auto& it : items) {
        const char* s = it.status == Status::Pass   ? "PASS"
                        : it.status == Status::Fail ? "FAIL"
                                                    : "ASSUMED";
        os << s << ' ' << it.name;
        if (!it.detail.empty()) os << ": " << it.detail;
        os << '\n';
    }
    return os.str();
}

FittingLadder::FittingLadder(std::vector<PresentationMatrix> branches)
    : branches_(std::move(branches)) {
    if (branches_.empty()) throw error("FittingLadder: no branches");
    ring_ = branches_.front().ring();
    for (const auto& b : branches_) {
        check_same_ring(b.ring(), ring_, "FittingLadder");
        total_size_ += b.size();
    }
}

Ideal FittingLadder::branch_fitting(std::size_t i, int k) const {
    std::string key = "b" + std::to_string(i) + "," + std::to_string(k);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, fitting_ideal(branches_.at(i), k)).first;
    return it->second;
}

Ideal FittingLadder::total_fitting(int k) const {
    std::string key = "t" + std::to_string(k);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, fitting_ideal(block_diagonal(branches_), k)).first;
    return it->second;
}

int FittingLadder::multipoint_dimension(int k) const {
    return dimension(total_fitting(k - 1), Mode::Local);
}

Ideal target_space(const FittingLadder& f, int k) {
    if (k < 1) throw error("target_space: k must be at least 1");
    return f.total_fitting(k - 1);
}

Ideal target_space(const MultiGerm& g, int k) { return target_space(FittingLadder::of(g), k); }

namespace {

void compositions(int k, std::size_t parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (cur.size() + 1 == parts) {
        cur.push_back(k);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int j = 0; j <= k; ++j) {
        cur.push_back(j);
        compositions(k - j, parts, cur, fn);
        cur.pop_back();
    }
}

/// Intersection of a list of ideals, skipping unit factors (the identity).
/// An empty list yields the unit ideal.
Ideal intersect_all(const RingPtr& ring, const std::vector<Ideal>& pieces) {
    std::optional<Ideal> acc;
    for (const auto& p : pieces) {
        if (p.is_unit(Mode::Global)) continue;
        acc = acc ? intersect(*acc, p) : p;
    }
    return acc ? *acc : Ideal::unit(ring);
}

}  // namespace

Ideal branch_expansion(const FittingLadder& f, int k) {
    const std::size_t r = f.branch_count();
    std::vector<Polynomial> gens;
    std::vector<int> cur;
    compositions(k, r, cur, [&](const std::vector<int>& js) {
        std::optional<Ideal> prod;
        for (std::size_t i = 0; i < r; ++i) {
            auto fi = f.branch_fitting(i, js[i]);
            if (fi.is_unit(Mode::Global)) continue;
            if (fi.has_no_generators()) {
                prod = Ideal::zero(f.ring());  // a zero factor kills the product
                break;
            }
            prod = prod ? product(*prod, fi) : fi;
        }
        auto term = prod ? *prod : Ideal::unit(f.ring());
        for (const auto& g : term.generators()) gens.push_back(g);
    });
    return Ideal(f.ring(), std::move(gens)).simplified(Mode::Global);
}

namespace {

void audit_one_to_one(const FittingLadder& f, HypothesisAudit& audit) {
    int d = f.multipoint_dimension(2);
    int want = f.n() - 1;
    std::ostringstream os;
    os << "dim M_2 = " << d << ", n - 1 = " << want;
    bool ok = (d == want) || d == -1;
    audit.add("generically one-to-one (dim M_2 = n - 1)",
              ok ? HypothesisAudit::Status::Pass : HypothesisAudit::Status::Fail, os.str());
}

void audit_dimensionally_correct(const FittingLadder& f, int k, HypothesisAudit& audit) {
    int d = f.multipoint_dimension(k);
    int want = f.n() - k + 1;
    std::ostringstream os;
    os << "dim M_" << k << " = " << d << ", n - " << (k - 1) << " = " << want;
    bool ok = d <= want;  // empty (dim -1) is fine; excess dimension is not
    audit.add("M_" + std::to_string(k) + " dimensionally correct",
              ok ? HypothesisAudit::Status::Pass : HypothesisAudit::Status::Fail, os.str());
}

}  // namespace

FormulaResult double_formula(const FittingLadder& f) {
    FormulaResult res;
    audit_one_to_one(f, res.audit);
    audit_dimensionally_correct(f, 3, res.audit);

    const std::size_t r = f.branch_count();
    std::vector<Ideal> pieces;
    for (std::size_t i = 0; i < r; ++i) pieces.push_back(f.branch_fitting(i, 1));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            pieces.push_back(sum(f.branch_fitting(i, 0), f.branch_fitting(j, 0)));
    res.rhs = intersect_all(f.ring(), pieces).simplified(Mode::Global);
    return res;
}

FormulaResult triple_formula(const FittingLadder& f) {
    FormulaResult res;
    audit_one_to_one(f, res.audit);

    const std::size_t r = f.branch_count();
    // the formula allows one branch with its own triple points; find it
    std::vector<std::size_t> fat;
    for (std::size_t i = 0; i < r; ++i)
        if (!f.branch_fitting(i, 2).is_unit(Mode::Local)) fat.push_back(i);
    if (fat.size() > 1) {
        std::ostringstream os;
        os << fat.size() << " branches have nonempty own triple locus";
        res.audit.add("at most one branch with nonempty M_3^(i)", HypothesisAudit::Status::Fail,
                      os.str());
    } else {
        res.audit.add("at most one branch with nonempty M_3^(i)", HypothesisAudit::Status::Pass,
                      fat.empty() ? "all branch triple loci empty"
                                  : "branch " + std::to_string(fat[0] + 1) + " taken first");
    }
    res.audit.add("source smooth, hence a complete intersection (Gorenstein)",
                  HypothesisAudit::Status::Assumed,
                  "not machine-checked; holds for parametrized branches");
    audit_dimensionally_correct(f, 3, res.audit);
    audit_dimensionally_correct(f, 4, res.audit);

    std::size_t first = fat.empty() ? 0 : fat[0];
    std::vector<Ideal> pieces;
    pieces.push_back(f.branch_fitting(first, 2));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            pieces.push_back(sum(f.branch_fitting(i, 1), f.branch_fitting(j, 0)));
            pieces.push_back(sum(f.branch_fitting(i, 0), f.branch_fitting(j, 1)));
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k)
                pieces.push_back(sum(sum(f.branch_fitting(i, 0), f.branch_fitting(j, 0)),
                                     f.branch_fitting(k, 0)));
    res.rhs = intersect_all(f.ring(), pieces).simplified(Mode::Global);
    return res;
}

bool decomposition_check(const FittingLadder& f, int k) {
    if (k < 1) throw error("decomposition_check: k must be at least 1");
    const std::size_t r = f.branch_count();
    auto F = f.total_fitting(k - 1);

    // pieces M_{j_1}^(i_1) ∩ ... ∩ M_{j_l}^(i_l) over subsets i_1 < ... < i_l
    // and j_1 + ... + j_l = k with all j >= 1
    std::vector<Ideal> pieces;
    std::function<void(std::size_t, int, std::vector<std::pair<std::size_t, int>>&)> rec =
        [&](std::size_t from, int left, std::vector<std::pair<std::size_t, int>>& cur) {
            if (left == 0) {
                if (cur.empty()) return;
                std::optional<Ideal> piece;
                for (auto [i, j] : cur) {
                    auto fi = f.branch_fitting(i, j - 1);
                    piece = piece ? sum(*piece, fi) : fi;
                }
                if (!piece->is_unit(Mode::Local)) pieces.push_back(*piece);
                return;
            }
            for (std::size_t i = from; i < r; ++i)
                for (int j = 1; j <= left; ++j) {
                    cur.emplace_back(i, j);
                    rec(i + 1, left - j, cur);
                    cur.pop_back();
                }
        };
    std::vector<std::pair<std::size_t, int>> cur;
    rec(0, k, cur);

    if (pieces.empty()) return F.is_unit(Mode::Local);
    auto U = intersect_all(f.ring(), pieces);
    for (const auto& g : F.generators())
        if (!radical_membership(U, g)) return false;
    for (const auto& u : U.generators())
        if (!radical_membership(F, u)) return false;
    return true;
}

}  // namespace germ
