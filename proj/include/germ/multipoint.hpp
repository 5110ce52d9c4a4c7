#pragma once

#include <mutex>
#include <unordered_map>

#include "germ/presentation.hpp"

namespace germ {

/// Record of the runtime checks behind an intersection formula. Formulas are
/// never assumed to apply; each hypothesis is checked (or explicitly marked as
/// assumed when it is not machine-checkable) and reported.
struct HypothesisAudit {
    enum class Status { Pass, Fail, Assumed };
    struct Item {
        std::string name;
        Status status;
        std::string detail;
    };
    std::vector<Item> items;

    void add(std::string name, Status s, std::string detail = "") {
        items.push_back({std::move(name), s, std::move(detail)});
    }
    bool applicable() const {
        for (const auto& it : items)
            if (it.status == Status::Fail) return false;
        return true;
    }
    std::string to_string() const;
};

/// Fitting ideals of a multi-germ presented branch by branch: the per-branch
/// ideals F_k^(i) and the total F_k of the block-diagonal matrix, cached.
/// Works for any list of presentation matrices over a common ring, so the
/// same machinery applies to source projections.
class FittingLadder {
public:
    explicit FittingLadder(std::vector<PresentationMatrix> branches);
    static FittingLadder of(const MultiGerm& g) { return FittingLadder(branch_presentations(g)); }

    const RingPtr& ring() const { return ring_; }
    std::size_t branch_count() const { return branches_.size(); }
    std::size_t total_size() const { return total_size_; }  // q of the block matrix
    /// Source dimension n: the target is (C^{n+1}, 0).
    int n() const { return static_cast<int>(ring_->arity()) - 1; }
    const std::vector<PresentationMatrix>& branches() const { return branches_; }

    Ideal branch_fitting(std::size_t i, int k) const;  // F_k^(i)
    Ideal total_fitting(int k) const;                  // F_k of the block matrix

    /// dim of M_k = V(F_{k-1}) as a germ at the origin; -1 when empty.
    int multipoint_dimension(int k) const;

private:
    RingPtr ring_;
    std::vector<PresentationMatrix> branches_;
    std::size_t total_size_ = 0;

    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, Ideal> cache_;
};

/// Ideal of the k-fold multiple point space M_k(f) = V(F_{k-1}).
Ideal target_space(const FittingLadder& f, int k);
Ideal target_space(const MultiGerm& g, int k);

/// Sum over compositions j_1 + ... + j_r = k of the products
/// F_{j_1}^(1) ... F_{j_r}^(r); equals total_fitting(k) identically.
Ideal branch_expansion(const FittingLadder& f, int k);

struct FormulaResult {
    Ideal rhs;
    HypothesisAudit audit;
};

/// Right-hand side of the double point intersection formula
///   F_1 = ⋂_i F_1^(i)  ∩  ⋂_{i<j} (F_0^(i) + F_0^(j)),
/// with its audit: generically one-to-one (dim M_2 = n-1) and M_3
/// dimensionally correct (dim M_3 <= n-2). Equality with F_1 holds when the
/// audit passes; the caller compares.
FormulaResult double_formula(const FittingLadder& f);

/// Right-hand side of the triple point intersection formula
///   F_2 = F_2^(b) ∩ ⋂_{i<j} (F_1^(i)+F_0^(j)) ∩ (F_0^(i)+F_1^(j))
///              ∩ ⋂_{i<j<k} (F_0^(i)+F_0^(j)+F_0^(k)),
/// where b is the unique branch with nonempty own triple locus (audited; two
/// such branches make the formula inapplicable).
FormulaResult triple_formula(const FittingLadder& f);

/// Set-theoretic decomposition of M_k into intersections of per-branch
/// multiple point loci, checked at radical level in both directions.
bool decomposition_check(const FittingLadder& f, int k);

}  // namespace germ
