#pragma once

#include "germ/ideal.hpp"

namespace germ {

/// One branch of a multi-germ: a finite map (C^n, 0) -> (C^{n+1}, 0) given by
/// n+1 component polynomials in the source variables. Components must vanish
/// at the origin.
struct BranchGerm {
    std::string name;
    RingPtr source;                      // n variables
    std::vector<Polynomial> components;  // n+1 polynomials in `source`
};

/// A multi-germ with a common target (C^{n+1}, 0).
struct MultiGerm {
    RingPtr target;  // n+1 variables
    std::vector<BranchGerm> branches;
};

/// Throws germ::error on arity mismatches or components not vanishing at 0.
void validate(const MultiGerm& g);

/// Matrix over a polynomial ring presenting a module with rows() generators:
/// coker(lambda) = f_* O_source. Usually square; rectangular (rows <= cols)
/// matrices arise for projections of non-hypersurface components.
class PresentationMatrix {
public:
    PresentationMatrix(RingPtr ring, std::size_t n) : PresentationMatrix(std::move(ring), n, n) {}
    PresentationMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    const RingPtr& ring() const { return ring_; }
    std::size_t size() const { return rows_; }  // number of module generators q
    std::size_t row_count() const { return rows_; }
    std::size_t col_count() const { return cols_; }

    Polynomial& at(std::size_t i, std::size_t j) { return rows_v_.at(i).at(j); }
    const Polynomial& at(std::size_t i, std::size_t j) const { return rows_v_.at(i).at(j); }

    PresentationMatrix map_ring(const RingPtr& new_ring, const std::vector<int>& var_map) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<std::vector<Polynomial>> rows_v_;
};

/// All s x s minors, normalized, deduplicated, zeros dropped.
std::vector<Polynomial> minors(const PresentationMatrix& m, std::size_t s);

/// Side-by-side concatenation of matrices with equal row counts.
PresentationMatrix hconcat(const std::vector<PresentationMatrix>& parts);

/// k-th Fitting ideal of the presented module: generated by the (q-k) x (q-k)
/// minors, q = rows. Unit ideal for k >= q, zero ideal for k < 0 or when the
/// minors outgrow the column count.
Ideal fitting_ideal(const PresentationMatrix& m, int k);

/// Matrix of multiplication by `mult` on the basis 1, y, ..., y^{m-1} of
/// R[y]/(modulus), where y is the variable `fiber` and `modulus` has an
/// invertible constant as its leading coefficient in y. Entries are free of y
/// but still live in the ring of the inputs.
PresentationMatrix mult_matrix_presentation(const Polynomial& modulus, const Polynomial& mult,
                                            std::size_t fiber);

/// Shape of a branch recognized by the presentation construction.
struct BranchForm {
    enum class Kind { Graph, Weierstrass };
    Kind kind;
    std::size_t h_pos = 0;   // graph: position of the non-variable component
    std::size_t g_pos = 0;   // weierstrass: position of the monic modulus
    std::size_t w_pos = 0;   // weierstrass: position of the second component
    std::size_t fiber = 0;   // weierstrass: leftover source variable
    std::vector<int> var_pos;  // source variable -> component position (-1 for the fiber)
};

/// Recognize a branch as graph form (n components are the n distinct source
/// variables) or Weierstrass form (n-1 components are distinct source
/// variables and some remaining component is monic in the leftover variable,
/// minimal degree preferred). Throws germ::error for anything else.
BranchForm detect_form(const BranchGerm& b);

/// Presentation matrix of one branch over the target ring. Handles two shapes:
/// graph form (n components are the n distinct source variables; the matrix is
/// 1 x 1) and Weierstrass form (n-1 components are distinct source variables
/// and one remaining component is monic in the leftover source variable).
/// Throws germ::error if the branch fits neither shape.
PresentationMatrix branch_presentation(const BranchGerm& b, const RingPtr& target);

/// One presentation matrix per branch, all over g.target.
std::vector<PresentationMatrix> branch_presentations(const MultiGerm& g);

/// diag(blocks...): presentation of the whole multi-germ from its branches.
PresentationMatrix block_diagonal(const std::vector<PresentationMatrix>& blocks);

}  // namespace germ
