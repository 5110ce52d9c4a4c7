#pragma once

#include "germ/multipoint.hpp"

namespace germ {

/// One component of the source double point space D²(f): pairs of points, one
/// on branch i and one on branch j, with the same image. Lives in an ambient
/// ring whose first variables are the branch-i source variables; projection to
/// those variables is the map whose multiple point spaces are the source
/// spaces D²_k(f).
struct DoubleSpaceComponent {
    enum class Kind { Diagonal, OffDiagonal };
    std::size_t i = 0, j = 0;  // branch indices (i = projection base)
    Kind kind = Kind::OffDiagonal;
    RingPtr ambient;                     // base variables first, then the rest
    Ideal ideal;                         // over `ambient`
    RingPtr base;                        // source ring of branch i
    std::vector<std::size_t> base_vars;  // ambient indices of the base variables
};

/// (n+1) x n matrix of telescoping divided differences over the doubled ring
/// (x, x'): entry (c, j) = (f_c(x_1..x_{j-1}, x'_j..x'_n)
///                          - f_c(x_1..x_j, x'_{j+1}..x'_n)) / (x'_j - x_j).
/// Satisfies alpha * (x' - x) = f(x') - f(x) exactly (checked).
PresentationMatrix alpha_matrix(const BranchGerm& b);

/// All r² components of D²(f), ordered by (i, j). Diagonal components of
/// Weierstrass branches are cut out by the two divided differences of the
/// non-coordinate components in (x, y, y'); diagonal components of graph
/// branches use the doubled ring with the n x n minors of alpha appended
/// (unit ideal: immersions have no diagonal double points).
std::vector<DoubleSpaceComponent> double_space(const MultiGerm& f);

/// Presentation matrix over comp.base of the projection of the component to
/// the branch-i source. Variables pinned linearly by a generator are
/// substituted away first; afterwards the component must either lie in the
/// base (1 x s matrix of its equations) or involve a single fiber variable
/// with a generator monic in it (multiplication matrices modulo the monic
/// generator of minimal fiber degree, side by side). Throws germ::error
/// otherwise.
PresentationMatrix projection_presentation(const DoubleSpaceComponent& comp);

/// Source multiple point spaces D²_k(f): for each source point (branch) i,
/// the ideal F_{k-1} of the block presentation of the projection of all
/// components over branch i, in the source ring of branch i. Components with
/// unit ideal are skipped.
std::vector<Ideal> source_multipoint(const MultiGerm& f, int k);

/// True iff for every branch i the source space ideal D²_k equals the
/// pullback of M_{k+1}(f) under f^(i), as ideals in the local source ring.
bool preimage_compare(const MultiGerm& f, int k);

/// Human-readable report: ambient variables, ideal generators, kind, and the
/// projection presentation matrix.
std::string component_report(const DoubleSpaceComponent& comp);

}  // namespace germ
