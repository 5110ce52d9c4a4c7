#include "doctest.h"
#include "test_util.hpp"

#include "germ/source.hpp"

using namespace germ;
using namespace germ::test;

namespace {

// (t,x,y) -> (t,x,y^3+ty,xy+y^5) together with the embedded plane
// (t,x,yt) -> (t,x,yt,t); the branch-2 coordinate yt plays the role of a
// tilde-decorated y
MultiGerm bigerm_c4() {
    auto tgt = ring("tgt", {"T", "X", "Y", "Z"});
    auto s1 = ring("s1", {"t", "x", "y"});
    auto s2 = ring("s2", {"t", "x", "yt"});
    MultiGerm g;
    g.target = tgt;
    g.branches.push_back(
        {"f1", s1, {P(s1, "t"), P(s1, "x"), P(s1, "y^3 + t*y"), P(s1, "x*y + y^5")}});
    g.branches.push_back({"f2", s2, {P(s2, "t"), P(s2, "x"), P(s2, "yt"), P(s2, "t")}});
    return g;
}

const DoubleSpaceComponent& component(const std::vector<DoubleSpaceComponent>& comps,
                                      std::size_t i, std::size_t j) {
    for (const auto& c : comps)
        if (c.i == i && c.j == j) return c;
    throw error("component not found");
}

}  // namespace

TEST_CASE("alpha matrix of an embedded line is the constant column (1,0)") {
    auto s = ring("line", {"x"});
    BranchGerm b{"l", s, {P(s, "x"), P(s, "0")}};
    auto a = alpha_matrix(b);
    REQUIRE(a.row_count() == 2);
    REQUIRE(a.col_count() == 1);
    CHECK(a.at(0, 0) == P(a.ring(), "1"));
    CHECK(a.at(1, 0).is_zero());
}

TEST_CASE("alpha matrix satisfies alpha * (x' - x) = f(x') - f(x)") {
    // the constructor checks the identity; random branches must pass it
    std::mt19937 rng(7);
    auto s = ring("rnd", {"a", "b"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> comps;
        for (int c = 0; c < 3; ++c) {
            auto p = random_poly(rng, s, 4, 5);
            comps.push_back(p - Polynomial::constant(s, p.constant_term()));
        }
        BranchGerm b{"r", s, comps};
        CHECK_NOTHROW(alpha_matrix(b));
    }
}

TEST_CASE("divided differences cut out the diagonal double space of the first branch") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    REQUIRE(comps.size() == 4);
    const auto& x1 = component(comps, 0, 0);
    CHECK(x1.kind == DoubleSpaceComponent::Kind::Diagonal);
    REQUIRE(x1.ambient->arity() == 4);
    CHECK(x1.ambient->variable(3) == "y'");
    auto r = x1.ambient;
    CHECK(equals(x1.ideal,
                 Ideal(r, {P(r, "y'^2 + y'*y + y^2 + t"),
                           P(r, "x + y'^4 + y'^3*y + y'^2*y^2 + y'*y^3 + y^4")}),
                 Mode::Global));
}

TEST_CASE("the diagonal ideal is symmetric under swapping the two fiber points") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    const auto& x1 = component(comps, 0, 0);
    auto r = x1.ambient;
    std::vector<Polynomial> swap = {P(r, "t"), P(r, "x"), P(r, "y'"), P(r, "y")};
    std::vector<Polynomial> gens;
    for (const auto& p : x1.ideal.generators()) gens.push_back(p.substitute(swap));
    CHECK(equals(x1.ideal, Ideal(r, gens), Mode::Global));
}

TEST_CASE("off-diagonal component before simplification: fibered product equations") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    const auto& x2 = component(comps, 0, 1);
    CHECK(x2.kind == DoubleSpaceComponent::Kind::OffDiagonal);
    auto r = x2.ambient;
    REQUIRE(r->arity() == 6);
    CHECK(equals(x2.ideal,
                 Ideal(r, {P(r, "t - t'"), P(r, "x - x'"), P(r, "y^3 + t*y - yt'"),
                           P(r, "x*y + y^5 - t'")}),
                 Mode::Global));
}

TEST_CASE("projection of the off-diagonal component is the 1 x 1 image equation") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    const auto& x2 = component(comps, 0, 1);
    auto xi2 = projection_presentation(x2);
    REQUIRE(xi2.row_count() == 1);
    REQUIRE(xi2.col_count() == 1);
    auto s1 = g.branches[0].source;
    CHECK(xi2.at(0, 0).normalized() == P(s1, "y^5 + x*y - t").normalized());
}

TEST_CASE("projection of the diagonal component: 2 x 2 presentation") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    const auto& x1 = component(comps, 0, 0);
    auto xi1 = projection_presentation(x1);
    REQUIRE(xi1.row_count() == 2);
    REQUIRE(xi1.col_count() == 2);
    auto s1 = g.branches[0].source;
    CHECK(xi1.at(0, 0) == P(s1, "y^4 + y^2*t + t^2 + x"));
    CHECK(xi1.at(1, 0) == P(s1, "y^3 + y*t"));

    PresentationMatrix known(s1, 2);
    known.at(0, 0) = P(s1, "y^4 + y^2*t + t^2 + x");
    known.at(0, 1) = P(s1, "y^5 + 2*y^3*t + y*t^2");
    known.at(1, 0) = P(s1, "y^3 + y*t");
    known.at(1, 1) = P(s1, "-t^2 - x");
    for (int k = 0; k <= 1; ++k)
        CHECK(equals(fitting_ideal(xi1, k), fitting_ideal(known, k), Mode::Local));
    CHECK(equals(fitting_ideal(xi1, 1),
                 intersect(ideal(s1, {"y", "x + t^2"}), ideal(s1, {"x + t^2", "t + y^2"})),
                 Mode::Local));
}

TEST_CASE("determinant of the projection presentation vanishes on the component") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 1}, {1, 0}}) {
        const auto& c = component(comps, i, j);
        auto xi = projection_presentation(c);
        auto d = minors(xi, xi.row_count()).at(0);
        std::vector<int> up(c.base->arity());
        for (std::size_t v = 0; v < up.size(); ++v) up[v] = static_cast<int>(c.base_vars[v]);
        CHECK(radical_membership(c.ideal, d.map_ring(c.ambient, up)));
    }
}

TEST_CASE("mirror component matches the published 5 x 5 presentation") {
    // modulus of maximal fiber degree instead of the minimal one; Fitting
    // ideals do not depend on the choice
    auto r = ring("x3amb", {"t", "x", "yt", "y'"});
    auto big = mult_matrix_presentation(P(r, "x*y' + y'^5 - t"), P(r, "y'^3 + t*y' - yt"), 3);
    REQUIRE(big.row_count() == 5);
    const char* expected[5][5] = {
        {"-yt", "0", "t", "0", "t^2"},
        {"t", "-yt", "-x", "t", "-x*t"},
        {"0", "t", "-yt", "-x", "t"},
        {"1", "0", "t", "-yt", "-x"},
        {"0", "1", "0", "t", "-yt"},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(big.at(i, j) == P(r, expected[i][j]));

    auto g = bigerm_c4();
    auto comps = double_space(g);
    const auto& x3 = component(comps, 1, 0);
    auto xi3 = projection_presentation(x3);
    REQUIRE(xi3.row_count() == 3);
    auto s2 = g.branches[1].source;
    auto big_base = big.map_ring(s2, {0, 1, 2, -1});
    for (int k = 0; k <= 2; ++k)
        CHECK(equals(fitting_ideal(xi3, k), fitting_ideal(big_base, k), Mode::Local));
}

TEST_CASE("source triple point space over each source point") {
    auto g = bigerm_c4();
    auto sm = source_multipoint(g, 2);
    auto s1 = g.branches[0].source;
    auto s2 = g.branches[1].source;
    REQUIRE(sm.size() == 2);

    auto f1_1 = intersect(ideal(s1, {"y", "x + t^2"}), ideal(s1, {"x + t^2", "t + y^2"}));
    auto f0_sum = ideal(s1, {"t - x*y - y^5",
                             "x^2 + 2*x*t^2 + 3*y*t^2 - 2*x*y^2*t + y^3*t + t^4 + 2*y^2*t^3 "
                             "+ 4*y^4*t^2"});
    CHECK(equals(sm[0], intersect(f1_1, f0_sum), Mode::Local));

    CHECK(equals(sm[1],
                 ideal(s2, {"t^2 + 3*t^2*yt - x*yt^2 + t^2*yt^2",
                            "t*x + t^3 + t*x*yt + yt^3 + t^3*yt",
                            "x^2 + t*yt + 2*t^2*x + 2*t*yt^2 + t^4"}),
                 Mode::Local));
}

TEST_CASE("source quadruple point space over each source point") {
    auto g = bigerm_c4();
    auto sm = source_multipoint(g, 3);
    auto s1 = g.branches[0].source;
    auto s2 = g.branches[1].source;
    CHECK(equals(sm[0], ideal(s1, {"x", "t", "y^3"}), Mode::Local));
    CHECK(equals(sm[1], ideal(s2, {"x", "t", "yt"}), Mode::Local));
    CHECK(colength(sm[0], Mode::Local) == 3);
    CHECK(colength(sm[1], Mode::Local) == 1);
}

TEST_CASE("source space ideals form a chain in the multiplicity") {
    auto g = bigerm_c4();
    auto s1 = source_multipoint(g, 1);
    auto s2 = source_multipoint(g, 2);
    auto s3 = source_multipoint(g, 3);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(is_subideal(s1[i], s2[i], Mode::Local));
        CHECK(is_subideal(s2[i], s3[i], Mode::Local));
    }
}

TEST_CASE("source spaces are the preimages of the deeper target spaces") {
    auto g = bigerm_c4();
    CHECK(preimage_compare(g, 2));
    CHECK(preimage_compare(g, 3));
}

TEST_CASE("an immersive mono-germ has empty source spaces") {
    auto tgt = ring("tgt3", {"X", "Y", "Z"});
    auto s = ring("plane", {"a", "b"});
    MultiGerm g;
    g.target = tgt;
    g.branches.push_back({"p", s, {P(s, "a"), P(s, "b"), P(s, "a*b")}});
    auto comps = double_space(g);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].ideal.is_unit(Mode::Local));
    auto sm = source_multipoint(g, 2);
    CHECK(sm[0].is_unit(Mode::Local));
    CHECK(preimage_compare(g, 2));
}

TEST_CASE("component report lists the ambient, the ideal and the matrix") {
    auto g = bigerm_c4();
    auto comps = double_space(g);
    auto rep = component_report(component(comps, 0, 1));
    CHECK(rep.find("off-diagonal") != std::string::npos);
    CHECK(rep.find("yt'") != std::string::npos);
}
