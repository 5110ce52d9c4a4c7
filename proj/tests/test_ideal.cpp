#include "doctest.h"
#include "test_util.hpp"

using namespace germ;
using namespace germ::test;

TEST_CASE("sum and product") {
    auto r = ring("R", {"x", "y"});
    auto I = ideal(r, {"x"}), J = ideal(r, {"y"});
    CHECK(equals(sum(I, J), ideal(r, {"x", "y"}), Mode::Global));
    CHECK(equals(product(I, J), ideal(r, {"x*y"}), Mode::Global));
    auto other = ring("S", {"a"});
    CHECK_THROWS_AS(sum(I, ideal(other, {"a"})), error);
}

TEST_CASE("intersection via auxiliary variable") {
    auto r = ring("R", {"x", "y"});
    CHECK(equals(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"}), Mode::Global));
    CHECK(equals(intersect(ideal(r, {"x"}), ideal(r, {"x"})), ideal(r, {"x"}), Mode::Global));
    CHECK(intersect(ideal(r, {"x"}), Ideal::zero(r)).has_no_generators());
}

TEST_CASE("elimination") {
    auto r = ring("R", {"t", "x", "y"});
    auto I = ideal(r, {"t - x", "t - y"});
    CHECK(equals(eliminate(I, {0}), ideal(r, {"x - y"}), Mode::Global));
    CHECK(equals(eliminate(I, {}), I, Mode::Global));
    auto J = ideal(ring("S", {"y"}), {"y"});
    CHECK(eliminate(J, {0}).has_no_generators());
}

TEST_CASE("project lands in the subring") {
    auto r = ring("R", {"t", "x", "y"});
    auto I = ideal(r, {"t - x^2", "y - t*x"});
    auto J = project(I, {1, 2});
    CHECK(J.ring()->arity() == 2);
    CHECK(equals(J, Ideal(J.ring(), {parse_poly("y - x^3", J.ring())}), Mode::Global));
}

TEST_CASE("equality and membership") {
    auto r = ring("R", {"x", "y", "z"});
    CHECK(equals(ideal(r, {"x", "y"}), ideal(r, {"x + y", "x - y"}), Mode::Global));
    CHECK_FALSE(equals(ideal(r, {"x^2"}), ideal(r, {"x"}), Mode::Global));
    CHECK(contains(ideal(r, {"x*y", "x*z", "y*z"}), P(r, "x*y*z"), Mode::Global));
    // local equality sees units that global equality does not
    CHECK(equals(ideal(r, {"x + x^2"}), ideal(r, {"x"}), Mode::Local));
    CHECK_FALSE(equals(ideal(r, {"x + x^2"}), ideal(r, {"x"}), Mode::Global));
}

TEST_CASE("radical membership") {
    auto r = ring("R", {"x", "y"});
    CHECK(radical_membership(ideal(r, {"x^2"}), P(r, "x")));
    CHECK_FALSE(radical_membership(ideal(r, {"x*y"}), P(r, "x")));
    // triple-lines ideal: every generator of <X,Y> vanishes on it
    auto r2 = ring("T", {"X", "Y"});
    auto F1 = ideal(r2, {"X*(X - Y)", "Y*(X - Y)", "X*Y"});
    CHECK(radical_membership(F1, P(r2, "X")));
    CHECK(radical_membership(F1, P(r2, "Y")));
    CHECK_FALSE(contains(F1, P(r2, "X"), Mode::Global));
}

TEST_CASE("dimension") {
    auto r = ring("R", {"X", "Y", "Z", "T"});
    CHECK(dimension(ideal(r, {"X", "Y", "Z", "T"}), Mode::Local) == 0);
    CHECK(dimension(Ideal::zero(ring("S", {"a", "b", "c"})), Mode::Global) == 3);
    CHECK(dimension(Ideal::unit(r), Mode::Global) == -1);
    // germ ideal with a unit generator is the unit ideal at the origin
    CHECK(dimension(ideal(r, {"X + 1"}), Mode::Local) == -1);
    auto r2 = ring("R2", {"x", "y", "z"});
    CHECK(dimension(ideal(r2, {"x*y", "x*z", "y*z"}), Mode::Local) == 1);
}

TEST_CASE("colength") {
    auto r = ring("R", {"x", "y"});
    CHECK(colength(ideal(r, {"x^2", "y^3"}), Mode::Local) == 6);
    CHECK_FALSE(colength(ideal(r, {"x"}), Mode::Local).has_value());
    CHECK(colength(Ideal::unit(r), Mode::Local) == 0);
    // local colength differs from global: x + x^2 is a local coordinate
    CHECK(colength(ideal(r, {"x + x^2", "y"}), Mode::Local) == 1);
}

TEST_CASE("pullback") {
    auto src = ring("src", {"t", "x", "y"});
    auto tgt = ring("tgt", {"T", "X", "Y", "Z"});
    std::vector<Polynomial> f1 = {P(src, "t"), P(src, "x"), P(src, "y^3 + t*y"),
                                  P(src, "x*y + y^5")};
    auto I = ideal(tgt, {"Y"});
    CHECK(equals(pullback(I, f1), ideal(src, {"y^3 + t*y"}), Mode::Global));
    CHECK(pullback(Ideal::zero(tgt), f1).has_no_generators());
    CHECK(equals(pullback(Ideal::unit(tgt), f1), Ideal::unit(src), Mode::Global));
}

TEST_CASE("lattice containments on random monomial ideals") {
    auto r = ring("R", {"x", "y", "z"});
    std::mt19937 rng(99);
    auto random_monomial_ideal = [&]() {
        std::vector<Polynomial> gens;
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < n; ++i) {
            Monomial m(3);
            for (int d = 0, budget = std::uniform_int_distribution<int>(1, 4)(rng); d < budget; ++d)
                m[std::uniform_int_distribution<std::size_t>(0, 2)(rng)] += 1;
            gens.push_back(Polynomial::term(r, m, 1));
        }
        return Ideal(r, std::move(gens));
    };
    for (int i = 0; i < 25; ++i) {
        auto I = random_monomial_ideal(), J = random_monomial_ideal();
        auto meet = intersect(I, J);
        CHECK(is_subideal(meet, I, Mode::Global));
        CHECK(is_subideal(meet, J, Mode::Global));
        CHECK(is_subideal(I, sum(I, J), Mode::Global));
        CHECK(is_subideal(product(I, J), meet, Mode::Global));
        // monomial-ideal oracle: intersection is generated by pairwise lcms
        std::vector<Polynomial> lcms;
        for (const auto& a : I.generators())
            for (const auto& b : J.generators())
                lcms.push_back(Polynomial::term(
                    r, Monomial::lcm(a.lead_monomial(MonomialOrder::degrevlex()),
                                     b.lead_monomial(MonomialOrder::degrevlex())),
                    1));
        CHECK(equals(meet, Ideal(r, lcms), Mode::Global));
    }
}

TEST_CASE("coprime principal ideals: intersection equals product") {
    auto r = ring("R", {"x", "y"});
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"x", "y"}, {"x + y", "x - y"}, {"x^2 + y", "y^2"}}) {
        auto I = ideal(r, {a}), J = ideal(r, {b});
        CHECK(equals(intersect(I, J), product(I, J), Mode::Global));
    }
}

TEST_CASE("equal ideals share dimension and colength") {
    auto r = ring("R", {"x", "y"});
    auto I = ideal(r, {"x^2", "y"});
    auto J = ideal(r, {"x^2 + y", "y", "x^2*y"});
    REQUIRE(equals(I, J, Mode::Local));
    CHECK(dimension(I, Mode::Local) == dimension(J, Mode::Local));
    CHECK(colength(I, Mode::Local) == colength(J, Mode::Local));
}

TEST_CASE("monomial ideal dimension and colength match direct enumeration") {
    auto r = ring("R", {"x", "y", "z"});
    // <x^2, y^3, z> : standard monomials x^a y^b, a<2, b<3
    CHECK(colength(ideal(r, {"x^2", "y^3", "z"}), Mode::Global) == 6);
    CHECK(dimension(ideal(r, {"x^2", "y^3", "z"}), Mode::Global) == 0);
    CHECK(dimension(ideal(r, {"x*y"}), Mode::Global) == 2);
    CHECK(dimension(ideal(r, {"x"}), Mode::Global) == 2);
    CHECK(dimension(ideal(r, {"x*y", "y*z"}), Mode::Global) == 2);
}
