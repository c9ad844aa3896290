#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "homshift/monomial.hpp"

using namespace homshift;

namespace {

RingPtr ring4() { return make_ring({"x1", "x2", "x3", "x4"}); }

Monomial mono(const RingPtr& r, std::vector<std::pair<int, long long>> t) {
    std::vector<Monomial::Term> terms;
    for (auto& [v, e] : t) terms.emplace_back(v, Int(e));
    return Monomial::from_terms(r, std::move(terms));
}

Monomial sqfree(const RingPtr& r, std::vector<int> support) {
    return Monomial::from_support(r, std::move(support));
}

// Seeded random monomial with small support and exponents.
Monomial random_monomial(const RingPtr& r, std::mt19937_64& rng, bool squarefree) {
    std::vector<Monomial::Term> terms;
    for (int v = 0; v < r->size(); ++v) {
        if (rng() % 2) continue;
        long long e = squarefree ? 1 : 1 + static_cast<long long>(rng() % 3);
        terms.emplace_back(v, Int(e));
    }
    return Monomial::from_terms(r, std::move(terms));
}

} // namespace

TEST_CASE("ring construction rejects duplicates") {
    CHECK_THROWS_AS(make_ring({"x", "x"}), std::invalid_argument);
    CHECK(ring4()->index_of("x3") == 2);
    CHECK_THROWS_AS(ring4()->index_of("zz"), std::invalid_argument);
}

TEST_CASE("lcm basics") {
    auto r = ring4();
    CHECK(lcm(sqfree(r, {0, 2}), sqfree(r, {1, 3})) == sqfree(r, {0, 1, 2, 3}));
    Monomial u = sqfree(r, {0, 2});
    CHECK(lcm(u, u) == u);
    CHECK(lcm(mono(r, {{0, 2}, {1, 1}}), mono(r, {{0, 1}, {1, 3}})) ==
          mono(r, {{0, 2}, {1, 3}}));
}

TEST_CASE("divides basics") {
    auto r = ring4();
    CHECK(divides(Monomial::one(r), sqfree(r, {1})));
    CHECK_FALSE(divides(sqfree(r, {0}), sqfree(r, {1})));
    CHECK(divides(sqfree(r, {0, 1}), sqfree(r, {0, 1, 2})));
    CHECK_FALSE(divides(mono(r, {{0, 2}}), mono(r, {{0, 1}})));
}

TEST_CASE("squarefree divisibility is support inclusion") {
    auto r = make_ring({"a", "b", "c", "d", "e"});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial u = random_monomial(r, rng, true);
        Monomial v = random_monomial(r, rng, true);
        auto su = u.support(), sv = v.support();
        bool incl = std::includes(sv.begin(), sv.end(), su.begin(), su.end());
        CHECK(divides(u, v) == incl);
    }
}

TEST_CASE("universe mismatch is an error") {
    auto r = ring4();
    auto s = make_ring({"y1", "y2"});
    CHECK_THROWS_AS(lcm(sqfree(r, {0}), sqfree(s, {0})), std::invalid_argument);
    CHECK_THROWS_AS(divides(sqfree(r, {0}), sqfree(s, {0})), std::invalid_argument);
    // Same content, different pointer: fine.
    auto r2 = make_ring({"x1", "x2", "x3", "x4"});
    CHECK(divides(sqfree(r, {0}), sqfree(r2, {0, 1})));
}

TEST_CASE("exponents may exceed machine precision") {
    auto r = ring4();
    Int big = Int(1) << 100;
    Monomial u = Monomial::from_terms(r, {{0, big}});
    Monomial v = Monomial::from_terms(r, {{0, big + 1}});
    CHECK(divides(u, v));
    CHECK_FALSE(divides(v, u));
    CHECK(lcm(u, v) == v);
    CHECK(exact_quotient(v, u) == Monomial::variable(r, 0));
    CHECK(u.degree() == big);
}

TEST_CASE("minimalize drops strict multiples, keeps incomparable sets") {
    auto r = ring4();
    MonomialIdeal I = minimalize(r, {sqfree(r, {0}), sqfree(r, {0, 1})});
    REQUIRE(I.generators().size() == 1);
    CHECK(I.generators()[0] == sqfree(r, {0}));

    MonomialIdeal J = minimalize(r, {sqfree(r, {0, 2}), sqfree(r, {1, 3})});
    CHECK(J.generators().size() == 2);

    MonomialIdeal Z = minimalize(r, {});
    CHECK(Z.is_zero());
}

TEST_CASE("minimalize is idempotent and order-independent") {
    auto r = make_ring({"a", "b", "c", "d"});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Monomial> gens;
        int count = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i) gens.push_back(random_monomial(r, rng, false));
        MonomialIdeal I = minimalize(r, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        MonomialIdeal J = minimalize(r, gens);
        CHECK(I == J);
        CHECK(minimalize(r, I.generators()) == I);
    }
}

TEST_CASE("colon by a monomial") {
    auto r = ring4();
    MonomialIdeal I13 = minimalize(r, {sqfree(r, {0, 2})});
    CHECK(colon_by_monomial(I13, sqfree(r, {1, 3})) == I13);

    MonomialIdeal I12 = minimalize(r, {sqfree(r, {0, 1})});
    CHECK(colon_by_monomial(I12, sqfree(r, {1, 2})) == minimalize(r, {sqfree(r, {0})}));

    MonomialIdeal I = minimalize(r, {sqfree(r, {0, 2}), sqfree(r, {1, 3})});
    CHECK(colon_by_monomial(I, sqfree(r, {0, 1})) ==
          minimalize(r, {sqfree(r, {2}), sqfree(r, {3})}));
}

TEST_CASE("colon generators never exceed the max generator degree") {
    auto r = make_ring({"a", "b", "c", "d", "e"});
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Monomial> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(random_monomial(r, rng, false));
        MonomialIdeal I = minimalize(r, gens);
        if (I.is_zero()) continue;
        Int maxdeg = 0;
        for (const auto& g : I.generators()) maxdeg = std::max(maxdeg, g.degree());
        Monomial m = random_monomial(r, rng, false);
        for (const auto& q : colon_by_monomial(I, m).generators())
            CHECK(q.degree() <= maxdeg);
    }
}

TEST_CASE("scale and sum") {
    auto g2 = make_ring({"x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"});
    // indices: x1=0 y1=1 x2=2 y2=3 x3=4 y3=5 x4=6 y4=7
    MonomialIdeal ys = minimalize(g2, {sqfree(g2, {1, 5}), sqfree(g2, {3, 7})});
    MonomialIdeal shifted = scale(ys, sqfree(g2, {0, 2, 4, 6}));
    REQUIRE(shifted.generators().size() == 2);
    CHECK(shifted.generators()[0] == sqfree(g2, {0, 1, 2, 4, 5, 6}));
    CHECK(shifted.generators()[1] == sqfree(g2, {0, 2, 3, 4, 6, 7}));

    auto r = ring4();
    MonomialIdeal I = minimalize(r, {sqfree(r, {0, 2})});
    CHECK(sum(I, MonomialIdeal::zero(r)) == I);
    CHECK(equals(minimalize(r, {sqfree(r, {0}), sqfree(r, {0, 1})}),
                 minimalize(r, {sqfree(r, {0})})));
}

TEST_CASE("scale distributes over sum") {
    auto r = make_ring({"a", "b", "c", "d"});
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Monomial> gi, gj;
        for (int i = 0; i < 3; ++i) {
            gi.push_back(random_monomial(r, rng, false));
            gj.push_back(random_monomial(r, rng, false));
        }
        MonomialIdeal I = minimalize(r, gi), J = minimalize(r, gj);
        Monomial m = random_monomial(r, rng, false);
        CHECK(scale(sum(I, J), m) == sum(scale(I, m), scale(J, m)));
    }
}

TEST_CASE("lex comparison under the ring order") {
    auto r = ring4();
    CHECK(lex_compare(sqfree(r, {0, 2}), sqfree(r, {1, 3})) > 0);
    Monomial u = sqfree(r, {0, 2});
    CHECK(lex_compare(u, u) == 0);
    CHECK(lex_compare(sqfree(r, {0, 1}), sqfree(r, {0, 2})) > 0);
    // Custom order reversing the variables flips the first example.
    std::vector<int> rev = {3, 2, 1, 0};
    CHECK(lex_compare(sqfree(r, {0, 2}), sqfree(r, {1, 3}), rev) < 0);
}

TEST_CASE("ideal invariants: zero, unit, generator order") {
    auto r = ring4();
    MonomialIdeal Z = MonomialIdeal::zero(r);
    CHECK(Z.is_zero());
    CHECK(Z.generators().empty());
    MonomialIdeal U = MonomialIdeal::unit(r);
    CHECK(U.is_unit());
    CHECK(U.generators().size() == 1);
    // Generators are stored lex-descending.
    MonomialIdeal I = minimalize(r, {sqfree(r, {1, 3}), sqfree(r, {0, 2})});
    CHECK(lex_compare(I.generators()[0], I.generators()[1]) > 0);
    // Anything containing 1 collapses to the unit ideal.
    MonomialIdeal V = minimalize(r, {Monomial::one(r), sqfree(r, {0})});
    CHECK(V.is_unit());
}

TEST_CASE("equigeneration") {
    auto r = ring4();
    CHECK(minimalize(r, {sqfree(r, {0, 2}), sqfree(r, {1, 3})}).is_equigenerated());
    CHECK_FALSE(minimalize(r, {sqfree(r, {0}), sqfree(r, {1, 3})}).is_equigenerated());
    CHECK_FALSE(MonomialIdeal::zero(r).is_equigenerated());
    CHECK(minimalize(r, {sqfree(r, {0, 2}), sqfree(r, {1, 3})}).generation_degree() == 2);
}
