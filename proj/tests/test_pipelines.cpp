#include <catch2/catch_amalgamated.hpp>

#include "homshift/pipelines.hpp"
#include "homshift/resolution.hpp"

using namespace homshift;

namespace {

CliqueWhiskeredGraph triangle_cwg() {
    Graph k2 = build_graph({"a", "b"}, {{"a", "b"}});
    CliquePartition pi;
    pi.cliques = {{"a", "b"}};
    return clique_whisker(k2, pi);
}

CliqueWhiskeredGraph whiskered_path3() {
    Graph p3 = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CliquePartition pi;
    pi.cliques = {{"a"}, {"b"}, {"c"}};
    return clique_whisker(p3, pi);
}

} // namespace

TEST_CASE("route policy") {
    MonomialIdeal j2 = cover_ideal(whiskered_cycle(2).graph());
    CHECK(oracle_route_allowed(j2));
    // 12 variables exceed the oracle variable gate even though 18 generators
    // sit under the generator cap
    MonomialIdeal j3 = cover_ideal(whiskered_cycle(3).graph());
    CHECK(j3.generators().size() == 18);
    CHECK_FALSE(oracle_route_allowed(j3));
}

TEST_CASE("betti splitting identity on the triangle") {
    CliqueWhiskeredGraph tri = triangle_cwg();
    MonomialIdeal J = cover_ideal(tri.graph());
    BettiTable t = betti_table(J);
    int pd = projective_dimension(t);
    for (int k = 1; k <= pd; ++k) {
        MonomialIdeal split = betti_splitting_hs(tri, "a", k);
        CHECK(split == hs_from_betti(t, k));
    }
}

TEST_CASE("betti splitting identity on the whiskered 4-cycle") {
    CliqueWhiskeredGraph g2 = whiskered_cycle(2);
    MonomialIdeal J = cover_ideal(g2.graph());
    auto r = J.ring();
    auto idx = [&](const std::string& v) { return r->index_of(v); };
    Monomial allx = Monomial::from_support(
        r, {idx("x1"), idx("x2"), idx("x3"), idx("x4")});
    MonomialIdeal closed = minimalize(
        r, {allx * Monomial::from_support(r, {idx("y1"), idx("y3")}),
            allx * Monomial::from_support(r, {idx("y2"), idx("y4")})});
    CHECK(betti_splitting_hs(g2, "x1", 2) == closed);
    // beyond the projective dimension both sides vanish
    CHECK(betti_splitting_hs(g2, "x1", 3).is_zero());
    // the linear quotient route gives the same sum
    CHECK(betti_splitting_hs(g2, "x1", 2, Caps{}, HsRoute::linquot) == closed);
}

TEST_CASE("betti splitting rejects apexes and k = 0") {
    CliqueWhiskeredGraph g2 = whiskered_cycle(2);
    CHECK_THROWS_AS(betti_splitting_hs(g2, "y1", 1), std::invalid_argument);
    CHECK_THROWS_AS(betti_splitting_hs(g2, "x1", 0), std::invalid_argument);
}

TEST_CASE("counterexample reports") {
    TheoremReport r2 = verify_counterexample(2);
    CHECK(r2.all_pass());
    CHECK(r2.checks.size() == 6);

    TheoremReport r3 = verify_counterexample(3);
    CHECK(r3.all_pass());

    TheoremReport r4 = verify_counterexample(4);
    CHECK(r4.all_pass());

    CHECK_THROWS_AS(verify_counterexample(1), std::invalid_argument);
}

TEST_CASE("theorem suite passes on the three named modes") {
    CHECK(theorem_suite(whiskered_path3(), SuiteMode::chordal).all_pass());

    Graph h = build_graph({"w11", "w21"}, {{"w11", "w21"}});
    CHECK(theorem_suite(cm_cameron_walker(h, 1), SuiteMode::cameron_walker).all_pass());

    Graph k2 = build_graph({"a", "b"}, {{"a", "b"}});
    CHECK(theorem_suite(clique_corona(k2, {2, 2}), SuiteMode::clique_corona).all_pass());

    CHECK(theorem_suite(whiskered_cycle(2), SuiteMode::generic).all_pass());
}

TEST_CASE("theorem suite rejects shape violations") {
    Graph k2 = build_graph({"a", "b"}, {{"a", "b"}});
    // corona with a t_i = 1 block is rejected outright
    CHECK_THROWS_AS(theorem_suite(clique_corona(k2, {1, 2}), SuiteMode::clique_corona),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem_suite(whiskered_cycle(2), SuiteMode::clique_corona),
                    std::invalid_argument);
    // the whiskered cycle base is not chordal
    CHECK_THROWS_AS(theorem_suite(whiskered_cycle(2), SuiteMode::chordal),
                    std::invalid_argument);
    // a plain whiskered path is not a Cameron-Walker shape (no triangle block)
    CHECK_THROWS_AS(theorem_suite(whiskered_path3(), SuiteMode::cameron_walker),
                    std::invalid_argument);
}

TEST_CASE("corpus generation is deterministic and capped") {
    auto a = generate_corpus(99, 8);
    auto b = generate_corpus(99, 8);
    REQUIRE(a.size() == 8);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].graph.graph() == b[i].graph.graph());
        CHECK(a[i].graph.base().vertex_count() <= 5);
        CHECK(oracle_route_allowed(cover_ideal(a[i].graph.graph())));
    }
    auto c = generate_corpus(100, 3);
    CHECK(c.size() == 3);
}

TEST_CASE("generic suite passes across a small corpus") {
    for (const auto& entry : generate_corpus(2024, 6)) {
        TheoremReport r = theorem_suite(entry.graph, SuiteMode::generic);
        INFO(entry.name);
        CHECK(r.all_pass());
    }
}
