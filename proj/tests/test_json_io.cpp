#include <catch2/catch_amalgamated.hpp>

#include "homshift/json_io.hpp"

using namespace homshift;
using nlohmann::json;

TEST_CASE("monomial printing") {
    auto r = make_ring({"x1", "x2", "x3"});
    CHECK(monomial_to_string(Monomial::one(r)) == "1");
    CHECK(monomial_to_string(Monomial::from_support(r, {0, 2})) == "x1x3");
    CHECK(monomial_to_string(Monomial::from_terms(r, {{0, 2}, {2, 1}})) == "x1^2x3");
}

TEST_CASE("monomial parsing accepts shorthand and caret powers") {
    auto r = make_ring({"x1", "x2", "x3"});
    CHECK(monomial_from_string(r, "x1x3") == Monomial::from_support(r, {0, 2}));
    CHECK(monomial_from_string(r, "x1^2x3") ==
          Monomial::from_terms(r, {{0, 2}, {2, 1}}));
    CHECK(monomial_from_string(r, "1") == Monomial::one(r));
    CHECK_THROWS_AS(monomial_from_string(r, "zz"), std::invalid_argument);
    CHECK_THROWS_AS(monomial_from_string(r, "x1^"), std::invalid_argument);

    // longest-match tokenization: "y1" vs "y12"
    auto tricky = make_ring({"y1", "y12"});
    CHECK(monomial_from_string(tricky, "y12") == Monomial::variable(tricky, 1));
    CHECK(monomial_from_string(tricky, "y12y1") ==
          Monomial::from_support(tricky, {0, 1}));
}

TEST_CASE("graph json round trip") {
    Graph g = build_graph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}});
    json j = graph_to_json(g);
    Graph back = graph_from_json(j);
    CHECK(back == g);
    CHECK(json(graph_to_json(back)) == j);
    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}),
                    std::invalid_argument);
}

TEST_CASE("partition json round trip") {
    CliquePartition p;
    p.cliques = {{"x1", "x2"}, {"x3"}};
    CHECK(partition_from_json(partition_to_json(p)).cliques == p.cliques);
}

TEST_CASE("clique-whiskered json round trip") {
    CliqueWhiskeredGraph g2 = whiskered_cycle(2);
    json j = cwg_to_json(g2);
    CHECK(j.at("roles").at("x1") == json::array({"w", 1, 1}));
    CHECK(j.at("roles").at("y1") == json::array({"v", 1}));
    CliqueWhiskeredGraph back = cwg_from_json(j);
    CHECK(back.graph() == g2.graph());
    CHECK(back.blocks() == g2.blocks());
    CHECK(back.apexes() == g2.apexes());
    CHECK(json(cwg_to_json(back)) == j);
}

TEST_CASE("clique-whiskered json validation") {
    json j = cwg_to_json(whiskered_cycle(2));
    json missing = j;
    missing.erase("roles");
    CHECK_THROWS_AS(cwg_from_json(missing), std::invalid_argument);

    json bad_role = j;
    bad_role["roles"]["x1"] = json::array({"q", 1});
    CHECK_THROWS_AS(cwg_from_json(bad_role), std::invalid_argument);

    // an apex tagged as a base vertex breaks the whisker structure
    json swapped = j;
    swapped["roles"]["y1"] = json::array({"w", 1, 2});
    CHECK_THROWS_AS(cwg_from_json(swapped), std::invalid_argument);
}

TEST_CASE("ideal json round trip with both generator spellings") {
    auto r = make_ring({"x1", "x2", "x3", "x4"});
    MonomialIdeal I = minimalize(r, {Monomial::from_support(r, {0, 2}),
                                     Monomial::from_support(r, {1, 3})});
    json j = ideal_to_json(I);
    CHECK(ideal_from_json(j) == I);

    json shorthand = {{"variables", {"x1", "x2", "x3", "x4"}},
                      {"generators", {"x1x3", "x2x4"}}};
    CHECK(ideal_from_json(shorthand) == I);

    json objects = {{"variables", {"x1", "x2", "x3", "x4"}},
                    {"generators",
                     {json{{"x1", 1}, {"x3", 1}}, json{{"x2", 1}, {"x4", 1}}}}};
    CHECK(ideal_from_json(objects) == I);

    CHECK(ideal_from_json(json{{"variables", {"a"}}, {"generators", json::array()}})
              .is_zero());
}

TEST_CASE("betti table json and csv") {
    auto r = make_ring({"x1", "x2", "x3", "x4"});
    MonomialIdeal I = minimalize(r, {Monomial::from_support(r, {0, 2}),
                                     Monomial::from_support(r, {1, 3})});
    BettiTable t = betti_table(I);
    json j = betti_to_json(t);
    CHECK(j.at("pd") == 1);
    CHECK(j.at("reg") == 3);
    CHECK(j.at("entries").size() == 3);

    std::string csv = betti_to_csv(t);
    CHECK(csv.find("k,|a|,a,beta") == 0);
    CHECK(csv.find("1,4,x1x2x3x4,1") != std::string::npos);
}

TEST_CASE("lattice dot export") {
    auto r = make_ring({"x1", "x2", "x3", "x4"});
    MonomialIdeal I = minimalize(r, {Monomial::from_support(r, {0, 2}),
                                     Monomial::from_support(r, {1, 3})});
    std::string dot = lattice_to_dot(lcm_lattice(I));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"x1x3\" -> \"x1x2x3x4\"") != std::string::npos);
    CHECK(dot.find("\"x2x4\" -> \"x1x2x3x4\"") != std::string::npos);
}

TEST_CASE("order and failure json") {
    MonomialIdeal J = cover_ideal(whiskered_cycle(2).graph());
    auto order = std::get<LinearQuotientOrder>(verify_order(J, lex_order(J)));
    json j = order_to_json(order);
    REQUIRE(j.at("sequence").size() == 7);
    CHECK(j.at("sequence")[0] == "x1x2x3x4");
    CHECK(j.at("sets")[0] == json::array());

    auto r = make_ring({"x1", "x2", "x3", "x4"});
    MonomialIdeal I = minimalize(r, {Monomial::from_support(r, {0, 2}),
                                     Monomial::from_support(r, {1, 3})});
    auto res = verify_order(I, lex_order(I));
    REQUIRE_FALSE(verified(res));
    json f = failure_to_json(std::get<OrderFailure>(res));
    CHECK(f.at("position") == 2);
    CHECK(f.at("witness") == "x1x3");
}

TEST_CASE("wrong-shaped json is rejected with exceptions") {
    CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"generators": ["x"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ideal_from_json(json::parse(R"({"variables": ["x"], "generators": [3]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        ideal_from_json(json::parse(R"({"variables": ["x"], "generators": [{"y": 1}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [["a"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::parse(R"({})")), std::invalid_argument);
    // roles mentioning an unknown vertex
    json j = cwg_to_json(whiskered_cycle(2));
    j["roles"]["ghost"] = json::array({"v", 9});
    CHECK_THROWS_AS(cwg_from_json(j), std::invalid_argument);
}

TEST_CASE("covers and report json") {
    Graph c4 = build_graph({"x1", "x2", "x3", "x4"},
                           {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x4", "x1"}});
    json j = covers_to_json(minimal_vertex_covers(c4), cover_ideal(c4));
    CHECK(j.at("covers") == json::array({{"x1", "x3"}, {"x2", "x4"}}));
    CHECK(j.at("ideal").at("variables").size() == 4);

    TheoremReport r = verify_counterexample(2);
    json rep = report_to_json(r);
    CHECK(rep.at("all_pass") == true);
    CHECK(rep.at("checks").size() == 6);
}
