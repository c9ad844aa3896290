#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "homshift/covers.hpp"
#include "homshift/graph.hpp"
#include "homshift/linear_quotients.hpp"
#include "homshift/monomial.hpp"
#include "homshift/pipelines.hpp"
#include "homshift/resolution.hpp"

namespace homshift {

using nlohmann::json;

// Monomials print with variables in ring order and caret powers; squarefree
// monomials omit the exponents entirely, e.g. "y1x2y3x4".
inline std::string monomial_to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : m.terms()) {
        s += m.ring()->variables[static_cast<std::size_t>(v)];
        if (e != 1) s += "^" + e.str();
    }
    return s;
}

// Accepts both the caret form and the squarefree shorthand. Variable names
// are matched longest-first at each position.
inline Monomial monomial_from_string(const RingPtr& ring, const std::string& text) {
    if (text == "1" || text.empty()) return Monomial::one(ring);
    std::map<int, Int> exps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int var = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ring->size(); ++i) {
            const std::string& name = ring->variables[static_cast<std::size_t>(i)];
            if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                var = i;
                best_len = name.size();
            }
        }
        if (var < 0)
            throw std::invalid_argument("cannot parse monomial '" + text +
                                        "' at position " + std::to_string(pos));
        pos += best_len;
        Int e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("missing exponent in '" + text + "'");
            e = Int(text.substr(start, pos - start));
        }
        exps[var] += e;
    }
    std::vector<Monomial::Term> terms(exps.begin(), exps.end());
    return Monomial::from_terms(ring, std::move(terms));
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges())
        edges.push_back(json::array({g.label(i), g.label(j)}));
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.contains("vertices"))
        throw std::invalid_argument("graph JSON: missing 'vertices'");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("graph JSON: edge must be a pair");
            edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        }
    return Graph::build(std::move(vertices), edges);
}

inline json partition_to_json(const CliquePartition& p) {
    return json{{"cliques", p.cliques}};
}

inline CliquePartition partition_from_json(const json& j) {
    CliquePartition p;
    if (!j.contains("cliques"))
        throw std::invalid_argument("partition JSON: missing 'cliques'");
    p.cliques = j.at("cliques").get<std::vector<std::vector<std::string>>>();
    return p;
}

inline json cwg_to_json(const CliqueWhiskeredGraph& w) {
    json out = graph_to_json(w.graph());
    json roles = json::object();
    for (const auto& v : w.graph().vertices()) {
        const VertexRole& r = w.role(v);
        roles[v] = r.apex ? json::array({"v", r.block})
                          : json::array({"w", r.block, r.pos});
    }
    out["roles"] = roles;
    return out;
}

inline CliqueWhiskeredGraph cwg_from_json(const json& j) {
    Graph g = graph_from_json(j);
    if (!j.contains("roles"))
        throw std::invalid_argument("clique-whiskered JSON: missing 'roles'");
    std::map<int, std::map<int, std::string>> blocks; // block -> pos -> label
    std::map<int, std::string> apexes;
    for (const auto& [label, role] : j.at("roles").items()) {
        if (!g.has_vertex(label))
            throw std::invalid_argument("roles mention unknown vertex '" + label + "'");
        std::string kind = role.at(0).get<std::string>();
        if (kind == "v") {
            apexes[role.at(1).get<int>()] = label;
        } else if (kind == "w") {
            blocks[role.at(1).get<int>()][role.at(2).get<int>()] = label;
        } else {
            throw std::invalid_argument("unknown role kind '" + kind + "'");
        }
    }
    if (static_cast<int>(j.at("roles").size()) != g.vertex_count())
        throw std::invalid_argument("roles must tag every vertex");
    CliquePartition pi;
    std::vector<std::string> apex_labels;
    int expected_block = 1;
    for (const auto& [bi, members] : blocks) {
        if (bi != expected_block++)
            throw std::invalid_argument("block indices must be 1..t");
        if (!apexes.count(bi))
            throw std::invalid_argument("block " + std::to_string(bi) + " has no apex");
        std::vector<std::string> clique;
        int expected_pos = 1;
        for (const auto& [pos, label] : members) {
            if (pos != expected_pos++)
                throw std::invalid_argument("positions in block " + std::to_string(bi) +
                                            " must be 1..r");
            clique.push_back(label);
        }
        pi.cliques.push_back(std::move(clique));
        apex_labels.push_back(apexes.at(bi));
    }
    if (apexes.size() != pi.cliques.size())
        throw std::invalid_argument("apex without a block");
    Graph base = induced_delete(g, {apex_labels.begin(), apex_labels.end()});
    CliqueWhiskeredGraph w = CliqueWhiskeredGraph::assemble(base, pi, apex_labels);
    if (!(w.graph() == g))
        throw std::invalid_argument("clique-whiskered JSON: graph does not match the "
                                    "whisker structure (order or edges)");
    return w;
}

inline json ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.generators()) {
        json obj = json::object();
        for (const auto& [v, e] : g.terms())
            obj[I.ring()->variables[static_cast<std::size_t>(v)]] =
                e.convert_to<long long>();
        gens.push_back(obj);
    }
    return json{{"variables", I.ring()->variables}, {"generators", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j) {
    if (!j.contains("variables"))
        throw std::invalid_argument("ideal JSON: missing 'variables'");
    RingPtr ring = make_ring(j.at("variables").get<std::vector<std::string>>());
    std::vector<Monomial> gens;
    if (j.contains("generators"))
        for (const auto& g : j.at("generators")) {
            if (g.is_string()) {
                gens.push_back(monomial_from_string(ring, g.get<std::string>()));
            } else if (g.is_object()) {
                std::vector<Monomial::Term> terms;
                for (const auto& [name, e] : g.items())
                    terms.emplace_back(ring->index_of(name), Int(e.get<long long>()));
                gens.push_back(Monomial::from_terms(ring, std::move(terms)));
            } else {
                throw std::invalid_argument("ideal JSON: generator must be string or object");
            }
        }
    return MonomialIdeal::make(ring, std::move(gens));
}

inline json betti_to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [k, row] : t.entries())
        for (const auto& [a, b] : row) {
            json deg = json::object();
            for (const auto& [v, e] : a.terms())
                deg[t.ideal().ring()->variables[static_cast<std::size_t>(v)]] =
                    e.convert_to<long long>();
            entries.push_back(json{{"k", k}, {"multidegree", deg}, {"beta", b}});
        }
    json out{{"entries", entries}};
    if (!t.empty()) {
        out["pd"] = projective_dimension(t);
        out["reg"] = regularity(t);
    }
    return out;
}

inline std::string betti_to_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "k,|a|,a,beta\n";
    for (const auto& [k, row] : t.entries())
        for (const auto& [a, b] : row)
            os << k << ',' << a.degree_ll() << ',' << monomial_to_string(a) << ',' << b
               << '\n';
    return os.str();
}

// Hasse diagram of the lcm lattice under divisibility, in DOT format.
inline std::string lattice_to_dot(const std::vector<Monomial>& lattice) {
    auto strictly_divides = [](const Monomial& a, const Monomial& b) {
        return a != b && divides(a, b);
    };
    std::ostringstream os;
    os << "digraph lcm_lattice {\n  rankdir=BT;\n";
    for (const auto& m : lattice)
        os << "  \"" << monomial_to_string(m) << "\";\n";
    for (const auto& a : lattice)
        for (const auto& b : lattice) {
            if (!strictly_divides(a, b)) continue;
            bool covering = true;
            for (const auto& c : lattice)
                if (strictly_divides(a, c) && strictly_divides(c, b)) {
                    covering = false;
                    break;
                }
            if (covering)
                os << "  \"" << monomial_to_string(a) << "\" -> \""
                   << monomial_to_string(b) << "\";\n";
        }
    os << "}\n";
    return os.str();
}

inline json order_to_json(const LinearQuotientOrder& o) {
    json seq = json::array();
    for (const auto& m : o.sequence) seq.push_back(monomial_to_string(m));
    json sets = json::array();
    for (const auto& s : o.quotient_sets) {
        json vars = json::array();
        for (int v : s)
            vars.push_back(o.ideal.ring()->variables[static_cast<std::size_t>(v)]);
        sets.push_back(vars);
    }
    return json{{"sequence", seq}, {"sets", sets}};
}

inline json failure_to_json(const OrderFailure& f) {
    return json{{"position", f.position}, {"witness", monomial_to_string(f.witness)}};
}

inline json covers_to_json(const CoverSet& cs, const MonomialIdeal& ideal) {
    json covers = json::array();
    for (const auto& c : cs.cover_labels()) covers.push_back(c);
    return json{{"covers", covers}, {"ideal", ideal_to_json(ideal)}};
}

inline json report_to_json(const TheoremReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name}, {"pass", c.pass}, {"ms", c.ms}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return json{{"subject", r.subject},
                {"seed", r.seed},
                {"checks", checks},
                {"all_pass", r.all_pass()}};
}

} // namespace homshift
