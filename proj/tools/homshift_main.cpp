#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homshift/json_io.hpp"

namespace {

using namespace homshift;
using nlohmann::json;

struct Options {
    Caps caps;
    std::string format = "human";
    std::string output;
    std::uint64_t seed = 20240801;
};

void apply_caps_env(Caps& caps) {
    const char* env = std::getenv("HOMSHIFT_CAPS");
    if (!env) return;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("HOMSHIFT_CAPS: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        long long value = std::stoll(item.substr(eq + 1));
        if (key == "max-vertices") caps.max_vertices = static_cast<int>(value);
        else if (key == "max-generators") caps.max_generators = static_cast<int>(value);
        else if (key == "max-faces") caps.max_faces = value;
        else if (key == "find-order-cap") caps.find_order_cap = static_cast<int>(value);
        else if (key == "max-oracle-vars") caps.max_oracle_vars = static_cast<int>(value);
        else if (key == "jobs") caps.jobs = static_cast<int>(value);
        else throw std::invalid_argument("HOMSHIFT_CAPS: unknown key '" + key + "'");
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::invalid_argument("cannot write '" + opt.output + "'");
        out << text;
    }
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump(2)); }

// Graph input may be a plain graph or a clique-whiskered graph (with roles).
struct GraphInput {
    Graph graph;
    std::optional<CliqueWhiskeredGraph> whiskered;
};

GraphInput load_graph(const std::string& path) {
    json j = load_json(path);
    GraphInput gi;
    if (j.contains("roles")) {
        gi.whiskered = cwg_from_json(j);
        gi.graph = gi.whiskered->graph();
    } else {
        gi.graph = graph_from_json(j);
    }
    return gi;
}

// Ideal input may be an ideal, a graph (cover ideal), or a clique-whiskered
// graph.
MonomialIdeal load_ideal(const std::string& path, const Caps& caps) {
    json j = load_json(path);
    if (j.contains("variables")) return ideal_from_json(j);
    if (j.contains("roles")) return cover_ideal(cwg_from_json(j).graph(), caps);
    if (j.contains("vertices")) return cover_ideal(graph_from_json(j), caps);
    throw std::invalid_argument("input is neither an ideal nor a graph");
}

std::string report_human(const TheoremReport& r) {
    std::ostringstream os;
    os << r.subject << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << (r.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

int emit_report(const Options& opt, const TheoremReport& r) {
    if (opt.format == "json")
        emit_json(opt, report_to_json(r));
    else
        emit(opt, report_human(r));
    return r.all_pass() ? 0 : 1;
}

LinearQuotientOrder order_for(const MonomialIdeal& I, const Caps& caps) {
    auto res = verify_order(I, lex_order(I));
    if (verified(res)) return std::get<LinearQuotientOrder>(res);
    auto found = find_order(I, caps);
    if (!found)
        throw std::invalid_argument("ideal has no linear quotient order");
    return *found;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for homological shift ideals of graph cover ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    try {
        apply_caps_env(opt.caps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    app.add_option("--format", opt.format, "output format: human|json")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("-o,--output", opt.output, "write output to a file");
    app.add_option("--seed", opt.seed, "seed for corpus generation");
    app.add_option("--jobs", opt.caps.jobs, "worker threads");
    app.add_option("--max-vertices", opt.caps.max_vertices, "cover enumeration cap");
    app.add_option("--max-generators", opt.caps.max_generators, "Betti oracle generator cap");
    app.add_option("--max-faces", opt.caps.max_faces, "faces per Koszul complex cap");
    app.add_option("--find-order-cap", opt.caps.find_order_cap, "find-lq generator cap");
    app.add_option("--max-oracle-vars", opt.caps.max_oracle_vars, "Betti route variable cap");

    // construct
    auto* construct = app.add_subcommand("construct", "build a graph family");
    std::string family, graph_file, partition_file, t_list;
    int param_k = 2, parts_m = 1;
    construct->add_option("family", family,
                          "whiskered-cycle | clique-whisker | cameron-walker | clique-corona")
        ->required();
    construct->add_option("--k", param_k, "cycle parameter for whiskered-cycle");
    construct->add_option("--graph", graph_file, "input graph file");
    construct->add_option("--partition", partition_file, "clique partition file");
    construct->add_option("--parts", parts_m, "size of the triangle part for cameron-walker");
    construct->add_option("--t", t_list, "comma-separated t_i for clique-corona");

    // covers / cover-ideal
    auto* covers_cmd = app.add_subcommand("covers", "minimal vertex covers and cover ideal");
    std::string covers_graph;
    covers_cmd->add_option("--graph", covers_graph, "graph JSON file")->required();
    auto* cover_ideal_cmd = app.add_subcommand("cover-ideal", "cover ideal of a graph");
    std::string cover_ideal_graph;
    cover_ideal_cmd->add_option("--graph", cover_ideal_graph, "graph JSON file")->required();

    // hs
    auto* hs_cmd = app.add_subcommand("hs", "homological shift ideal HS_k");
    std::string hs_input, hs_route = "both";
    int hs_k = 0;
    hs_cmd->add_option("--input", hs_input, "ideal or graph JSON file")->required();
    hs_cmd->add_option("--k", hs_k, "homological index")->required();
    hs_cmd->add_option("--route", hs_route, "oracle | linquot | both")
        ->check(CLI::IsMember({"oracle", "linquot", "both"}));

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti table");
    std::string betti_input, betti_csv, betti_dot;
    betti_cmd->add_option("--input", betti_input, "ideal or graph JSON file")->required();
    betti_cmd->add_option("--csv", betti_csv, "also write a CSV table");
    betti_cmd->add_option("--dot", betti_dot, "also write the lcm lattice in DOT form");

    // check
    auto* check_cmd = app.add_subcommand("check", "run the verification suite on a graph");
    std::string check_graph, check_mode = "generic";
    int check_corpus = 0;
    check_cmd->add_option("--graph", check_graph, "clique-whiskered graph JSON file");
    check_cmd->add_option("--mode", check_mode,
                          "generic | chordal | cameron-walker | clique-corona");
    check_cmd->add_option("--corpus", check_corpus,
                          "run the generic suite over N seeded clique-whiskered graphs");

    // counterexample
    auto* cx_cmd = app.add_subcommand("counterexample",
                                      "verify the whiskered-cycle counterexample family");
    int cx_k = 2;
    cx_cmd->add_option("--k", cx_k, "family parameter, k >= 2")->required();

    // find-lq
    auto* findlq_cmd = app.add_subcommand("find-lq", "search for a linear quotient order");
    std::string findlq_input;
    findlq_cmd->add_option("--input", findlq_input, "ideal JSON file")->required();

    // check-wpm
    auto* wpm_cmd = app.add_subcommand("check-wpm", "weakly polymatroidal check");
    std::string wpm_input, wpm_order;
    wpm_cmd->add_option("--input", wpm_input, "ideal JSON file")->required();
    wpm_cmd->add_option("--order", wpm_order, "comma-separated variable order");

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.caps.max_vertices < 1 || opt.caps.max_generators < 1 ||
            opt.caps.max_faces < 1 || opt.caps.find_order_cap < 1 ||
            opt.caps.max_oracle_vars < 1 || opt.caps.jobs < 1)
            throw std::invalid_argument("caps must be positive");
        if (construct->parsed()) {
            CliqueWhiskeredGraph g = [&] {
                if (family == "whiskered-cycle") return whiskered_cycle(param_k);
                if (family == "clique-whisker") {
                    if (graph_file.empty() || partition_file.empty())
                        throw std::invalid_argument("clique-whisker needs --graph and --partition");
                    return clique_whisker(graph_from_json(load_json(graph_file)),
                                          partition_from_json(load_json(partition_file)));
                }
                if (family == "cameron-walker") {
                    if (graph_file.empty())
                        throw std::invalid_argument("cameron-walker needs --graph");
                    return cm_cameron_walker(graph_from_json(load_json(graph_file)), parts_m);
                }
                if (family == "clique-corona") {
                    if (graph_file.empty() || t_list.empty())
                        throw std::invalid_argument("clique-corona needs --graph and --t");
                    std::vector<int> t;
                    std::stringstream ss(t_list);
                    std::string item;
                    while (std::getline(ss, item, ',')) t.push_back(std::stoi(item));
                    return clique_corona(graph_from_json(load_json(graph_file)), t);
                }
                throw std::invalid_argument("unknown family '" + family + "'");
            }();
            emit_json(opt, cwg_to_json(g));
            return 0;
        }

        if (covers_cmd->parsed()) {
            GraphInput gi = load_graph(covers_graph);
            CoverSet cs = minimal_vertex_covers(gi.graph, opt.caps);
            MonomialIdeal J = cover_ideal(gi.graph, opt.caps);
            if (opt.format == "json") {
                emit_json(opt, covers_to_json(cs, J));
            } else {
                std::ostringstream os;
                os << cs.covers.size() << " minimal vertex covers\n";
                for (const auto& c : cs.cover_labels()) {
                    os << "  {";
                    for (std::size_t i = 0; i < c.size(); ++i)
                        os << (i ? ", " : "") << c[i];
                    os << "}\n";
                }
                emit(opt, os.str());
            }
            return 0;
        }

        if (cover_ideal_cmd->parsed()) {
            GraphInput gi = load_graph(cover_ideal_graph);
            emit_json(opt, ideal_to_json(cover_ideal(gi.graph, opt.caps)));
            return 0;
        }

        if (hs_cmd->parsed()) {
            MonomialIdeal I = load_ideal(hs_input, opt.caps);
            json out;
            int exit_code = 0;
            if (hs_route == "oracle" || hs_route == "both") {
                if (!oracle_route_allowed(I, opt.caps))
                    throw CapError("oracle route: caps exceeded (" +
                                   std::to_string(I.generators().size()) + " generators, " +
                                   std::to_string(I.ring()->size()) + " variables)");
            }
            std::optional<MonomialIdeal> via_oracle, via_lq;
            if (hs_route == "oracle" || hs_route == "both")
                via_oracle = hs_from_betti(I, hs_k, opt.caps);
            if (hs_route == "linquot" || hs_route == "both")
                via_lq = hs_via_linear_quotients(order_for(I, opt.caps), hs_k);
            MonomialIdeal result = via_oracle ? *via_oracle : *via_lq;
            out["hs"] = ideal_to_json(result);
            out["k"] = hs_k;
            out["route"] = hs_route;
            if (via_oracle && via_lq) {
                bool equal = *via_oracle == *via_lq;
                out["routes_equal"] = equal;
                if (!equal) {
                    out["oracle"] = ideal_to_json(*via_oracle);
                    out["linquot"] = ideal_to_json(*via_lq);
                    exit_code = 1;
                }
            }
            emit_json(opt, out);
            return exit_code;
        }

        if (betti_cmd->parsed()) {
            MonomialIdeal I = load_ideal(betti_input, opt.caps);
            if (!oracle_route_allowed(I, opt.caps))
                throw CapError("betti: caps exceeded (" +
                               std::to_string(I.generators().size()) + " generators, " +
                               std::to_string(I.ring()->size()) + " variables)");
            BettiTable t = betti_table(I, opt.caps);
            if (!betti_csv.empty()) {
                std::ofstream out(betti_csv);
                if (!out) throw std::invalid_argument("cannot write '" + betti_csv + "'");
                out << betti_to_csv(t);
            }
            if (!betti_dot.empty()) {
                std::ofstream out(betti_dot);
                if (!out) throw std::invalid_argument("cannot write '" + betti_dot + "'");
                out << lattice_to_dot(lcm_lattice(I, opt.caps));
            }
            emit_json(opt, betti_to_json(t));
            return 0;
        }

        if (check_cmd->parsed()) {
            if (check_corpus > 0) {
                if (parse_suite_mode(check_mode) != SuiteMode::generic)
                    throw std::invalid_argument("--corpus runs the generic suite only");
                TheoremReport merged;
                merged.subject = "seeded corpus of " + std::to_string(check_corpus);
                merged.seed = opt.seed;
                for (const auto& entry : generate_corpus(opt.seed, check_corpus, opt.caps)) {
                    TheoremReport r = theorem_suite(entry.graph, SuiteMode::generic, opt.caps);
                    std::string why;
                    for (const auto& c : r.checks)
                        if (!c.pass) why = c.name + ": " + c.detail;
                    merged.checks.push_back(Check{entry.name, r.all_pass(), why, 0.0});
                }
                return emit_report(opt, merged);
            }
            if (check_graph.empty())
                throw std::invalid_argument("check needs --graph or --corpus");
            json j = load_json(check_graph);
            if (!j.contains("roles"))
                throw std::invalid_argument("check expects a clique-whiskered graph "
                                            "(construct one first)");
            CliqueWhiskeredGraph g = cwg_from_json(j);
            TheoremReport r = theorem_suite(g, parse_suite_mode(check_mode), opt.caps);
            return emit_report(opt, r);
        }

        if (cx_cmd->parsed()) {
            TheoremReport r = verify_counterexample(cx_k, opt.caps);
            return emit_report(opt, r);
        }

        if (findlq_cmd->parsed()) {
            MonomialIdeal I = load_ideal(findlq_input, opt.caps);
            auto found = find_order(I, opt.caps);
            json out;
            out["found"] = found.has_value();
            if (found) out["order"] = order_to_json(*found);
            emit_json(opt, out);
            return 0;
        }

        if (wpm_cmd->parsed()) {
            MonomialIdeal I = load_ideal(wpm_input, opt.caps);
            std::optional<WpmViolation> viol;
            if (wpm_order.empty()) {
                viol = weakly_polymatroidal_violation(I);
            } else {
                std::vector<int> order;
                std::stringstream ss(wpm_order);
                std::string name;
                while (std::getline(ss, name, ','))
                    order.push_back(I.ring()->index_of(name));
                if (static_cast<int>(order.size()) != I.ring()->size())
                    throw std::invalid_argument("--order must list every variable");
                viol = weakly_polymatroidal_violation(I, order);
            }
            json out;
            out["weakly_polymatroidal"] = !viol.has_value();
            if (viol)
                out["witness"] = json::array({monomial_to_string(viol->u),
                                              monomial_to_string(viol->v)});
            emit_json(opt, out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
