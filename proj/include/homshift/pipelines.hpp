#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homshift/caps.hpp"
#include "homshift/covers.hpp"
#include "homshift/graph.hpp"
#include "homshift/linear_quotients.hpp"
#include "homshift/monomial.hpp"
#include "homshift/resolution.hpp"

namespace homshift {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail; // witness text on failure, route/notes otherwise
    double ms = 0.0;
};

struct TheoremReport {
    std::string subject;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

enum class HsRoute { oracle, linquot, both };

// Route policy: the Betti oracle is reserved for small inputs, everything
// else goes through the linear quotient route with a theorem-supplied order.
inline bool oracle_route_allowed(const MonomialIdeal& I, const Caps& caps = {}) {
    return static_cast<int>(I.generators().size()) <= caps.max_generators &&
           I.ring()->size() <= caps.max_oracle_vars;
}

// HS_k via a verified lex linear quotient order; valid whenever the lex order
// of the cover ideal has linear quotients (clique-whiskered graphs and their
// vertex-deleted subgraphs).
inline MonomialIdeal hs_via_lex_order(const MonomialIdeal& J, int k) {
    if (J.is_zero()) return J;
    auto res = verify_order(J, lex_order(J));
    if (!verified(res))
        throw std::logic_error("hs_via_lex_order: lex order fails linear quotients");
    return hs_via_linear_quotients(std::get<LinearQuotientOrder>(res), k);
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string cover_string(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.terms()) {
        if (!s.empty()) s += ' ';
        s += m.ring()->variables[static_cast<std::size_t>(v)];
    }
    return s.empty() ? "1" : s;
}

} // namespace detail

// Three-term Betti splitting of HS_k at a base vertex w:
//   X_{N[w]}·HS_{k-1}(J(G\N[w])) + X_w·HS_k(J(G\w)) + X_{N(w)}·HS_k(J(G\N[w]))
// Subgraph shift ideals come from the Betti oracle (route=oracle) or the lex
// linear quotient order (route=linquot). With verify set, the sum is checked
// against HS_k(J(G)) computed directly by the same route.
inline MonomialIdeal betti_splitting_hs(const CliqueWhiskeredGraph& gw,
                                        const std::string& w, int k,
                                        const Caps& caps = {},
                                        HsRoute route = HsRoute::oracle,
                                        bool verify = true) {
    if (k < 1) throw std::invalid_argument("betti_splitting_hs: k must be >= 1");
    if (gw.is_apex(w))
        throw std::invalid_argument("betti_splitting_hs: '" + w + "' is an apex");
    if (route == HsRoute::both)
        throw std::invalid_argument("betti_splitting_hs: pick one route");
    const Graph& g = gw.graph();
    RingPtr ring = gw.ring();

    std::vector<std::string> closed = neighborhood(g, w, true);
    std::vector<std::string> open = neighborhood(g, w, false);
    Graph g_minus_w = induced_delete(g, {w});
    Graph g_minus_closed = induced_delete(g, closed);

    MonomialIdeal j_minus_w = cover_ideal_in(ring, g_minus_w, caps);
    MonomialIdeal j_minus_closed = cover_ideal_in(ring, g_minus_closed, caps);

    auto hs_of = [&](const MonomialIdeal& J, int kk) {
        if (route == HsRoute::oracle) return hs_from_betti(J, kk, caps);
        return hs_via_lex_order(J, kk);
    };

    Monomial a = Monomial::from_support(ring, [&] {
        std::vector<int> s;
        for (const auto& v : closed) s.push_back(ring->index_of(v));
        return s;
    }());
    Monomial b = Monomial::variable(ring, ring->index_of(w));
    Monomial c = Monomial::from_support(ring, [&] {
        std::vector<int> s;
        for (const auto& v : open) s.push_back(ring->index_of(v));
        return s;
    }());

    MonomialIdeal result = sum(
        sum(scale(hs_of(j_minus_closed, k - 1), a), scale(hs_of(j_minus_w, k), b)),
        scale(hs_of(j_minus_closed, k), c));

    if (verify) {
        MonomialIdeal direct = hs_of(cover_ideal_in(ring, g, caps), k);
        if (!(result == direct))
            throw std::logic_error("betti_splitting_hs: three-term sum disagrees with HS_k");
    }
    return result;
}

// The whiskered-cycle counterexample family: HS_k(J(W(C_2k))) equals
// x_1...x_2k · <y_1y_3...y_{2k-1}, y_2y_4...y_{2k}>, is generated in degree
// 3k, has regularity 4k-1, hence no linear resolution and no linear
// quotients.
inline TheoremReport verify_counterexample(int k, const Caps& caps = {}) {
    if (k < 2) throw std::invalid_argument("verify_counterexample: k must be >= 2");
    TheoremReport report;
    report.subject = "whiskered_cycle(" + std::to_string(k) + ")";

    CliqueWhiskeredGraph gw = whiskered_cycle(k);
    RingPtr ring = gw.ring();
    MonomialIdeal J = cover_ideal(gw.graph(), caps);

    std::vector<int> xs, yodd, yeven;
    for (int i = 1; i <= 2 * k; ++i) {
        xs.push_back(ring->index_of("x" + std::to_string(i)));
        (i % 2 ? yodd : yeven).push_back(ring->index_of("y" + std::to_string(i)));
    }
    Monomial all_x = Monomial::from_support(ring, xs);
    MonomialIdeal closed_form = MonomialIdeal::make(
        ring, {all_x * Monomial::from_support(ring, yodd),
               all_x * Monomial::from_support(ring, yeven)});

    auto add_check = [&](const std::string& name, bool pass, std::string detail,
                         double ms) {
        report.checks.push_back(Check{name, pass, std::move(detail), ms});
    };

    {
        detail::Stopwatch sw;
        auto res = verify_order(J, lex_order(J));
        bool ok = verified(res);
        MonomialIdeal hs_lq = ok
            ? hs_via_linear_quotients(std::get<LinearQuotientOrder>(res), k)
            : MonomialIdeal::zero(ring);
        bool match = ok && hs_lq == closed_form;
        add_check("hs_linquot_matches_closed_form", match,
                  match ? "" : "linear quotient route disagrees", sw.ms());
    }
    if (oracle_route_allowed(J, caps)) {
        detail::Stopwatch sw;
        MonomialIdeal hs_or = hs_from_betti(J, k, caps);
        bool match = hs_or == closed_form;
        add_check("hs_oracle_matches_closed_form", match,
                  match ? "" : "Betti oracle route disagrees", sw.ms());
    } else {
        detail::Stopwatch sw;
        add_check("hs_oracle_route", true,
                  "skipped by route policy (oracle reserved for the 2-generator ideal)",
                  sw.ms());
    }
    {
        detail::Stopwatch sw;
        bool ok = closed_form.is_equigenerated() &&
                  closed_form.generation_degree() == 3 * k;
        add_check("generation_degree_3k", ok, ok ? "" : "unexpected degree", sw.ms());
    }
    {
        detail::Stopwatch sw;
        long long reg = regularity(betti_table(closed_form, caps));
        bool ok = reg == 4ll * k - 1;
        add_check("regularity_4k_minus_1", ok,
                  ok ? "" : "regularity = " + std::to_string(reg), sw.ms());
    }
    {
        detail::Stopwatch sw;
        bool lin = has_linear_resolution(closed_form, caps);
        add_check("no_linear_resolution", !lin,
                  lin ? "unexpected linear resolution" : "", sw.ms());
    }
    {
        detail::Stopwatch sw;
        auto found = find_order(closed_form, caps);
        add_check("no_linear_quotients", !found.has_value(),
                  found ? "unexpected linear quotient order" : "", sw.ms());
    }
    return report;
}

enum class SuiteMode { generic, chordal, cameron_walker, clique_corona };

inline SuiteMode parse_suite_mode(const std::string& s) {
    if (s == "generic") return SuiteMode::generic;
    if (s == "chordal") return SuiteMode::chordal;
    if (s == "cameron-walker" || s == "cameron_walker") return SuiteMode::cameron_walker;
    if (s == "clique-corona" || s == "clique_corona") return SuiteMode::clique_corona;
    throw std::invalid_argument("unknown suite mode '" + s + "'");
}

namespace detail {

inline void validate_cameron_walker_shape(const CliqueWhiskeredGraph& gw) {
    const Graph& base = gw.base();
    int t = gw.block_count();
    int m = 0;
    bool seen_leaf = false;
    for (int i = 0; i < t; ++i) {
        std::size_t sz = gw.block(i).size();
        if (sz > 2) throw std::invalid_argument("cameron-walker shape: block larger than 2");
        if (sz == 2) {
            if (seen_leaf)
                throw std::invalid_argument("cameron-walker shape: triangle block after leaf block");
            ++m;
        } else {
            seen_leaf = true;
        }
    }
    if (m < 1 || m >= t)
        throw std::invalid_argument("cameron-walker shape: need triangle and leaf blocks");
    // Second triangle vertices hang off their leader only.
    for (int i = 0; i < t; ++i) {
        if (gw.block(i).size() != 2) continue;
        int w2 = base.index_of(gw.block(i)[1]);
        std::uint64_t nbrs = base.adjacency_mask(w2);
        if (nbrs != (1ull << base.index_of(gw.block(i)[0])))
            throw std::invalid_argument("cameron-walker shape: pendant triangle vertex has "
                                        "outside neighbors");
    }
    // The leaders form a connected bipartite H split by block size.
    std::vector<std::string> leaders;
    std::vector<std::pair<std::string, std::string>> h_edges;
    for (int i = 0; i < t; ++i) leaders.push_back(gw.block(i)[0]);
    for (const auto& [i, j] : base.edges()) {
        const std::string& a = base.label(i);
        const std::string& b = base.label(j);
        bool a_leader = gw.role(a).pos == 1, b_leader = gw.role(b).pos == 1;
        if (a_leader && b_leader) h_edges.emplace_back(a, b);
    }
    Graph h = Graph::build(leaders, h_edges);
    for (const auto& [i, j] : h.edges()) {
        bool left_i = gw.role(h.label(i)).block <= m;
        bool left_j = gw.role(h.label(j)).block <= m;
        if (left_i == left_j)
            throw std::invalid_argument("cameron-walker shape: H is not bipartite across "
                                        "triangle/leaf parts");
    }
    if (!is_connected(h))
        throw std::invalid_argument("cameron-walker shape: H is not connected");
}

inline void validate_clique_corona_shape(const CliqueWhiskeredGraph& gw, bool require_ti_ge_2) {
    const Graph& base = gw.base();
    for (int i = 0; i < gw.block_count(); ++i) {
        if (require_ti_ge_2 && gw.block(i).size() < 2)
            throw std::invalid_argument("clique-corona suite requires every t_i >= 2");
        for (std::size_t j = 1; j < gw.block(i).size(); ++j) {
            int v = base.index_of(gw.block(i)[j]);
            std::uint64_t allowed = 0;
            for (const auto& u : gw.block(i))
                allowed |= 1ull << base.index_of(u);
            if (base.adjacency_mask(v) & ~allowed)
                throw std::invalid_argument("clique-corona shape: non-leader vertex has "
                                            "neighbors outside its block");
        }
    }
}

} // namespace detail

// Instance-level verification suite for one clique-whiskered graph: lex
// linear quotients with the set formula, apex counts, route equality,
// exchange property, the Betti splitting identity, and the per-mode
// property (chordal recursive order / weak polymatroidality).
inline TheoremReport theorem_suite(const CliqueWhiskeredGraph& gw, SuiteMode mode,
                                   const Caps& caps = {}) {
    switch (mode) {
    case SuiteMode::generic:
        break;
    case SuiteMode::chordal:
        if (!is_chordal(gw.base()))
            throw std::invalid_argument("chordal suite: base graph is not chordal");
        break;
    case SuiteMode::cameron_walker:
        detail::validate_cameron_walker_shape(gw);
        break;
    case SuiteMode::clique_corona:
        detail::validate_clique_corona_shape(gw, true);
        break;
    }

    TheoremReport report;
    {
        std::ostringstream os;
        os << "graph(" << gw.graph().vertex_count() << " vertices, "
           << gw.graph().edge_count() << " edges)";
        report.subject = os.str();
    }
    const Graph& g = gw.graph();
    RingPtr ring = gw.ring();
    MonomialIdeal J = cover_ideal(g, caps);
    CoverSet cs = minimal_vertex_covers(g, caps);

    auto add = [&](const std::string& name, bool pass, std::string detail, double ms) {
        report.checks.push_back(Check{name, pass, std::move(detail), ms});
    };

    detail::Stopwatch sw_lex;
    auto res = verify_order(J, lex_order(J));
    bool lex_ok = verified(res);
    add("lex_linear_quotients", lex_ok,
        lex_ok ? ""
               : "fails at position " + std::to_string(std::get<OrderFailure>(res).position),
        sw_lex.ms());
    if (!lex_ok) return report;
    const LinearQuotientOrder& order = std::get<LinearQuotientOrder>(res);

    {
        detail::Stopwatch sw;
        bool all = true;
        std::string witness;
        for (std::size_t j = 0; j < order.sequence.size() && all; ++j) {
            std::vector<std::string> cover;
            for (int v : order.sequence[j].support())
                cover.push_back(ring->variables[static_cast<std::size_t>(v)]);
            std::vector<std::string> expected = set_formula(gw, cover);
            std::vector<std::string> got;
            for (int v : order.quotient_sets[j])
                got.push_back(ring->variables[static_cast<std::size_t>(v)]);
            if (got != expected) {
                all = false;
                witness = "generator " + detail::cover_string(order.sequence[j]);
            }
        }
        add("set_formula_match", all, witness, sw.ms());
    }

    {
        detail::Stopwatch sw;
        bool all = true;
        std::string witness;
        for (const auto& cover : cs.cover_labels()) {
            if (!check_apex_count(gw, cover)) {
                all = false;
                witness = "cover {" + cover.front() + ", ...}";
                break;
            }
        }
        add("apex_count", all, witness, sw.ms());
    }

    int pd = order.max_set_size();
    bool oracle_ok = oracle_route_allowed(J, caps);

    {
        detail::Stopwatch sw;
        bool all = true;
        std::string note = oracle_ok ? "oracle vs linear quotients"
                                     : "skipped: oracle route capped";
        if (oracle_ok) {
            BettiTable table = betti_table(J, caps);
            int pd_oracle = projective_dimension(table);
            if (pd_oracle != pd) {
                all = false;
                note = "projective dimension mismatch";
            }
            for (int k = 0; k <= pd + 1 && all; ++k) {
                MonomialIdeal via_lq = hs_via_linear_quotients(order, k);
                MonomialIdeal via_or = hs_from_betti(table, k);
                if (!(via_lq == via_or)) {
                    all = false;
                    note = "routes disagree at k=" + std::to_string(k);
                }
            }
        }
        add("route_equality", all, note, sw.ms());
    }

    {
        detail::Stopwatch sw;
        bool all = true;
        std::string witness;
        for (int k = 0; k <= pd && all; ++k) {
            if (!exchange_check(gw, k, caps)) {
                all = false;
                witness = "k=" + std::to_string(k);
            }
        }
        add("exchange_property", all, witness, sw.ms());
    }

    if (gw.block_count() > 0) {
        detail::Stopwatch sw;
        bool all = true;
        std::string note;
        HsRoute route = oracle_ok ? HsRoute::oracle : HsRoute::linquot;
        std::string w = gw.block(0)[0];
        for (int k = 1; k <= pd && all; ++k) {
            MonomialIdeal split = betti_splitting_hs(gw, w, k, caps, route, false);
            MonomialIdeal direct = oracle_ok ? hs_from_betti(J, k, caps)
                                             : hs_via_linear_quotients(order, k);
            if (!(split == direct)) {
                all = false;
                note = "identity fails at w=" + w + ", k=" + std::to_string(k);
            }
        }
        if (all) note = std::string("route: ") + (oracle_ok ? "oracle" : "linquot");
        add("betti_splitting", all, note, sw.ms());
    }

    switch (mode) {
    case SuiteMode::generic:
        break;
    case SuiteMode::chordal: {
        detail::Stopwatch sw;
        bool all = true;
        std::string witness;
        for (int k = 0; k <= pd && all; ++k) {
            std::vector<Monomial> seq = chordal_hs_order(gw, k, caps);
            MonomialIdeal hs = hs_via_linear_quotients(order, k);
            auto vr = verify_order(hs, seq);
            if (!verified(vr)) {
                all = false;
                witness = "k=" + std::to_string(k) + " fails at position " +
                          std::to_string(std::get<OrderFailure>(vr).position);
            }
        }
        add("chordal_recursive_order", all, witness, sw.ms());
        break;
    }
    case SuiteMode::cameron_walker:
    case SuiteMode::clique_corona: {
        detail::Stopwatch sw;
        bool all = true;
        std::string witness;
        for (int k = 0; k <= pd && all; ++k) {
            MonomialIdeal hs = hs_via_linear_quotients(order, k);
            auto viol = weakly_polymatroidal_violation(hs);
            if (viol) {
                all = false;
                witness = "k=" + std::to_string(k) + ": " +
                          detail::cover_string(viol->u) + " vs " +
                          detail::cover_string(viol->v);
                break;
            }
            auto vr = verify_order(hs, lex_order(hs));
            if (!verified(vr)) {
                all = false;
                witness = "k=" + std::to_string(k) + ": lex order fails";
            }
        }
        add("weakly_polymatroidal", all, witness, sw.ms());
        break;
    }
    }

    return report;
}

struct CorpusEntry {
    CliqueWhiskeredGraph graph;
    std::uint64_t seed = 0;
    std::string name;
};

// Deterministic pseudorandom clique-whiskered graphs with small bases, kept
// within the oracle caps so that every route runs on every entry.
inline std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int count,
                                                const Caps& caps = {},
                                                int max_base_vertices = 5) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    int attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        ++attempt;
        int lo = std::min(2, max_base_vertices);
        int n = lo + (max_base_vertices > lo
                          ? static_cast<int>(rng() %
                                             static_cast<std::uint64_t>(max_base_vertices - lo + 1))
                          : 0);
        double p = std::vector<double>{0.3, 0.5, 0.75}[rng() % 3];
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p) edges.emplace_back(labels[i], labels[j]);
        Graph base = Graph::build(labels, edges);

        // Random clique partition: in shuffled order, join an existing block
        // when adjacent to all of it, else start a new one.
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> blocks;
        for (int v : perm) {
            std::vector<std::size_t> joinable;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                bool ok = true;
                for (int u : blocks[b]) ok = ok && base.adjacent(u, v);
                if (ok) joinable.push_back(b);
            }
            if (!joinable.empty() && coin(rng) < 0.5)
                blocks[joinable[rng() % joinable.size()]].push_back(v);
            else
                blocks.push_back({v});
        }
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        CliquePartition pi;
        for (const auto& b : blocks) {
            std::vector<std::string> c;
            for (int v : b) c.push_back(base.label(v));
            pi.cliques.push_back(std::move(c));
        }
        CliqueWhiskeredGraph gw = clique_whisker(base, pi);

        // Caps filter so the oracle route runs on the graph and on every
        // vertex-split subgraph.
        const Graph& g = gw.graph();
        if (static_cast<std::size_t>(detail::popcount(g.full_mask())) >
            static_cast<std::size_t>(caps.max_oracle_vars))
            continue;
        auto gens_within = [&](std::uint64_t mask) {
            return static_cast<int>(detail::minimal_cover_masks(g, mask, caps).size()) <=
                   caps.max_generators;
        };
        bool ok = gens_within(g.full_mask());
        for (int i = 0; i < g.vertex_count() && ok; ++i) {
            const std::string& label = g.label(i);
            if (gw.is_apex(label)) continue;
            std::uint64_t bit = 1ull << i;
            ok = gens_within(g.full_mask() & ~bit) &&
                 gens_within(g.full_mask() & ~(g.adjacency_mask(i) | bit));
        }
        if (!ok) continue;

        CorpusEntry entry;
        entry.graph = gw;
        entry.seed = seed;
        entry.name = "corpus[seed=" + std::to_string(seed) +
                     ",attempt=" + std::to_string(attempt) + "]";
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace homshift
