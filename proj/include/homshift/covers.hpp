#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "homshift/caps.hpp"
#include "homshift/graph.hpp"
#include "homshift/monomial.hpp"

namespace homshift {

// Minimal vertex covers of a graph, as sorted index lists. The list order is
// lex-descending by the cover monomials X_C under the graph's vertex order,
// which is exactly ascending lexicographic order of the sorted index lists.
struct CoverSet {
    Graph graph;
    std::vector<std::vector<int>> covers;

    std::vector<std::vector<std::string>> cover_labels() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : covers) {
            std::vector<std::string> l;
            for (int i : c) l.push_back(graph.label(i));
            out.push_back(std::move(l));
        }
        return out;
    }
};

inline bool is_vertex_cover(const Graph& g, const std::vector<std::string>& S) {
    std::uint64_t m = g.mask_of(S);
    for (const auto& [i, j] : g.edges())
        if (!((m >> i) & 1u) && !((m >> j) & 1u)) return false;
    return true;
}

namespace detail {

inline bool mask_covers(const Graph& g, std::uint64_t m, std::uint64_t sub) {
    for (const auto& [i, j] : g.edges()) {
        if (!((sub >> i) & 1u) || !((sub >> j) & 1u)) continue;
        if (!((m >> i) & 1u) && !((m >> j) & 1u)) return false;
    }
    return true;
}

inline bool mask_is_minimal_cover(const Graph& g, std::uint64_t m, std::uint64_t sub) {
    if (!mask_covers(g, m, sub)) return false;
    for (int i = 0; i < g.vertex_count(); ++i)
        if ((m >> i) & 1u && mask_covers(g, m & ~(1ull << i), sub))
            return false;
    return true;
}

// Bron-Kerbosch with pivoting over the "compatible" relation: u, v compatible
// when non-adjacent in g. Reports maximal independent sets of the subgraph
// induced by sub.
inline void enumerate_max_independent_sets(const Graph& g, std::uint64_t sub,
                                           std::vector<std::uint64_t>& out) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> compat(n, 0);
    for (int i = 0; i < n; ++i)
        compat[i] = sub & ~g.adjacency_mask(i) & ~(1ull << i);

    struct Rec {
        const std::vector<std::uint64_t>& compat;
        std::vector<std::uint64_t>& out;
        void go(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
            if (!p && !x) {
                out.push_back(r);
                return;
            }
            std::uint64_t px = p | x;
            int pivot = -1, best = -1;
            for (std::uint64_t t = px; t; t &= t - 1) {
                int u = __builtin_ctzll(t);
                int deg = popcount(p & compat[u]);
                if (deg > best) { best = deg; pivot = u; }
            }
            std::uint64_t cand = p & ~compat[pivot];
            for (std::uint64_t t = cand; t; t &= t - 1) {
                int v = __builtin_ctzll(t);
                std::uint64_t bit = 1ull << v;
                go(r | bit, p & compat[v], x & compat[v]);
                p &= ~bit;
                x |= bit;
            }
        }
    } rec{compat, out};
    rec.go(0, sub, 0);
}

// Minimal covers of the subgraph induced by sub, as masks, canonically sorted
// so that the cover monomials come out lex-descending.
inline std::vector<std::uint64_t> minimal_cover_masks(const Graph& g, std::uint64_t sub,
                                                      const Caps& caps) {
    if (popcount(sub) > caps.max_vertices)
        throw CapError("cover enumeration: vertex cap " +
                       std::to_string(caps.max_vertices) + " exceeded");
    std::vector<std::uint64_t> indep;
    enumerate_max_independent_sets(g, sub, indep);
    std::vector<std::uint64_t> covers;
    covers.reserve(indep.size());
    for (std::uint64_t s : indep) covers.push_back(sub & ~s);
    auto key = [&](std::uint64_t m) {
        std::vector<int> v;
        for (int i = 0; i < g.vertex_count(); ++i)
            if ((m >> i) & 1u) v.push_back(i);
        return v;
    };
    std::sort(covers.begin(), covers.end(),
              [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
    return covers;
}

} // namespace detail

inline CoverSet minimal_vertex_covers(const Graph& g, const Caps& caps = {}) {
    CoverSet cs;
    cs.graph = g;
    for (std::uint64_t m : detail::minimal_cover_masks(g, g.full_mask(), caps)) {
        std::vector<int> c;
        for (int i = 0; i < g.vertex_count(); ++i)
            if ((m >> i) & 1u) c.push_back(i);
        cs.covers.push_back(std::move(c));
    }
    return cs;
}

// Independent second path: direct filtering of all vertex subsets. Only for
// graphs with at most 16 vertices; used as a self-check for the enumerator.
inline CoverSet minimal_vertex_covers_bruteforce(const Graph& g) {
    if (g.vertex_count() > 16)
        throw CapError("bruteforce cover enumeration limited to 16 vertices");
    CoverSet cs;
    cs.graph = g;
    std::uint64_t full = g.full_mask();
    std::vector<std::vector<int>> found;
    for (std::uint64_t m = 0; m <= full; ++m) {
        if (!detail::mask_is_minimal_cover(g, m, full)) continue;
        std::vector<int> c;
        for (int i = 0; i < g.vertex_count(); ++i)
            if ((m >> i) & 1u) c.push_back(i);
        found.push_back(std::move(c));
    }
    std::sort(found.begin(), found.end());
    cs.covers = std::move(found);
    return cs;
}

// Squarefree ideal generated by X_C over all minimal covers C, in the ring of
// the ambient variable order. Labels of g must exist in the ambient ring.
inline MonomialIdeal cover_ideal_in(const RingPtr& ambient, const Graph& g,
                                    const Caps& caps = {}) {
    CoverSet cs = minimal_vertex_covers(g, caps);
    std::vector<Monomial> gens;
    gens.reserve(cs.covers.size());
    for (const auto& c : cs.covers) {
        std::vector<int> vars;
        vars.reserve(c.size());
        for (int i : c) vars.push_back(ambient->index_of(g.label(i)));
        gens.push_back(Monomial::from_support(ambient, std::move(vars)));
    }
    return MonomialIdeal::make(ambient, std::move(gens));
}

inline MonomialIdeal cover_ideal(const Graph& g, const Caps& caps = {}) {
    return cover_ideal_in(g.ring(), g, caps);
}

namespace detail {

inline void require_minimal_cover(const Graph& g, std::uint64_t m, const char* op) {
    if (!mask_is_minimal_cover(g, m, g.full_mask()))
        throw std::invalid_argument(std::string(op) + ": not a minimal vertex cover");
}

} // namespace detail

// Every minimal cover of a clique-whiskered graph meets each closed apex
// neighborhood in all but one vertex.
inline bool check_apex_count(const CliqueWhiskeredGraph& w,
                             const std::vector<std::string>& C) {
    const Graph& g = w.graph();
    std::uint64_t m = g.mask_of(C);
    detail::require_minimal_cover(g, m, "check_apex_count");
    for (int i = 0; i < w.block_count(); ++i) {
        int a = g.index_of(w.apex(i));
        std::uint64_t closed = g.adjacency_mask(a) | (1ull << a);
        if (detail::popcount(closed & m) != detail::popcount(closed) - 1)
            return false;
    }
    return true;
}

// Given a minimal cover C of G^pi minus a base vertex w, C minus the open
// neighborhood of w covers G^pi minus the closed neighborhood of w.
inline std::vector<std::string> restrict_cover(const CliqueWhiskeredGraph& gw,
                                               const std::string& w,
                                               const std::vector<std::string>& C) {
    const Graph& g = gw.graph();
    if (gw.is_apex(w))
        throw std::invalid_argument("restrict_cover: '" + w + "' is an apex");
    int wi = g.index_of(w);
    std::uint64_t sub = g.full_mask() & ~(1ull << wi);
    std::uint64_t m = g.mask_of(C);
    if (m & ~sub)
        throw std::invalid_argument("restrict_cover: cover mentions the deleted vertex");
    if (!detail::mask_covers(g, m, sub))
        throw std::invalid_argument("restrict_cover: not a cover of the deleted graph");
    for (int i = 0; i < g.vertex_count(); ++i)
        if ((m >> i) & 1u && detail::mask_covers(g, m & ~(1ull << i), sub))
            throw std::invalid_argument("restrict_cover: cover is not minimal");
    std::uint64_t rest = m & ~g.adjacency_mask(wi);
    std::uint64_t remaining = sub & ~g.adjacency_mask(wi);
    if (!detail::mask_covers(g, rest, remaining))
        throw std::logic_error("restrict_cover: restriction fails to cover");
    return g.labels_of(rest);
}

} // namespace homshift
