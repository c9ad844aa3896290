#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homshift/monomial.hpp"

namespace homshift {

// Finite simple graph with a canonical vertex order (declared order). The
// order drives the polynomial ring and every lex comparison downstream.
class Graph {
public:
    Graph() = default;

    static Graph build(std::vector<std::string> vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
        Graph g;
        if (vertices.size() > 64)
            throw std::invalid_argument("graphs with more than 64 vertices are not supported");
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
            if (!g.index_.emplace(vertices[i], i).second)
                throw std::invalid_argument("duplicate vertex label '" + vertices[i] + "'");
        }
        g.labels_ = std::move(vertices);
        g.adj_.assign(g.labels_.size(), 0);
        for (const auto& [a, b] : edges) {
            int i = g.index_of(a), j = g.index_of(b);
            if (i == j) throw std::invalid_argument("loop edge at '" + a + "'");
            g.adj_[i] |= (1ull << j);
            g.adj_[j] |= (1ull << i);
        }
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = i + 1; j < g.vertex_count(); ++j)
                if (g.adjacent(i, j)) g.edges_.emplace_back(i, j);
        return g;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }

    bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }

    int index_of(const std::string& v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            throw std::invalid_argument("unknown vertex '" + v + "'");
        return it->second;
    }

    bool adjacent(int i, int j) const { return (adj_.at(i) >> j) & 1u; }
    std::uint64_t adjacency_mask(int i) const { return adj_.at(i); }
    std::uint64_t full_mask() const {
        return vertex_count() == 64 ? ~0ull : (1ull << vertex_count()) - 1;
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<std::string> labels_of(std::uint64_t mask) const {
        std::vector<std::string> out;
        for (int i = 0; i < vertex_count(); ++i)
            if ((mask >> i) & 1u) out.push_back(labels_[i]);
        return out;
    }

    std::uint64_t mask_of(const std::vector<std::string>& vs) const {
        std::uint64_t m = 0;
        for (const auto& v : vs) m |= 1ull << index_of(v);
        return m;
    }

    // Ring with one variable per vertex, in canonical vertex order.
    RingPtr ring() const { return make_ring(labels_); }

    bool operator==(const Graph& o) const {
        return labels_ == o.labels_ && adj_ == o.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
};

inline Graph build_graph(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    return Graph::build(std::move(vertices), edges);
}

// Induced subgraph on V \ W; vertex order inherited.
inline Graph induced_delete(const Graph& g, const std::vector<std::string>& W) {
    std::uint64_t drop = g.mask_of(W);
    std::vector<std::string> keep;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (!((drop >> i) & 1u)) keep.push_back(g.label(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [i, j] : g.edges())
        if (!((drop >> i) & 1u) && !((drop >> j) & 1u))
            edges.emplace_back(g.label(i), g.label(j));
    return Graph::build(std::move(keep), edges);
}

inline std::vector<std::string> neighborhood(const Graph& g, const std::string& a, bool closed) {
    int i = g.index_of(a);
    std::uint64_t m = g.adjacency_mask(i);
    if (closed) m |= 1ull << i;
    return g.labels_of(m);
}

namespace detail {

inline bool is_clique(const Graph& g, std::uint64_t mask) {
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (!((mask >> i) & 1u)) continue;
        std::uint64_t rest = mask & ~(1ull << i);
        if ((g.adjacency_mask(i) & rest) != rest) return false;
    }
    return true;
}

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

} // namespace detail

// Vertices whose open neighborhood induces a complete graph, canonical order.
inline std::vector<std::string> simplicial_vertices(const Graph& g) {
    std::vector<std::string> out;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (detail::is_clique(g, g.adjacency_mask(i))) out.push_back(g.label(i));
    return out;
}

// Chordality via perfect elimination: repeatedly delete a simplicial vertex.
inline bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t alive = g.full_mask();
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
            if (!((alive >> i) & 1u)) continue;
            if (detail::is_clique(g, g.adjacency_mask(i) & alive)) pick = i;
        }
        if (pick < 0) return false;
        alive &= ~(1ull << pick);
    }
    return true;
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int i = 0; i < n; ++i)
            if ((frontier >> i) & 1u) next |= g.adjacency_mask(i);
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == g.full_mask();
}

// Disjoint cliques covering the vertex set. The list order defines the block
// indexing A_1, ..., A_t, and the order inside each clique defines w(i,1),
// w(i,2), ... used by the whisker order.
struct CliquePartition {
    std::vector<std::vector<std::string>> cliques;

    void validate(const Graph& g) const {
        std::uint64_t seen = 0;
        for (const auto& c : cliques) {
            if (c.empty()) throw std::invalid_argument("empty clique in partition");
            std::uint64_t m = g.mask_of(c);
            if (detail::popcount(m) != static_cast<int>(c.size()))
                throw std::invalid_argument("repeated vertex inside a clique");
            if (m & seen) throw std::invalid_argument("cliques are not disjoint");
            if (!detail::is_clique(g, m))
                throw std::invalid_argument("partition block is not a clique");
            seen |= m;
        }
        if (seen != g.full_mask())
            throw std::invalid_argument("cliques do not cover the vertex set");
    }
};

struct VertexRole {
    bool apex = false;
    int block = 0; // 1-based block index
    int pos = 0;   // 1-based position inside the block; 0 for the apex
};

// A graph G together with a clique partition and one fresh apex per block,
// each apex joined to all of its block. Vertices are ordered
// w(1,1) > ... > w(1,r_1) > v(1) > w(2,1) > ... > v(t), and that order is the
// ring order of every ideal built from the graph.
class CliqueWhiskeredGraph {
public:
    const Graph& graph() const { return graph_; }
    const Graph& base() const { return base_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
    const std::vector<std::string>& block(int i) const { return blocks_.at(i); }
    const std::string& apex(int i) const { return apexes_.at(i); }
    const std::vector<std::string>& apexes() const { return apexes_; }

    const VertexRole& role(const std::string& v) const {
        auto it = roles_.find(v);
        if (it == roles_.end())
            throw std::invalid_argument("unknown vertex '" + v + "'");
        return it->second;
    }
    bool is_apex(const std::string& v) const { return role(v).apex; }

    RingPtr ring() const { return graph_.ring(); }

    std::uint64_t base_mask() const {
        std::uint64_t m = 0;
        for (int i = 0; i < graph_.vertex_count(); ++i)
            if (!roles_.at(graph_.label(i)).apex) m |= 1ull << i;
        return m;
    }

    static CliqueWhiskeredGraph assemble(const Graph& base, CliquePartition pi,
                                         std::vector<std::string> apex_labels) {
        pi.validate(base);
        if (apex_labels.size() != pi.cliques.size())
            throw std::invalid_argument("one apex label per clique required");
        CliqueWhiskeredGraph w;
        std::vector<std::string> order;
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [i, j] : base.edges())
            edges.emplace_back(base.label(i), base.label(j));
        for (std::size_t i = 0; i < pi.cliques.size(); ++i) {
            const auto& a = apex_labels[i];
            if (base.has_vertex(a) ||
                std::count(apex_labels.begin(), apex_labels.end(), a) != 1)
                throw std::invalid_argument("apex label '" + a + "' collides");
            for (std::size_t j = 0; j < pi.cliques[i].size(); ++j) {
                order.push_back(pi.cliques[i][j]);
                w.roles_[pi.cliques[i][j]] =
                    VertexRole{false, static_cast<int>(i) + 1, static_cast<int>(j) + 1};
                edges.emplace_back(a, pi.cliques[i][j]);
            }
            order.push_back(a);
            w.roles_[a] = VertexRole{true, static_cast<int>(i) + 1, 0};
        }
        w.graph_ = Graph::build(std::move(order), edges);
        w.base_ = base;
        w.blocks_ = std::move(pi.cliques);
        w.apexes_ = std::move(apex_labels);
        return w;
    }

private:
    Graph graph_;
    Graph base_;
    std::vector<std::vector<std::string>> blocks_;
    std::vector<std::string> apexes_;
    std::unordered_map<std::string, VertexRole> roles_;
};

inline CliqueWhiskeredGraph clique_whisker(const Graph& g, const CliquePartition& pi,
                                           std::vector<std::string> apex_labels) {
    return CliqueWhiskeredGraph::assemble(g, pi, std::move(apex_labels));
}

// Default apex labels "v1", "v2", ...; a collision with an existing label is
// an error, not a silent rename.
inline CliqueWhiskeredGraph clique_whisker(const Graph& g, const CliquePartition& pi) {
    std::vector<std::string> apexes;
    for (std::size_t i = 0; i < pi.cliques.size(); ++i)
        apexes.push_back("v" + std::to_string(i + 1));
    return clique_whisker(g, pi, std::move(apexes));
}

// The whiskered cycle on 2k cycle vertices x_i with whiskers y_i: 4k vertices
// and 4k edges.
inline CliqueWhiskeredGraph whiskered_cycle(int k) {
    if (k < 2) throw std::invalid_argument("whiskered_cycle requires k >= 2");
    int n = 2 * k;
    std::vector<std::string> xs;
    for (int i = 1; i <= n; ++i) xs.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(xs[i], xs[(i + 1) % n]);
    Graph cycle = Graph::build(xs, edges);
    CliquePartition pi;
    std::vector<std::string> ys;
    for (int i = 1; i <= n; ++i) {
        pi.cliques.push_back({xs[i - 1]});
        ys.push_back("y" + std::to_string(i));
    }
    return clique_whisker(cycle, pi, std::move(ys));
}

// For a connected bipartite H with parts {1..m} and {m+1..n} (vertices in
// declared order), attaches a pendant triangle to each of the first m
// vertices and a leaf to each of the rest. The triangle partner of a vertex
// labelled L is labelled L'.
inline CliqueWhiskeredGraph cm_cameron_walker(const Graph& h, int m) {
    int n = h.vertex_count();
    if (m < 1 || m >= n)
        throw std::invalid_argument("cm_cameron_walker requires 1 <= m < |V(H)|");
    for (const auto& [i, j] : h.edges())
        if ((i < m) == (j < m))
            throw std::invalid_argument("H is not bipartite with the declared parts");
    if (!is_connected(h))
        throw std::invalid_argument("H must be connected");
    std::vector<std::pair<std::string, std::string>> base_edges;
    for (const auto& [i, j] : h.edges())
        base_edges.emplace_back(h.label(i), h.label(j));
    CliquePartition pi;
    for (int i = 0; i < n; ++i) {
        const std::string& w1 = h.label(i);
        if (i < m) {
            std::string w2 = w1 + "'";
            if (h.has_vertex(w2))
                throw std::invalid_argument("label '" + w2 + "' collides");
            base_edges.emplace_back(w1, w2);
            pi.cliques.push_back({w1, w2});
        } else {
            pi.cliques.push_back({w1});
        }
    }
    // Keep the base vertex order interleaved with the block order.
    std::vector<std::string> ordered;
    for (const auto& c : pi.cliques)
        for (const auto& v : c) ordered.push_back(v);
    Graph base = Graph::build(std::move(ordered), base_edges);
    std::vector<std::string> apexes;
    for (int i = 1; i <= n; ++i) apexes.push_back("v" + std::to_string(i));
    return clique_whisker(base, pi, std::move(apexes));
}

// Corona of Γ with complete graphs: vertex i of Γ is joined to a complete
// graph on t_i vertices, one of which acts as the whisker apex. New vertices
// for Γ-vertex L are L_2, ..., L_{t_i} and the apex v{i}.
inline CliqueWhiskeredGraph clique_corona(const Graph& gamma, const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != gamma.vertex_count())
        throw std::invalid_argument("clique_corona: one t_i per vertex required");
    for (int ti : t)
        if (ti < 1) throw std::invalid_argument("clique_corona: t_i >= 1 required");
    std::vector<std::pair<std::string, std::string>> base_edges;
    for (const auto& [i, j] : gamma.edges())
        base_edges.emplace_back(gamma.label(i), gamma.label(j));
    CliquePartition pi;
    for (int i = 0; i < gamma.vertex_count(); ++i) {
        std::vector<std::string> block = {gamma.label(i)};
        for (int j = 2; j <= t[i]; ++j) {
            std::string w = gamma.label(i) + "_" + std::to_string(j);
            if (gamma.has_vertex(w))
                throw std::invalid_argument("label '" + w + "' collides");
            block.push_back(w);
        }
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                base_edges.emplace_back(block[a], block[b]);
        pi.cliques.push_back(std::move(block));
    }
    std::vector<std::string> ordered;
    for (const auto& c : pi.cliques)
        for (const auto& v : c) ordered.push_back(v);
    Graph base = Graph::build(std::move(ordered), base_edges);
    std::vector<std::string> apexes;
    for (int i = 1; i <= gamma.vertex_count(); ++i)
        apexes.push_back("v" + std::to_string(i));
    return clique_whisker(base, pi, std::move(apexes));
}

} // namespace homshift
