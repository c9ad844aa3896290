#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "homshift/caps.hpp"
#include "homshift/covers.hpp"
#include "homshift/graph.hpp"
#include "homshift/monomial.hpp"

namespace homshift {

// A generator order m_1 > m_2 > ... > m_r together with, per position, the
// variable set generating <m_1..m_{j-1}> : m_j. Instances exist only for
// verified orders.
struct LinearQuotientOrder {
    MonomialIdeal ideal;
    std::vector<Monomial> sequence;
    std::vector<std::vector<int>> quotient_sets; // [0] is empty

    int max_set_size() const {
        std::size_t m = 0;
        for (const auto& s : quotient_sets) m = std::max(m, s.size());
        return static_cast<int>(m);
    }
};

struct OrderFailure {
    int position = 0;  // 1-based index of the first generator whose colon fails
    Monomial witness;  // a non-variable minimal generator of that colon ideal
};

using VerifyResult = std::variant<LinearQuotientOrder, OrderFailure>;

inline bool verified(const VerifyResult& r) {
    return std::holds_alternative<LinearQuotientOrder>(r);
}

inline VerifyResult verify_order(const MonomialIdeal& I, const std::vector<Monomial>& seq) {
    auto sorted_gens = I.generators();
    auto sorted_seq = seq;
    std::sort(sorted_gens.begin(), sorted_gens.end());
    std::sort(sorted_seq.begin(), sorted_seq.end());
    if (sorted_gens != sorted_seq)
        throw std::invalid_argument("verify_order: sequence is not a permutation of the generators");

    LinearQuotientOrder out;
    out.ideal = I;
    out.sequence = seq;
    out.quotient_sets.assign(seq.size(), {});
    for (std::size_t j = 1; j < seq.size(); ++j) {
        std::vector<Monomial> quotients;
        quotients.reserve(j);
        for (std::size_t i = 0; i < j; ++i)
            quotients.push_back(exact_quotient(lcm(seq[i], seq[j]), seq[j]));
        MonomialIdeal colon = MonomialIdeal::make(I.ring(), std::move(quotients));
        std::vector<int> vars;
        for (const auto& q : colon.generators()) {
            if (q.degree() != 1)
                return OrderFailure{static_cast<int>(j) + 1, q};
            vars.push_back(q.terms().front().first);
        }
        std::sort(vars.begin(), vars.end());
        out.quotient_sets[j] = std::move(vars);
    }
    return out;
}

// Generators sorted lex-descending under the ring order (the stored order of
// a MonomialIdeal) or under a custom variable order.
inline std::vector<Monomial> lex_order(const MonomialIdeal& I) {
    return I.generators();
}

inline std::vector<Monomial> lex_order(const MonomialIdeal& I, const std::vector<int>& var_order) {
    auto seq = I.generators();
    std::stable_sort(seq.begin(), seq.end(), [&](const Monomial& a, const Monomial& b) {
        return lex_compare(a, b, var_order) > 0;
    });
    return seq;
}

// Backtracking search for a linear quotient order, complete within the cap:
// a prefix is extendable only through generators whose colon against the
// chosen set is variable-generated, and that condition depends on the set
// alone, so dead subsets are memoized.
inline std::optional<LinearQuotientOrder> find_order(const MonomialIdeal& I,
                                                     const Caps& caps = {}) {
    const auto& gens = I.generators();
    int r = static_cast<int>(gens.size());
    if (r > caps.find_order_cap)
        throw CapError("find_order: generator cap " +
                       std::to_string(caps.find_order_cap) + " exceeded");
    if (r <= 1) {
        LinearQuotientOrder out;
        out.ideal = I;
        out.sequence = gens;
        out.quotient_sets.assign(gens.size(), {});
        return out;
    }

    auto admissible = [&](std::uint32_t chosen, int cand) {
        std::vector<Monomial> quotients;
        for (int i = 0; i < r; ++i)
            if ((chosen >> i) & 1u)
                quotients.push_back(exact_quotient(lcm(gens[i], gens[cand]), gens[cand]));
        MonomialIdeal colon = MonomialIdeal::make(I.ring(), std::move(quotients));
        for (const auto& q : colon.generators())
            if (q.degree() != 1) return false;
        return true;
    };

    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order;
    std::uint32_t full = (r == 32) ? ~0u : ((1u << r) - 1);

    std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t chosen) -> bool {
        if (chosen == full) return true;
        if (dead.count(chosen)) return false;
        for (int c = 0; c < r; ++c) {
            if ((chosen >> c) & 1u) continue;
            if (chosen != 0 && !admissible(chosen, c)) continue;
            order.push_back(c);
            if (dfs(chosen | (1u << c))) return true;
            order.pop_back();
        }
        dead.insert(chosen);
        return false;
    };

    if (!dfs(0)) return std::nullopt;
    std::vector<Monomial> seq;
    seq.reserve(order.size());
    for (int i : order) seq.push_back(gens[i]);
    auto res = verify_order(I, seq);
    if (!verified(res))
        throw std::logic_error("find_order: search returned an unverifiable order");
    return std::get<LinearQuotientOrder>(res);
}

// set(C) for a minimal vertex cover of a clique-whiskered graph: the union
// over apexes of the open apex neighborhoods minus C. Always a set of base
// vertices.
inline std::vector<std::string> set_formula(const CliqueWhiskeredGraph& gw,
                                            const std::vector<std::string>& C) {
    const Graph& g = gw.graph();
    std::uint64_t cmask = g.mask_of(C);
    detail::require_minimal_cover(g, cmask, "set_formula");
    std::uint64_t m = 0;
    for (int i = 0; i < gw.block_count(); ++i)
        m |= g.adjacency_mask(g.index_of(gw.apex(i)));
    m &= ~cmask;
    return g.labels_of(m);
}

// HS_k through the linear quotient route: minimalize{ m_j X_σ } over all
// σ ⊆ set(m_j) with |σ| = k. The products all share one degree for an
// equigenerated ideal; `discarded` reports any product removed by strict
// divisibility (none expected, recorded for the reports).
inline MonomialIdeal hs_via_linear_quotients(const LinearQuotientOrder& order, int k,
                                             long long* discarded = nullptr) {
    if (k < 0) throw std::invalid_argument("hs_via_linear_quotients: k must be non-negative");
    const MonomialIdeal& I = order.ideal;
    if (I.is_zero()) {
        if (discarded) *discarded = 0;
        return I;
    }
    if (!I.is_equigenerated())
        throw std::invalid_argument("hs_via_linear_quotients requires an equigenerated ideal");

    std::set<Monomial> products;
    for (std::size_t j = 0; j < order.sequence.size(); ++j) {
        const auto& vars = order.quotient_sets[j];
        if (static_cast<int>(vars.size()) < k) continue;
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::function<void(std::size_t, int)> combos = [&](std::size_t pos, int start) {
            if (pos == pick.size()) {
                Monomial sigma = Monomial::from_support(
                    I.ring(), std::vector<int>(pick.begin(), pick.end()));
                products.insert(order.sequence[j] * sigma);
                return;
            }
            for (int i = start; i < static_cast<int>(vars.size()); ++i) {
                pick[pos] = vars[static_cast<std::size_t>(i)];
                combos(pos + 1, i + 1);
            }
        };
        if (k == 0)
            products.insert(order.sequence[j]);
        else
            combos(0, 0);
    }
    MonomialIdeal hs = MonomialIdeal::make(I.ring(),
                                           {products.begin(), products.end()});
    if (discarded)
        *discarded = static_cast<long long>(products.size()) -
                     static_cast<long long>(hs.generators().size());
    return hs;
}

// For every generator α of HS_k(J(G^π)) divisible by an apex v_i but not by
// some block member w_ij, the swap w_ij·α/v_i must again be a generator.
inline bool exchange_check(const CliqueWhiskeredGraph& gw, int k, const Caps& caps = {}) {
    const Graph& g = gw.graph();
    MonomialIdeal J = cover_ideal(g, caps);
    auto res = verify_order(J, lex_order(J));
    if (!verified(res))
        throw std::logic_error("exchange_check: lex order fails linear quotients");
    MonomialIdeal hs = hs_via_linear_quotients(std::get<LinearQuotientOrder>(res), k);
    if (hs.is_zero()) return true;
    std::set<Monomial> gens(hs.generators().begin(), hs.generators().end());
    RingPtr ring = J.ring();
    for (const auto& alpha : hs.generators()) {
        for (int i = 0; i < gw.block_count(); ++i) {
            int vi = g.index_of(gw.apex(i));
            if (alpha.exponent(vi) == 0) continue;
            for (const auto& wlabel : gw.block(i)) {
                int wj = g.index_of(wlabel);
                if (alpha.exponent(wj) != 0) continue;
                Monomial swapped =
                    exact_quotient(alpha, Monomial::variable(ring, vi)) *
                    Monomial::variable(ring, wj);
                if (!gens.count(swapped)) return false;
            }
        }
    }
    return true;
}

struct WpmViolation {
    Monomial u, v;
};

// Weakly polymatroidal check by the definition: for lex-comparable generators
// u > v with first exponent difference at x_t, some j > t must satisfy
// x_t (v / x_j) ∈ G(I). Returns the first violating pair, if any.
inline std::optional<WpmViolation> weakly_polymatroidal_violation(
    const MonomialIdeal& I, const std::vector<int>& var_order) {
    const auto& gens = I.generators();
    std::set<Monomial> gen_set(gens.begin(), gens.end());
    auto ordered = lex_order(I, var_order);
    RingPtr ring = I.ring();
    for (std::size_t a = 0; a < ordered.size(); ++a) {
        for (std::size_t b = a + 1; b < ordered.size(); ++b) {
            const Monomial& u = ordered[a];
            const Monomial& v = ordered[b];
            if (lex_compare(u, v, var_order) <= 0) continue;
            std::size_t t = 0;
            while (t < var_order.size() &&
                   u.exponent(var_order[t]) == v.exponent(var_order[t]))
                ++t;
            // u > v lex means the first difference favors u.
            Monomial xt = Monomial::variable(ring, var_order[t]);
            bool ok = false;
            for (std::size_t jp = t + 1; jp < var_order.size() && !ok; ++jp) {
                int xj = var_order[jp];
                if (v.exponent(xj) == 0) continue;
                Monomial cand =
                    exact_quotient(v, Monomial::variable(ring, xj)) * xt;
                ok = gen_set.count(cand) != 0;
            }
            if (!ok) return WpmViolation{u, v};
        }
    }
    return std::nullopt;
}

inline std::optional<WpmViolation> weakly_polymatroidal_violation(const MonomialIdeal& I) {
    std::vector<int> order(static_cast<std::size_t>(I.ring()->size()));
    std::iota(order.begin(), order.end(), 0);
    return weakly_polymatroidal_violation(I, order);
}

inline bool is_weakly_polymatroidal(const MonomialIdeal& I) {
    return !weakly_polymatroidal_violation(I).has_value();
}

inline bool is_weakly_polymatroidal(const MonomialIdeal& I, const std::vector<int>& var_order) {
    return !weakly_polymatroidal_violation(I, var_order).has_value();
}

namespace detail {

// Recursive generator order for HS_k of the cover ideal of a chordal
// clique-whiskered graph. The recursion splits at a simplicial base vertex w:
//   a·f_1 > ... > a·f_p > b·g_{θ_1} > ... > b·g_{θ_m} > c·e_1 > ... > c·e_s
// with a = X_{N[w]}, b = X_w, c = X_{N(w)}, f the order for (G\N[w], k-1),
// g for (G\w, k), e for (G\N[w], k), and θ the g-positions whose product is
// not already in the a-block. Every level is cross-checked against the
// direct description {X_C X_σ} of the generators.
class ChordalOrderBuilder {
public:
    ChordalOrderBuilder(const CliqueWhiskeredGraph& gw, const Caps& caps)
        : gw_(gw), caps_(caps), ring_(gw.ring()), base_mask_(gw.base_mask()) {}

    std::vector<Monomial> build(std::uint64_t mask, int k) {
        auto key = std::make_pair(mask, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const Graph& g = gw_.graph();
        bool has_edge = false;
        for (int i = 0; i < g.vertex_count() && !has_edge; ++i)
            if ((mask >> i) & 1u) has_edge = (g.adjacency_mask(i) & mask) != 0;

        std::vector<Monomial> result;
        if (!has_edge) {
            // Cover ideal of an edgeless graph is the unit ideal: pd 0.
            if (k == 0) result.push_back(Monomial::one(ring_));
        } else if (k == 0) {
            for (std::uint64_t c : covers(mask))
                result.push_back(monomial_of(c));
        } else {
            int w = split_vertex(mask);
            std::uint64_t bit = 1ull << w;
            std::uint64_t open = g.adjacency_mask(w) & mask;
            std::uint64_t closed = open | bit;

            std::vector<Monomial> f = build(mask & ~closed, k - 1);
            std::vector<Monomial> gg = build(mask & ~bit, k);
            std::vector<Monomial> e = build(mask & ~closed, k);

            Monomial a = monomial_of(closed);
            Monomial b = monomial_of(bit);
            Monomial c = monomial_of(open);

            std::set<Monomial> a_block;
            for (const auto& m : f) {
                result.push_back(a * m);
                a_block.insert(result.back());
            }
            for (const auto& m : gg) {
                Monomial prod = b * m;
                if (!a_block.count(prod)) result.push_back(std::move(prod));
            }
            for (const auto& m : e) result.push_back(c * m);

            cross_check(mask, k, result);
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    // Smallest simplicial base vertex in the whisker order, i.e. the one
    // with the largest ring index.
    int split_vertex(std::uint64_t mask) const {
        const Graph& g = gw_.graph();
        for (int i = g.vertex_count() - 1; i >= 0; --i) {
            if (!((mask >> i) & 1u) || !((base_mask_ >> i) & 1u)) continue;
            std::uint64_t nbrs = g.adjacency_mask(i) & mask & base_mask_;
            if (is_clique(g, nbrs)) return i;
        }
        throw std::logic_error("chordal recursion: no simplicial base vertex");
    }

    Monomial monomial_of(std::uint64_t mask) const {
        std::vector<int> support;
        for (int i = 0; i < gw_.graph().vertex_count(); ++i)
            if ((mask >> i) & 1u) support.push_back(i);
        return Monomial::from_support(ring_, std::move(support));
    }

    const std::vector<std::uint64_t>& covers(std::uint64_t mask) {
        auto it = covers_memo_.find(mask);
        if (it == covers_memo_.end())
            it = covers_memo_
                     .emplace(mask, minimal_cover_masks(gw_.graph(), mask, caps_))
                     .first;
        return it->second;
    }

    void cross_check(std::uint64_t mask, int k, const std::vector<Monomial>& result) {
        std::set<Monomial> direct;
        for (std::uint64_t c : covers(mask)) {
            std::vector<int> free_vars;
            std::uint64_t free_mask = mask & base_mask_ & ~c;
            for (int i = 0; i < gw_.graph().vertex_count(); ++i)
                if ((free_mask >> i) & 1u) free_vars.push_back(i);
            if (static_cast<int>(free_vars.size()) < k) continue;
            std::vector<int> pick(static_cast<std::size_t>(k));
            std::function<void(std::size_t, std::size_t)> combos =
                [&](std::size_t pos, std::size_t start) {
                    if (pos == pick.size()) {
                        std::uint64_t sigma = 0;
                        for (int v : pick) sigma |= 1ull << v;
                        direct.insert(monomial_of(c | sigma));
                        return;
                    }
                    for (std::size_t i = start; i < free_vars.size(); ++i) {
                        pick[pos] = free_vars[i];
                        combos(pos + 1, i + 1);
                    }
                };
            combos(0, 0);
        }
        std::set<Monomial> got(result.begin(), result.end());
        if (got != direct || got.size() != result.size())
            throw std::logic_error("chordal recursion: block order disagrees with the "
                                   "direct generator description");
    }

    const CliqueWhiskeredGraph& gw_;
    Caps caps_;
    RingPtr ring_;
    std::uint64_t base_mask_;
    std::map<std::pair<std::uint64_t, int>, std::vector<Monomial>> memo_;
    std::map<std::uint64_t, std::vector<std::uint64_t>> covers_memo_;
};

} // namespace detail

// Recursive generator order for HS_k(J(G^π)) of a Cohen-Macaulay chordal
// graph (chordal base). The returned sequence is expected to pass
// verify_order against HS_k.
inline std::vector<Monomial> chordal_hs_order(const CliqueWhiskeredGraph& gw, int k,
                                              const Caps& caps = {}) {
    if (k < 0) throw std::invalid_argument("chordal_hs_order: k must be non-negative");
    if (!is_chordal(gw.base()))
        throw std::invalid_argument("chordal_hs_order: base graph is not chordal");
    detail::ChordalOrderBuilder builder(gw, caps);
    return builder.build(gw.graph().full_mask(), k);
}

} // namespace homshift
