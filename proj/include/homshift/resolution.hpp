#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "homshift/caps.hpp"
#include "homshift/monomial.hpp"

namespace homshift {

// All distinct lcms of non-empty subsets of the generators, by iterated
// pairwise closure. These are the only multidegrees that can carry nonzero
// Betti numbers.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, const Caps& caps = {}) {
    if (static_cast<int>(I.generators().size()) > caps.max_generators)
        throw CapError("lcm_lattice: generator cap " +
                       std::to_string(caps.max_generators) + " exceeded");
    std::set<Monomial> closure(I.generators().begin(), I.generators().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Monomial> fresh;
        for (const auto& a : closure)
            for (const auto& g : I.generators()) {
                Monomial m = lcm(a, g);
                if (!closure.count(m)) fresh.push_back(std::move(m));
            }
        for (auto& m : fresh)
            grew |= closure.insert(std::move(m)).second;
    }
    return {closure.begin(), closure.end()};
}

// Simplicial complex on a list of variable indices, stored by maximal faces
// (bitmasks over ground positions, sorted). No maximal faces = void complex;
// the complex {∅} is stored as the single mask 0.
struct SimplicialComplex {
    std::vector<int> ground;
    std::vector<std::uint64_t> maximal;

    bool is_void() const { return maximal.empty(); }

    // A vertex lying in every maximal face makes the complex a cone, hence
    // contractible.
    bool is_cone() const {
        if (maximal.empty()) return false;
        std::uint64_t common = ~0ull;
        for (std::uint64_t m : maximal) common &= m;
        return common != 0;
    }

    std::vector<std::uint64_t> all_faces(const Caps& caps = {}) const {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t top : maximal) {
            std::uint64_t sub = top;
            while (true) {
                seen.insert(sub);
                if (static_cast<long long>(seen.size()) > caps.max_faces)
                    throw CapError("simplicial complex face cap exceeded");
                if (sub == 0) break;
                sub = (sub - 1) & top;
            }
        }
        std::vector<std::uint64_t> faces(seen.begin(), seen.end());
        std::sort(faces.begin(), faces.end());
        return faces;
    }
};

// Faces are the σ ⊆ supp(a) with x^a / X_σ ∈ I. For each generator g | x^a
// the admissible σ form the power set of {v ∈ supp(a) : deg_v(g) < deg_v(a)},
// so those sets are the maximal face candidates.
inline SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a) {
    require_same_ring(I.ring(), a.ring(), "upper_koszul_complex");
    SimplicialComplex K;
    K.ground = a.support();
    if (K.ground.size() > 64)
        throw CapError("upper_koszul_complex: support too large");
    std::vector<std::uint64_t> candidates;
    for (const auto& g : I.generators()) {
        if (!divides(g, a)) continue;
        std::uint64_t m = 0;
        for (std::size_t p = 0; p < K.ground.size(); ++p)
            if (g.exponent(K.ground[p]) < a.exponent(K.ground[p])) m |= 1ull << p;
        candidates.push_back(m);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::uint64_t m : candidates) {
        bool dominated = false;
        for (std::uint64_t o : candidates)
            if (o != m && (m & o) == m) { dominated = true; break; }
        if (!dominated) K.maximal.push_back(m);
    }
    return K;
}

struct HomologyRanks {
    // ranks[d + 1] = rank of the reduced homology in dimension d, d >= -1.
    std::vector<long long> ranks;

    long long rank(int dim) const {
        int idx = dim + 1;
        if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
        return ranks[idx];
    }
    int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
};

namespace detail {

// Exact rank over the rationals by integer row elimination. Unit pivots keep
// the arithmetic division-free; non-unit pivots use cross-multiplication
// followed by a gcd reduction of the updated row.
inline long long rank_exact(std::vector<std::vector<std::pair<int, Int>>> rows) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) active.push_back(i);

    long long rank = 0;
    while (!active.empty()) {
        std::unordered_map<int, int> col_count;
        for (std::size_t i : active)
            for (const auto& [c, v] : rows[i]) ++col_count[c];

        std::size_t best_pos = 0;
        int best_col = -1;
        long long best_score = -1;
        for (std::size_t pos = 0; pos < active.size(); ++pos) {
            const auto& row = rows[active[pos]];
            for (const auto& [c, v] : row) {
                bool unit = (v == 1 || v == -1);
                long long score = (unit ? 0ll : (1ll << 40)) +
                                  static_cast<long long>(row.size() - 1) * col_count[c];
                if (best_col < 0 || score < best_score) {
                    best_score = score;
                    best_col = c;
                    best_pos = pos;
                }
            }
        }

        std::size_t pr = active[best_pos];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_pos));
        ++rank;

        const auto& prow = rows[pr];
        Int p;
        for (const auto& [c, v] : prow)
            if (c == best_col) p = v;
        bool unit_pivot = (p == 1 || p == -1);

        std::vector<std::size_t> still;
        still.reserve(active.size());
        for (std::size_t i : active) {
            Int e = 0;
            for (const auto& [c, v] : rows[i])
                if (c == best_col) e = v;
            if (e != 0) {
                std::vector<std::pair<int, Int>> out;
                out.reserve(rows[i].size() + prow.size());
                // row := p*row - e*prow (or row - (e*p)*prow for unit p)
                Int alpha = unit_pivot ? Int(1) : p;
                Int beta = unit_pivot ? Int(e * p) : e;
                std::size_t x = 0, y = 0;
                const auto& r = rows[i];
                while (x < r.size() || y < prow.size()) {
                    if (y == prow.size() || (x < r.size() && r[x].first < prow[y].first)) {
                        out.emplace_back(r[x].first, alpha * r[x].second);
                        ++x;
                    } else if (x == r.size() || prow[y].first < r[x].first) {
                        out.emplace_back(prow[y].first, -beta * prow[y].second);
                        ++y;
                    } else {
                        Int v = alpha * r[x].second - beta * prow[y].second;
                        if (v != 0) out.emplace_back(r[x].first, std::move(v));
                        ++x;
                        ++y;
                    }
                }
                if (!unit_pivot && !out.empty()) {
                    Int g = 0;
                    for (const auto& [c, v] : out) g = boost::multiprecision::gcd(g, v);
                    if (g > 1)
                        for (auto& [c, v] : out) v /= g;
                }
                rows[i] = std::move(out);
            }
            if (!rows[i].empty()) still.push_back(i);
        }
        active = std::move(still);
    }
    return rank;
}

} // namespace detail

// Ranks of reduced simplicial homology with exact rational coefficients:
// rank H~_d = n_d - rank ∂_d - rank ∂_{d+1}.
inline HomologyRanks reduced_homology_ranks(const SimplicialComplex& K,
                                            const Caps& caps = {}) {
    HomologyRanks h;
    if (K.is_void()) return h;
    if (K.is_cone()) {
        int top = 0;
        for (std::uint64_t m : K.maximal)
            top = std::max(top, __builtin_popcountll(m));
        h.ranks.assign(static_cast<std::size_t>(top) + 1, 0);
        return h;
    }

    std::vector<std::uint64_t> faces = K.all_faces(caps);
    int top_dim = -1;
    for (std::uint64_t f : faces)
        top_dim = std::max(top_dim, __builtin_popcountll(f) - 1);

    std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(top_dim) + 2);
    for (std::uint64_t f : faces)
        by_dim[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);

    std::vector<long long> boundary_rank(static_cast<std::size_t>(top_dim) + 3, 0);
    for (int d = 0; d <= top_dim; ++d) {
        const auto& cols = by_dim[static_cast<std::size_t>(d) + 1];
        const auto& lower = by_dim[static_cast<std::size_t>(d)];
        if (cols.empty() || lower.empty()) continue;
        std::unordered_map<std::uint64_t, int> row_index;
        for (std::size_t i = 0; i < lower.size(); ++i) row_index[lower[i]] = static_cast<int>(i);
        // Rows indexed by d-faces (columns of the chain map become rows here;
        // rank is transpose-invariant).
        std::vector<std::vector<std::pair<int, Int>>> rows(cols.size());
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            std::uint64_t f = cols[ci];
            int sign = 1, elt = 0;
            for (std::uint64_t t = f; t; t &= t - 1, ++elt) {
                int b = __builtin_ctzll(t);
                std::uint64_t sub = f & ~(1ull << b);
                rows[ci].emplace_back(row_index.at(sub), Int(sign));
                sign = -sign;
            }
            std::sort(rows[ci].begin(), rows[ci].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        boundary_rank[static_cast<std::size_t>(d) + 1] = detail::rank_exact(std::move(rows));
    }

    h.ranks.assign(static_cast<std::size_t>(top_dim) + 2, 0);
    for (int d = -1; d <= top_dim; ++d) {
        long long n_d = static_cast<long long>(by_dim[static_cast<std::size_t>(d) + 1].size());
        h.ranks[static_cast<std::size_t>(d) + 1] =
            n_d - boundary_rank[static_cast<std::size_t>(d) + 1] -
            boundary_rank[static_cast<std::size_t>(d) + 2];
    }
    return h;
}

// Reduced Euler characteristic from face counts alone (independent of any
// rank computation).
inline long long reduced_euler_characteristic(const SimplicialComplex& K,
                                              const Caps& caps = {}) {
    if (K.is_void()) return 0;
    long long chi = 0;
    for (std::uint64_t f : K.all_faces(caps))
        chi += (__builtin_popcountll(f) % 2 == 0) ? -1 : 1; // dim = popcount - 1
    return chi;
}

// Multigraded Betti numbers: beta(k, a) = rank H~_{k-1} of the upper Koszul
// complex of I at a, over the lcm lattice.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(MonomialIdeal ideal, std::map<int, std::map<Monomial, int>> entries)
        : ideal_(std::move(ideal)), entries_(std::move(entries)) {}

    const MonomialIdeal& ideal() const { return ideal_; }
    const std::map<int, std::map<Monomial, int>>& entries() const { return entries_; }

    int beta(int k, const Monomial& a) const {
        auto it = entries_.find(k);
        if (it == entries_.end()) return 0;
        auto jt = it->second.find(a);
        return jt == it->second.end() ? 0 : jt->second;
    }

    bool empty() const { return entries_.empty(); }

private:
    MonomialIdeal ideal_;
    std::map<int, std::map<Monomial, int>> entries_;
};

inline BettiTable betti_table(const MonomialIdeal& I, const Caps& caps = {}) {
    std::map<int, std::map<Monomial, int>> entries;
    if (I.is_zero()) return BettiTable(I, std::move(entries));
    std::vector<Monomial> lattice = lcm_lattice(I, caps);

    std::vector<HomologyRanks> results(lattice.size());
    auto work = [&](std::size_t idx) {
        SimplicialComplex K = upper_koszul_complex(I, lattice[idx]);
        results[idx] = reduced_homology_ranks(K, caps);
    };

    int jobs = std::max(1, caps.jobs);
    if (jobs == 1 || lattice.size() < 2) {
        for (std::size_t i = 0; i < lattice.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= lattice.size()) break;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                    break;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }

    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& h = results[i];
        for (int d = -1; d <= h.top_dimension(); ++d) {
            long long r = h.rank(d);
            if (r > 0) entries[d + 1][lattice[i]] = static_cast<int>(r);
        }
    }
    return BettiTable(I, std::move(entries));
}

inline int projective_dimension(const BettiTable& t) {
    if (t.ideal().is_zero())
        throw std::invalid_argument("projective dimension of the zero ideal is undefined");
    if (t.empty()) throw std::invalid_argument("projective dimension: empty Betti table");
    return t.entries().rbegin()->first;
}

inline long long regularity(const BettiTable& t) {
    if (t.empty()) throw std::invalid_argument("regularity: empty Betti table");
    long long reg = std::numeric_limits<long long>::min();
    for (const auto& [k, row] : t.entries())
        for (const auto& [a, b] : row)
            reg = std::max(reg, a.degree_ll() - k);
    return reg;
}

inline bool has_linear_resolution(const MonomialIdeal& I, const Caps& caps = {}) {
    if (!I.is_equigenerated())
        throw std::invalid_argument("has_linear_resolution requires an equigenerated ideal");
    BettiTable t = betti_table(I, caps);
    return regularity(t) == I.generation_degree();
}

inline MonomialIdeal hs_from_betti(const BettiTable& t, int k) {
    if (k < 0) throw std::invalid_argument("hs_from_betti: k must be non-negative");
    std::vector<Monomial> gens;
    auto it = t.entries().find(k);
    if (it != t.entries().end())
        for (const auto& [a, b] : it->second) gens.push_back(a);
    return MonomialIdeal::make(t.ideal().ring(), std::move(gens));
}

// k-th homological shift ideal straight from the definition; the zero ideal
// whenever k exceeds the projective dimension.
inline MonomialIdeal hs_from_betti(const MonomialIdeal& I, int k, const Caps& caps = {}) {
    if (k < 0) throw std::invalid_argument("hs_from_betti: k must be non-negative");
    if (I.is_zero()) return I;
    return hs_from_betti(betti_table(I, caps), k);
}

} // namespace homshift
