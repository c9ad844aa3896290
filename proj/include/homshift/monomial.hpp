#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homshift {

// Exponents are arbitrary-precision so lcm/colon arithmetic is uniform even
// away from the squarefree range.
using Int = boost::multiprecision::cpp_int;

// An ordered variable list. Index 0 is the strongest variable in the
// lexicographic order.
struct Ring {
    std::vector<std::string> variables;
    std::unordered_map<std::string, int> index;

    int index_of(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end())
            throw std::invalid_argument("unknown variable '" + name + "'");
        return it->second;
    }
    int size() const { return static_cast<int>(variables.size()); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> variables) {
    auto r = std::make_shared<Ring>();
    for (int i = 0; i < static_cast<int>(variables.size()); ++i) {
        if (!r->index.emplace(variables[i], i).second)
            throw std::invalid_argument("duplicate variable '" + variables[i] + "'");
    }
    r->variables = std::move(variables);
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->variables == b->variables;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!same_ring(a, b))
        throw std::invalid_argument(std::string(op) + ": variable universe mismatch");
}

// Sparse monomial: sorted (variable index, exponent) pairs, exponents > 0.
class Monomial {
public:
    using Term = std::pair<int, Int>;

    Monomial() = default;

    static Monomial one(RingPtr ring) {
        Monomial m;
        m.ring_ = std::move(ring);
        return m;
    }

    static Monomial variable(const RingPtr& ring, int var) {
        return from_terms(ring, {{var, Int(1)}});
    }

    // Squarefree monomial over the given support.
    static Monomial from_support(const RingPtr& ring, std::vector<int> support) {
        std::sort(support.begin(), support.end());
        std::vector<Term> terms;
        terms.reserve(support.size());
        for (int v : support) terms.emplace_back(v, Int(1));
        return from_terms(ring, std::move(terms));
    }

    static Monomial from_terms(RingPtr ring, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Monomial m;
        m.ring_ = std::move(ring);
        for (auto& [v, e] : terms) {
            if (v < 0 || v >= m.ring_->size())
                throw std::invalid_argument("variable index out of range");
            if (e < 0) throw std::invalid_argument("negative exponent");
            if (e == 0) continue;
            if (!m.terms_.empty() && m.terms_.back().first == v)
                throw std::invalid_argument("repeated variable in term list");
            m.terms_.emplace_back(v, std::move(e));
        }
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_one() const { return terms_.empty(); }

    Int degree() const {
        Int d = 0;
        for (const auto& [v, e] : terms_) d += e;
        return d;
    }

    long long degree_ll() const {
        Int d = degree();
        if (d > (std::numeric_limits<long long>::max)())
            throw std::overflow_error("degree too large");
        return d.convert_to<long long>();
    }

    Int exponent(int var) const {
        for (const auto& [v, e] : terms_) {
            if (v == var) return e;
            if (v > var) break;
        }
        return 0;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(terms_.size());
        for (const auto& [v, e] : terms_) s.push_back(v);
        return s;
    }

    bool is_squarefree() const {
        for (const auto& [v, e] : terms_)
            if (e > 1) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // Structural order for deterministic containers (not the lex order).
    bool operator<(const Monomial& o) const { return terms_ < o.terms_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        require_same_ring(a.ring_, b.ring_, "product");
        Monomial r;
        r.ring_ = a.ring_;
        r.terms_ = merge(a.terms_, b.terms_, [](const Int& x, const Int& y) { return x + y; });
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        require_same_ring(a.ring_, b.ring_, "lcm");
        Monomial r;
        r.ring_ = a.ring_;
        r.terms_ = merge(a.terms_, b.terms_,
                         [](const Int& x, const Int& y) { return x > y ? x : y; });
        return r;
    }

    friend bool divides(const Monomial& a, const Monomial& b) {
        require_same_ring(a.ring_, b.ring_, "divides");
        std::size_t j = 0;
        for (const auto& [v, e] : a.terms_) {
            while (j < b.terms_.size() && b.terms_[j].first < v) ++j;
            if (j == b.terms_.size() || b.terms_[j].first != v || b.terms_[j].second < e)
                return false;
        }
        return true;
    }

    // Exact quotient a / b; requires divides(b, a).
    friend Monomial exact_quotient(const Monomial& a, const Monomial& b) {
        require_same_ring(a.ring_, b.ring_, "quotient");
        if (!divides(b, a)) throw std::invalid_argument("quotient: not divisible");
        Monomial r;
        r.ring_ = a.ring_;
        std::size_t j = 0;
        for (const auto& [v, e] : a.terms_) {
            Int sub = 0;
            while (j < b.terms_.size() && b.terms_[j].first < v) ++j;
            if (j < b.terms_.size() && b.terms_[j].first == v) sub = b.terms_[j].second;
            if (e > sub) r.terms_.emplace_back(v, e - sub);
        }
        return r;
    }

private:
    template <typename Op>
    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Op op) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.emplace_back(a[i].first, op(a[i].second, Int(0)));
                ++i;
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, op(Int(0), b[j].second));
                ++j;
            } else {
                out.emplace_back(a[i].first, op(a[i].second, b[j].second));
                ++i;
                ++j;
            }
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return t.second == 0; }),
                  out.end());
        return out;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Three-way lexicographic comparison under the ring's variable order:
// -1 when u < v, 0 on equality, +1 when u > v.
inline int lex_compare(const Monomial& u, const Monomial& v) {
    require_same_ring(u.ring(), v.ring(), "lex_compare");
    const auto& a = u.terms();
    const auto& b = v.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) return 1;  // u has a stronger variable
        if (b[j].first < a[i].first) return -1;
        if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

// Lex comparison under a custom variable order (list of variable indices,
// strongest first; must be a permutation of the ring's variables).
inline int lex_compare(const Monomial& u, const Monomial& v, const std::vector<int>& order) {
    require_same_ring(u.ring(), v.ring(), "lex_compare");
    for (int var : order) {
        Int a = u.exponent(var), b = v.exponent(var);
        if (a != b) return a > b ? 1 : -1;
    }
    return 0;
}

struct LexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_compare(a, b) > 0;
    }
};

// Monomial ideal stored by its minimal generators, sorted lex-descending.
// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(RingPtr ring) {
        MonomialIdeal I;
        I.ring_ = std::move(ring);
        return I;
    }

    static MonomialIdeal unit(RingPtr ring) {
        MonomialIdeal I;
        I.ring_ = ring;
        I.gens_ = {Monomial::one(std::move(ring))};
        return I;
    }

    // Minimalizes and canonically sorts the given generating set.
    static MonomialIdeal make(RingPtr ring, std::vector<Monomial> gens) {
        for (const auto& g : gens) require_same_ring(ring, g.ring(), "ideal generator");
        MonomialIdeal I;
        I.ring_ = std::move(ring);
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                redundant = i != j && divides(gens[j], gens[i]);
            if (!redundant) I.gens_.push_back(gens[i]);
        }
        std::sort(I.gens_.begin(), I.gens_.end(), LexDescending{});
        return I;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const {
        require_same_ring(ring_, m.ring(), "contains");
        for (const auto& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }

    bool is_equigenerated() const {
        if (gens_.empty()) return false;
        Int d = gens_.front().degree();
        for (const auto& g : gens_)
            if (g.degree() != d) return false;
        return true;
    }

    Int generation_degree() const {
        if (!is_equigenerated())
            throw std::invalid_argument("ideal is not equigenerated");
        return gens_.front().degree();
    }

    bool operator==(const MonomialIdeal& o) const {
        require_same_ring(ring_, o.ring_, "equals");
        return gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(const RingPtr& ring, std::vector<Monomial> gens) {
    return MonomialIdeal::make(ring, std::move(gens));
}

// <generators(I)> : m, computed as minimalize{ lcm(g, m)/m }.
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m) {
    require_same_ring(I.ring(), m.ring(), "colon");
    std::vector<Monomial> q;
    q.reserve(I.generators().size());
    for (const auto& g : I.generators()) q.push_back(exact_quotient(lcm(g, m), m));
    return MonomialIdeal::make(I.ring(), std::move(q));
}

inline MonomialIdeal scale(const MonomialIdeal& I, const Monomial& m) {
    require_same_ring(I.ring(), m.ring(), "scale");
    std::vector<Monomial> g;
    g.reserve(I.generators().size());
    for (const auto& x : I.generators()) g.push_back(x * m);
    return MonomialIdeal::make(I.ring(), std::move(g));
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "sum");
    std::vector<Monomial> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::make(I.ring(), std::move(g));
}

inline bool equals(const MonomialIdeal& I, const MonomialIdeal& J) { return I == J; }

} // namespace homshift
