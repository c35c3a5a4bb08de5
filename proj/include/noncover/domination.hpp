#ifndef NONCOVER_DOMINATION_HPP
#define NONCOVER_DOMINATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncover/graph.hpp"

namespace noncover {

// A domination quantity: a non-negative integer or the distinguished
// infinity (an isolated vertex can never be dominated).  Infinity is a
// variant, not a sentinel: value() refuses to produce a number for it, so
// bound arithmetic like n - igamma - 1 cannot silently go wrong.
class DominationValue {
public:
    static DominationValue finite(int v) {
        if (v < 0) throw std::invalid_argument("domination value must be non-negative");
        DominationValue d;
        d.value_ = v;
        return d;
    }

    static DominationValue infinity() { return DominationValue{}; }

    bool is_finite() const { return value_ >= 0; }

    int value() const {
        if (!is_finite()) throw std::logic_error("domination value is infinite");
        return value_;
    }

    friend bool operator==(DominationValue a, DominationValue b) { return a.value_ == b.value_; }
    friend bool operator!=(DominationValue a, DominationValue b) { return !(a == b); }

    std::string to_string() const { return is_finite() ? std::to_string(value_) : "infinity"; }

private:
    int value_ = -1;
};

// True iff every vertex of `a` has a neighbor in `d`.  Membership of a
// vertex in `d` does not count: a vertex is not its own neighbor.
bool dominates(const Graph& g, VertexSet d, VertexSet a);

// Weak variant: a vertex of `a` may also be covered by belonging to `w`.
bool weakly_dominates(const Graph& g, VertexSet w, VertexSet a);

struct GammaResult {
    DominationValue value;
    VertexSet witness;  // a minimum (weakly) dominating set; meaningful only when finite
};

// gamma(G;A): minimum size of a set dominating A.  Infinite iff A contains
// an isolated vertex.  Exact search: iterative deepening over sizes, with
// candidates restricted to the union of the neighborhoods of A.
GammaResult gamma(const Graph& g, VertexSet a);

// gamma_w(G;A): minimum size of a set weakly dominating A; always finite.
GammaResult gamma_w(const Graph& g, VertexSet a);

// All maximal independent sets, each exactly once, sorted by ascending bit
// mask (Bron-Kerbosch with pivoting on the complement graph).
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

struct DominationWitness {
    VertexSet independent_set;  // an I attaining the maximum (maximal independent)
    VertexSet dominating_set;   // a minimum dominating set for it; empty when infinite
    DominationValue value;
};

// igamma(G) = max over independent I of gamma(G;I); infinite iff G has an
// isolated vertex.  The maximum is attained on maximal independent sets
// (gamma is monotone in A), so only those are scanned.  Ties among
// maximizers are broken by the smallest bit mask, which pins down the
// witness for downstream ordering constructions.
DominationWitness igamma(const Graph& g);

// igamma_w(G) = max over independent I of gamma_w(G;I); always finite.
DominationValue igamma_w(const Graph& g);

}  // namespace noncover

#endif
