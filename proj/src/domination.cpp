#include "noncover/domination.hpp"

#include <algorithm>

namespace noncover {

bool dominates(const Graph& g, VertexSet d, VertexSet a) {
    return a.subset_of(neighborhood(g, d));
}

bool weakly_dominates(const Graph& g, VertexSet w, VertexSet a) {
    return a.subset_of(w | neighborhood(g, w));
}

namespace {

// Visit all size-k subsets of `pool` in lexicographic index order; stop at
// the first subset for which `fn` returns true.
template <typename Fn>
bool first_combination(const std::vector<int>& pool, int k, VertexSet chosen, std::size_t from,
                       Fn&& fn) {
    if (k == 0) return fn(chosen);
    for (std::size_t i = from; i + static_cast<std::size_t>(k) <= pool.size(); ++i)
        if (first_combination(pool, k - 1, chosen.with(pool[i]), i + 1, fn)) return true;
    return false;
}

template <typename Predicate>
GammaResult minimum_set(const std::vector<int>& pool, Predicate&& ok) {
    for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
        GammaResult found{DominationValue::finite(k), {}};
        bool hit = first_combination(pool, k, VertexSet{}, 0, [&](VertexSet d) {
            if (!ok(d)) return false;
            found.witness = d;
            return true;
        });
        if (hit) return found;
    }
    throw std::logic_error("candidate pool cannot satisfy the domination target");
}

}  // namespace

GammaResult gamma(const Graph& g, VertexSet a) {
    for (int v : a)
        if (g.neighbors(v).empty()) return {DominationValue::infinity(), {}};
    std::vector<int> pool = neighborhood(g, a).to_vector();
    return minimum_set(pool, [&](VertexSet d) { return dominates(g, d, a); });
}

GammaResult gamma_w(const Graph& g, VertexSet a) {
    std::vector<int> pool = (a | neighborhood(g, a)).to_vector();
    return minimum_set(pool, [&](VertexSet d) { return weakly_dominates(g, d, a); });
}

namespace {

void bron_kerbosch(const std::vector<std::uint64_t>& co, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        out.push_back(VertexSet::from_mask(r));
        return;
    }
    // pivot: vertex of P|X with the most candidates knocked out
    std::uint64_t best_cover = 0;
    int best_count = -1;
    for (std::uint64_t rest = p | x; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        int c = std::popcount(p & co[static_cast<std::size_t>(u)]);
        if (c > best_count) {
            best_count = c;
            best_cover = co[static_cast<std::size_t>(u)];
        }
    }
    std::uint64_t candidates = p & ~best_cover;
    for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
        std::uint64_t vbit = rest & (~rest + 1);
        int v = std::countr_zero(vbit);
        const std::uint64_t& cov = co[static_cast<std::size_t>(v)];
        bron_kerbosch(co, r | vbit, p & cov, x & cov, out);
        p &= ~vbit;
        x |= vbit;
    }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    // maximal independent sets of G = maximal cliques of the complement
    std::vector<std::uint64_t> co(static_cast<std::size_t>(n) + 1);
    std::uint64_t full = VertexSet::full(n).mask();
    for (int v = 1; v <= n; ++v)
        co[static_cast<std::size_t>(v - 1)] =
            full & ~g.neighbors(v).mask() & ~(std::uint64_t{1} << (v - 1));
    std::vector<VertexSet> out;
    bron_kerbosch(co, 0, full, 0, out);
    std::sort(out.begin(), out.end(), mask_less);
    return out;
}

DominationWitness igamma(const Graph& g) {
    std::vector<VertexSet> all = maximal_independent_sets(g);
    if (has_isolated_vertex(g)) {
        // every maximal independent set contains every isolated vertex
        return {all.front(), {}, DominationValue::infinity()};
    }
    DominationWitness best{all.front(), {}, DominationValue::finite(0)};
    int best_value = -1;
    for (VertexSet i : all) {
        GammaResult r = gamma(g, i);
        if (r.value.value() > best_value) {
            best_value = r.value.value();
            best = {i, r.witness, r.value};
        }
    }
    return best;
}

DominationValue igamma_w(const Graph& g) {
    int best = 0;
    for (VertexSet i : maximal_independent_sets(g))
        best = std::max(best, gamma_w(g, i).value.value());
    return DominationValue::finite(best);
}

}  // namespace noncover
