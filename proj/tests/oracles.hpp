// Test-only oracles: independent brute-force implementations used to derive
// and cross-check expected values.  Nothing here shares an algorithm with
// the library paths it checks.

#ifndef NONCOVER_TESTS_ORACLES_HPP
#define NONCOVER_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "noncover/domination.hpp"
#include "noncover/graph.hpp"
#include "noncover/simplicial_complex.hpp"

namespace oracles {

using noncover::Graph;
using noncover::SimplicialComplex;
using noncover::VertexSet;

// Minimum |D| over ALL subsets of the vertex set with dominates(G,D,A);
// no candidate restriction.  nullopt encodes "no set works" (infinity).
inline std::optional<int> gamma(const Graph& g, VertexSet a) {
    int n = g.vertex_count();
    std::uint64_t full = VertexSet::full(n).mask();
    for (int size = 0; size <= n; ++size)
        for (std::uint64_t m = 0;; ++m) {
            if (std::popcount(m) == size && noncover::dominates(g, VertexSet::from_mask(m), a))
                return size;
            if (m == full) break;
        }
    return std::nullopt;
}

inline std::optional<int> gamma_w(const Graph& g, VertexSet a) {
    int n = g.vertex_count();
    std::uint64_t full = VertexSet::full(n).mask();
    for (int size = 0; size <= n; ++size)
        for (std::uint64_t m = 0;; ++m) {
            if (std::popcount(m) == size &&
                noncover::weakly_dominates(g, VertexSet::from_mask(m), a))
                return size;
            if (m == full) break;
        }
    return std::nullopt;
}

// Max of gamma over ALL independent sets (not just maximal ones).
inline std::optional<int> igamma(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t full = VertexSet::full(n).mask();
    int best = 0;
    for (std::uint64_t m = 0;; ++m) {
        VertexSet s = VertexSet::from_mask(m);
        if (noncover::is_independent(g, s)) {
            std::optional<int> v = oracles::gamma(g, s);
            if (!v) return std::nullopt;  // infinity beats everything
            best = std::max(best, *v);
        }
        if (m == full) break;
    }
    return best;
}

inline int igamma_w(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t full = VertexSet::full(n).mask();
    int best = 0;
    for (std::uint64_t m = 0;; ++m) {
        VertexSet s = VertexSet::from_mask(m);
        if (noncover::is_independent(g, s)) best = std::max(best, *oracles::gamma_w(g, s));
        if (m == full) break;
    }
    return best;
}

// Maximal independent sets straight from the definition.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t full = VertexSet::full(n).mask();
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0;; ++m) {
        VertexSet s = VertexSet::from_mask(m);
        if (noncover::is_independent(g, s)) {
            bool maximal = true;
            for (int v = 1; v <= n && maximal; ++v)
                if (!s.contains(v) && noncover::is_independent(g, s.with(v))) maximal = false;
            if (maximal) out.push_back(s);
        }
        if (m == full) break;
    }
    return out;  // ascending mask by construction
}

// Alexander dual from its defining property: W is a face iff the complement
// of W is a non-face.  Scans the whole power set.
inline SimplicialComplex dual_by_definition(const SimplicialComplex& x) {
    int n = x.ground_n();
    std::uint64_t full = VertexSet::full(n).mask();
    std::vector<VertexSet> faces;
    for (std::uint64_t m = 0;; ++m) {
        VertexSet w = VertexSet::from_mask(m);
        if (!x.contains_face(w.complement_in(n))) faces.push_back(w);
        if (m == full) break;
    }
    return {n, faces};  // the constructor keeps exactly the maximal ones
}

// Reduced Betti numbers by persistence-style column reduction over Q with
// GMP rationals; a different algorithm from the library's fraction-free row
// elimination.
inline std::map<int, long> betti_by_column_reduction(const SimplicialComplex& x) {
    std::map<int, long> out;
    if (x.is_void()) return out;
    std::vector<VertexSet> faces = noncover::enumerate_faces(x);
    std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.mask() < b.mask();
    });
    std::map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i].mask()] = static_cast<int>(i);

    std::vector<std::map<int, mpq_class>> cols(faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
        int sign = 0;
        for (int v : faces[j]) {
            cols[j][index.at(faces[j].without(v).mask())] = (sign % 2 == 0) ? 1 : -1;
            ++sign;
        }
    }

    std::map<int, int> low_to_col;
    std::vector<long> rank_by_size(static_cast<std::size_t>(x.max_facet_size()) + 2, 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        while (!cols[j].empty()) {
            int low = cols[j].rbegin()->first;
            auto hit = low_to_col.find(low);
            if (hit == low_to_col.end()) break;
            mpq_class factor = cols[j].rbegin()->second / cols[hit->second].rbegin()->second;
            for (const auto& [row, val] : cols[hit->second]) {
                mpq_class next = cols[j][row] - factor * val;
                if (next == 0)
                    cols[j].erase(row);
                else
                    cols[j][row] = next;
            }
        }
        if (!cols[j].empty()) {
            low_to_col[cols[j].rbegin()->first] = static_cast<int>(j);
            ++rank_by_size[static_cast<std::size_t>(faces[j].size())];
        }
    }

    std::vector<long> count_by_size(rank_by_size.size(), 0);
    for (VertexSet f : faces) ++count_by_size[static_cast<std::size_t>(f.size())];
    for (std::size_t s = 0; s + 1 < rank_by_size.size(); ++s)
        out[static_cast<int>(s) - 1] = count_by_size[s] - rank_by_size[s] - rank_by_size[s + 1];
    return out;
}

// All isolated-vertex-free labeled graphs on n vertices.
template <typename Fn>
void for_isolated_free(int n, Fn&& fn) {
    noncover::for_all_graphs(n, [&](const Graph& g, std::uint64_t id) {
        if (!noncover::has_isolated_vertex(g)) fn(g, id);
    });
}

}  // namespace oracles

#endif
