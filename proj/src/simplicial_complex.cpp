#include "noncover/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "noncover/domination.hpp"
#include "noncover/errors.hpp"

namespace noncover {

namespace {

// Drop duplicates and any set contained in another; canonical sort.
std::vector<VertexSet> antichain_prune(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.mask() < b.mask();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> keep;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : keep)
            if (s.subset_of(k)) {  // sizes descend, so containment only into earlier sets
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end(), lex_less);
    return keep;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ground_n, std::vector<VertexSet> facets)
    : ground_n_(ground_n) {
    if (ground_n < 0 || ground_n > VertexSet::max_ground)
        throw std::invalid_argument("ground set size out of range");
    VertexSet full = VertexSet::full(ground_n);
    for (VertexSet f : facets)
        if (!f.subset_of(full))
            throw std::invalid_argument("facet contains a vertex outside the ground set");
    facets_ = antichain_prune(std::move(facets));
}

int SimplicialComplex::max_facet_size() const {
    int m = 0;
    for (VertexSet f : facets_) m = std::max(m, f.size());
    return m;
}

bool SimplicialComplex::contains_face(VertexSet sigma) const {
    for (VertexSet f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

SimplicialComplex independence_complex(const Graph& g) {
    return {g.vertex_count(), maximal_independent_sets(g)};
}

SimplicialComplex noncover_complex(const Graph& g) {
    std::vector<VertexSet> facets;
    facets.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        facets.push_back(VertexSet::of({e.u, e.v}).complement_in(g.vertex_count()));
    return {g.vertex_count(), std::move(facets)};
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& x, int ground_guard) {
    int n = x.ground_n();
    if (n > ground_guard)
        throw BudgetExceeded("minimal non-face scan ground guard",
                             static_cast<std::size_t>(ground_guard), static_cast<std::size_t>(n));
    std::vector<VertexSet> out;
    std::uint64_t limit = VertexSet::full(n).mask();
    for (std::uint64_t m = 0;; ++m) {
        VertexSet s = VertexSet::from_mask(m);
        if (!x.contains_face(s)) {
            bool minimal = true;
            for (int v : s)
                if (!x.contains_face(s.without(v))) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(s);
        }
        if (m == limit) break;
    }
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& x, int ground_guard) {
    int n = x.ground_n();
    std::vector<VertexSet> facets;
    for (VertexSet nf : minimal_nonfaces(x, ground_guard))
        facets.push_back(nf.complement_in(n));
    return {n, std::move(facets)};
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, VertexSet w) {
    std::vector<VertexSet> facets;
    facets.reserve(x.facets().size());
    for (VertexSet f : x.facets()) facets.push_back(f & w);
    return {x.ground_n(), std::move(facets)};
}

std::vector<VertexSet> enumerate_faces(const SimplicialComplex& x, std::size_t face_budget) {
    std::unordered_set<std::uint64_t> seen;
    for (VertexSet f : x.facets()) {
        std::uint64_t m = f.mask();
        std::uint64_t sub = m;
        while (true) {  // all submasks of m, including m and 0
            seen.insert(sub);
            if (seen.size() > face_budget)
                throw BudgetExceeded("face enumeration", face_budget, seen.size());
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (std::uint64_t m : seen) out.push_back(VertexSet::from_mask(m));
    std::sort(out.begin(), out.end(), mask_less);
    return out;
}

std::size_t count_faces(const SimplicialComplex& x, std::size_t face_budget) {
    return enumerate_faces(x, face_budget).size();
}

bool is_cone_with_apex(const SimplicialComplex& x, int v) {
    for (VertexSet f : x.facets())
        if (!f.contains(v)) return false;
    return true;
}

nlohmann::json complex_to_json(const SimplicialComplex& x) {
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : x.facets()) facets.push_back(f.to_vector());
    return {{"ground_n", x.ground_n()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    int n = j.at("ground_n").get<int>();
    std::vector<VertexSet> facets;
    for (const auto& arr : j.at("facets")) {
        VertexSet f;
        for (const auto& v : arr) f.add(v.get<int>());
        facets.push_back(f);
    }
    SimplicialComplex x(n, facets);
    if (x.facets().size() != facets.size())
        throw std::invalid_argument("facet list is not an antichain");
    return x;
}

}  // namespace noncover
