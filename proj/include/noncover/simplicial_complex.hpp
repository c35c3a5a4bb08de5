#ifndef NONCOVER_SIMPLICIAL_COMPLEX_HPP
#define NONCOVER_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "noncover/graph.hpp"
#include "noncover/vertex_set.hpp"

namespace noncover {

inline constexpr std::size_t default_face_budget = std::size_t{1} << 22;

// Simplicial complex on ground set [ground_n], represented by its facets.
// The facet list is always an antichain in canonical (lexicographic) order.
// Two degenerate complexes are kept rigorously distinct:
//   - the VOID complex has no faces at all (empty facet list), and
//   - the EMPTY complex {∅} has the single facet ∅.
// The distinction matters: collapsing must terminate at the void complex,
// one elementary step short of the empty one.
class SimplicialComplex {
public:
    // Prunes the given sets to an antichain (drops duplicates and any set
    // contained in another) and stores them canonically sorted.
    SimplicialComplex(int ground_n, std::vector<VertexSet> facets);

    static SimplicialComplex void_complex(int ground_n) { return {ground_n, {}}; }
    static SimplicialComplex empty_complex(int ground_n) { return {ground_n, {VertexSet{}}}; }
    static SimplicialComplex full_simplex(int ground_n) {
        return {ground_n, {VertexSet::full(ground_n)}};
    }

    int ground_n() const { return ground_n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    // Size of the largest facet (0 for the empty and void complexes).
    int max_facet_size() const;
    int dimension() const { return max_facet_size() - 1; }  // -1 for {∅}, -2 for void

    bool contains_face(VertexSet sigma) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_n_ == b.ground_n_ && a.facets_ == b.facets_;
    }

private:
    int ground_n_;
    std::vector<VertexSet> facets_;
};

// Facets are the maximal independent sets of G; never void.
SimplicialComplex independence_complex(const Graph& g);

// Facets are the complements of the edges of G; void when G has no edges.
SimplicialComplex noncover_complex(const Graph& g);

// Faces of the result are the W whose complement is a non-face of X.
// Computed as: facets of D(X) = complements of the minimal non-faces of X.
SimplicialComplex alexander_dual(const SimplicialComplex& x, int ground_guard = 20);

// Minimal non-faces of X in ascending mask order (scan of the subset
// lattice from below; exponential, hence the ground-set guard).
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& x, int ground_guard = 20);

// Subcomplex of the faces contained in W, on the same ground set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, VertexSet w);

// Every face exactly once (including ∅ unless X is void), ascending mask.
std::vector<VertexSet> enumerate_faces(const SimplicialComplex& x,
                                       std::size_t face_budget = default_face_budget);

std::size_t count_faces(const SimplicialComplex& x, std::size_t face_budget = default_face_budget);

// True iff v lies in every facet (vacuously true for the void complex).
bool is_cone_with_apex(const SimplicialComplex& x, int v);

// Canonical JSON form {"ground_n": n, "facets": [[v,...],...]}, facets in
// lexicographic order with vertices ascending; bit-exact for diffing.
nlohmann::json complex_to_json(const SimplicialComplex& x);

// Accepts facets in any order but rejects duplicate or nested facets, so a
// loaded complex is exactly what the file says.
SimplicialComplex complex_from_json(const nlohmann::json& j);

}  // namespace noncover

#endif
