#ifndef NONCOVER_MES_HPP
#define NONCOVER_MES_HPP

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "noncover/domination.hpp"
#include "noncover/graph.hpp"
#include "noncover/simplicial_complex.hpp"

namespace noncover {

// Relabeling of [n], 1-based in both directions.
struct Permutation {
    std::vector<int> to_new;  // index = old label; slot 0 unused
    std::vector<int> to_old;

    int apply(int v) const { return to_new[static_cast<std::size_t>(v)]; }
    int invert(int v) const { return to_old[static_cast<std::size_t>(v)]; }

    VertexSet apply(VertexSet s) const {
        VertexSet out;
        for (int v : s) out.add(apply(v));
        return out;
    }

    VertexSet invert(VertexSet s) const {
        VertexSet out;
        for (int v : s) out.add(invert(v));
        return out;
    }
};

// A graph normalized for the exclusion-sequence machinery: the chosen
// witness independent set I (a maximal independent set attaining igamma) is
// sent to the top labels {n-|I|+1,...,n}, everything else keeps its relative
// order below.  All sequence/ordering computations run on `relabeled`;
// reports map back through `perm`.
struct RelabeledInstance {
    Graph original;
    Graph relabeled;
    Permutation perm;        // original -> relabeled
    VertexSet witness;       // I in original labels (maximal independent)
    int witness_size;
    DominationValue igamma_value;

    int n() const { return original.vertex_count(); }
    VertexSet relabeled_witness() const {  // I after relabeling: the top labels
        return VertexSet::full(n()) - VertexSet::full(n() - witness_size);
    }
    VertexSet relabeled_rest() const { return VertexSet::full(n() - witness_size); }
};

// Chooses the igamma witness automatically.  Rejects graphs with isolated
// vertices (igamma is infinite there).
RelabeledInstance normalize_instance(const Graph& g);

// Same, but with a caller-supplied witness: an independent set I with
// gamma(G;I) = igamma(G).  I is extended to a maximal independent set
// (greedily, smallest labels first) before relabeling.
RelabeledInstance normalize_instance(const Graph& g, VertexSet witness);

// Edge order used for facet orderings: compare by larger endpoint, then by
// smaller endpoint.  Strict total order on distinct normalized edges.
bool edge_order_lt(Edge a, Edge b);

// An ordered facet list; position in `facets` is the ordering.
struct FacetOrdering {
    int ground_n;
    std::vector<VertexSet> facets;

    SimplicialComplex complex() const { return {ground_n, facets}; }
};

// Facets of NC(g) sorted so that earlier facets are complements of
// edge_order_lt-smaller edges.  Requires at least one edge.
FacetOrdering noncover_facet_ordering(const Graph& g);

// Minimal exclusion sequence of a face relative to an ordered facet list.
// first_index is the 1-based index of the first facet containing the face;
// the sequence has first_index - 1 entries and support = its distinct
// vertices.  Entries may repeat; the support deduplicates them.
struct MesRecord {
    VertexSet face;
    int first_index = 0;
    std::vector<int> sequence;
    VertexSet support;
};

MesRecord mes(const FacetOrdering& ord, VertexSet face);

// Max support size over every face spanned by the ordered facets (∅
// included; its sequence is always null since it lies in the first facet).
int d_prec(const FacetOrdering& ord, std::size_t face_budget = default_face_budget);

// beta(σ) = |N(σ̄ ∩ Ī) ∩ σ̄ ∩ I| in the relabeled graph.
int beta_count(const RelabeledInstance& inst, VertexSet face_relabeled);

// n - igamma(G) - 1; the collapsibility bound this library certifies.
// Throws for graphs with isolated vertices (igamma infinite).
int collapsibility_bound(const Graph& g);

struct MesBoundReport {
    int n = 0;
    int igamma = 0;
    int bound = 0;
    int d_prec = 0;
    bool pass = false;
    VertexSet witness_face;            // original labels, maximizing |support|
    std::vector<int> witness_sequence; // original labels
    MesRecord witness_record;          // relabeled, as computed
};

// Checks |M(σ)| <= n - igamma - 1 for every face of NC(G) under the
// normalized ordering.  Requires an isolated-vertex-free graph with edges.
MesBoundReport verify_mes_bound(const Graph& g, std::size_t face_budget = default_face_budget);

nlohmann::json mes_report_to_json(const MesBoundReport& r);

}  // namespace noncover

#endif
