#ifndef NONCOVER_GRAPH_HPP
#define NONCOVER_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "noncover/vertex_set.hpp"

namespace noncover {

// Undirected edge, normalized so u < v.
struct Edge {
    int u;
    int v;

    friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(Edge a, Edge b) {  // lexicographic, used for serialization
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Finite simple graph on vertices 1..n.  Immutable after construction;
// adjacency is kept as per-vertex masks so set queries are single AND/ORs.
class Graph {
public:
    // Validates: endpoints in 1..n, no loops, no duplicates.  Edges may be
    // given in either orientation; they are normalized to u < v and sorted.
    Graph(int n, std::vector<Edge> edges);

    explicit Graph(int n) : Graph(n, {}) {}

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;      // normalized, sorted lexicographically
    std::vector<VertexSet> adj_;   // 1-based; adj_[0] unused
};

// Edge-list text format: header `p edge <n> <m>`, then exactly m records
// `e <u> <v>`; lines starting with `c` are comments.  Errors carry the
// offending line number.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// N(S) = all vertices with a neighbor in S.  Note v in N(S) may lie in S.
VertexSet neighborhood(const Graph& g, VertexSet s);

bool is_independent(const Graph& g, VertexSet s);

// W is a cover iff its complement is independent, i.e. W meets every edge.
bool is_cover(const Graph& g, VertexSet w);

VertexSet isolated_vertices(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;                   // on vertices 1..|S|
    std::vector<int> to_original;  // new label -> original label; index 0 unused
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

Graph cycle_graph(int m);     // m >= 3 a cycle; m == 2 a single edge; m == 1 a point
Graph path_graph(int m);
Graph complete_graph(int m);

// Labeled-graph enumeration.  Graphs on [n] are indexed by an edge bitmask
// over the C(n,2) vertex pairs in lexicographic order (1,2),(1,3),...,(n-1,n);
// that mask is the graph's id.  Exponential, hence the guard.
std::uint64_t labeled_graph_count(int n, int guard_limit = 8);
Graph graph_from_id(int n, std::uint64_t id);
std::uint64_t graph_id(const Graph& g);
void for_all_graphs(int n, const std::function<void(const Graph&, std::uint64_t)>& fn,
                    int guard_limit = 8, bool skip_isolated = false);

}  // namespace noncover

#endif
