#include "noncover/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "noncover/errors.hpp"

namespace noncover {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > VertexSet::max_ground)
        throw std::invalid_argument("vertex count exceeds the 64-vertex ground-set cap");
    for (Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("loop edge " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].add(e.v);
        adj_[static_cast<std::size_t>(e.v)].add(e.u);
    }
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long declared_m = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw ParseError(lineno, "duplicate problem header");
            std::string kind;
            if (!(ls >> kind) || kind != "edge")
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            long ln = 0, lm = 0;
            if (!(ls >> ln >> lm) || ln < 1 || lm < 0)
                throw ParseError(lineno, "malformed header counts");
            if (ln > VertexSet::max_ground)
                throw ParseError(lineno, "vertex count exceeds the 64-vertex cap");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            n = static_cast<int>(ln);
            declared_m = lm;
        } else if (tag == "e") {
            if (n == -1) throw ParseError(lineno, "edge record before problem header");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge record");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "loop edge " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " +
                                             std::to_string(v));
            edges.push_back({u, v});
        } else {
            throw ParseError(lineno, "unknown record type '" + tag + "'");
        }
    }
    if (n == -1) throw ParseError(lineno == 0 ? 1 : lineno, "missing problem header");
    if (static_cast<long>(edges.size()) != declared_m)
        throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                     " edges, found " + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
    VertexSet out;
    for (int v : s) out = out | g.neighbors(v);
    return out;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_cover(const Graph& g, VertexSet w) {
    return is_independent(g, w.complement_in(g.vertex_count()));
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.neighbors(v).empty()) out.add(v);
    return out;
}

bool has_isolated_vertex(const Graph& g) { return !isolated_vertices(g).empty(); }

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    VertexSet reached = VertexSet::of({1});
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next = neighborhood(g, frontier) - reached;
        reached = reached | next;
        frontier = next;
    }
    return reached == g.vertices();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    std::vector<int> to_original{0};
    std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : s) {
        to_original.push_back(v);
        to_new[static_cast<std::size_t>(v)] = static_cast<int>(to_original.size()) - 1;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v))
            edges.push_back({to_new[static_cast<std::size_t>(e.u)],
                             to_new[static_cast<std::size_t>(e.v)]});
    return {Graph(s.size(), std::move(edges)), std::move(to_original)};
}

Graph cycle_graph(int m) {
    if (m < 1) throw std::invalid_argument("cycle size must be >= 1");
    std::vector<Edge> edges;
    if (m == 2) {
        edges.push_back({1, 2});
    } else if (m >= 3) {
        for (int v = 1; v < m; ++v) edges.push_back({v, v + 1});
        edges.push_back({1, m});
    }
    return Graph(m, std::move(edges));
}

Graph path_graph(int m) {
    if (m < 1) throw std::invalid_argument("path size must be >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < m; ++v) edges.push_back({v, v + 1});
    return Graph(m, std::move(edges));
}

Graph complete_graph(int m) {
    if (m < 1) throw std::invalid_argument("complete graph size must be >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) edges.push_back({u, v});
    return Graph(m, std::move(edges));
}

namespace {

std::vector<Edge> edge_positions(int n) {
    std::vector<Edge> pos;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pos.push_back({u, v});
    return pos;
}

}  // namespace

std::uint64_t labeled_graph_count(int n, int guard_limit) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (n > guard_limit)
        throw BudgetExceeded("labeled-graph enumeration guard",
                             static_cast<std::size_t>(guard_limit), static_cast<std::size_t>(n));
    int pairs = n * (n - 1) / 2;
    return std::uint64_t{1} << pairs;
}

Graph graph_from_id(int n, std::uint64_t id) {
    const std::vector<Edge> pos = edge_positions(n);
    if (pos.size() < 64 && (id >> pos.size()) != 0)
        throw std::invalid_argument("graph id out of range for n=" + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if ((id >> i) & 1) edges.push_back(pos[i]);
    return Graph(n, std::move(edges));
}

std::uint64_t graph_id(const Graph& g) {
    const std::vector<Edge> pos = edge_positions(g.vertex_count());
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (g.has_edge(pos[i].u, pos[i].v)) id |= std::uint64_t{1} << i;
    return id;
}

void for_all_graphs(int n, const std::function<void(const Graph&, std::uint64_t)>& fn,
                    int guard_limit, bool skip_isolated) {
    std::uint64_t count = labeled_graph_count(n, guard_limit);
    for (std::uint64_t id = 0; id < count; ++id) {
        Graph g = graph_from_id(n, id);
        if (skip_isolated && has_isolated_vertex(g)) continue;
        fn(g, id);
    }
}

}  // namespace noncover
