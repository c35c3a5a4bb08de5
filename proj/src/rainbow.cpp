#include "noncover/rainbow.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "noncover/domination.hpp"
#include "noncover/errors.hpp"

namespace noncover {

namespace {

struct RainbowSearch {
    const CoverSystem& sys;
    std::vector<VertexSet> suffix_union;  // union of sets[i..m-1]
    RainbowCover picks;

    explicit RainbowSearch(const CoverSystem& s) : sys(s) {
        std::size_t m = sys.sets.size();
        suffix_union.assign(m + 1, VertexSet{});
        for (std::size_t i = m; i-- > 0;) suffix_union[i] = suffix_union[i + 1] | sys.sets[i];
    }

    bool reachable(VertexSet chosen, std::size_t idx) const {
        VertexSet pool = chosen | suffix_union[idx];
        for (const Edge& e : sys.graph.edges())
            if (!chosen.contains(e.u) && !chosen.contains(e.v) && !pool.contains(e.u) &&
                !pool.contains(e.v))
                return false;
        return true;
    }

    bool search(std::size_t idx, VertexSet chosen) {
        if (is_cover(sys.graph, chosen)) return true;
        if (idx >= sys.sets.size()) return false;
        if (!reachable(chosen, idx)) return false;
        for (int v : sys.sets[idx]) {
            if (chosen.contains(v)) continue;  // a repeat pick never beats skipping
            picks.indices.push_back(static_cast<int>(idx) + 1);
            picks.vertices.push_back(v);
            if (search(idx + 1, chosen.with(v))) return true;
            picks.indices.pop_back();
            picks.vertices.pop_back();
        }
        return search(idx + 1, chosen);
    }
};

}  // namespace

std::optional<RainbowCover> find_rainbow_cover(const CoverSystem& sys) {
    if (sys.sets.empty()) throw std::invalid_argument("cover system has no sets");
    RainbowSearch s(sys);
    if (s.search(0, VertexSet{})) return s.picks;
    return std::nullopt;
}

bool rainbow_cover_valid(const CoverSystem& sys, const RainbowCover& rc) {
    if (rc.indices.size() != rc.vertices.size()) return false;
    for (std::size_t j = 0; j < rc.indices.size(); ++j) {
        int idx = rc.indices[j];
        if (idx < 1 || idx > static_cast<int>(sys.sets.size())) return false;
        if (j > 0 && rc.indices[j - 1] >= idx) return false;
        if (!sys.sets[static_cast<std::size_t>(idx - 1)].contains(rc.vertices[j])) return false;
    }
    return is_cover(sys.graph, rc.cover_set());
}

CoverHypothesisReport check_cover_hypothesis(const CoverSystem& sys, int ground_guard) {
    const Graph& g = sys.graph;
    int n = g.vertex_count();
    if (n > ground_guard)
        throw BudgetExceeded("cover-hypothesis subset scan ground guard",
                             static_cast<std::size_t>(ground_guard), static_cast<std::size_t>(n));
    DominationValue ig = igamma(g).value;
    if (!ig.is_finite())
        throw std::domain_error("cover-hypothesis check needs a finite independent domination number");
    if (static_cast<int>(sys.sets.size()) != n - ig.value())
        throw std::invalid_argument("system must have exactly n - igamma = " +
                                    std::to_string(n - ig.value()) + " sets, got " +
                                    std::to_string(sys.sets.size()));

    CoverHypothesisReport report;
    report.hypothesis_holds = true;
    std::uint64_t full = VertexSet::full(n).mask();
    for (std::uint64_t m = 0;; ++m) {
        VertexSet a = VertexSet::from_mask(m);
        bool meets_all = true, contains_some = false;
        for (VertexSet w : sys.sets) {
            meets_all = meets_all && a.intersects(w);
            contains_some = contains_some || w.subset_of(a);
        }
        if (meets_all && contains_some && !is_cover(g, a)) {
            report.hypothesis_holds = false;
            report.counterexample = a;
            break;
        }
        if (m == full) break;
    }
    if (report.hypothesis_holds) {
        report.rainbow = find_rainbow_cover(sys);
        report.rainbow_found = report.rainbow.has_value();
        report.contradiction = !report.rainbow_found;
    }
    return report;
}

CoverSystem tightness_instance(int k, int extra_copies) {
    if (k < 2) throw std::invalid_argument("tightness instance needs k >= 2");
    if (extra_copies < 0) throw std::invalid_argument("extra copy count must be non-negative");
    Graph g = cycle_graph(3 * k);
    VertexSet matching_cover;
    for (int j = 0; j < k; ++j) {
        matching_cover.add(3 * j + 1);
        matching_cover.add(3 * j + 2);
    }
    CoverSystem sys{std::move(g), {}};
    sys.sets.assign(static_cast<std::size_t>(2 * k - 1 + extra_copies), matching_cover);
    return sys;
}

CoverSystem load_cover_system(const std::string& json_path) {
    std::ifstream in(json_path);
    if (!in) throw std::runtime_error("cannot open " + json_path);
    nlohmann::json j = nlohmann::json::parse(in);

    std::filesystem::path graph_path(j.at("graph").get<std::string>());
    if (graph_path.is_relative())
        graph_path = std::filesystem::path(json_path).parent_path() / graph_path;
    std::ifstream gin(graph_path);
    if (!gin) throw std::runtime_error("cannot open graph file " + graph_path.string());
    std::string text((std::istreambuf_iterator<char>(gin)), std::istreambuf_iterator<char>());

    CoverSystem sys{parse_graph(text), {}};
    for (const auto& arr : j.at("covers")) {
        VertexSet w;
        for (const auto& v : arr) w.add(v.get<int>());
        if (!w.subset_of(sys.graph.vertices()))
            throw std::invalid_argument("cover set contains a vertex outside the graph");
        sys.sets.push_back(w);
    }
    return sys;
}

nlohmann::json rainbow_result_to_json(const std::optional<RainbowCover>& rc) {
    if (!rc) return {{"found", false}};
    return {{"found", true}, {"indices", rc->indices}, {"vertices", rc->vertices}};
}

}  // namespace noncover
