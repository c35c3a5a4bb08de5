#ifndef NONCOVER_RAINBOW_HPP
#define NONCOVER_RAINBOW_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "noncover/graph.hpp"

namespace noncover {

// An indexed family W_1,...,W_m of vertex sets over a graph; order matters.
struct CoverSystem {
    Graph graph;
    std::vector<VertexSet> sets;
};

// A cover assembled by picking at most one vertex per index, indices
// strictly increasing.
struct RainbowCover {
    std::vector<int> indices;   // 1-based into the system, strictly increasing
    std::vector<int> vertices;  // vertices[j] is the pick from sets[indices[j]-1]

    VertexSet cover_set() const {
        VertexSet s;
        for (int v : vertices) s.add(v);
        return s;
    }
};

// Exhaustive backtracking over index subsets and representative choices
// (indices ascending, vertices ascending, pick before skip), pruned by
// whether the remaining sets can still reach the uncovered edges.  Absence
// is exact.
std::optional<RainbowCover> find_rainbow_cover(const CoverSystem& sys);

// Validates a claimed rainbow cover against its system.
bool rainbow_cover_valid(const CoverSystem& sys, const RainbowCover& rc);

// Brute-force check of the hypothesis "every A meeting all W_i and
// containing some W_j is a cover" for a system of exactly n - igamma(G)
// sets, then the conclusion that a rainbow cover exists.
struct CoverHypothesisReport {
    bool hypothesis_holds = false;
    std::optional<VertexSet> counterexample;  // an A violating the hypothesis
    bool rainbow_found = false;
    std::optional<RainbowCover> rainbow;
    // hypothesis true but search found nothing: would contradict the theorem
    bool contradiction = false;
};

CoverHypothesisReport check_cover_hypothesis(const CoverSystem& sys, int ground_guard = 20);

// The tight example: G = C_{3k} and 2k-1+extra copies of the cover
// M = {3j+1, 3j+2 : 0 <= j < k}, which induces a perfect matching on M.
// With extra = 0 no rainbow cover exists; one more copy flips the answer.
CoverSystem tightness_instance(int k, int extra_copies = 0);

// System JSON {"graph": <edge-list path>, "covers": [[...],...]}; the graph
// path is resolved relative to the JSON file's directory.
CoverSystem load_cover_system(const std::string& json_path);
nlohmann::json rainbow_result_to_json(const std::optional<RainbowCover>& rc);

}  // namespace noncover

#endif
