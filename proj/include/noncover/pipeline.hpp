#ifndef NONCOVER_PIPELINE_HPP
#define NONCOVER_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "noncover/collapse.hpp"
#include "noncover/graph.hpp"

namespace noncover {

// Guards and knobs shared by the analysis pipeline and the batch runner.
struct RunConfig {
    std::size_t face_budget = default_face_budget;
    std::size_t state_budget = default_state_budget;
    int max_n = 8;
    std::uint64_t seed = 1;
    int rainbow_samples = 5;  // sampled cover systems per graph; 0 disables
    int jobs = 0;             // 0 = hardware concurrency
};

enum class TriState { yes, no, budget_exceeded };

std::string to_string(TriState t);

// Everything the single-graph pipeline establishes about one input.  Any
// `no` on a theorem-backed field contradicts the underlying results and
// marks the record (and the run) failed.
struct VerificationRecord {
    std::string id;
    int n = 0;
    int edge_count = 0;

    std::optional<int> igamma_value;   // absent = infinite (isolated vertex)
    int igamma_w_value = 0;
    std::optional<int> bound;          // n - igamma - 1
    std::optional<int> d_prec_value;
    std::optional<bool> mes_bound_ok;
    std::optional<TriState> collapsible_at_bound;
    std::optional<int> collapse_steps;
    std::optional<bool> vanishing_ok;
    std::optional<bool> connectivity_ok;  // absent when skipped (isolated vertices)

    // fallback route for graphs with isolated vertices: the weak-domination
    // bound n - igamma_w - 1 still certifies collapsibility
    std::optional<int> weak_bound;
    std::optional<TriState> collapsible_at_weak_bound;

    struct RainbowSummary {
        int samples = 0;
        bool all_found = false;
    };
    std::optional<RainbowSummary> rainbow;

    std::vector<std::string> notes;
    long total_ms = 0;

    bool contradiction() const;
    bool budget_hit() const;
    // 0 = pass, 2 = theorem contradiction, 3 = budget exceeded
    int exit_code() const;
};

nlohmann::json record_to_json(const VerificationRecord& rec, bool include_timing = true);

// Full single-graph pipeline: domination numbers, the exclusion-sequence
// bound, a collapse certificate at the bound, homology consequences, and a
// seeded rainbow sample.
VerificationRecord analyze_graph(const std::string& id, const Graph& g, const RunConfig& cfg);

// Seeded sampling used for the rainbow field: `count` systems of
// n - igamma(G) random covers each; reports whether every system admitted a
// rainbow cover.  Requires an isolated-vertex-free graph with edges.
VerificationRecord::RainbowSummary sample_rainbow_systems(const Graph& g, int count,
                                                          std::uint64_t seed);

// A single random cover (rejection sampling; the full vertex set backstops).
VertexSet random_cover(const Graph& g, std::uint64_t& rng_state);

// splitmix64 step; the seed mixer used anywhere reproducibility matters.
std::uint64_t mix_seed(std::uint64_t state);

struct SweepFilters {
    bool isolated_free = false;
    bool connected = false;
};

// Exhaustive labeled-graph sweep on n vertices.  Records are written in
// graph-id order as JSON lines regardless of worker completion order.
// Returns the worst exit code seen.
int sweep_graphs(int n, const SweepFilters& filters, const RunConfig& cfg, std::ostream& out);

}  // namespace noncover

#endif
