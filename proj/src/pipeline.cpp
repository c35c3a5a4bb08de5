#include "noncover/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

#include "noncover/domination.hpp"
#include "noncover/errors.hpp"
#include "noncover/homology.hpp"
#include "noncover/mes.hpp"
#include "noncover/rainbow.hpp"

namespace noncover {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        default: return "budget-exceeded";
    }
}

bool VerificationRecord::contradiction() const {
    if (mes_bound_ok && !*mes_bound_ok) return true;
    if (collapsible_at_bound && *collapsible_at_bound == TriState::no) return true;
    if (collapsible_at_weak_bound && *collapsible_at_weak_bound == TriState::no) return true;
    if (vanishing_ok && !*vanishing_ok) return true;
    if (connectivity_ok && !*connectivity_ok) return true;
    if (rainbow && rainbow->samples > 0 && !rainbow->all_found) return true;
    return false;
}

bool VerificationRecord::budget_hit() const {
    if (collapsible_at_bound && *collapsible_at_bound == TriState::budget_exceeded) return true;
    if (collapsible_at_weak_bound && *collapsible_at_weak_bound == TriState::budget_exceeded)
        return true;
    for (const std::string& note : notes)
        if (note.find("budget") != std::string::npos) return true;
    return false;
}

int VerificationRecord::exit_code() const {
    if (contradiction()) return 2;
    if (budget_hit()) return 3;
    return 0;
}

namespace {

nlohmann::json opt_json(const std::optional<int>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json opt_json(const std::optional<bool>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json opt_json(const std::optional<TriState>& v) {
    return v ? nlohmann::json(to_string(*v)) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json record_to_json(const VerificationRecord& rec, bool include_timing) {
    nlohmann::json j{
        {"id", rec.id},
        {"n", rec.n},
        {"edge_count", rec.edge_count},
        {"igamma", opt_json(rec.igamma_value)},
        {"igamma_w", rec.igamma_w_value},
        {"bound", opt_json(rec.bound)},
        {"d_prec", opt_json(rec.d_prec_value)},
        {"mes_bound_ok", opt_json(rec.mes_bound_ok)},
        {"collapsible_at_bound", opt_json(rec.collapsible_at_bound)},
        {"collapse_steps", opt_json(rec.collapse_steps)},
        {"vanishing_ok", opt_json(rec.vanishing_ok)},
        {"connectivity_ok", opt_json(rec.connectivity_ok)},
        {"weak_bound", opt_json(rec.weak_bound)},
        {"collapsible_at_weak_bound", opt_json(rec.collapsible_at_weak_bound)},
        {"notes", rec.notes},
        {"status", rec.exit_code() == 0   ? "ok"
                   : rec.exit_code() == 2 ? "contradiction"
                                          : "budget-exceeded"},
    };
    if (rec.rainbow)
        j["rainbow"] = {{"samples", rec.rainbow->samples}, {"all_found", rec.rainbow->all_found}};
    else
        j["rainbow"] = nullptr;
    if (include_timing) j["timing"] = {{"total_ms", rec.total_ms}};
    return j;
}

std::uint64_t mix_seed(std::uint64_t state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

VertexSet random_cover(const Graph& g, std::uint64_t& rng_state) {
    std::uint64_t full = g.vertices().mask();
    for (int tries = 0; tries < 10000; ++tries) {
        rng_state = mix_seed(rng_state);
        VertexSet candidate = VertexSet::from_mask(rng_state & full);
        if (is_cover(g, candidate)) return candidate;
    }
    return g.vertices();  // always a cover
}

VerificationRecord::RainbowSummary sample_rainbow_systems(const Graph& g, int count,
                                                          std::uint64_t seed) {
    VerificationRecord::RainbowSummary summary{count, true};
    int m = g.vertex_count() - igamma(g).value.value();
    std::uint64_t rng = seed;
    for (int s = 0; s < count; ++s) {
        CoverSystem sys{g, {}};
        for (int i = 0; i < m; ++i) sys.sets.push_back(random_cover(g, rng));
        std::optional<RainbowCover> rc = find_rainbow_cover(sys);
        if (!rc || !rainbow_cover_valid(sys, *rc)) {
            summary.all_found = false;
            return summary;
        }
    }
    return summary;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

TriState run_collapse(const SimplicialComplex& x, int d, const RunConfig& cfg,
                      std::optional<int>& steps_out) {
    CollapseResult r = is_d_collapsible(x, d, cfg.state_budget);
    switch (r.status) {
        case CollapseStatus::collapsible:
            steps_out = static_cast<int>(r.certificate->steps.size());
            return TriState::yes;
        case CollapseStatus::not_collapsible:
            return TriState::no;
        default:
            return TriState::budget_exceeded;
    }
}

}  // namespace

VerificationRecord analyze_graph(const std::string& id, const Graph& g, const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.id = id;
    rec.n = g.vertex_count();
    rec.edge_count = g.edge_count();
    rec.igamma_w_value = igamma_w(g).value();

    try {
        if (g.edges().empty()) {
            rec.notes.push_back("no edges: the non-cover complex is the void complex");
        } else if (has_isolated_vertex(g)) {
            // igamma is infinite; theorem checks are skipped, but the weak
            // bound still certifies collapsibility (the complex is a cone
            // with any isolated vertex as apex)
            rec.notes.push_back("isolated vertices: igamma infinite, theorem checks skipped");
            rec.weak_bound = rec.n - rec.igamma_w_value - 1;
            std::optional<int> steps;
            rec.collapsible_at_weak_bound =
                run_collapse(noncover_complex(g), *rec.weak_bound, cfg, steps);
        } else {
            DominationWitness ig = igamma(g);
            rec.igamma_value = ig.value.value();
            rec.bound = rec.n - *rec.igamma_value - 1;

            MesBoundReport mes_report = verify_mes_bound(g, cfg.face_budget);
            rec.d_prec_value = mes_report.d_prec;
            rec.mes_bound_ok = mes_report.pass;

            rec.collapsible_at_bound =
                run_collapse(noncover_complex(g), *rec.bound, cfg, rec.collapse_steps);

            rec.vanishing_ok = check_vanishing(g, false, cfg.face_budget).pass;
            ConnectivityBoundReport connectivity = check_connectivity_bound(g, cfg.face_budget);
            rec.connectivity_ok = connectivity.pass;

            if (cfg.rainbow_samples > 0)
                rec.rainbow = sample_rainbow_systems(g, cfg.rainbow_samples,
                                                     mix_seed(cfg.seed ^ fnv1a(id)));
        }
    } catch (const BudgetExceeded& e) {
        rec.notes.push_back(std::string("budget exceeded: ") + e.what());
    }

    rec.total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return rec;
}

int sweep_graphs(int n, const SweepFilters& filters, const RunConfig& cfg, std::ostream& out) {
    std::uint64_t total = labeled_graph_count(n, cfg.max_n);
    int jobs = cfg.jobs > 0 ? cfg.jobs
                            : std::max(1u, std::thread::hardware_concurrency());
    bool any_contradiction = false, any_budget = false;

    auto run_one = [&](std::uint64_t id) -> std::optional<VerificationRecord> {
        Graph g = graph_from_id(n, id);
        if (filters.isolated_free && has_isolated_vertex(g)) return std::nullopt;
        if (filters.connected && !is_connected(g)) return std::nullopt;
        return analyze_graph(std::to_string(id), g, cfg);
    };

    // chunked so output stays in id order with bounded memory
    const std::uint64_t chunk = 4096;
    for (std::uint64_t base = 0; base < total; base += chunk) {
        std::uint64_t end = std::min(total, base + chunk);
        std::vector<std::optional<VerificationRecord>> results(end - base);
        std::atomic<std::uint64_t> next{base};
        auto worker = [&] {
            for (std::uint64_t id; (id = next.fetch_add(1)) < end;)
                results[id - base] = run_one(id);
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (std::thread& t : pool) t.join();
        for (const auto& rec : results) {
            if (!rec) continue;
            int ec = rec->exit_code();
            any_contradiction = any_contradiction || ec == 2;
            any_budget = any_budget || ec == 3;
            out << record_to_json(*rec).dump() << '\n';
        }
    }
    // exit-code precedence: contradiction dominates budget
    if (any_contradiction) return 2;
    return any_budget ? 3 : 0;
}

}  // namespace noncover
