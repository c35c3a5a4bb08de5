// Acceptance suite: one line per criterion, PASS/FAIL with counts, exit 0
// iff everything passes.  Heavy criteria fan out across worker threads;
// every check is exact (no tolerances anywhere).

#include <atomic>
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "noncover/collapse.hpp"
#include "noncover/domination.hpp"
#include "noncover/errors.hpp"
#include "noncover/homology.hpp"
#include "noncover/mes.hpp"
#include "noncover/pipeline.hpp"
#include "noncover/rainbow.hpp"
#include "noncover/simplicial_complex.hpp"

using namespace noncover;

namespace {

int g_jobs = 0;

int worker_count() {
    if (g_jobs > 0) return g_jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Shared failure/count accumulator; workers merge local tallies into it.
struct Tally {
    std::mutex mu;
    long checked = 0;
    long failed = 0;
    long budget = 0;
    std::string first_failure;

    void merge(long c, long f, long b, const std::string& failure) {
        std::lock_guard<std::mutex> lock(mu);
        checked += c;
        failed += f;
        budget += b;
        if (first_failure.empty()) first_failure = failure;
    }
};

// Runs fn(id) for every id in [0, total) across the worker pool.
template <typename Fn>
void parallel_ids(std::uint64_t total, Fn&& fn) {
    std::atomic<std::uint64_t> next{0};
    auto loop = [&] {
        for (std::uint64_t id; (id = next.fetch_add(1)) < total;) fn(id);
    };
    int jobs = worker_count();
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(loop);
    loop();
    for (std::thread& t : pool) t.join();
}

// Applies fn to every isolated-vertex-free labeled graph on n vertices.
template <typename Fn>
void parallel_isolated_free(int n, Fn&& fn) {
    parallel_ids(labeled_graph_count(n), [&](std::uint64_t id) {
        Graph g = graph_from_id(n, id);
        if (!has_isolated_vertex(g)) fn(g, id);
    });
}

std::string graph_tag(int n, std::uint64_t id) {
    return "n=" + std::to_string(n) + " id=" + std::to_string(id);
}

bool same_betti(const std::map<int, long>& a, const std::map<int, long>& b) {
    for (const auto& [dim, v] : a)
        if (v != (b.count(dim) ? b.at(dim) : 0)) return false;
    for (const auto& [dim, v] : b)
        if (v != (a.count(dim) ? a.at(dim) : 0)) return false;
    return true;
}

struct CriterionResult {
    bool pass;
    std::string detail;
};

// ---------------------------------------------------------------- 1 & 8a
// Exhaustive collapse of NC(G) at d = n - igamma - 1 with replay-validated
// certificates (criterion 1); along every certificate, Betti numbers in
// dimensions >= d must be unchanged step by step (criterion 8, first half).

struct CollapseOutcome {
    CriterionResult collapse;
    CriterionResult homology_steps;
};

CollapseOutcome run_collapse_criterion() {
    Tally collapse_tally, step_tally;
    long budget_n6 = 0;
    for (int n = 2; n <= 6; ++n) {
        Tally local_budget;
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            long checked = 1, failed = 0, budget = 0;
            long steps_checked = 0, steps_failed = 0;
            std::string failure, step_failure;
            int bound = g.vertex_count() - igamma(g).value.value() - 1;
            SimplicialComplex nc = noncover_complex(g);
            CollapseResult r = is_d_collapsible(nc, bound);
            switch (r.status) {
                case CollapseStatus::not_collapsible:
                    failed = 1;
                    failure = "not collapsible at bound: " + graph_tag(n, id);
                    break;
                case CollapseStatus::budget_exceeded:
                    budget = 1;
                    failure = "state budget hit: " + graph_tag(n, id);
                    break;
                case CollapseStatus::collapsible: {
                    ReplayResult replay = replay_certificate(nc, *r.certificate, bound);
                    if (!replay.ok) {
                        failed = 1;
                        failure = "replay failed: " + graph_tag(n, id);
                        break;
                    }
                    if (bound <= nc.dimension()) {
                        SimplicialComplex current = nc;
                        std::map<int, long> before = reduced_betti_from(current, bound);
                        for (const CollapseStep& step : r.certificate->steps) {
                            current = apply_collapse(current, step.free_face);
                            std::map<int, long> after = reduced_betti_from(current, bound);
                            ++steps_checked;
                            if (!same_betti(before, after)) {
                                ++steps_failed;
                                if (step_failure.empty())
                                    step_failure = "betti changed above d: " + graph_tag(n, id);
                            }
                            before = std::move(after);
                        }
                    }
                    break;
                }
            }
            collapse_tally.merge(checked, failed, budget, failure);
            step_tally.merge(steps_checked, steps_failed, 0, step_failure);
            local_budget.merge(0, 0, budget, "");
        });
        if (n <= 5 && local_budget.budget > 0) {
            collapse_tally.first_failure =
                "budget exceeded below n=6 (" + std::to_string(local_budget.budget) + " graphs)";
            collapse_tally.failed += local_budget.budget;
        }
        if (n == 6) budget_n6 = local_budget.budget;
    }

    CollapseOutcome out;
    std::ostringstream d1;
    d1 << collapse_tally.checked << " graphs, " << collapse_tally.failed << " failures, "
       << budget_n6 << " budget hits at n=6";
    if (!collapse_tally.first_failure.empty()) d1 << "; first: " << collapse_tally.first_failure;
    out.collapse = {collapse_tally.failed == 0, d1.str()};

    std::ostringstream d8;
    d8 << step_tally.checked << " certificate steps, " << step_tally.failed << " violations";
    if (!step_tally.first_failure.empty()) d8 << "; first: " << step_tally.first_failure;
    out.homology_steps = {step_tally.failed == 0, d8.str()};
    return out;
}

// ------------------------------------------------------------------- 2
// d_prec(NC(G), normalized ordering) <= n - igamma - 1: exhaustive for
// n <= 6 plus a 200-graph seeded sample at n = 7.

CriterionResult run_mes_criterion() {
    Tally tally;
    for (int n = 2; n <= 6; ++n)
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            MesBoundReport report = verify_mes_bound(g);
            tally.merge(1, report.pass ? 0 : 1,
                        0, report.pass ? "" : "bound violated: " + graph_tag(n, id));
        });

    // seeded n=7 sample
    std::vector<Graph> sample;
    std::uint64_t rng = 0x6d657362756e64ull;  // fixed seed
    std::uint64_t id_space = labeled_graph_count(7);
    while (sample.size() < 200) {
        rng = mix_seed(rng);
        Graph g = graph_from_id(7, rng % id_space);
        if (!has_isolated_vertex(g)) sample.push_back(std::move(g));
    }
    std::atomic<long> sample_failures{0};
    parallel_ids(sample.size(), [&](std::uint64_t i) {
        if (!verify_mes_bound(sample[i]).pass) ++sample_failures;
    });
    tally.checked += static_cast<long>(sample.size());
    tally.failed += sample_failures.load();

    std::ostringstream d;
    d << tally.checked << " graphs (incl. 200 sampled at n=7), " << tally.failed << " violations";
    if (!tally.first_failure.empty()) d << "; first: " << tally.first_failure;
    return {tally.failed == 0, d.str()};
}

// ------------------------------------------------------------------- 3

CriterionResult run_cycle_criterion() {
    std::ostringstream d;
    bool pass = true;
    for (int k : {2, 3, 4}) {
        DominationValue v = igamma(cycle_graph(3 * k)).value;
        bool ok = v == DominationValue::finite(k);
        pass = pass && ok;
        d << "igamma(C_" << 3 * k << ")=" << v.to_string() << (ok ? "" : " (expected k)") << " ";
    }
    return {pass, d.str()};
}

// ------------------------------------------------------------------- 4

CriterionResult run_rainbow_criterion() {
    bool pass = true;
    std::ostringstream d;

    for (int k : {2, 3}) {
        bool absent = !find_rainbow_cover(tightness_instance(k)).has_value();
        CoverSystem extended = tightness_instance(k, 1);
        std::optional<RainbowCover> rc = find_rainbow_cover(extended);
        bool found = rc && rainbow_cover_valid(extended, *rc);
        pass = pass && absent && found;
        d << "k=" << k << (absent ? " absent" : " UNEXPECTED-HIT") << "/"
          << (found ? "flips" : "NO-FLIP") << " ";
    }

    Tally tally;
    for (int n = 2; n <= 5; ++n)
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            int m = g.vertex_count() - igamma(g).value.value();
            std::uint64_t rng = mix_seed(0xc0fe ^ id ^ (static_cast<std::uint64_t>(n) << 40));
            long failed = 0;
            std::string failure;
            for (int s = 0; s < 50; ++s) {
                CoverSystem sys{g, {}};
                for (int i = 0; i < m; ++i) sys.sets.push_back(random_cover(g, rng));
                std::optional<RainbowCover> rc = find_rainbow_cover(sys);
                if (!rc || !rainbow_cover_valid(sys, *rc)) {
                    ++failed;
                    failure = "no rainbow cover: " + graph_tag(n, id);
                }
            }
            tally.merge(50, failed, 0, failure);
        });
    pass = pass && tally.failed == 0;
    d << "| " << tally.checked << " sampled cover systems, " << tally.failed << " misses";
    if (!tally.first_failure.empty()) d << "; first: " << tally.first_failure;
    return {pass, d.str()};
}

// ------------------------------------------------------------------- 5

CriterionResult run_homology_criterion() {
    Tally tally;
    for (int n = 2; n <= 6; ++n)
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            long failed = 0;
            std::string failure;
            if (!check_vanishing(g, /*check_induced=*/n <= 5).pass) {
                ++failed;
                failure = "noncover homology above bound: " + graph_tag(n, id);
            }
            if (!check_connectivity_bound(g).pass) {
                ++failed;
                failure = "eta below igamma: " + graph_tag(n, id);
            }
            tally.merge(2, failed, 0, failure);
        });
    std::ostringstream d;
    d << tally.checked << " checks (vanishing incl. induced n<=5, connectivity bound), "
      << tally.failed << " violations";
    if (!tally.first_failure.empty()) d << "; first: " << tally.first_failure;
    return {tally.failed == 0, d.str()};
}

// ------------------------------------------------------------------- 6

CriterionResult run_duality_criterion() {
    long failed = 0;
    std::string failure;

    std::uint64_t rng = 0xa1e8ull;
    long random_checked = 0;
    for (int i = 0; i < 100; ++i) {
        rng = mix_seed(rng);
        int n = 2 + static_cast<int>(rng % 5);  // ground set 2..6
        int count = 1 + static_cast<int>(mix_seed(rng) % 6);
        std::vector<VertexSet> facets;
        std::uint64_t below_full = VertexSet::full(n).mask();
        for (int f = 0; f < count; ++f) {
            rng = mix_seed(rng);
            facets.push_back(VertexSet::from_mask(rng % below_full));
        }
        SimplicialComplex x(n, facets);
        ++random_checked;
        if (!check_alexander_duality(x).pass) {
            ++failed;
            if (failure.empty()) failure = "betti duality failed on sample " + std::to_string(i);
        }
    }

    Tally dual_tally;
    for (int n = 1; n <= 5; ++n)
        parallel_ids(labeled_graph_count(n), [&](std::uint64_t id) {
            Graph g = graph_from_id(n, id);
            bool ok = alexander_dual(independence_complex(g)) == noncover_complex(g);
            dual_tally.merge(1, ok ? 0 : 1, 0,
                             ok ? "" : "dual(I(G)) != NC(G): " + graph_tag(n, id));
        });

    std::ostringstream d;
    d << random_checked << " random complexes, " << dual_tally.checked
      << " exhaustive dual comparisons, " << failed + dual_tally.failed << " violations";
    if (!failure.empty()) d << "; first: " << failure;
    if (!dual_tally.first_failure.empty()) d << "; first: " << dual_tally.first_failure;
    return {failed + dual_tally.failed == 0, d.str()};
}

// ------------------------------------------------------------------- 7

CriterionResult run_claims_criterion() {
    // Claim 1: faces of NC(relabeled G) with the same trace on the witness
    // complement (when that trace spans an edge) share their sequence.
    Tally claim1;
    for (int n = 2; n <= 5; ++n)
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            RelabeledInstance inst = normalize_instance(g);
            FacetOrdering ord = noncover_facet_ordering(inst.relabeled);
            VertexSet rest = inst.relabeled_rest();
            std::map<std::uint64_t, std::vector<int>> repr;
            long pairs = 0, failed = 0;
            for (VertexSet face : enumerate_faces(ord.complex())) {
                VertexSet trace = face.complement_in(inst.n()) & rest;
                if (induced_subgraph(inst.relabeled, trace).graph.edge_count() == 0) continue;
                MesRecord rec = mes(ord, face);
                auto [it, fresh] = repr.try_emplace(trace.mask(), rec.sequence);
                if (!fresh) {
                    ++pairs;
                    if (it->second != rec.sequence) ++failed;
                }
            }
            claim1.merge(pairs, failed, 0,
                         failed ? "mes differs within a trace class: " + graph_tag(n, id) : "");
        });

    // Claim 2: deficiency inequality for the computed witness, all S.
    Tally claim2;
    for (int n = 2; n <= 7; ++n)
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            DominationWitness w = igamma(g);
            int target = w.value.value() - w.independent_set.size();
            std::uint64_t rest = (g.vertices() - w.independent_set).mask();
            long failed = 0;
            for (std::uint64_t m = rest;; m = (m - 1) & rest) {
                VertexSet s = VertexSet::from_mask(m);
                if (s.size() - (neighborhood(g, s) & w.independent_set).size() < target) ++failed;
                if (m == 0) break;
            }
            claim2.merge(1, failed, 0,
                         failed ? "deficiency inequality failed: " + graph_tag(n, id) : "");
        });

    std::ostringstream d;
    d << claim1.checked << " trace pairs (" << claim1.failed << " bad), " << claim2.checked
      << " graphs' subset scans (" << claim2.failed << " bad)";
    if (!claim1.first_failure.empty()) d << "; first: " << claim1.first_failure;
    if (!claim2.first_failure.empty()) d << "; first: " << claim2.first_failure;
    return {claim1.failed == 0 && claim2.failed == 0, d.str()};
}

// ------------------------------------------------------------------- 8b

CriterionResult run_leray_criterion() {
    Tally tally;
    for (int n = 2; n <= 5; ++n)
        parallel_isolated_free(n, [&](const Graph& g, std::uint64_t id) {
            SimplicialComplex nc = noncover_complex(g);
            bool ok = leray_number(nc) <= collapsibility_number(nc);
            tally.merge(1, ok ? 0 : 1, 0,
                        ok ? "" : "leray above collapsibility: " + graph_tag(n, id));
        });

    std::uint64_t rng = 0x1e6a7ull;
    long random_failed = 0;
    for (int i = 0; i < 50; ++i) {
        rng = mix_seed(rng);
        int n = 2 + static_cast<int>(rng % 4);  // ground set 2..5
        int count = 1 + static_cast<int>(mix_seed(rng) % 5);
        std::vector<VertexSet> facets;
        for (int f = 0; f < count; ++f) {
            rng = mix_seed(rng);
            facets.push_back(VertexSet::from_mask(rng & VertexSet::full(n).mask()));
        }
        SimplicialComplex x(n, facets);
        if (leray_number(x) > collapsibility_number(x)) ++random_failed;
    }

    std::ostringstream d;
    d << tally.checked << " noncover complexes + 50 random complexes, "
      << tally.failed + random_failed << " violations";
    if (!tally.first_failure.empty()) d << "; first: " << tally.first_failure;
    return {tally.failed == 0 && random_failed == 0, d.str()};
}

void report(int index, const std::string& name, const CriterionResult& r, bool& all_pass) {
    std::cout << "criterion " << index << " [" << (r.pass ? "PASS" : "FAIL") << "] " << name
              << ": " << r.detail << "\n";
    std::cout.flush();
    all_pass = all_pass && r.pass;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) g_jobs = std::atoi(argv[++i]);
    }

    auto start = std::chrono::steady_clock::now();
    bool all_pass = true;

    CollapseOutcome collapse = run_collapse_criterion();
    report(1, "collapsibility at n-igamma-1 (exhaustive n<=6)", collapse.collapse, all_pass);
    report(2, "exclusion-sequence bound (n<=6 exhaustive, n=7 sampled)", run_mes_criterion(),
           all_pass);
    report(3, "igamma of the 3k-cycles", run_cycle_criterion(), all_pass);
    report(4, "rainbow tightness and sampled cover systems", run_rainbow_criterion(), all_pass);
    report(5, "homology vanishing and connectivity bounds", run_homology_criterion(), all_pass);
    report(6, "alexander duality", run_duality_criterion(), all_pass);
    report(7, "trace-class and deficiency claims", run_claims_criterion(), all_pass);
    CriterionResult leray = run_leray_criterion();
    report(8, "collapse steps preserve top homology; leray vs collapsibility",
           CriterionResult{collapse.homology_steps.pass && leray.pass,
                           collapse.homology_steps.detail + " | " + leray.detail},
           all_pass);

    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << (all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " (" << elapsed
              << "s)\n";
    return all_pass ? 0 : 1;
}
