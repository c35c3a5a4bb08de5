// Command-line front end: single-graph analysis, exhaustive sweeps,
// certificate replay, rainbow-cover search, and homology reports.
//
// Exit codes: 0 all checks pass, 1 usage/IO error, 2 a theorem-backed check
// came out false (a library bug if it ever happens), 3 a budget was hit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "noncover/collapse.hpp"
#include "noncover/domination.hpp"
#include "noncover/errors.hpp"
#include "noncover/homology.hpp"
#include "noncover/mes.hpp"
#include "noncover/pipeline.hpp"
#include "noncover/rainbow.hpp"
#include "noncover/simplicial_complex.hpp"

namespace {

using noncover::BudgetExceeded;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

noncover::Graph load_graph(const std::string& path) {
    return noncover::parse_graph(slurp(path));
}

nlohmann::json load_json(const std::string& path) {
    return nlohmann::json::parse(slurp(path));
}

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << text;
    }

    std::ostream& stream(std::ofstream& file) const {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw std::runtime_error("cannot write " + path);
        return file;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"machine verification of non-cover complex collapsibility"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    noncover::RunConfig cfg;
    Output output;
    app.add_option("--max-n", cfg.max_n, "guard for exhaustive graph enumeration");
    app.add_option("--face-budget", cfg.face_budget, "max distinct faces per enumeration");
    app.add_option("--state-budget", cfg.state_budget, "max states per collapse search");
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps (0 = auto)");
    app.add_option("--rainbow-samples", cfg.rainbow_samples,
                   "sampled cover systems per analyzed graph");
    app.add_option("--out", output.path, "write output to this file instead of stdout");

    // CI hook: one knob that clamps both budgets
    if (const char* env = std::getenv("NONCOVER_BUDGET_OVERRIDE")) {
        cfg.face_budget = cfg.state_budget = std::strtoull(env, nullptr, 10);
    }

    std::string graph_path, complex_path, cert_path, system_path;
    int sweep_n = 4;
    noncover::SweepFilters filters;
    int tightness_k = 2, tightness_extra = 0;
    int cert_d = -1;
    bool check_hypothesis = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline on one edge-list file");
    analyze->add_option("graph", graph_path, "edge-list file")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive labeled-graph sweep (JSONL)");
    sweep->add_option("--n", sweep_n, "number of vertices")->required();
    sweep->add_flag("--isolated-free", filters.isolated_free, "skip graphs with isolated vertices");
    sweep->add_flag("--connected", filters.connected, "connected graphs only");

    CLI::App* verify = app.add_subcommand("verify-cert", "replay a collapse certificate");
    verify->add_option("complex", complex_path, "complex JSON")->required();
    verify->add_option("certificate", cert_path, "certificate JSON")->required();
    verify->add_option("--d", cert_d, "enforce this collapse dimension (default: max step size)");

    CLI::App* rainbow = app.add_subcommand("rainbow", "rainbow-cover search on a system file");
    rainbow->add_option("system", system_path, "system JSON")->required();
    rainbow->add_flag("--check-hypothesis", check_hypothesis,
                      "also run the brute-force cover-hypothesis check");

    CLI::App* tightness = app.add_subcommand("tightness", "the C_{3k} tight example");
    tightness->add_option("--k", tightness_k, "cycle parameter (k >= 2)")->required();
    tightness->add_option("--extra", tightness_extra, "extra copies of the matching cover");

    CLI::App* dual = app.add_subcommand("dual-check", "alexander dual of I(G) vs NC(G)");
    dual->add_option("graph", graph_path, "edge-list file")->required();

    CLI::App* homology = app.add_subcommand("homology", "reduced Betti numbers of a complex");
    homology->add_option("complex", complex_path, "complex JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            noncover::VerificationRecord rec =
                noncover::analyze_graph(graph_path, load_graph(graph_path), cfg);
            output.write(noncover::record_to_json(rec).dump(2) + "\n");
            return rec.exit_code();
        }

        if (*sweep) {
            std::ofstream file;
            return noncover::sweep_graphs(sweep_n, filters, cfg, output.stream(file));
        }

        if (*verify) {
            noncover::SimplicialComplex x = noncover::complex_from_json(load_json(complex_path));
            noncover::CollapseCertificate cert =
                noncover::certificate_from_json(load_json(cert_path));
            int d = cert_d >= 0 ? cert_d : cert.max_free_size();
            noncover::ReplayResult r = noncover::replay_certificate(x, cert, d);
            if (r.ok) {
                output.write("certificate valid (" + std::to_string(cert.steps.size()) +
                             " steps, d=" + std::to_string(d) + ")\n");
                return 0;
            }
            std::cerr << "certificate invalid at step " << r.failed_step << ": " << r.reason
                      << "\n";
            return 2;
        }

        if (*rainbow) {
            noncover::CoverSystem sys = noncover::load_cover_system(system_path);
            nlohmann::json j = noncover::rainbow_result_to_json(noncover::find_rainbow_cover(sys));
            if (check_hypothesis) {
                noncover::CoverHypothesisReport rep = noncover::check_cover_hypothesis(sys);
                j["hypothesis_holds"] = rep.hypothesis_holds;
                if (rep.counterexample) j["counterexample"] = rep.counterexample->to_vector();
                if (rep.contradiction) {
                    output.write(j.dump(2) + "\n");
                    return 2;
                }
            }
            output.write(j.dump(2) + "\n");
            return 0;
        }

        if (*tightness) {
            noncover::CoverSystem sys =
                noncover::tightness_instance(tightness_k, tightness_extra);
            auto rc = noncover::find_rainbow_cover(sys);
            nlohmann::json j = noncover::rainbow_result_to_json(rc);
            j["k"] = tightness_k;
            j["copies"] = static_cast<int>(sys.sets.size());
            output.write(j.dump(2) + "\n");
            // with the bare 2k-1 copies a hit would contradict the tight example
            if (tightness_extra == 0 && rc) return 2;
            return 0;
        }

        if (*dual) {
            noncover::Graph g = load_graph(graph_path);
            noncover::SimplicialComplex dual_of_ind =
                noncover::alexander_dual(noncover::independence_complex(g));
            noncover::SimplicialComplex nc = noncover::noncover_complex(g);
            bool same = dual_of_ind == nc;
            nlohmann::json j{{"match", same},
                             {"dual_of_independence", noncover::complex_to_json(dual_of_ind)},
                             {"noncover", noncover::complex_to_json(nc)}};
            output.write(j.dump(2) + "\n");
            return same ? 0 : 2;
        }

        if (*homology) {
            noncover::SimplicialComplex x = noncover::complex_from_json(load_json(complex_path));
            output.write(
                noncover::profile_to_json(noncover::reduced_betti(x, cfg.face_budget)).dump(2) +
                "\n");
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
