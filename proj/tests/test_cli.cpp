// Drives the installed binary end to end through its exit-code contract:
// 0 pass, 1 usage/IO, 2 contradiction/invalid, 3 budget.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "noncover/collapse.hpp"
#include "noncover/graph.hpp"
#include "noncover/simplicial_complex.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out_file = fs::temp_directory_path() / ("noncover_cli_out_" +
                                                     std::to_string(counter++) + ".txt");
    std::string cmd = std::string(NONCOVER_CLI_PATH) + " " + args + " > " + out_file.string() +
                      " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out_file);
    return {WEXITSTATUS(status), ss.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "noncover_cli_test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    fs::path write(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

}  // namespace

TEST_CASE("analyze runs the full pipeline") {
    TempDir dir;
    fs::path c6 = dir.write("c6.g", noncover::serialize_graph(noncover::cycle_graph(6)));
    Run r = run_cli("analyze " + c6.string());
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec.at("igamma") == 2);
    CHECK(rec.at("bound") == 3);
    CHECK(rec.at("d_prec") == 3);
    CHECK(rec.at("collapsible_at_bound") == "yes");
    CHECK(rec.at("vanishing_ok") == true);
    CHECK(rec.at("connectivity_ok") == true);
    CHECK(rec.at("status") == "ok");
}

TEST_CASE("analyze flags degenerate inputs instead of checking theorems") {
    TempDir dir;
    fs::path edgeless = dir.write("e.g", "p edge 2 0\n");
    Run r = run_cli("analyze " + edgeless.string());
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec.at("igamma").is_null());
    CHECK(rec.at("notes").at(0).get<std::string>().find("void") != std::string::npos);

    fs::path isolated = dir.write("i.g", "p edge 3 1\ne 1 2\n");
    Run ri = run_cli("analyze " + isolated.string());
    REQUIRE(ri.exit_code == 0);
    json rec_i = json::parse(ri.out);
    CHECK(rec_i.at("igamma").is_null());
    CHECK(rec_i.at("weak_bound") == 3 - 2 - 1);
    CHECK(rec_i.at("collapsible_at_weak_bound") == "yes");
}

TEST_CASE("analyze reports parse failures on stderr with exit 1") {
    TempDir dir;
    fs::path bad = dir.write("bad.g", "p edge 3 1\ne 1 1\n");
    Run r = run_cli("analyze " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("line 2") != std::string::npos);

    CHECK(run_cli("analyze /nonexistent/file.g").exit_code == 1);
    CHECK(run_cli("bogus-subcommand").exit_code != 0);
}

TEST_CASE("sweep emits one JSONL record per surviving graph, in id order") {
    Run r = run_cli("sweep --n 3 --isolated-free --rainbow-samples 2");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> records;
    while (std::getline(lines, line)) records.push_back(json::parse(line));
    REQUIRE(records.size() == 4);  // isolated-free graphs on 3 labeled vertices
    long last_id = -1;
    for (const json& rec : records) {
        long id = std::stol(rec.at("id").get<std::string>());
        CHECK(id > last_id);
        last_id = id;
        CHECK(rec.at("status") == "ok");
    }
}

TEST_CASE("sweep passes on every isolated-free graph with 4 vertices") {
    Run r = run_cli("sweep --n 4 --isolated-free --rainbow-samples 3");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
        CHECK(json::parse(line).at("status") == "ok");
        ++records;
    }
    CHECK(records == 41);
}

TEST_CASE("sweep reruns are byte-identical apart from timing") {
    Run a = run_cli("sweep --n 3 --seed 7");
    Run b = run_cli("sweep --n 3 --seed 7");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto strip = [](const std::string& text) {
        std::istringstream lines(text);
        std::string line, out;
        while (std::getline(lines, line)) {
            json rec = json::parse(line);
            rec.erase("timing");
            out += rec.dump() + "\n";
        }
        return out;
    };
    CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("verify-cert replays and rejects tampering") {
    TempDir dir;
    noncover::SimplicialComplex nc = noncover::noncover_complex(noncover::path_graph(3));
    noncover::CollapseResult result = noncover::is_d_collapsible(nc, 1);
    REQUIRE(result.status == noncover::CollapseStatus::collapsible);

    fs::path complex_path = dir.write("nc.json", noncover::complex_to_json(nc).dump());
    fs::path cert_path =
        dir.write("cert.json", noncover::certificate_to_json(*result.certificate).dump());
    CHECK(run_cli("verify-cert " + complex_path.string() + " " + cert_path.string()).exit_code ==
          0);

    json tampered = noncover::certificate_to_json(*result.certificate);
    tampered[0]["free"] = {2};
    fs::path bad_path = dir.write("bad.json", tampered.dump());
    Run r = run_cli("verify-cert " + complex_path.string() + " " + bad_path.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("step 0") != std::string::npos);

    // the empty certificate is valid exactly for the void complex
    fs::path void_path = dir.write("void.json", R"({"ground_n":2,"facets":[]})");
    fs::path empty_cert = dir.write("empty.json", "[]");
    CHECK(run_cli("verify-cert " + void_path.string() + " " + empty_cert.string()).exit_code == 0);
    CHECK(run_cli("verify-cert " + complex_path.string() + " " + empty_cert.string()).exit_code ==
          2);
}

TEST_CASE("tightness reports the expected absence and flip") {
    Run absent = run_cli("tightness --k 2");
    REQUIRE(absent.exit_code == 0);
    CHECK(json::parse(absent.out).at("found") == false);

    Run found = run_cli("tightness --k 2 --extra 1");
    REQUIRE(found.exit_code == 0);
    CHECK(json::parse(found.out).at("found") == true);
}

TEST_CASE("rainbow searches a system file") {
    TempDir dir;
    dir.write("c6.g", noncover::serialize_graph(noncover::cycle_graph(6)));
    fs::path sys = dir.write("sys.json",
                             R"({"graph": "c6.g", "covers": [[1,2,4,5],[1,2,4,5],[1,2,4,5],[1,2,4,5]]})");
    Run r = run_cli("rainbow " + sys.string() + " --check-hypothesis");
    REQUIRE(r.exit_code == 0);
    json result = json::parse(r.out);
    CHECK(result.at("found") == true);
    CHECK(result.at("hypothesis_holds") == true);
}

TEST_CASE("dual-check and homology subcommands") {
    TempDir dir;
    fs::path c6 = dir.write("c6.g", noncover::serialize_graph(noncover::cycle_graph(6)));
    Run r = run_cli("dual-check " + c6.string());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("match") == true);

    fs::path circle = dir.write("circle.json", R"({"ground_n":3,"facets":[[1,2],[1,3],[2,3]]})");
    Run h = run_cli("homology " + circle.string());
    REQUIRE(h.exit_code == 0);
    CHECK(json::parse(h.out).at("betti").at("1") == 1);
}

TEST_CASE("budget override forces exit 3") {
    TempDir dir;
    fs::path c6 = dir.write("c6.g", noncover::serialize_graph(noncover::cycle_graph(6)));
    Run r = run_cli("--state-budget 2 analyze " + c6.string());
    CHECK(r.exit_code == 3);
    CHECK(json::parse(r.out).at("collapsible_at_bound") == "budget-exceeded");
}
