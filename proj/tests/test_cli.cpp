// End-to-end runs of the command-line tool. The binary location and the
// fixture directory come in as compile definitions from CMake.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "matchflow/io.hpp"
#include "matchflow/matchflow.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MATCHFLOW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(MATCHFLOW_FIXTURE_DIR) + "/" + name;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("compute prints the published numbers", "[cli]") {
    RunResult r = run_cli("compute " + fixture("sporadic-912.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("26 177 336 261 95 16 1") != std::string::npos);
    CHECK(r.out.find("Z(G) = 912") != std::string::npos);

    RunResult mol = run_cli("compute " + fixture("molecule-74816.json"));
    CHECK(mol.exit_code == 0);
    CHECK(mol.out.find("Z(G) = 74816") != std::string::npos);

    RunResult asc = run_cli("compute " + fixture("sporadic-912.json") + " --ascending");
    CHECK(asc.out.find("1 16 95 261 336 177 26") != std::string::npos);
}

TEST_CASE("compute --verify cross-checks against the oracle", "[cli]") {
    RunResult r = run_cli("compute " + fixture("sporadic-912.json") + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verify: MATCH") != std::string::npos);

    // molecule has 22 vertices; the default cap skips, a raised cap verifies
    RunResult skipped = run_cli("compute " + fixture("molecule-74816.json") + " --verify");
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.out.find("verify: SKIPPED") != std::string::npos);
    RunResult checked =
        run_cli("compute " + fixture("molecule-74816.json") + " --verify --verify-cap 22");
    CHECK(checked.exit_code == 0);
    CHECK(checked.out.find("verify: MATCH") != std::string::npos);
}

TEST_CASE("compute --json reports round-trip cleanly", "[cli]") {
    RunResult r = run_cli("compute " + fixture("molecule-74816.json") + " --json --verify-cap 22 --verify");
    REQUIRE(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report["k"] == 11);
    CHECK(report["verification"] == "MATCH");
    // the Hosoya index re-derives from the printed coefficients
    matchflow::BigInt total = 0;
    for (const auto& c : report["coefficients_descending"])
        total += matchflow::BigInt(c.get<std::string>());
    CHECK(total.str() == report["hosoya"].get<std::string>());
    // descending is the exact reverse of ascending
    auto desc = report["coefficients_descending"];
    auto asc = report["coefficients_ascending"];
    REQUIRE(desc.size() == asc.size());
    for (size_t i = 0; i < desc.size(); ++i) CHECK(desc[i] == asc[asc.size() - 1 - i]);
}

TEST_CASE("exit codes distinguish input errors", "[cli]") {
    CHECK(run_cli("compute /nonexistent/chain.json").exit_code == 1);

    auto bad = temp_file("matchflow_bad_chain.json");
    std::ofstream(bad) << R"({"base": {"vertices": ["a","b"], "edges": [["a","b"]], "pair": ["a","b"]},
                              "blocks": [{"name": "pq", "attach": ["b","a"], "out": ["a","q"],
                                          "vertices": ["q"], "edges": [["q","a"]]}]})";
    CHECK(run_cli("compute " + bad.string()).exit_code == 1);  // attach mismatch
    CHECK(run_cli("validate " + bad.string()).exit_code == 1);
    CHECK(run_cli("compute").exit_code == 1);  // missing argument
    std::filesystem::remove(bad);
}

TEST_CASE("validate dumps the realized graph for the oracle", "[cli]") {
    auto graph_path = temp_file("matchflow_realized.json");
    RunResult v = run_cli("validate " + fixture("sporadic-912.json") + " --realize " + graph_path.string());
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("realized |V| = 13") != std::string::npos);

    RunResult o = run_cli("oracle " + graph_path.string());
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("1 16 95 261 336 177 26") != std::string::npos);
    CHECK(o.out.find("Z(G) = 912") != std::string::npos);
    std::filesystem::remove(graph_path);
}

TEST_CASE("oracle prints series and pair vectors", "[cli]") {
    auto c6 = temp_file("matchflow_c6.json");
    matchflow::save_json(c6.string(), matchflow::graph_to_json(matchflow::gen_basic(matchflow::BasicKind::Cycle, 6)));
    RunResult r = run_cli("oracle " + c6.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 6 9 2") != std::string::npos);
    CHECK(r.out.find("Z(G) = 18") != std::string::npos);

    RunResult pr = run_cli("oracle " + c6.string() + " --pair v1 v2");
    CHECK(pr.exit_code == 0);
    CHECK(pr.out.find("g-v1-v2") != std::string::npos);

    auto p2 = temp_file("matchflow_p2.json");
    matchflow::save_json(p2.string(), matchflow::graph_to_json(matchflow::gen_basic(matchflow::BasicKind::Path, 2)));
    RunResult edge = run_cli("oracle " + p2.string());
    CHECK(edge.out.find("1 1") != std::string::npos);

    auto big = temp_file("matchflow_p65.json");
    matchflow::save_json(big.string(), matchflow::graph_to_json(matchflow::gen_basic(matchflow::BasicKind::Path, 65)));
    CHECK(run_cli("oracle " + big.string()).exit_code == 1);  // over the 64-vertex cap
    std::filesystem::remove(c6);
    std::filesystem::remove(p2);
    std::filesystem::remove(big);
}

TEST_CASE("gen reproduces the shipped fixtures byte for byte", "[cli]") {
    auto out = temp_file("matchflow_gen_fixture.json");
    RunResult r = run_cli("gen fixture sporadic-912 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(out) == slurp(fixture("sporadic-912.json")));
    std::filesystem::remove(out);
}

TEST_CASE("gen emits the parametric families", "[cli]") {
    auto out = temp_file("matchflow_gen_family.json");
    CHECK(run_cli("gen benzenoid LL --out " + out.string()).exit_code == 0);
    matchflow::Chain bz = matchflow::load_chain(out.string());
    CHECK(matchflow::realize(bz).vertex_count() == 14);

    CHECK(run_cli("gen cyclic-chain 6:1,5:2 --out " + out.string()).exit_code == 0);
    matchflow::Chain cy = matchflow::load_chain(out.string());
    CHECK(matchflow::realize(cy).vertex_count() == 9);

    CHECK(run_cli("gen random --seed 7 --out " + out.string()).exit_code == 0);
    matchflow::Chain rnd = matchflow::load_chain(out.string());
    CHECK_FALSE(matchflow::has_errors(matchflow::validate(rnd)));

    // without --out the chain JSON goes to stdout
    RunResult piped = run_cli("gen benzenoid L");
    CHECK(piped.exit_code == 0);
    CHECK_NOTHROW(matchflow::chain_from_json(nlohmann::json::parse(piped.out)));

    CHECK(run_cli("gen wat").exit_code == 1);
    std::filesystem::remove(out);
}

TEST_CASE("compute --k truncates the series", "[cli]") {
    RunResult r = run_cli("compute " + fixture("sporadic-912.json") + " --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("k = 2") != std::string::npos);
    CHECK(r.out.find("95 16 1") != std::string::npos);
}

TEST_CASE("bench runs and reports per-block cost", "[cli]") {
    RunResult r = run_cli("bench --blocks 4 --k 3 --repeat 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("per-block=") != std::string::npos);
    CHECK(r.out.find("run 2:") != std::string::npos);

    // counts are workload facts: identical across runs and repeats
    auto counts_of = [](const std::string& text) {
        std::vector<std::string> counts;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            auto at = line.find("peak-digits=");
            if (at != std::string::npos) counts.push_back(line.substr(at));
        }
        return counts;
    };
    std::vector<std::string> counts = counts_of(r.out);
    REQUIRE(counts.size() == 2);
    CHECK(counts[0] == counts[1]);
    CHECK(counts == counts_of(run_cli("bench --blocks 4 --k 3 --repeat 2").out));
}
