// matchflow: count k-matchings and Hosoya indices of graphs assembled by
// successive two-vertex amalgamations.
//
// Subcommands:
//   compute   evaluate a chain file through the transfer pipeline
//   oracle    direct matching counts of a plain graph file
//   gen       emit chain files for the built-in families and fixtures
//   bench     time the pipeline on a synthetic chain
//   validate  structural diagnostics for a chain file
//
// Exit codes: 0 success, 1 bad input, 2 verification mismatch.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchflow/matchflow.hpp"

namespace {

using namespace matchflow;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> coeff_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const BigInt& x : v) out.push_back(x.str());
    return out;
}

void print_diagnostics(const std::vector<Diagnostic>& diags) {
    for (const Diagnostic& d : diags) {
        std::cerr << (d.error ? "error" : "warning") << " [" << to_string(d.code) << "]";
        if (d.block_index >= 0) std::cerr << " block " << d.block_index + 1;
        std::cerr << ": " << d.message << "\n";
    }
}

size_t max_digits(const KMatchingVector& vec) {
    size_t widest = 1;
    for (const MatchSeries& s : vec.blocks)
        for (const BigInt& c : s.coeffs())
            if (c != 0) widest = std::max(widest, c.str().size());
    return widest;
}

int cmd_compute(const std::string& path, int k_flag, bool verify, int verify_cap, bool json_out,
                bool ascending_out, bool strict, const std::string& echo) {
    Chain chain = load_chain(path);
    std::vector<Diagnostic> diags = validate(chain, strict);
    if (has_errors(diags)) {
        print_diagnostics(diags);
        return 1;
    }
    print_diagnostics(diags);  // surviving warnings, if any

    auto start = Clock::now();
    std::optional<int> k_opt;
    if (k_flag >= 0) k_opt = k_flag;
    KMatchingVector vec = evaluate(chain, k_opt);
    double wall = ms_since(start);
    const int k = vec.bound();
    const BigInt z = vec.whole().sum();

    std::string verdict;
    if (verify) {
        Graph g = realize(chain);
        if (g.vertex_count() <= static_cast<size_t>(verify_cap)) {
            KMatchingVector direct = matching_vector(g, vec.first, vec.second, k);
            verdict = vec == direct ? "MATCH" : "MISMATCH";
        } else {
            verdict = "SKIPPED";
        }
    }

    if (json_out) {
        nlohmann::json report;
        report["command"] = echo;
        report["chain"] = path;
        report["k"] = k;
        report["coefficients_descending"] = coeff_strings(descending(vec.whole()));
        report["coefficients_ascending"] = coeff_strings(ascending(vec.whole()));
        report["hosoya"] = z.str();
        report["wall_ms"] = wall;
        report["verification"] = verdict.empty() ? nlohmann::json(nullptr) : nlohmann::json(verdict);
        std::cout << dump_json(report);
    } else {
        std::cout << "chain: " << path << "\n"
                  << "k = " << k << "\n";
        if (ascending_out)
            std::cout << "coefficients (ascending): " << join_coeffs(ascending(vec.whole())) << "\n";
        else
            std::cout << "coefficients (descending): " << join_coeffs(descending(vec.whole())) << "\n";
        std::cout << "Z(G) = " << z << "\n";
        if (!verdict.empty()) std::cout << "verify: " << verdict << "\n";
        std::cout << "time: " << wall << " ms\n";
    }
    return verdict == "MISMATCH" ? 2 : 0;
}

int cmd_oracle(const std::string& path, int k_flag, const std::vector<std::string>& pair,
               bool json_out, bool descending_out, const std::string& echo) {
    Graph g = load_graph(path);
    const int k = k_flag >= 0 ? k_flag : static_cast<int>(g.vertex_count()) / 2;
    auto start = Clock::now();
    MatchSeries series = match_series(g, k);
    const BigInt z = series.sum();

    if (!pair.empty()) {
        KMatchingVector vec = matching_vector(g, pair[0], pair[1], k);
        double wall = ms_since(start);
        if (json_out) {
            nlohmann::json report;
            report["command"] = echo;
            report["graph"] = path;
            report["k"] = k;
            report["pair"] = {vec.first, vec.second};
            const char* names[4] = {"whole", "minus_first", "minus_second", "minus_both"};
            for (int i = 0; i < 4; ++i) {
                report["blocks"][names[i]]["ascending"] = coeff_strings(ascending(vec.blocks[static_cast<size_t>(i)]));
                report["blocks"][names[i]]["descending"] = coeff_strings(descending(vec.blocks[static_cast<size_t>(i)]));
            }
            report["hosoya"] = z.str();
            report["wall_ms"] = wall;
            std::cout << dump_json(report);
        } else {
            auto fmt = [&](const MatchSeries& s) {
                return join_coeffs(descending_out ? descending(s) : ascending(s));
            };
            std::cout << "graph: " << path << "\nk = " << k << "\n"
                      << "g:       " << fmt(vec.whole()) << "\n"
                      << "g-" << vec.first << ":    " << fmt(vec.minus_first()) << "\n"
                      << "g-" << vec.second << ":    " << fmt(vec.minus_second()) << "\n"
                      << "g-" << vec.first << "-" << vec.second << ": " << fmt(vec.minus_both()) << "\n"
                      << "Z(G) = " << z << "\n"
                      << "time: " << wall << " ms\n";
        }
        return 0;
    }

    double wall = ms_since(start);
    if (json_out) {
        nlohmann::json report;
        report["command"] = echo;
        report["graph"] = path;
        report["k"] = k;
        report["coefficients_ascending"] = coeff_strings(ascending(series));
        report["coefficients_descending"] = coeff_strings(descending(series));
        report["hosoya"] = z.str();
        report["wall_ms"] = wall;
        std::cout << dump_json(report);
    } else {
        std::cout << "graph: " << path << "\nk = " << k << "\n"
                  << "coefficients (" << (descending_out ? "descending" : "ascending")
                  << "): " << join_coeffs(descending_out ? descending(series) : ascending(series)) << "\n"
                  << "Z(G) = " << z << "\n"
                  << "time: " << wall << " ms\n";
    }
    return 0;
}

std::vector<std::pair<int, int>> parse_rings(const std::string& text) {
    // "6:1,5:2" -> {(6,1),(5,2)}
    std::vector<std::pair<int, int>> rings;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw BadParameterError("ring entry must look like LENGTH:OFFSET, got '" + item + "'");
        try {
            rings.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw BadParameterError("ring entry must look like LENGTH:OFFSET, got '" + item + "'");
        }
    }
    return rings;
}

int cmd_gen(const std::string& family, const std::string& params, uint64_t seed, int max_blocks,
            int max_block_size, const std::string& out_path) {
    Chain chain;
    if (family == "fixture") {
        chain = gen_chain(ChainSpec::fixture(params));
    } else if (family == "benzenoid") {
        chain = gen_chain(ChainSpec::benzenoid(params));
    } else if (family == "cyclic-chain") {
        chain = gen_chain(ChainSpec::cyclic(parse_rings(params)));
    } else if (family == "random") {
        chain = gen_random_chain(seed, max_blocks, max_block_size);
    } else {
        throw BadParameterError("unknown family: " + family +
                                " (expected fixture|benzenoid|cyclic-chain|random)");
    }
    Graph g = realize(chain);
    nlohmann::json j = chain_to_json(chain);
    if (out_path.empty()) {
        std::cout << dump_json(j);
    } else {
        save_json(out_path, j);
        std::cout << "wrote " << out_path << "\n";
    }
    std::cerr << "blocks: " << chain.blocks.size() << ", realized |V| = " << g.vertex_count()
              << ", |E| = " << g.edge_count() << "\n";
    return 0;
}

int cmd_bench(int blocks, int k, int repeat) {
    if (blocks < 1 || k < 1 || repeat < 1) throw BadParameterError("bench arguments must be >= 1");
    Chain chain = gen_pendant_chain(blocks);
    for (int r = 1; r <= repeat; ++r) {
        auto t0 = Clock::now();
        std::vector<TransferMatrix> mats = build_all_transfers(chain, k);
        double build_ms = ms_since(t0);

        auto t1 = Clock::now();
        KMatchingVector vec = matching_vector(chain.base, chain.base_pair.first,
                                              chain.base_pair.second, k);
        for (const TransferMatrix& tm : mats) vec = apply(tm, vec);
        double fold_ms = ms_since(t1);

        std::cout << "run " << r << ": blocks=" << blocks << " k=" << k
                  << " build=" << build_ms << "ms fold=" << fold_ms << "ms"
                  << " per-block=" << (build_ms + fold_ms) / blocks << "ms"
                  << " peak-digits=" << max_digits(vec)
                  << " matchings<=k=" << vec.whole().sum() << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& path, bool strict, const std::string& realize_path) {
    Chain chain = load_chain(path);
    std::vector<Diagnostic> diags = validate(chain, strict);
    print_diagnostics(diags);
    if (has_errors(diags)) return 1;
    Graph g = realize(chain);
    std::cout << "ok: " << chain.blocks.size() << " blocks, realized |V| = " << g.vertex_count()
              << ", |E| = " << g.edge_count() << "\n";
    if (!realize_path.empty()) {
        save_json(realize_path, graph_to_json(g));
        std::cout << "wrote " << realize_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ostringstream echo_stream;
    for (int i = 0; i < argc; ++i) echo_stream << (i ? " " : "") << argv[i];
    const std::string echo = echo_stream.str();

    CLI::App app{"k-matching and Hosoya index computation over two-vertex amalgamation chains"};
    app.require_subcommand(1);

    // compute
    std::string chain_path;
    int k_flag = -1;
    bool verify = false, json_out = false, ascending_out = false, strict = false;
    int verify_cap = 20;
    auto* compute = app.add_subcommand("compute", "evaluate a chain file");
    compute->add_option("chain", chain_path, "chain JSON file")->required();
    compute->add_option("--k", k_flag, "truncate at matching size K");
    compute->add_flag("--verify", verify, "cross-check against the direct oracle");
    compute->add_option("--verify-cap", verify_cap, "max realized vertices for --verify (default 20)");
    compute->add_flag("--json", json_out, "emit the run report as JSON");
    compute->add_flag("--ascending", ascending_out, "print coefficients in ascending order");
    compute->add_flag("--strict", strict, "treat advisory diagnostics as errors");

    // oracle
    std::string graph_path;
    std::vector<std::string> pair;
    int oracle_k = -1;
    bool oracle_json = false, oracle_desc = false;
    auto* oracle = app.add_subcommand("oracle", "direct matching counts of a graph file");
    oracle->add_option("graph", graph_path, "graph JSON file")->required();
    oracle->add_option("--k", oracle_k, "truncate at matching size K");
    oracle->add_option("--pair", pair, "two vertices; print the full 4-block vector")->expected(2);
    oracle->add_flag("--json", oracle_json, "emit the run report as JSON");
    oracle->add_flag("--descending", oracle_desc, "print coefficients in descending order");

    // gen
    std::string family, params, out_path;
    uint64_t seed = 1;
    int max_blocks = 4, max_block_size = 4;
    auto* gen = app.add_subcommand("gen", "emit a chain file");
    gen->add_option("family", family, "fixture|benzenoid|cyclic-chain|random")->required();
    gen->add_option("params", params, "fixture id, turn string, or LENGTH:OFFSET list");
    gen->add_option("--seed", seed, "random family: seed");
    gen->add_option("--max-blocks", max_blocks, "random family: max block count");
    gen->add_option("--max-block-size", max_block_size, "random family: max new vertices per block");
    gen->add_option("--out", out_path, "output file (default: stdout)");

    // bench
    int bench_blocks = 200, bench_k = 50, bench_repeat = 1;
    auto* bench = app.add_subcommand("bench", "time the pipeline on a synthetic chain");
    bench->add_option("--blocks", bench_blocks, "number of blocks (default 200)");
    bench->add_option("--k", bench_k, "truncation bound (default 50)");
    bench->add_option("--repeat", bench_repeat, "repetitions (default 1)");

    // validate
    std::string validate_path, realize_path;
    bool validate_strict = false;
    auto* check = app.add_subcommand("validate", "diagnose a chain file");
    check->add_option("chain", validate_path, "chain JSON file")->required();
    check->add_flag("--strict", validate_strict, "treat advisory diagnostics as errors");
    check->add_option("--realize", realize_path, "write the realized graph as graph JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compute->parsed())
            return cmd_compute(chain_path, k_flag, verify, verify_cap, json_out, ascending_out,
                               strict, echo);
        if (oracle->parsed()) return cmd_oracle(graph_path, oracle_k, pair, oracle_json, oracle_desc, echo);
        if (gen->parsed()) return cmd_gen(family, params, seed, max_blocks, max_block_size, out_path);
        if (bench->parsed()) return cmd_bench(bench_blocks, bench_k, bench_repeat);
        if (check->parsed()) return cmd_validate(validate_path, validate_strict, realize_path);
    } catch (const matchflow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
