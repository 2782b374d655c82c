#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchflow/chain.hpp"
#include "matchflow/graph.hpp"

namespace matchflow {

// Graph file: {"vertices": ["u", ...], "edges": [["u","v"], ...]}.
// Chain file: {"k": 6, "base": {graph fields + "pair": [p,q]},
//              "blocks": [{"name","attach","out","vertices","edges"}, ...]}.
// Labels are strings everywhere; duplicate vertices or edges are rejected.

namespace detail {

inline std::vector<std::string> parse_labels(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw ParseError(where + " must contain only strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

inline std::vector<Graph::Edge> parse_edges(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + " must be an array of [u,v] pairs");
    std::vector<Graph::Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError(where + " entries must be [u,v] string pairs");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

inline std::pair<std::string, std::string> parse_pair(const nlohmann::json& j,
                                                      const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError(where + " must be a [u,v] string pair");
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

inline nlohmann::json edges_json(const std::vector<Graph::Edge>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Graph::Edge& e : edges) arr.push_back({e.first, e.second});
    return arr;
}

}  // namespace detail

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph object needs 'vertices' and 'edges'");
    try {
        return Graph(detail::parse_labels(j["vertices"], "vertices"),
                     detail::parse_edges(j["edges"], "edges"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("bad graph: ") + e.what());
    }
}

inline nlohmann::json graph_to_json(const Graph& g) {
    return {{"vertices", g.labels()}, {"edges", detail::edges_json(g.edges())}};
}

inline Chain chain_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("blocks"))
        throw ParseError("chain object needs 'base' and 'blocks'");
    Chain chain;
    const auto& base = j["base"];
    if (!base.is_object() || !base.contains("pair"))
        throw ParseError("chain base needs 'vertices', 'edges' and 'pair'");
    chain.base = graph_from_json(base);
    chain.base_pair = detail::parse_pair(base["pair"], "base pair");
    if (j.contains("k")) {
        if (!j["k"].is_number_integer() || j["k"].get<long long>() < 0)
            throw ParseError("'k' must be a non-negative integer");
        chain.bound = j["k"].get<int>();
    }
    if (!j["blocks"].is_array()) throw ParseError("'blocks' must be an array");
    int i = 0;
    for (const auto& b : j["blocks"]) {
        ++i;
        const std::string where = "block " + std::to_string(i);
        if (!b.is_object() || !b.contains("attach") || !b.contains("out") ||
            !b.contains("vertices") || !b.contains("edges"))
            throw ParseError(where + " needs 'attach', 'out', 'vertices' and 'edges'");
        Block blk;
        blk.name = b.value("name", "block-" + std::to_string(i));
        blk.attach = detail::parse_pair(b["attach"], where + " attach");
        blk.out = detail::parse_pair(b["out"], where + " out");
        blk.vertices = detail::parse_labels(b["vertices"], where + " vertices");
        blk.edges = detail::parse_edges(b["edges"], where + " edges");
        chain.blocks.push_back(std::move(blk));
    }
    return chain;
}

inline nlohmann::json chain_to_json(const Chain& chain) {
    nlohmann::json j;
    if (chain.bound) j["k"] = *chain.bound;
    j["base"] = graph_to_json(chain.base);
    j["base"]["pair"] = {chain.base_pair.first, chain.base_pair.second};
    j["blocks"] = nlohmann::json::array();
    for (const Block& blk : chain.blocks) {
        nlohmann::json b;
        b["name"] = blk.name;
        b["attach"] = {blk.attach.first, blk.attach.second};
        b["out"] = {blk.out.first, blk.out.second};
        b["vertices"] = blk.vertices;
        b["edges"] = detail::edges_json(blk.edges);
        j["blocks"].push_back(std::move(b));
    }
    return j;
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Graph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

inline Chain load_chain(const std::string& path) { return chain_from_json(load_json(path)); }

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << dump_json(j);
}

}  // namespace matchflow
