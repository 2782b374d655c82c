#pragma once

// Shared builders for the test suite. The random generators are all seeded
// mt19937_64 so every run sees the same inputs.

#include <random>
#include <string>
#include <vector>

#include "matchflow/matchflow.hpp"

namespace testutil {

using namespace matchflow;

// Two triangles joined by a middle edge, with a pendant-free attach edge on
// one side: vertices {a,b,c} and {z,x,y} with bridge c-z. Used all over the
// worked sporadic example.
inline Graph bridged_triangles_graph() {
    return Graph({"a", "b", "c", "z", "x", "y"},
                 {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "z"}, {"z", "x"}, {"z", "y"}, {"x", "y"}});
}

// Same fragment as a block: the attach edge {x,y} is carried by the earlier
// fragment, so the block itself omits it.
inline Graph bridged_triangles_block() {
    return Graph({"a", "b", "c", "z", "x", "y"},
                 {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "z"}, {"z", "x"}, {"z", "y"}});
}

inline Graph sporadic_graph() { return realize(gen_chain(ChainSpec::fixture("sporadic-912"))); }

inline Graph molecule_graph() { return realize(gen_chain(ChainSpec::fixture("molecule-74816"))); }

inline Graph random_graph(std::mt19937_64& rng, int max_vertices, int edge_percent,
                          const std::string& prefix = "t") {
    const int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_vertices));
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(prefix + std::to_string(i));
    std::vector<Graph::Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < edge_percent)
                es.emplace_back(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
    return Graph(std::move(vs), es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::string> vs;
    std::vector<Graph::Edge> es;
    for (const std::string& v : a.labels()) vs.push_back("L." + v);
    for (const std::string& v : b.labels()) vs.push_back("R." + v);
    for (const Graph::Edge& e : a.edges()) es.emplace_back("L." + e.first, "L." + e.second);
    for (const Graph::Edge& e : b.edges()) es.emplace_back("R." + e.first, "R." + e.second);
    return Graph(std::move(vs), es);
}

inline Graph graph_minus_edge(const Graph& g, const std::string& u, const std::string& v) {
    std::vector<Graph::Edge> es;
    for (const Graph::Edge& e : g.edges())
        if (!((e.first == u && e.second == v) || (e.first == v && e.second == u)))
            es.push_back(e);
    return Graph(g.labels(), es);
}

inline MatchSeries random_series(std::mt19937_64& rng, int bound, int max_coeff = 99) {
    MatchSeries s(bound);
    for (int i = 0; i <= bound; ++i) s[i] = static_cast<long long>(rng() % static_cast<uint64_t>(max_coeff + 1));
    return s;
}

inline TransferMatrix random_transfer(std::mt19937_64& rng, int bound) {
    TransferMatrix tm;
    tm.bound = bound;
    tm.attach_first = "x1";
    tm.attach_second = "x2";
    tm.out_first = "o1";
    tm.out_second = "o2";
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            tm.cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = random_series(rng, bound, 9);
    return tm;
}

inline KMatchingVector random_vector(std::mt19937_64& rng, int bound) {
    KMatchingVector v;
    v.first = "x1";
    v.second = "x2";
    for (auto& b : v.blocks) b = random_series(rng, bound, 9);
    return v;
}

inline TransferMatrix identity_transfer(int bound) {
    TransferMatrix tm;
    tm.bound = bound;
    tm.attach_first = tm.out_first = "x1";
    tm.attach_second = tm.out_second = "x2";
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            tm.cells[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                r == c ? MatchSeries::one(bound) : MatchSeries(bound);
    return tm;
}

}  // namespace testutil
