#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matchflow/chain.hpp"
#include "matchflow/graph.hpp"

namespace matchflow {

enum class BasicKind { Path, Cycle, Complete, Star };

inline Graph gen_basic(BasicKind kind, int n) {
    if (n < 1) throw BadParameterError("graph order must be >= 1");
    if (kind == BasicKind::Cycle && n < 3) throw BadParameterError("cycle needs >= 3 vertices");
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Graph::Edge> es;
    switch (kind) {
        case BasicKind::Path:
            for (int i = 0; i + 1 < n; ++i) es.emplace_back(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(i + 1)]);
            break;
        case BasicKind::Cycle:
            for (int i = 0; i < n; ++i) es.emplace_back(vs[static_cast<size_t>(i)], vs[static_cast<size_t>((i + 1) % n)]);
            break;
        case BasicKind::Complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) es.emplace_back(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
            break;
        case BasicKind::Star:
            for (int i = 1; i < n; ++i) es.emplace_back(vs[0], vs[static_cast<size_t>(i)]);
            break;
    }
    return Graph(std::move(vs), es);
}

// Parametric chain families.
//   cyclic:    one cycle block per (length, offset) entry; each cycle is glued
//              over an edge and hands the edge at the given offset (counted
//              around the cycle from the first attach vertex) to the next block.
//   benzenoid: a hexagon chain described by a turn string over {L,R}; each
//              character picks which side edge of the previous hexagon the next
//              one is fused to.
//   fixture:   the two worked decompositions shipped with the project.
struct ChainSpec {
    enum class Kind { Cyclic, Benzenoid, Fixture };
    Kind kind = Kind::Cyclic;
    std::vector<std::pair<int, int>> rings;  // cyclic: (length, offset)
    std::string turns;                       // benzenoid
    std::string fixture_id;

    static ChainSpec cyclic(std::vector<std::pair<int, int>> rings) {
        ChainSpec s;
        s.kind = Kind::Cyclic;
        s.rings = std::move(rings);
        return s;
    }
    static ChainSpec benzenoid(std::string turns) {
        ChainSpec s;
        s.kind = Kind::Benzenoid;
        s.turns = std::move(turns);
        return s;
    }
    static ChainSpec fixture(std::string id) {
        ChainSpec s;
        s.kind = Kind::Fixture;
        s.fixture_id = std::move(id);
        return s;
    }
};

namespace detail {

inline Chain edge_base_chain(const std::string& u, const std::string& v) {
    Chain chain;
    chain.base = Graph({u, v}, {{u, v}});
    chain.base_pair = {u, v};
    return chain;
}

// Cycle of the given length glued over the pair (attach.first, attach.second),
// walked attach.first -> fresh vertices -> attach.second. Offset d selects the
// d-th edge of that walk as the next output pair.
inline Block cycle_block(int length, int offset, const std::pair<std::string, std::string>& attach,
                         const std::string& prefix) {
    if (length < 3) throw BadParameterError("cycle length must be >= 3");
    if (offset < 1 || offset > length - 1)
        throw BadParameterError("cycle offset must be in [1, length-1]");
    Block blk;
    blk.name = "cycle-" + std::to_string(length) + "-offset-" + std::to_string(offset);
    blk.attach = attach;
    std::vector<std::string> walk{attach.first};
    for (int i = 1; i <= length - 2; ++i) {
        std::string v = prefix + std::to_string(i);
        blk.vertices.push_back(v);
        walk.push_back(v);
    }
    walk.push_back(attach.second);
    for (size_t i = 0; i + 1 < walk.size(); ++i) blk.edges.emplace_back(walk[i], walk[i + 1]);
    blk.out = {walk[static_cast<size_t>(offset - 1)], walk[static_cast<size_t>(offset)]};
    return blk;
}

inline Chain sporadic_fixture() {
    Chain chain = edge_base_chain("v3", "v4");
    chain.bound = 6;
    Block pentagon;
    pentagon.name = "pentagon";
    pentagon.attach = {"v3", "v4"};
    pentagon.out = {"x", "y"};
    pentagon.vertices = {"x", "y", "p"};
    pentagon.edges = {{"x", "v3"}, {"p", "v4"}, {"p", "y"}, {"x", "y"}};
    Block triangles;
    triangles.name = "bridged-triangles";
    triangles.attach = {"x", "y"};
    triangles.out = {"a", "b"};
    triangles.vertices = {"a", "b", "c", "z"};
    triangles.edges = {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "z"}, {"z", "x"}, {"z", "y"}};
    Block hexagon;
    hexagon.name = "hexagon";
    hexagon.attach = {"a", "b"};
    hexagon.out = {"v1", "v2"};
    hexagon.vertices = {"v1", "v2", "u1", "u2"};
    hexagon.edges = {{"b", "u1"}, {"u1", "v2"}, {"v2", "v1"}, {"v1", "u2"}, {"u2", "a"}};
    chain.blocks = {pentagon, triangles, hexagon};
    return chain;
}

inline Chain molecule_fixture() {
    Chain chain = edge_base_chain("x", "y");
    chain.bound = 11;
    Block f2;
    f2.name = "dimethylcyclopentene";
    f2.attach = {"x", "y"};
    f2.out = {"h", "i"};
    f2.vertices = {"h", "i", "m1", "r1", "r2"};
    f2.edges = {{"r1", "x"}, {"y", "r2"}, {"r2", "i"}, {"i", "r1"}, {"m1", "r1"}, {"h", "i"}};
    Block f1;
    f1.name = "methylcyclopentane";
    f1.attach = {"h", "i"};
    f1.out = {"f", "g"};
    f1.vertices = {"f", "g", "s1", "s2"};
    f1.edges = {{"f", "s1"}, {"s1", "h"}, {"h", "s2"}, {"s2", "g"}, {"g", "f"}};
    Block inner_path;
    inner_path.name = "path-inner";
    inner_path.attach = {"f", "g"};
    inner_path.out = {"e", "d"};
    inner_path.vertices = {"e", "t1", "d"};
    inner_path.edges = {{"e", "f"}, {"g", "t1"}, {"t1", "d"}};
    Block toluene;
    toluene.name = "toluene";
    toluene.attach = {"e", "d"};
    toluene.out = {"c", "d"};
    toluene.vertices = {"c", "w1", "w2", "w3", "w4"};
    toluene.edges = {{"c", "w1"}, {"w1", "w2"}, {"w2", "w3"}, {"w3", "e"},
                     {"e", "w4"}, {"w4", "c"}, {"w4", "d"}};
    Block outer_path;
    outer_path.name = "path-outer";
    outer_path.attach = {"c", "d"};
    outer_path.out = {"a", "b"};
    outer_path.vertices = {"a", "b", "t2"};
    outer_path.edges = {{"c", "a"}, {"a", "b"}, {"b", "t2"}, {"t2", "d"}};
    chain.blocks = {f2, f1, inner_path, toluene, outer_path};
    return chain;
}

}  // namespace detail

inline Chain gen_chain(const ChainSpec& spec) {
    switch (spec.kind) {
        case ChainSpec::Kind::Cyclic: {
            if (spec.rings.empty()) throw BadParameterError("cyclic chain needs at least one ring");
            Chain chain = detail::edge_base_chain("u1", "u2");
            std::pair<std::string, std::string> attach = chain.base_pair;
            for (size_t i = 0; i < spec.rings.size(); ++i) {
                Block blk = detail::cycle_block(spec.rings[i].first, spec.rings[i].second, attach,
                                                "r" + std::to_string(i + 1) + "c");
                attach = blk.out;
                chain.blocks.push_back(std::move(blk));
            }
            return chain;
        }
        case ChainSpec::Kind::Benzenoid: {
            for (char c : spec.turns)
                if (c != 'L' && c != 'R')
                    throw BadParameterError("benzenoid turn string must be over {L,R}");
            Chain chain = detail::edge_base_chain("u1", "u2");
            std::pair<std::string, std::string> attach = chain.base_pair;
            const size_t hexagons = spec.turns.size() + 1;
            for (size_t i = 0; i < hexagons; ++i) {
                Block blk;
                blk.name = "hexagon-" + std::to_string(i + 1);
                blk.attach = attach;
                std::vector<std::string> ring{attach.first};
                for (int j = 1; j <= 4; ++j) {
                    std::string v = "h" + std::to_string(i + 1) + "n" + std::to_string(j);
                    blk.vertices.push_back(v);
                    ring.push_back(v);
                }
                ring.push_back(attach.second);
                for (size_t j = 0; j + 1 < ring.size(); ++j) blk.edges.emplace_back(ring[j], ring[j + 1]);
                if (i + 1 < hexagons) {
                    // next hexagon is fused to a side edge; which side is the turn
                    blk.out = spec.turns[i] == 'L' ? Graph::Edge{ring[1], ring[2]}
                                                   : Graph::Edge{ring[3], ring[4]};
                } else {
                    blk.out = {ring[2], ring[3]};  // terminal hexagon: opposite edge
                }
                attach = blk.out;
                chain.blocks.push_back(std::move(blk));
            }
            return chain;
        }
        case ChainSpec::Kind::Fixture:
            if (spec.fixture_id == "sporadic-912") return detail::sporadic_fixture();
            if (spec.fixture_id == "molecule-74816") return detail::molecule_fixture();
            throw BadParameterError("unknown fixture: " + spec.fixture_id);
    }
    throw BadParameterError("unknown chain spec kind");
}

// Deterministic pseudorandom chains for verification sweeps. The realized
// graph is capped at 16 vertices so the direct oracle stays cheap. Output
// pairs are drawn so that, across seeds, every overlap case and shared
// neighbor counts 0..2 all occur.
inline Chain gen_random_chain(uint64_t seed, int max_blocks, int max_block_size) {
    if (max_blocks < 1 || max_block_size < 1)
        throw BadParameterError("random chain bounds must be >= 1");
    constexpr size_t vertex_cap = 16;
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };

    Chain chain;
    switch (pick(3)) {
        case 0:
            chain.base = Graph({"g1", "g2"}, {{"g1", "g2"}});
            chain.base_pair = {"g1", "g2"};
            break;
        case 1:  // path with a non-adjacent pair
            chain.base = Graph({"g1", "g2", "g3"}, {{"g1", "g2"}, {"g2", "g3"}});
            chain.base_pair = {"g1", "g3"};
            break;
        default:
            chain.base = Graph({"g1", "g2", "g3"}, {{"g1", "g2"}, {"g2", "g3"}, {"g1", "g3"}});
            chain.base_pair = {"g2", "g3"};
            break;
    }

    size_t total = chain.base.vertex_count();
    std::pair<std::string, std::string> attach = chain.base_pair;
    const int nblocks = 1 + pick(max_blocks);
    for (int b = 0; b < nblocks; ++b) {
        if (total >= vertex_cap) break;
        const int room = static_cast<int>(vertex_cap - total);
        const int nv = 1 + pick(std::min(max_block_size, room));
        Block blk;
        blk.name = "rnd" + std::to_string(b + 1);
        blk.attach = attach;
        for (int j = 1; j <= nv; ++j)
            blk.vertices.push_back("b" + std::to_string(b + 1) + "v" + std::to_string(j));

        std::set<Graph::Edge> edges;
        auto put = [&](const std::string& u, const std::string& v) {
            edges.insert(u < v ? Graph::Edge{u, v} : Graph::Edge{v, u});
        };

        // choose 0..2 interior vertices adjacent to both attach vertices
        const int shared = std::min(pick(3), nv);
        for (int j = 0; j < shared; ++j) {
            put(blk.vertices[static_cast<size_t>(j)], attach.first);
            put(blk.vertices[static_cast<size_t>(j)], attach.second);
        }
        // sprinkle interior-interior and interior-attach edges
        for (int a = 0; a < nv; ++a) {
            for (int c = a + 1; c < nv; ++c)
                if (pick(100) < 45) put(blk.vertices[static_cast<size_t>(a)], blk.vertices[static_cast<size_t>(c)]);
            if (pick(100) < 30) put(blk.vertices[static_cast<size_t>(a)], attach.first);
            if (pick(100) < 30) put(blk.vertices[static_cast<size_t>(a)], attach.second);
        }

        const int style = pick(6);
        if (style >= 2 || nv < 2) {
            const std::string& inner = blk.vertices[static_cast<size_t>(pick(nv))];
            switch (style % 4) {
                case 0: blk.out = {attach.first, inner}; break;
                case 1: blk.out = {attach.second, inner}; break;
                case 2: blk.out = {inner, attach.first}; break;
                default: blk.out = {inner, attach.second}; break;
            }
        } else {
            int first = pick(nv);
            int second = pick(nv - 1);
            if (second >= first) ++second;
            blk.out = {blk.vertices[static_cast<size_t>(first)], blk.vertices[static_cast<size_t>(second)]};
            if (pick(2) == 0) {
                // bias toward an output vertex that neighbors exactly one attach vertex
                Graph::Edge follow = blk.out.first < attach.second
                                         ? Graph::Edge{blk.out.first, attach.second}
                                         : Graph::Edge{attach.second, blk.out.first};
                if (!edges.count(follow)) put(blk.out.first, attach.first);
            }
        }

        blk.edges.assign(edges.begin(), edges.end());
        total += blk.vertices.size();
        attach = blk.out;
        chain.blocks.push_back(std::move(blk));
    }
    return chain;
}

// Workload for the benchmark: every block hangs one fresh vertex off the
// first attach vertex, so the realized graph is a path and the per-block work
// is constant-shaped.
inline Chain gen_pendant_chain(int blocks) {
    if (blocks < 0) throw BadParameterError("block count must be >= 0");
    Chain chain = detail::edge_base_chain("p1", "p2");
    std::pair<std::string, std::string> attach = chain.base_pair;
    for (int i = 1; i <= blocks; ++i) {
        Block blk;
        blk.name = "pendant-" + std::to_string(i);
        blk.attach = attach;
        std::string v = "w" + std::to_string(i);
        blk.vertices = {v};
        blk.edges = {{v, attach.first}};
        blk.out = {v, attach.first};
        attach = blk.out;
        chain.blocks.push_back(std::move(blk));
    }
    return chain;
}

}  // namespace matchflow
