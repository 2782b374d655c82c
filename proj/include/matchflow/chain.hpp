#pragma once

#include <atomic>
#include <cstdlib>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "matchflow/graph.hpp"
#include "matchflow/oracle.hpp"
#include "matchflow/transfer.hpp"

namespace matchflow {

// One amalgamation unit: fresh vertices plus edges that tie them to each
// other and to the attach pair of whatever was built before. The attach edge
// itself, if the modeled structure has one, belongs to the earlier fragment —
// carrying it here would count its matchings twice.
struct Block {
    std::string name;
    std::pair<std::string, std::string> attach;  // must equal the previous output pair
    std::pair<std::string, std::string> out;     // pair carried by the enlarged graph
    std::vector<std::string> vertices;           // fresh labels only
    std::vector<Graph::Edge> edges;              // over vertices ∪ attach

    Graph block_graph() const {
        std::vector<std::string> vs = vertices;
        vs.push_back(attach.first);
        vs.push_back(attach.second);
        return Graph(std::move(vs), edges);
    }

    AttachProfile profile() const {
        return make_attach_profile(block_graph(), attach.first, attach.second, out.first,
                                   out.second);
    }
};

struct Chain {
    Graph base;
    std::pair<std::string, std::string> base_pair;
    std::vector<Block> blocks;
    std::optional<int> bound;  // truncation bound from the chain file, if any

    size_t realized_vertex_count() const {
        size_t n = base.vertex_count();
        for (const Block& b : blocks) n += b.vertices.size();
        return n;
    }

    int default_bound() const { return static_cast<int>(realized_vertex_count()) / 2; }
};

enum class DiagnosticCode {
    BasePairInvalid,
    AttachMismatch,
    DuplicateLabel,
    EdgeEndpointUnknown,
    LoopEdge,
    DuplicateEdge,
    AttachEdgeInBlock,
    OutEqualsAttach,
    OutPairDegenerate,
    OutVertexUnknown,
    InteriorDisconnected,    // warning unless strict
    AttachPairNotAdjacent,   // warning unless strict
};

inline const char* to_string(DiagnosticCode c) {
    switch (c) {
        case DiagnosticCode::BasePairInvalid: return "base-pair-invalid";
        case DiagnosticCode::AttachMismatch: return "attach-mismatch";
        case DiagnosticCode::DuplicateLabel: return "duplicate-label";
        case DiagnosticCode::EdgeEndpointUnknown: return "edge-endpoint-unknown";
        case DiagnosticCode::LoopEdge: return "loop-edge";
        case DiagnosticCode::DuplicateEdge: return "duplicate-edge";
        case DiagnosticCode::AttachEdgeInBlock: return "attach-edge-in-block";
        case DiagnosticCode::OutEqualsAttach: return "out-equals-attach";
        case DiagnosticCode::OutPairDegenerate: return "out-pair-degenerate";
        case DiagnosticCode::OutVertexUnknown: return "out-vertex-unknown";
        case DiagnosticCode::InteriorDisconnected: return "interior-disconnected";
        case DiagnosticCode::AttachPairNotAdjacent: return "attach-pair-not-adjacent";
    }
    return "?";
}

struct Diagnostic {
    DiagnosticCode code;
    bool error;       // false: advisory only
    int block_index;  // -1 for the base
    std::string message;
};

// Structural checks for a chain. Returns diagnostics instead of throwing so a
// caller can report everything at once. Interior connectivity and a
// non-adjacent attach pair are advisory by default: the transfer algebra only
// needs the block to touch the rest of the graph through its attach pair,
// which the Block shape already guarantees. strict upgrades both to errors.
inline std::vector<Diagnostic> validate(const Chain& chain, bool strict = false) {
    std::vector<Diagnostic> diags;
    auto report = [&](DiagnosticCode code, bool error, int idx, std::string msg) {
        diags.push_back({code, error, idx, std::move(msg)});
    };

    if (chain.base_pair.first == chain.base_pair.second)
        report(DiagnosticCode::BasePairInvalid, true, -1, "base pair vertices must differ");
    for (const std::string& v : {chain.base_pair.first, chain.base_pair.second})
        if (!chain.base.has_vertex(v))
            report(DiagnosticCode::BasePairInvalid, true, -1, "base pair vertex not in base graph: " + v);

    std::set<std::string> taken(chain.base.labels().begin(), chain.base.labels().end());
    std::pair<std::string, std::string> expected_attach = chain.base_pair;
    Graph accumulated = chain.base;
    bool accumulation_ok = diags.empty();

    for (size_t i = 0; i < chain.blocks.size(); ++i) {
        const Block& blk = chain.blocks[i];
        const int idx = static_cast<int>(i);
        bool block_ok = true;
        auto fail = [&](DiagnosticCode code, std::string msg) {
            report(code, true, idx, std::move(msg));
            block_ok = false;
        };

        if (blk.attach != expected_attach)
            fail(DiagnosticCode::AttachMismatch,
                 "block '" + blk.name + "' attaches to {" + blk.attach.first + "," +
                     blk.attach.second + "} but the previous output pair is {" +
                     expected_attach.first + "," + expected_attach.second + "}");

        std::set<std::string> fresh;
        for (const std::string& v : blk.vertices) {
            if (taken.count(v) || !fresh.insert(v).second)
                fail(DiagnosticCode::DuplicateLabel, "label '" + v + "' is not fresh in block '" + blk.name + "'");
        }

        std::set<std::string> scope = fresh;
        scope.insert(blk.attach.first);
        scope.insert(blk.attach.second);
        std::set<Graph::Edge> seen_edges;
        for (const Graph::Edge& e : blk.edges) {
            if (e.first == e.second) {
                fail(DiagnosticCode::LoopEdge, "loop edge at '" + e.first + "'");
                continue;
            }
            if (!scope.count(e.first) || !scope.count(e.second)) {
                fail(DiagnosticCode::EdgeEndpointUnknown,
                     "edge {" + e.first + "," + e.second + "} reaches outside block '" + blk.name + "'");
                continue;
            }
            Graph::Edge canon = e.first < e.second ? e : Graph::Edge{e.second, e.first};
            if (!seen_edges.insert(canon).second)
                fail(DiagnosticCode::DuplicateEdge, "duplicate edge {" + canon.first + "," + canon.second + "}");
            if (!fresh.count(e.first) && !fresh.count(e.second))
                fail(DiagnosticCode::AttachEdgeInBlock,
                     "block '" + blk.name + "' carries the attach edge {" + e.first + "," + e.second +
                         "}; it belongs to the earlier fragment");
        }

        if (blk.out.first == blk.out.second)
            fail(DiagnosticCode::OutPairDegenerate, "output pair vertices must differ");
        else if ((blk.out.first == blk.attach.first && blk.out.second == blk.attach.second) ||
                 (blk.out.first == blk.attach.second && blk.out.second == blk.attach.first))
            fail(DiagnosticCode::OutEqualsAttach, "output pair equals the attach pair in block '" + blk.name + "'");
        for (const std::string& v : {blk.out.first, blk.out.second})
            if (!scope.count(v))
                fail(DiagnosticCode::OutVertexUnknown, "output vertex '" + v + "' not in block '" + blk.name + "'");

        if (block_ok) {
            Graph interior(blk.vertices, [&] {
                std::vector<Graph::Edge> inner;
                for (const Graph::Edge& e : blk.edges)
                    if (fresh.count(e.first) && fresh.count(e.second)) inner.push_back(e);
                return inner;
            }());
            if (interior.vertex_count() > 0 && components(interior).size() > 1)
                report(DiagnosticCode::InteriorDisconnected, strict, idx,
                       "block '" + blk.name + "' interior is disconnected");
            if (accumulation_ok) {
                if (!accumulated.has_edge(blk.attach.first, blk.attach.second))
                    report(DiagnosticCode::AttachPairNotAdjacent, strict, idx,
                           "attach pair {" + blk.attach.first + "," + blk.attach.second +
                               "} is not an edge of the graph built so far; if the modeled structure "
                               "has that bond it must appear in an earlier fragment");
                accumulated = union_glue(accumulated, fresh, blk.edges);
            }
        } else {
            accumulation_ok = false;
        }

        taken.insert(fresh.begin(), fresh.end());
        expected_attach = blk.out;
    }
    return diags;
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const Diagnostic& d : diags)
        if (d.error) return true;
    return false;
}

inline void ensure_valid(const Chain& chain) {
    std::vector<Diagnostic> diags = validate(chain);
    for (const Diagnostic& d : diags)
        if (d.error)
            throw ValidationError(std::string(to_string(d.code)) + ": " + d.message);
}

// Materialize the amalgamated graph by gluing the blocks onto the base.
inline Graph realize(const Chain& chain) {
    ensure_valid(chain);
    Graph g = chain.base;
    for (const Block& blk : chain.blocks) {
        std::set<std::string> fresh(blk.vertices.begin(), blk.vertices.end());
        g = union_glue(g, fresh, blk.edges);
    }
    return g;
}

// MATCHFLOW_THREADS caps how many transfer matrices evaluate() builds at
// once. Unset or 1 means sequential.
inline int thread_cap() {
    const char* env = std::getenv("MATCHFLOW_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

inline std::vector<TransferMatrix> build_all_transfers(const Chain& chain, int bound) {
    const size_t n = chain.blocks.size();
    std::vector<TransferMatrix> mats(n);
    const int cap = thread_cap();
    if (cap <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) mats[i] = build_transfer(chain.blocks[i].profile(), bound);
        return mats;
    }
    std::vector<std::future<void>> workers;
    std::atomic<size_t> next{0};
    for (int t = 0; t < cap && static_cast<size_t>(t) < n; ++t)
        workers.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                mats[i] = build_transfer(chain.blocks[i].profile(), bound);
        }));
    for (auto& w : workers) w.get();
    return mats;
}

// Evaluate the whole chain: the base pair's matching vector pushed through one
// transfer matrix per block. Equals the matching vector computed directly on
// the realized graph with the final output pair.
inline KMatchingVector evaluate(const Chain& chain, std::optional<int> bound = {}) {
    ensure_valid(chain);
    const int k = bound ? *bound : chain.bound ? *chain.bound : chain.default_bound();
    if (k < 0) throw BadParameterError("matching size bound must be >= 0");
    KMatchingVector vec =
        matching_vector(chain.base, chain.base_pair.first, chain.base_pair.second, k);
    std::vector<TransferMatrix> mats = build_all_transfers(chain, k);
    for (const TransferMatrix& tm : mats) vec = apply(tm, vec);
    return vec;
}

inline BigInt hosoya_of_chain(const Chain& chain) {
    return evaluate(chain).whole().sum();
}

}  // namespace matchflow
