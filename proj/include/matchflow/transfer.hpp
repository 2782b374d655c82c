#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "matchflow/graph.hpp"
#include "matchflow/oracle.hpp"
#include "matchflow/series.hpp"

namespace matchflow {

// Sum of match series over single-vertex deletions of h.
inline MatchSeries single_deletion_sum(const Graph& h, const std::set<std::string>& verts,
                                       int bound) {
    MatchSeries total(bound);
    for (const std::string& v : verts) total += match_series(delete_vertex(h, v), bound);
    return total;
}

// Sum of match series over two-vertex deletions, one vertex per side. The
// first side ranges over first_only ∪ shared, the second over second_only ∪
// shared, skipping u == v. A shared vertex can serve either side, so ordered
// pairs of two distinct shared vertices are counted twice — exactly the
// multiplicity with which they arise in a matching using one edge into each
// side.
inline MatchSeries pair_deletion_sum(const Graph& h, const std::set<std::string>& first_only,
                                     const std::set<std::string>& second_only,
                                     const std::set<std::string>& shared, int bound) {
    for (const std::string& v : first_only)
        if (second_only.count(v) || shared.count(v))
            throw InvalidSetsError("neighbor classes must be pairwise disjoint: " + v);
    for (const std::string& v : second_only)
        if (shared.count(v)) throw InvalidSetsError("neighbor classes must be pairwise disjoint: " + v);

    std::set<std::string> first_side = first_only;
    first_side.insert(shared.begin(), shared.end());
    std::set<std::string> second_side = second_only;
    second_side.insert(shared.begin(), shared.end());

    MatchSeries total(bound);
    for (const std::string& u : first_side)
        for (const std::string& v : second_side) {
            if (u == v) continue;
            total += match_series(delete_vertices(h, {u, v}), bound);
        }
    return total;
}

// Which output vertex, if any, coincides with an attach vertex. At most one
// can: two coincidences would make the output pair equal the attach pair.
enum class ProfileCase {
    General,
    OutFirstIsAttachFirst,
    OutFirstIsAttachSecond,
    OutSecondIsAttachFirst,
    OutSecondIsAttachSecond,
};

inline const char* to_string(ProfileCase c) {
    switch (c) {
        case ProfileCase::General: return "general";
        case ProfileCase::OutFirstIsAttachFirst: return "out1=attach1";
        case ProfileCase::OutFirstIsAttachSecond: return "out1=attach2";
        case ProfileCase::OutSecondIsAttachFirst: return "out2=attach1";
        case ProfileCase::OutSecondIsAttachSecond: return "out2=attach2";
    }
    return "?";
}

// Everything build_transfer needs to know about one amalgamation step: the
// block interior (the block graph with its attach pair removed), the three
// neighbor classes of the attach pair inside that interior, and the output
// pair the enlarged graph will carry.
struct AttachProfile {
    Graph interior;
    std::set<std::string> first_only, second_only, both;
    std::string attach_first, attach_second;
    std::string out_first, out_second;
    ProfileCase tag = ProfileCase::General;
};

inline AttachProfile make_attach_profile(const Graph& block_graph, const std::string& attach_first,
                                         const std::string& attach_second,
                                         const std::string& out_first,
                                         const std::string& out_second) {
    if (attach_first == attach_second)
        throw InvalidPairError("attach pair must be two distinct vertices");
    if (out_first == out_second) throw InvalidProfileError("output pair must be two distinct vertices");
    const bool of_is_attach = out_first == attach_first || out_first == attach_second;
    const bool os_is_attach = out_second == attach_first || out_second == attach_second;
    if (of_is_attach && os_is_attach)
        throw InvalidProfileError("output pair must differ from the attach pair as a set");
    if (!block_graph.has_vertex(out_first) || !block_graph.has_vertex(out_second))
        throw InvalidProfileError("output vertex not in block: {" + out_first + "," + out_second + "}");
    if (block_graph.has_edge(attach_first, attach_second))
        throw InvalidProfileError("block must not carry the attach edge itself");

    AttachProfile p;
    NeighborSplit split = neighbor_partition(block_graph, attach_first, attach_second);
    p.first_only = std::move(split.first_only);
    p.second_only = std::move(split.second_only);
    p.both = std::move(split.both);
    p.interior = delete_vertices(block_graph, {attach_first, attach_second});
    p.attach_first = attach_first;
    p.attach_second = attach_second;
    p.out_first = out_first;
    p.out_second = out_second;
    if (out_first == attach_first) p.tag = ProfileCase::OutFirstIsAttachFirst;
    else if (out_first == attach_second) p.tag = ProfileCase::OutFirstIsAttachSecond;
    else if (out_second == attach_first) p.tag = ProfileCase::OutSecondIsAttachFirst;
    else if (out_second == attach_second) p.tag = ProfileCase::OutSecondIsAttachSecond;
    return p;
}

// 4x4 matrix over the truncated polynomial ring. Row r of the product against
// an incoming k-matching vector produces block r of the outgoing one; rows and
// columns are ordered (whole, minus-first, minus-second, minus-both). Zero
// cells are stored as explicit zero series.
struct TransferMatrix {
    int bound = 0;
    std::string attach_first, attach_second;  // column pair (incoming vector)
    std::string out_first, out_second;        // row pair (outgoing vector)
    std::array<std::array<MatchSeries, 4>, 4> cells;
};

namespace detail {

inline std::set<std::string> set_minus(const std::set<std::string>& s,
                                       const std::set<std::string>& removed) {
    std::set<std::string> out;
    for (const std::string& v : s)
        if (!removed.count(v)) out.insert(v);
    return out;
}

inline std::set<std::string> set_union(const std::set<std::string>& a,
                                       const std::set<std::string>& b) {
    std::set<std::string> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

}  // namespace detail

// Builds the transfer matrix of one amalgamation step.
//
// A matching of the enlarged graph either avoids every edge between the attach
// pair and the block interior, or uses one such edge on the first attach
// vertex, one on the second, or one on each. Grouping by those four options
// and by what survives of the interior yields, for each row, deletion set S of
// output vertices lying inside the interior:
//
//   [ M(I−S),  t·Σ M(I−S−u) over u in (first_only ∪ both)∖S,
//              t·Σ M(I−S−v) over v in (second_only ∪ both)∖S,
//              t²·(pair deletion sum of I−S with the classes restricted) ]
//
// where I is the interior and M is match_series. When an output vertex
// coincides with an attach vertex, the rows deleting it instead forward the
// series of the surviving interior to the column in which that attach vertex
// is already gone, and only the opposite side's edges remain available.
inline TransferMatrix build_transfer(const AttachProfile& p, int bound) {
    TransferMatrix tm;
    tm.bound = bound;
    tm.attach_first = p.attach_first;
    tm.attach_second = p.attach_second;
    tm.out_first = p.out_first;
    tm.out_second = p.out_second;

    using detail::set_minus;
    using detail::set_union;
    const std::set<std::string> first_side = set_union(p.first_only, p.both);
    const std::set<std::string> second_side = set_union(p.second_only, p.both);
    const MatchSeries zero(bound);

    auto general_row = [&](const std::set<std::string>& removed) {
        Graph h = delete_vertices(p.interior, removed);
        std::array<MatchSeries, 4> row{
            match_series(h, bound),
            shifted(single_deletion_sum(h, set_minus(first_side, removed), bound), 1),
            shifted(single_deletion_sum(h, set_minus(second_side, removed), bound), 1),
            shifted(pair_deletion_sum(h, set_minus(p.first_only, removed),
                                      set_minus(p.second_only, removed),
                                      set_minus(p.both, removed), bound),
                    2)};
        return row;
    };

    // Row for a vector block in which one attach vertex is deleted. Its series
    // forwards to the column where that vertex is gone; only edges on the
    // surviving attach vertex can still reach the interior.
    auto coincident_row = [&](bool first_attach_removed, const std::set<std::string>& removed) {
        Graph h = delete_vertices(p.interior, removed);
        const std::set<std::string>& opposite = first_attach_removed ? second_side : first_side;
        std::array<MatchSeries, 4> row{zero, zero, zero, zero};
        row[first_attach_removed ? 1 : 2] = match_series(h, bound);
        row[3] = shifted(single_deletion_sum(h, set_minus(opposite, removed), bound), 1);
        return row;
    };

    const std::set<std::string> of{p.out_first};
    const std::set<std::string> os{p.out_second};
    const std::set<std::string> both_out{p.out_first, p.out_second};
    const std::set<std::string> none;

    switch (p.tag) {
        case ProfileCase::General:
            tm.cells = {general_row(none), general_row(of), general_row(os), general_row(both_out)};
            break;
        case ProfileCase::OutFirstIsAttachFirst:
            tm.cells = {general_row(none), coincident_row(true, none), general_row(os),
                        coincident_row(true, os)};
            break;
        case ProfileCase::OutFirstIsAttachSecond:
            tm.cells = {general_row(none), coincident_row(false, none), general_row(os),
                        coincident_row(false, os)};
            break;
        case ProfileCase::OutSecondIsAttachFirst:
            tm.cells = {general_row(none), general_row(of), coincident_row(true, none),
                        coincident_row(true, of)};
            break;
        case ProfileCase::OutSecondIsAttachSecond:
            tm.cells = {general_row(none), general_row(of), coincident_row(false, none),
                        coincident_row(false, of)};
            break;
    }
    return tm;
}

// Matrix-times-vector over the truncated ring.
inline KMatchingVector apply(const TransferMatrix& tm, const KMatchingVector& v) {
    if (tm.bound != v.bound())
        throw DimensionError("transfer matrix and vector bounds differ");
    KMatchingVector out;
    out.first = tm.out_first;
    out.second = tm.out_second;
    for (int r = 0; r < 4; ++r) {
        MatchSeries acc(tm.bound);
        for (int c = 0; c < 4; ++c) {
            const MatchSeries& cell = tm.cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (cell.is_zero()) continue;
            acc += truncated_mul(cell, v.blocks[static_cast<size_t>(c)]);
        }
        out.blocks[static_cast<size_t>(r)] = std::move(acc);
    }
    return out;
}

// Ring-matrix product: apply(compose(later, earlier), v) == apply(later, apply(earlier, v)).
inline TransferMatrix compose(const TransferMatrix& later, const TransferMatrix& earlier) {
    if (later.bound != earlier.bound) throw DimensionError("transfer matrix bounds differ");
    TransferMatrix out;
    out.bound = later.bound;
    out.attach_first = earlier.attach_first;
    out.attach_second = earlier.attach_second;
    out.out_first = later.out_first;
    out.out_second = later.out_second;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            MatchSeries acc(out.bound);
            for (int m = 0; m < 4; ++m) {
                const MatchSeries& a = later.cells[static_cast<size_t>(r)][static_cast<size_t>(m)];
                const MatchSeries& b = earlier.cells[static_cast<size_t>(m)][static_cast<size_t>(c)];
                if (a.is_zero() || b.is_zero()) continue;
                acc += truncated_mul(a, b);
            }
            out.cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::move(acc);
        }
    return out;
}

}  // namespace matchflow
