#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchflow/graph.hpp"
#include "matchflow/series.hpp"

namespace matchflow {

namespace detail {

// Counting kernel over a surviving-vertex bitmask. Two reductions drive it:
//   - a disconnected graph's series is the truncated convolution of its
//     components' series;
//   - expanding the edge fan of one vertex v: either v is unmatched, or it is
//     matched to exactly one neighbor, which costs one matching size unit.
// Both keep every recursion state an induced subgraph, so a 64-bit mask is an
// exact memo key.
class MatchCounter {
  public:
    MatchCounter(const Graph& g, int bound) : bound_(bound) {
        const size_t n = g.vertex_count();
        if (n > 64) throw TooLargeError("matching oracle supports at most 64 vertices");
        if (bound < 0) throw BadParameterError("matching size bound must be >= 0");
        adj_.assign(n, 0);
        for (size_t v = 0; v < n; ++v)
            for (int w : g.adjacency()[v]) adj_[v] |= uint64_t(1) << w;
        full_ = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    }

    std::vector<BigInt> run() { return solve(full_); }

  private:
    using Series = std::vector<BigInt>;

    Series unit() const { return Series(static_cast<size_t>(bound_) + 1, BigInt(0)); }

    static int lowest_bit(uint64_t m) { return __builtin_ctzll(m); }

    uint64_t component_of(int seed, uint64_t mask) const {
        uint64_t comp = uint64_t(1) << seed;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = lowest_bit(frontier);
                frontier &= frontier - 1;
                next |= adj_[static_cast<size_t>(v)] & mask & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    Series solve(uint64_t mask) {
        if (mask == 0) {
            Series s = unit();
            s[0] = 1;
            return s;
        }
        auto hit = memo_.find(mask);
        if (hit != memo_.end()) return hit->second;

        Series result;
        uint64_t first_comp = component_of(lowest_bit(mask), mask);
        if (first_comp != mask) {
            // split off one component, convolve with the rest
            Series a = solve(first_comp);
            Series b = solve(mask & ~first_comp);
            result = unit();
            for (int i = 0; i <= bound_; ++i) {
                if (a[static_cast<size_t>(i)] == 0) continue;
                for (int j = 0; i + j <= bound_; ++j)
                    result[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            }
        } else {
            // expand the edge fan of a maximum-degree vertex
            int pick = -1, best = -1;
            uint64_t scan = mask;
            while (scan) {
                int v = lowest_bit(scan);
                scan &= scan - 1;
                int d = __builtin_popcountll(adj_[static_cast<size_t>(v)] & mask);
                if (d > best) {
                    best = d;
                    pick = v;
                }
            }
            if (best <= 0) {
                result = unit();
                result[0] = 1;  // edgeless: only the empty matching
            } else {
                result = solve(mask & ~(uint64_t(1) << pick));
                uint64_t nbrs = adj_[static_cast<size_t>(pick)] & mask;
                while (nbrs) {
                    int u = lowest_bit(nbrs);
                    nbrs &= nbrs - 1;
                    Series sub = solve(mask & ~(uint64_t(1) << pick) & ~(uint64_t(1) << u));
                    for (int i = bound_; i >= 1; --i)
                        result[static_cast<size_t>(i)] += sub[static_cast<size_t>(i - 1)];
                }
            }
        }
        memo_.emplace(mask, result);
        return result;
    }

    int bound_;
    uint64_t full_ = 0;
    std::vector<uint64_t> adj_;
    std::unordered_map<uint64_t, Series> memo_;
};

}  // namespace detail

// Exact matching counts of g up to the given size bound. The memo table is
// local to the call; concurrent calls are safe.
inline MatchSeries match_series(const Graph& g, int bound) {
    detail::MatchCounter counter(g, bound);
    std::vector<BigInt> raw = counter.run();
    MatchSeries s(bound);
    for (int i = 0; i <= bound; ++i) s[i] = raw[static_cast<size_t>(i)];
    return s;
}

// Second, deliberately dumb oracle: walk every edge subset and keep the
// independent ones. Exponential in |E|; the cap keeps it honest.
inline MatchSeries match_series_naive(const Graph& g, int bound) {
    if (g.edge_count() > 24) throw TooLargeError("naive oracle supports at most 24 edges");
    if (bound < 0) throw BadParameterError("matching size bound must be >= 0");
    std::vector<uint64_t> edge_mask;
    for (const Graph::Edge& e : g.edges())
        edge_mask.push_back((uint64_t(1) << g.index_of(e.first)) |
                            (uint64_t(1) << g.index_of(e.second)));
    const uint32_t m = static_cast<uint32_t>(edge_mask.size());
    MatchSeries s(bound);
    for (uint64_t subset = 0; subset < (uint64_t(1) << m); ++subset) {
        uint64_t used = 0;
        int size = 0;
        bool independent = true;
        uint64_t bits = subset;
        while (bits) {
            int e = __builtin_ctzll(bits);
            bits &= bits - 1;
            if (used & edge_mask[static_cast<size_t>(e)]) {
                independent = false;
                break;
            }
            used |= edge_mask[static_cast<size_t>(e)];
            ++size;
        }
        if (independent && size <= bound) s[size] += 1;
    }
    return s;
}

// Total number of matchings of any size.
inline BigInt hosoya_index(const Graph& g) {
    return match_series(g, static_cast<int>(g.vertex_count()) / 2).sum();
}

// The four series attached to a distinguished vertex pair: the graph itself
// and the three deletions. This is the state the transfer pipeline carries
// from one amalgamation step to the next.
struct KMatchingVector {
    std::string first, second;  // the distinguished pair (in order)
    std::array<MatchSeries, 4> blocks;  // whole, minus first, minus second, minus both

    int bound() const { return blocks[0].bound(); }

    const MatchSeries& whole() const { return blocks[0]; }
    const MatchSeries& minus_first() const { return blocks[1]; }
    const MatchSeries& minus_second() const { return blocks[2]; }
    const MatchSeries& minus_both() const { return blocks[3]; }

    friend bool operator==(const KMatchingVector& a, const KMatchingVector& b) {
        return a.first == b.first && a.second == b.second && a.blocks == b.blocks;
    }
    friend bool operator!=(const KMatchingVector& a, const KMatchingVector& b) { return !(a == b); }
};

inline KMatchingVector matching_vector(const Graph& g, const std::string& a,
                                       const std::string& b, int bound) {
    if (a == b) throw InvalidPairError("matching vector needs two distinct vertices");
    if (!g.has_vertex(a) || !g.has_vertex(b))
        throw InvalidPairError("matching vector pair not in graph: {" + a + "," + b + "}");
    KMatchingVector v;
    v.first = a;
    v.second = b;
    v.blocks[0] = match_series(g, bound);
    v.blocks[1] = match_series(delete_vertex(g, a), bound);
    v.blocks[2] = match_series(delete_vertex(g, b), bound);
    v.blocks[3] = match_series(delete_vertices(g, {a, b}), bound);
    return v;
}

}  // namespace matchflow
