#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matchflow/errors.hpp"

namespace matchflow {

// Simple undirected graph over string vertex labels. Labels are kept sorted
// and each one is bound to a dense index 0..n-1 (the rank in sorted order),
// so indices remap deterministically after any deletion. Values are immutable
// after construction; every operation below returns a fresh graph.
class Graph {
  public:
    using Edge = std::pair<std::string, std::string>;

    Graph() = default;

    Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
        std::sort(vertices.begin(), vertices.end());
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            if (vertices[i] == vertices[i + 1])
                throw Error("duplicate vertex label: " + vertices[i]);
        labels_ = std::move(vertices);
        adj_.assign(labels_.size(), {});
        for (const Edge& e : edges) add_edge_checked(e.first, e.second);
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    size_t vertex_count() const { return labels_.size(); }
    size_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& labels() const { return labels_; }

    bool has_vertex(const std::string& v) const { return find(v) >= 0; }

    int index_of(const std::string& v) const {
        int i = find(v);
        if (i < 0) throw NotFoundError("unknown vertex: " + v);
        return i;
    }

    const std::string& label_at(int i) const { return labels_[static_cast<size_t>(i)]; }

    // Neighbor index lists, sorted ascending.
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool has_edge(const std::string& u, const std::string& v) const {
        int a = index_of(u), b = index_of(v);
        return std::binary_search(adj_[static_cast<size_t>(a)].begin(),
                                  adj_[static_cast<size_t>(a)].end(), b);
    }

    int degree(const std::string& v) const {
        return static_cast<int>(adj_[static_cast<size_t>(index_of(v))].size());
    }

    std::vector<std::string> neighbors(const std::string& v) const {
        std::vector<std::string> out;
        for (int i : adj_[static_cast<size_t>(index_of(v))]) out.push_back(labels_[static_cast<size_t>(i)]);
        return out;
    }

    // Edges as label pairs with first < second, sorted; deterministic.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (size_t u = 0; u < adj_.size(); ++u)
            for (int v : adj_[u])
                if (static_cast<size_t>(v) > u) out.emplace_back(labels_[u], labels_[static_cast<size_t>(v)]);
        return out;
    }

  private:
    int find(const std::string& v) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
        if (it == labels_.end() || *it != v) return -1;
        return static_cast<int>(it - labels_.begin());
    }

    void add_edge_checked(const std::string& u, const std::string& v) {
        if (u == v) throw Error("loop edge rejected at vertex: " + u);
        int a = index_of(u), b = index_of(v);
        auto& na = adj_[static_cast<size_t>(a)];
        if (std::find(na.begin(), na.end(), b) != na.end())
            throw Error("duplicate edge rejected: {" + u + "," + v + "}");
        na.push_back(b);
        adj_[static_cast<size_t>(b)].push_back(a);
        ++edge_count_;
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    size_t edge_count_ = 0;
};

// Induced subgraph on V(g) minus the given set. The input graph is untouched.
inline Graph delete_vertices(const Graph& g, const std::set<std::string>& removed) {
    for (const std::string& v : removed) g.index_of(v);  // NotFound on unknown ids
    std::vector<std::string> keep;
    for (const std::string& v : g.labels())
        if (!removed.count(v)) keep.push_back(v);
    std::vector<Graph::Edge> edges;
    for (const Graph::Edge& e : g.edges())
        if (!removed.count(e.first) && !removed.count(e.second)) edges.push_back(e);
    return Graph(std::move(keep), edges);
}

inline Graph delete_vertex(const Graph& g, const std::string& v) {
    return delete_vertices(g, std::set<std::string>{v});
}

// The three pairwise-disjoint neighbor classes of a vertex pair: adjacent to
// the first vertex only, to the second only, or to both. Never contains the
// pair itself.
struct NeighborSplit {
    std::set<std::string> first_only;
    std::set<std::string> second_only;
    std::set<std::string> both;
};

inline NeighborSplit neighbor_partition(const Graph& g, const std::string& x,
                                        const std::string& y) {
    if (x == y) throw InvalidPairError("neighbor partition needs two distinct vertices");
    std::set<std::string> nx, ny;
    for (const std::string& v : g.neighbors(x))
        if (v != y) nx.insert(v);
    for (const std::string& v : g.neighbors(y))
        if (v != x) ny.insert(v);
    NeighborSplit split;
    for (const std::string& v : nx) (ny.count(v) ? split.both : split.first_only).insert(v);
    for (const std::string& v : ny)
        if (!nx.count(v)) split.second_only.insert(v);
    return split;
}

// Connected components as induced subgraphs, ordered by least vertex label.
inline std::vector<Graph> components(const Graph& g) {
    const size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{static_cast<int>(start)};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adjacency()[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<std::string>> verts(static_cast<size_t>(ncomp));
    for (size_t v = 0; v < n; ++v) verts[static_cast<size_t>(comp[v])].push_back(g.labels()[v]);
    std::vector<Graph> out;
    for (auto& vs : verts) {
        std::set<std::string> in(vs.begin(), vs.end());
        std::vector<Graph::Edge> es;
        for (const Graph::Edge& e : g.edges())
            if (in.count(e.first) && in.count(e.second)) es.push_back(e);
        out.emplace_back(std::move(vs), es);
    }
    return out;  // label-sorted scan order already yields least-label order
}

// Glue a fragment onto g: add the fragment's fresh vertices, then its edges.
// Duplicate edges collapse. An edge between two existing vertices is only
// allowed if g already has it; anything else would silently bridge parts of
// the host graph, so it is rejected.
inline Graph union_glue(const Graph& g, const std::set<std::string>& fragment_vertices,
                        const std::vector<Graph::Edge>& fragment_edges) {
    std::vector<std::string> all = g.labels();
    for (const std::string& v : fragment_vertices)
        if (!g.has_vertex(v)) all.push_back(v);
    std::set<std::string> known(all.begin(), all.end());

    std::set<Graph::Edge> edge_set;
    for (const Graph::Edge& e : g.edges()) edge_set.insert(e);
    for (const Graph::Edge& e : fragment_edges) {
        if (!known.count(e.first)) throw NotFoundError("glue edge endpoint unknown: " + e.first);
        if (!known.count(e.second)) throw NotFoundError("glue edge endpoint unknown: " + e.second);
        if (e.first == e.second) throw Error("loop edge rejected at vertex: " + e.first);
        Graph::Edge canon = e.first < e.second ? e : Graph::Edge{e.second, e.first};
        bool old_u = g.has_vertex(canon.first) && !fragment_vertices.count(canon.first);
        bool old_v = g.has_vertex(canon.second) && !fragment_vertices.count(canon.second);
        if (old_u && old_v && !g.has_edge(canon.first, canon.second))
            throw IllegalCrossEdgeError("edge {" + canon.first + "," + canon.second +
                                        "} joins two existing vertices that are not adjacent");
        edge_set.insert(canon);
    }
    return Graph(std::move(all), {edge_set.begin(), edge_set.end()});
}

}  // namespace matchflow
