#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyc/vertex_set.hpp"

namespace polyc {

// A vertex count together with a deduplicated edge set. Edges are kept
// sorted ascending by subset encoding, so two hypergraphs are equal iff
// they have equal vertex counts and identical edge vectors. The empty
// edge is representable.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0 || n > VertexSet::max_universe)
            throw std::invalid_argument("vertex count must be in [0, 64]");
        const VertexSet universe = VertexSet::full(n);
        for (VertexSet e : edges_) {
            if (!e.subset_of(universe))
                throw std::invalid_argument("edge contains a vertex outside the universe");
        }
        normalize();
    }

    static Hypergraph from_vertex_lists(int n, const std::vector<std::vector<int>>& lists) {
        std::vector<VertexSet> edges;
        edges.reserve(lists.size());
        for (const auto& l : lists) {
            VertexSet e;
            for (int v : l) {
                if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
                e = e.with(v);
            }
            edges.push_back(e);
        }
        return Hypergraph(n, std::move(edges));
    }

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(VertexSet e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    int max_edge_size() const {
        int m = 0;
        for (VertexSet e : edges_) m = std::max(m, e.size());
        return m;
    }

    // Number of edges containing vertex v.
    int degree(int v) const {
        int d = 0;
        for (VertexSet e : edges_) d += e.contains(v) ? 1 : 0;
        return d;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) = default;

private:
    void normalize() {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    int n_ = 0;
    std::vector<VertexSet> edges_;
};

// The trace of H on X: edges {e ∩ X}, re-indexed onto |X| vertices in
// increasing original-vertex order. Duplicates collapse; the empty edge
// is retained if some edge is disjoint from X.
inline Hypergraph trace(const Hypergraph& h, VertexSet x) {
    if (!x.subset_of(VertexSet::full(h.vertex_count())))
        throw std::invalid_argument("trace: X is not a subset of the vertex set");
    std::vector<VertexSet> traced;
    traced.reserve(h.edges().size());
    for (VertexSet e : h.edges())
        traced.push_back(compress_into(e & x, x));
    return Hypergraph(x.size(), std::move(traced));
}

// trace(H, X) with all edges of size < m discarded; the unique maximal
// m-heavy restricted subhypergraph on X.
inline Hypergraph heavy_restriction(const Hypergraph& h, VertexSet x, int m) {
    if (m < 1) throw std::invalid_argument("heavy_restriction: m must be positive");
    Hypergraph t = trace(h, x);
    std::vector<VertexSet> kept;
    kept.reserve(t.edges().size());
    for (VertexSet e : t.edges())
        if (e.size() >= m) kept.push_back(e);
    return Hypergraph(t.vertex_count(), std::move(kept));
}

inline bool is_m_heavy(const Hypergraph& h, int m) {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [m](VertexSet e) { return e.size() >= m; });
}

inline bool is_m_uniform(const Hypergraph& h, int m) {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [m](VertexSet e) { return e.size() == m; });
}

} // namespace polyc
