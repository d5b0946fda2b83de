#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyc/errors.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// Assignment of each vertex to one of k color classes. Surjectivity is not
// required; polychromaticity constrains edges, not the global palette.
struct Coloring {
    int k = 0;
    std::vector<int> color; // color[v] in 0..k-1

    VertexSet color_class(int c) const {
        VertexSet s;
        for (std::size_t v = 0; v < color.size(); ++v)
            if (color[v] == c) s = s.with(static_cast<int>(v));
        return s;
    }
};

// True iff every edge contains at least one vertex of every class 0..k-1.
inline bool is_polychromatic(const Hypergraph& h, const Coloring& col) {
    if (static_cast<int>(col.color.size()) != h.vertex_count()) return false;
    std::vector<VertexSet> classes(static_cast<std::size_t>(col.k));
    for (int c = 0; c < col.k; ++c) classes[static_cast<std::size_t>(c)] = col.color_class(c);
    for (VertexSet e : h.edges())
        for (const VertexSet& cls : classes)
            if (!e.intersects(cls)) return false;
    return true;
}

struct ColorabilityResult {
    bool colorable = false;
    std::optional<Coloring> witness; // present iff colorable
};

namespace detail {

class PolySolver {
public:
    PolySolver(const Hypergraph& h, int k) : h_(h), k_(k), n_(h.vertex_count()) {
        // Most-constrained vertices first: descending incident-edge count,
        // ties by index.
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> deg(static_cast<std::size_t>(n_), 0);
        for (VertexSet e : h.edges())
            for (int v : e.members()) ++deg[static_cast<std::size_t>(v)];
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        });

        edge_present_.assign(h.edges().size(), 0u);
        edge_unassigned_.reserve(h.edges().size());
        for (VertexSet e : h.edges()) edge_unassigned_.push_back(e.size());
        color_.assign(static_cast<std::size_t>(n_), -1);
    }

    ColorabilityResult solve() {
        for (VertexSet e : h_.edges())
            if (e.size() < k_) return {false, std::nullopt};
        if (assign(0)) return {true, Coloring{k_, color_}};
        return {false, std::nullopt};
    }

private:
    // An edge stays satisfiable while (distinct colors present) +
    // (unassigned members) >= k; colors are tried in increasing order at
    // each vertex of the fixed ordering, so the witness is the
    // lexicographically first success under that ordering.
    bool assign(int pos) {
        if (pos == n_) return true;
        const int v = order_[static_cast<std::size_t>(pos)];
        for (int c = 0; c < k_; ++c) {
            color_[static_cast<std::size_t>(v)] = c;
            bool viable = true;
            std::vector<std::pair<std::size_t, std::uint32_t>> touched;
            for (std::size_t i = 0; i < h_.edges().size(); ++i) {
                if (!h_.edges()[i].contains(v)) continue;
                touched.emplace_back(i, edge_present_[i]);
                edge_present_[i] |= std::uint32_t{1} << c;
                --edge_unassigned_[i];
                if (std::popcount(edge_present_[i]) + edge_unassigned_[i] < k_) viable = false;
            }
            if (viable && assign(pos + 1)) return true;
            for (auto& [i, prev] : touched) {
                edge_present_[i] = prev;
                ++edge_unassigned_[i];
            }
        }
        color_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Hypergraph& h_;
    int k_;
    int n_;
    std::vector<int> order_;
    std::vector<std::uint32_t> edge_present_;
    std::vector<int> edge_unassigned_;
    std::vector<int> color_;
};

} // namespace detail

// Exact polychromatic k-colorability by backtracking. Any edge of size < k
// (including the empty edge) forces a negative answer; k=1 asks only that
// no edge is empty.
inline ColorabilityResult is_poly_colorable(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("is_poly_colorable: k must be positive");
    if (k > 32) throw unsupported_size("is_poly_colorable: k above color-mask width");
    return detail::PolySolver(h, k).solve();
}

inline ColorabilityResult is_property_b(const Hypergraph& h) {
    return is_poly_colorable(h, 2);
}

// Exhaustive scan of all k^n colorings; the independent cross-validation
// oracle for the backtracking solver and the CNF pipeline.
inline ColorabilityResult brute_force_poly(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("brute_force_poly: k must be positive");
    const int n = h.vertex_count();
    double total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    if (total > 1e8) throw unsupported_size("brute_force_poly: k^n exceeds 1e8");

    const std::uint32_t all = k >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (VertexSet e : h.edges()) {
            std::uint32_t seen = 0;
            for (int v : e.members()) seen |= std::uint32_t{1} << color[static_cast<std::size_t>(v)];
            if (seen != all) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, Coloring{k, color}};
        int i = 0;
        while (i < n && ++color[static_cast<std::size_t>(i)] == k)
            color[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return {false, std::nullopt};
    }
}

} // namespace polyc
