#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "polyc/coloring.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// Least m for which every m-heavy restricted subhypergraph of the
// generating hypergraph is polychromatic k-colorable. For a finite
// generator the top case m = max_edge_size + 1 passes vacuously, so the
// value is always finite; scan_limit records the examined range anyway.
struct HeavyThreshold {
    std::optional<int> value;
    int scan_limit = 0;

    // Failure witness at value-1: a vertex set whose (value-1)-heavy
    // restriction is not k-colorable. Absent when the scan's first m
    // already passed.
    std::optional<VertexSet> failure_set;
    std::optional<Hypergraph> failure_restriction;
};

// Polychromatic colorability is monotone under edge removal, so checking
// the maximal object heavy_restriction(H, X, m) for each X decides all
// restricted subhypergraphs at once. The failure witness is the least X
// in subset-encoding order.
inline HeavyThreshold min_heavy_poly(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("min_heavy_poly: k must be positive");
    const int n = h.vertex_count();
    if (n > 24) throw unsupported_size("min_heavy_poly: 2^n subset scan limited to n <= 24");

    HeavyThreshold out;
    std::optional<VertexSet> prev_failure;
    std::optional<Hypergraph> prev_restriction;
    const int top = std::max(k, h.max_edge_size() + 1);
    for (int m = k; m <= top; ++m) {
        std::optional<VertexSet> failure;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            Hypergraph r = heavy_restriction(h, VertexSet{x}, m);
            if (!is_poly_colorable(r, k).colorable) {
                failure = VertexSet{x};
                prev_restriction = std::move(r);
                break;
            }
        }
        if (!failure) {
            out.value = m;
            out.scan_limit = m;
            out.failure_set = prev_failure;
            out.failure_restriction = prev_failure ? prev_restriction : std::nullopt;
            return out;
        }
        prev_failure = failure;
    }
    // Unreachable for finite generators; reported as none-in-range.
    out.scan_limit = top;
    return out;
}

} // namespace polyc
