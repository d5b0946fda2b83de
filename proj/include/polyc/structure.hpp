#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyc/hypergraph.hpp"

namespace polyc {

struct AlphaResult {
    int value = 0;
    // Least maximum independent set in subset-encoding order. When the
    // empty edge is present no set is independent; value 0 with the empty
    // witness is reported.
    VertexSet witness;
};

namespace detail {

inline bool independent(const Hypergraph& h, VertexSet s) {
    for (VertexSet e : h.edges())
        if (e.subset_of(s)) return false;
    return true;
}

} // namespace detail

// Independence number: maximum |S| over S containing no edge as a subset.
inline AlphaResult alpha(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > 24) throw unsupported_size("alpha: subset scan limited to n <= 24");
    AlphaResult best{-1, VertexSet{}};
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        VertexSet cand{s};
        if (cand.size() > best.value && detail::independent(h, cand)) {
            best.value = cand.size();
            best.witness = cand;
        }
    }
    if (best.value < 0) best = {0, VertexSet{}}; // empty edge present
    return best;
}

enum class ObstructionKind { alpha_bound, small_class_missed, clique, vc_bound };

// A structural reason why no polychromatic k-coloring can exist; each
// report is re-checkable from its witness alone.
struct ObstructionReport {
    ObstructionKind kind;
    int k = 0;
    int d = 0;       // clique / vc parameter, 0 otherwise
    int alpha = 0;   // for alpha_bound
    int n = 0;
    VertexSet witness;
};

// Present iff alpha(H)/n < (k-1)/k, compared by cross-multiplication so
// ratios like 5/8 vs 2/3 stay exact. Presence implies H has no
// polychromatic k-coloring.
inline std::optional<ObstructionReport> alpha_obstruction(const Hypergraph& h, int k) {
    if (k < 2) throw std::invalid_argument("alpha_obstruction: k must be at least 2");
    const AlphaResult a = alpha(h);
    const int n = h.vertex_count();
    if (static_cast<std::int64_t>(a.value) * k < static_cast<std::int64_t>(k - 1) * n)
        return ObstructionReport{ObstructionKind::alpha_bound, k, 0, a.value, n, a.witness};
    return std::nullopt;
}

struct MissesResult {
    bool all_missed = false;
    std::optional<VertexSet> counterexample; // least non-missed set on failure
};

// True iff every s-subset S of V is missed by some edge (e ∩ S = ∅).
inline MissesResult misses_all_sets(const Hypergraph& h, int s) {
    const int n = h.vertex_count();
    if (s < 1 || s > n) throw std::invalid_argument("misses_all_sets: need 1 <= s <= n");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        VertexSet cand{x};
        if (cand.size() != s) continue;
        bool missed = false;
        for (VertexSet e : h.edges())
            if (!e.intersects(cand)) {
                missed = true;
                break;
            }
        if (!missed) return {false, cand};
    }
    return {true, std::nullopt};
}

struct CliqueResult {
    bool found = false;
    std::optional<VertexSet> witness;
};

// True iff some |X| = s has every t-subset of X realized exactly as a
// trace e ∩ X, i.e. K_s^(t) is a restricted subhypergraph.
inline CliqueResult contains_clique(const Hypergraph& h, int s, int t) {
    const int n = h.vertex_count();
    if (t < 1 || t > s || s > n) throw std::invalid_argument("contains_clique: need 1 <= t <= s <= n");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        VertexSet cand{x};
        if (cand.size() != s) continue;
        std::vector<std::uint64_t> traces;
        traces.reserve(h.edges().size());
        for (VertexSet e : h.edges()) traces.push_back((e & cand).bits());
        std::sort(traces.begin(), traces.end());
        bool all = true;
        // Walk the t-subsets of cand directly.
        const auto mem = cand.members();
        std::vector<int> idx(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (all) {
            VertexSet sub;
            for (int i : idx) sub = sub.with(mem[static_cast<std::size_t>(i)]);
            if (!std::binary_search(traces.begin(), traces.end(), sub.bits())) all = false;
            int j = t - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == s - t + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int i = j + 1; i < t; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
        if (all) return {true, cand};
    }
    return {false, std::nullopt};
}

struct VcResult {
    int dimension = 0;
    VertexSet witness; // a largest shattered set; empty when none
};

namespace detail {

inline bool shattered(const Hypergraph& h, VertexSet x) {
    const int sz = x.size();
    if (sz >= 30) return false;
    std::vector<std::uint64_t> traces;
    traces.reserve(h.edges().size());
    for (VertexSet e : h.edges()) traces.push_back(compress_into(e & x, x).bits());
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    return traces.size() == (std::uint64_t{1} << sz);
}

} // namespace detail

// Largest |X| whose trace equals the full powerset of X, by subset scan
// in decreasing size with early exit; 0 when no nonempty set shatters.
inline VcResult vc_dimension(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > 24) throw unsupported_size("vc_dimension: subset scan limited to n <= 24");
    // |trace| <= |E| caps the shatterable size.
    int cap = 0;
    while (cap < n && (std::uint64_t{1} << (cap + 1)) <= h.edges().size()) ++cap;
    for (int size = cap; size >= 1; --size) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            VertexSet cand{x};
            if (cand.size() != size) continue;
            if (detail::shattered(h, cand)) return {size, cand};
        }
    }
    return {0, VertexSet{}};
}

// (k-1) * floor((vc+1)/k): a strict lower bound on the heavy-colorability
// threshold of the hereditary family generated by H.
inline int vc_mk_lower_bound(const Hypergraph& h, int k) {
    if (k < 2) throw std::invalid_argument("vc_mk_lower_bound: k must be at least 2");
    const int vc = vc_dimension(h).dimension;
    return (k - 1) * ((vc + 1) / k);
}

} // namespace polyc
