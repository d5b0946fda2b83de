#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "polyc/errors.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// Total-order key for a hypergraph up to vertex relabeling: the
// lexicographically least sorted edge-encoding vector over all n!
// relabelings. Equal keys on equal n <=> isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> edges;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline std::uint64_t relabel_bits(std::uint64_t e, const std::array<int, 12>& perm) {
    std::uint64_t out = 0;
    for (std::uint64_t b = e; b != 0; b &= b - 1)
        out |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(b))];
    return out;
}

} // namespace detail

// Full permutation sweep; n <= 12 by design (all searches here stay at
// n <= 9, where 9! relabelings are trivial).
inline CanonicalForm canonical_form(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > 12) throw unsupported_size("canonical_form: permutation sweep limited to n <= 12");

    std::array<int, 12> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);

    CanonicalForm best;
    best.n = n;
    bool have_best = false;
    std::vector<std::uint64_t> scratch(h.edges().size());
    do {
        for (std::size_t i = 0; i < h.edges().size(); ++i)
            scratch[i] = detail::relabel_bits(h.edges()[i].bits(), perm);
        std::sort(scratch.begin(), scratch.end());
        if (!have_best || scratch < best.edges) {
            best.edges = scratch;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

} // namespace polyc
