#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "polyc/canonical.hpp"
#include "polyc/constructions.hpp"
#include "support/random_hg.hpp"

using polyc::CanonicalForm;
using polyc::Hypergraph;
using polyc::VertexSet;

namespace {

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        VertexSet out;
        for (int v : e.members()) out = out.with(perm[static_cast<std::size_t>(v)]);
        edges.push_back(out);
    }
    return Hypergraph(h.vertex_count(), std::move(edges));
}

} // namespace

TEST_CASE("canonical form is invariant under random vertex permutations") {
    std::mt19937_64 rng(777);
    for (int round = 0; round < 200; ++round) {
        const Hypergraph h = testsupport::random_hypergraph(rng, 7, 6);
        std::vector<int> perm(static_cast<std::size_t>(h.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(polyc::canonical_form(h) == polyc::canonical_form(relabel(h, perm)));
    }
}

TEST_CASE("relabeled single edges coincide") {
    const Hypergraph a(3, {VertexSet::of({0, 1})});
    const Hypergraph b(3, {VertexSet::of({1, 2})});
    CHECK(polyc::canonical_form(a) == polyc::canonical_form(b));
}

TEST_CASE("different edge counts give different forms") {
    const Hypergraph h = polyc::counterexample_hypergraph();
    std::vector<VertexSet> fewer(h.edges().begin(), h.edges().end() - 1);
    CHECK_FALSE(polyc::canonical_form(h) == polyc::canonical_form(Hypergraph(8, fewer)));
}

TEST_CASE("non-isomorphic graphs with equal invariants are distinguished") {
    // Two 2-regular graphs on 6 vertices: a 6-cycle vs two triangles.
    const Hypergraph c6(6, {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({2, 3}),
                            VertexSet::of({3, 4}), VertexSet::of({4, 5}), VertexSet::of({0, 5})});
    const Hypergraph tt(6, {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({0, 2}),
                            VertexSet::of({3, 4}), VertexSet::of({4, 5}), VertexSet::of({3, 5})});
    CHECK_FALSE(polyc::canonical_form(c6) == polyc::canonical_form(tt));
}

TEST_CASE("permutation sweep bound") {
    CHECK_THROWS_AS(polyc::canonical_form(Hypergraph(13, {})), polyc::unsupported_size);
}
