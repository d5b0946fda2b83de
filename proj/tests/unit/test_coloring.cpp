#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyc/coloring.hpp"
#include "polyc/constructions.hpp"
#include "polyc/structure.hpp"
#include "support/random_hg.hpp"

using polyc::ColorabilityResult;
using polyc::Hypergraph;
using polyc::VertexSet;

namespace {

Hypergraph fano_plane_hypergraph() {
    return Hypergraph(7, polyc::fano_lines());
}

Hypergraph complete_uniform(int n, int t) {
    std::vector<VertexSet> edges;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (VertexSet{x}.size() == t) edges.push_back(VertexSet{x});
    return Hypergraph(n, std::move(edges));
}

} // namespace

TEST_CASE("the counterexample has no polychromatic 3-coloring") {
    const Hypergraph h = polyc::counterexample_hypergraph();
    CHECK_FALSE(polyc::is_poly_colorable(h, 3).colorable);
    CHECK_FALSE(polyc::brute_force_poly(h, 3).colorable);
}

TEST_CASE("a single 5-edge is 3-colorable with a valid witness") {
    const Hypergraph h(5, {VertexSet::full(5)});
    const ColorabilityResult res = polyc::is_poly_colorable(h, 3);
    REQUIRE(res.colorable);
    REQUIRE(res.witness.has_value());
    CHECK(polyc::is_polychromatic(h, *res.witness));
}

TEST_CASE("the Fano plane is not 2-colorable") {
    const Hypergraph fano = fano_plane_hypergraph();
    CHECK_FALSE(polyc::is_property_b(fano).colorable);
    CHECK_FALSE(polyc::brute_force_poly(fano, 2).colorable); // 2^7 scan
}

TEST_CASE("odd cycles and complete triple systems fail property B") {
    const Hypergraph triangle(3, {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({0, 2})});
    CHECK_FALSE(polyc::is_property_b(triangle).colorable);
    const Hypergraph k53 = complete_uniform(5, 3);
    CHECK_FALSE(polyc::is_property_b(k53).colorable);
    CHECK_FALSE(polyc::brute_force_poly(k53, 2).colorable); // 2^5 scan
}

TEST_CASE("every 3-heavy restriction of the counterexample is 2-colorable") {
    const Hypergraph h = polyc::counterexample_hypergraph();
    for (std::uint64_t x = 0; x < 256; ++x) {
        const Hypergraph r = polyc::heavy_restriction(h, VertexSet{x}, 3);
        const ColorabilityResult res = polyc::is_property_b(r);
        REQUIRE(res.colorable);
        CHECK(polyc::is_polychromatic(r, *res.witness));
    }
}

TEST_CASE("the counterexample is 2-colorable, and any 4-4 split works") {
    const Hypergraph h = polyc::counterexample_hypergraph();
    CHECK(polyc::brute_force_poly(h, 2).colorable);
    // Any 4-4 split: a 5-edge cannot fit inside either 4-set.
    for (std::uint64_t x = 0; x < 256; ++x) {
        VertexSet blue{x};
        if (blue.size() != 4) continue;
        polyc::Coloring col{2, std::vector<int>(8, 0)};
        for (int v : blue.members()) col.color[static_cast<std::size_t>(v)] = 1;
        CHECK(polyc::is_polychromatic(h, col));
    }
}

TEST_CASE("degenerate inputs") {
    SECTION("k = 0 is rejected") {
        CHECK_THROWS_AS(polyc::is_poly_colorable(Hypergraph(2, {}), 0), std::invalid_argument);
        CHECK_THROWS_AS(polyc::brute_force_poly(Hypergraph(2, {}), 0), std::invalid_argument);
    }
    SECTION("k = 1 is colorable exactly when no edge is empty") {
        CHECK(polyc::is_poly_colorable(Hypergraph(3, {VertexSet::of({1})}), 1).colorable);
        CHECK_FALSE(polyc::is_poly_colorable(Hypergraph(3, {VertexSet{}}), 1).colorable);
    }
    SECTION("edges smaller than k are immediate refutations") {
        CHECK_FALSE(polyc::is_poly_colorable(Hypergraph(4, {VertexSet::of({0, 1})}), 3).colorable);
        CHECK_FALSE(polyc::is_poly_colorable(Hypergraph(4, {VertexSet{}}), 2).colorable);
    }
    SECTION("edgeless hypergraphs are colorable for every k") {
        const ColorabilityResult res = polyc::is_poly_colorable(Hypergraph(4, {}), 3);
        CHECK(res.colorable);
        CHECK(polyc::is_polychromatic(Hypergraph(4, {}), *res.witness));
    }
    SECTION("brute force guard") {
        CHECK_THROWS_AS(polyc::brute_force_poly(Hypergraph(30, {}), 3), polyc::unsupported_size);
    }
}

TEST_CASE("solver vs brute-force oracle on random hypergraphs") {
    std::mt19937_64 rng(123456);
    for (int round = 0; round < 400; ++round) {
        const Hypergraph h = testsupport::random_hypergraph(rng, 5, 8);
        for (int k : {2, 3, 4}) {
            const ColorabilityResult fast = polyc::is_poly_colorable(h, k);
            const ColorabilityResult slow = polyc::brute_force_poly(h, k);
            REQUIRE(fast.colorable == slow.colorable);
            if (fast.colorable) {
                CHECK(polyc::is_polychromatic(h, *fast.witness));
                CHECK(polyc::is_polychromatic(h, *slow.witness));
            }
        }
    }
}

TEST_CASE("color monotonicity: colorable at k implies colorable at k-1") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 200; ++round) {
        const Hypergraph h = testsupport::random_hypergraph(rng, 6, 8);
        for (int k : {3, 4})
            if (polyc::is_poly_colorable(h, k).colorable)
                CHECK(polyc::is_poly_colorable(h, k - 1).colorable);
    }
}

TEST_CASE("edge monotonicity: removing an edge never breaks colorability") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 200; ++round) {
        const Hypergraph h = testsupport::random_hypergraph(rng, 6, 6);
        for (int k : {2, 3}) {
            if (!polyc::is_poly_colorable(h, k).colorable) continue;
            for (std::size_t drop = 0; drop < h.edges().size(); ++drop) {
                std::vector<VertexSet> edges;
                for (std::size_t i = 0; i < h.edges().size(); ++i)
                    if (i != drop) edges.push_back(h.edges()[i]);
                CHECK(polyc::is_poly_colorable(Hypergraph(h.vertex_count(), edges), k).colorable);
            }
        }
    }
}

TEST_CASE("alpha consistency: colorable implies a large independent set") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 200; ++round) {
        const Hypergraph h = testsupport::random_hypergraph(rng, 6, 8);
        const int n = h.vertex_count();
        for (int k : {2, 3})
            if (polyc::is_poly_colorable(h, k).colorable)
                CHECK(polyc::alpha(h).value >= ((k - 1) * n + k - 1) / k);
    }
}

TEST_CASE("witness is deterministic under the fixed ordering") {
    const Hypergraph h = polyc::counterexample_hypergraph();
    const ColorabilityResult a = polyc::is_poly_colorable(h, 2);
    const ColorabilityResult b = polyc::is_poly_colorable(h, 2);
    REQUIRE(a.colorable);
    CHECK(a.witness->color == b.witness->color);
}
