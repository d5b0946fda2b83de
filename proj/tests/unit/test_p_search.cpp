#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <vector>

#include "polyc/coloring.hpp"
#include "polyc/p_search.hpp"

using polyc::Hypergraph;
using polyc::TypeCount;
using polyc::TypeReducedInstance;

namespace {

// Enumerates every multiplicity vector over the nonzero types of {0,1}^E
// with per-edge sums equal to m and multiplicities in [0, cap], calling
// `fn` on each complete instance.
void enumerate_instances(int edge_count, int m, int cap,
                         const std::function<void(const TypeReducedInstance&)>& fn) {
    const int type_count = (1 << edge_count) - 1;
    std::vector<int> mult(static_cast<std::size_t>(type_count), 0);
    std::vector<int> sums(static_cast<std::size_t>(edge_count), 0);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == type_count) {
            for (int j = 0; j < edge_count; ++j)
                if (sums[static_cast<std::size_t>(j)] != m) return;
            TypeReducedInstance inst;
            inst.edge_count = edge_count;
            inst.uniformity = m;
            for (int t = 0; t < type_count; ++t)
                if (mult[static_cast<std::size_t>(t)] > 0)
                    inst.types.push_back(
                        {static_cast<std::uint32_t>(t + 1), mult[static_cast<std::size_t>(t)]});
            fn(inst);
            return;
        }
        const std::uint32_t mask = static_cast<std::uint32_t>(idx + 1);
        for (int mu = 0; mu <= cap; ++mu) {
            bool ok = true;
            for (int j = 0; j < edge_count; ++j)
                if ((mask >> j) & 1u) {
                    sums[static_cast<std::size_t>(j)] += mu;
                    if (sums[static_cast<std::size_t>(j)] > m) ok = false;
                }
            mult[static_cast<std::size_t>(idx)] = mu;
            if (ok) rec(idx + 1);
            for (int j = 0; j < edge_count; ++j)
                if ((mask >> j) & 1u) sums[static_cast<std::size_t>(j)] -= mu;
            mult[static_cast<std::size_t>(idx)] = 0;
        }
    };
    rec(0);
}

bool brute_colorable(const TypeReducedInstance& inst, int k) {
    return polyc::brute_force_poly(polyc::expand_instance(inst), k).colorable;
}

} // namespace

TEST_CASE("packing decision agrees with brute force on enumerated instances") {
    for (int e = 1; e <= 3; ++e)
        for (int m : {2, 3})
            for (int k : {2, 3})
                enumerate_instances(e, m, k - 1, [&](const TypeReducedInstance& inst) {
                    CHECK(polyc::type_instance_poly_colorable(inst, k) == brute_colorable(inst, k));
                });
}

TEST_CASE("packing decision agrees with brute force on random instances") {
    std::mt19937_64 rng(55555);
    for (int round = 0; round < 400; ++round) {
        const int e = 2 + static_cast<int>(rng() % 3); // 2..4
        const int k = 2 + static_cast<int>(rng() % 2); // 2..3
        TypeReducedInstance inst;
        inst.edge_count = e;
        const int types = 1 + static_cast<int>(rng() % 5);
        std::vector<int> mult(static_cast<std::size_t>(1 << e), 0);
        for (int t = 0; t < types; ++t) {
            const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng() % ((1u << e) - 1));
            mult[mask] = 1 + static_cast<int>(rng() % k);
        }
        for (std::uint32_t mask = 1; mask < (1u << e); ++mask)
            if (mult[mask] > 0) inst.types.push_back({mask, mult[mask]});
        if (inst.types.empty()) continue;
        CHECK(polyc::type_instance_poly_colorable(inst, k) == brute_colorable(inst, k));
    }
}

TEST_CASE("minimal-witness multiplicity bound holds on all instances up to 3 edges") {
    // Enumerate with multiplicities allowed up to k (beyond the claimed
    // bound): every edge-minimal non-colorable instance stays within k-1.
    for (int e = 1; e <= 3; ++e)
        for (int m : {2, 3, 4})
            for (int k : {2, 3})
                enumerate_instances(e, m, k, [&](const TypeReducedInstance& inst) {
                    const Hypergraph h = polyc::expand_instance(inst);
                    if (polyc::brute_force_poly(h, k).colorable) return;
                    // edge-minimal: deleting any edge restores colorability
                    for (int drop = 0; drop < h.edge_count(); ++drop) {
                        std::vector<polyc::VertexSet> edges;
                        for (int i = 0; i < h.edge_count(); ++i)
                            if (i != drop) edges.push_back(h.edges()[static_cast<std::size_t>(i)]);
                        if (!polyc::brute_force_poly(Hypergraph(h.vertex_count(), edges), k)
                                 .colorable)
                            return; // not edge-minimal
                    }
                    for (const TypeCount& t : inst.types) CHECK(t.multiplicity <= k - 1);
                });
}

TEST_CASE("edge-count scan matches brute enumeration of the reduced space") {
    for (int m : {2, 3})
        for (int k : {2, 3})
            for (int e = 1; e <= 3; ++e) {
                bool brute_found = false;
                enumerate_instances(e, m, k - 1, [&](const TypeReducedInstance& inst) {
                    brute_found = brute_found || !brute_colorable(inst, k);
                });
                polyc::detail::EdgeCountSearch search(e, m, k);
                const auto outcome = search.run();
                CHECK(outcome.witness.has_value() == brute_found);
                if (outcome.witness)
                    CHECK_FALSE(brute_colorable(*outcome.witness, k));
            }
}

TEST_CASE("triangle is the least non-2-colorable 2-uniform hypergraph") {
    const polyc::PSearchResult res = polyc::p_search(2, 2, 3);
    REQUIRE(res.found_edges == 3);
    REQUIRE(res.witness.has_value());
    const Hypergraph h = polyc::expand_instance(*res.witness);
    CHECK(h.edge_count() == 3);
    CHECK(polyc::is_m_uniform(h, 2));
    CHECK_FALSE(polyc::brute_force_poly(h, 2).colorable);
    CHECK(res.certificate.result == std::string("found-edges: 3"));
}

TEST_CASE("one 2-edge already defeats 3 colors") {
    const polyc::PSearchResult res = polyc::p_search(2, 3, 2);
    CHECK(res.found_edges == 1);
}

TEST_CASE("raising the bound keeps the found value") {
    CHECK(polyc::p_search(2, 2, 4).found_edges == 3);
    CHECK(polyc::p_search(2, 2, 5).found_edges == 3);
}

TEST_CASE("search certificates expose the scan parameters") {
    const polyc::PSearchResult res = polyc::p_search(2, 2, 2);
    CHECK_FALSE(res.found_edges.has_value());
    REQUIRE(res.certificate.nonexistence.has_value());
    const std::string text = res.certificate.render();
    CHECK(polyc::certificate_field(text, "certificate") == std::string("pmk"));
    CHECK(polyc::certificate_field(text, "survivors") == std::string("0"));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(polyc::p_search(1, 2, 3), polyc::unsupported_size);
    CHECK_THROWS_AS(polyc::p_search(2, 1, 3), polyc::unsupported_size);
    CHECK_THROWS_AS(polyc::p_search(2, 2, 9), polyc::unsupported_size);
    CHECK_THROWS_AS(polyc::p_search(3, 4, 7), polyc::unsupported_size);
}

TEST_CASE("seven edges of a triple system defeat two colors", "[slow]") {
    const polyc::PSearchResult res = polyc::p_search(3, 2, 7);
    REQUIRE(res.found_edges == 7);
    REQUIRE(res.witness.has_value());
    const Hypergraph h = polyc::expand_instance(*res.witness);
    CHECK(polyc::is_m_uniform(h, 3));
    CHECK(h.edge_count() == 7);
    CHECK_FALSE(polyc::brute_force_poly(h, 2).colorable);
}
