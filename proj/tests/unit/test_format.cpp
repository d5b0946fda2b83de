#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "polyc/constructions.hpp"
#include "polyc/hg_format.hpp"
#include "support/random_hg.hpp"

using polyc::Hypergraph;
using polyc::parse_error;
using polyc::VertexSet;

TEST_CASE("printing the counterexample leads with the heaviest-tail edge") {
    const std::string doc = polyc::print_hypergraph(polyc::counterexample_hypergraph());
    CHECK(doc.rfind("vertices: 8\n", 0) == 0);
    const std::size_t first_edge = doc.find("edge:");
    REQUIRE(first_edge != std::string::npos);
    CHECK(doc.substr(first_edge, 15) == "edge: 4 5 6 7 8");
}

TEST_CASE("parse(print(H)) is the identity on random hypergraphs") {
    std::mt19937_64 rng(86753);
    for (int round = 0; round < 1000; ++round) {
        const Hypergraph h = testsupport::random_hypergraph(rng, 8, 10);
        CHECK(polyc::parse_hypergraph(polyc::print_hypergraph(h)) == h);
    }
}

TEST_CASE("print(parse(doc)) is a normalization fixpoint") {
    const std::string doc = "# a comment\n"
                            "vertices: 4\n"
                            "edge: 2 3\n"
                            "\n"
                            "edge: 1 4\n"
                            "edge: 2 3\n"; // duplicate collapses
    const std::string normalized = polyc::print_hypergraph(polyc::parse_hypergraph(doc));
    CHECK(normalized == polyc::print_hypergraph(polyc::parse_hypergraph(normalized)));
    CHECK(polyc::parse_hypergraph(normalized).edge_count() == 2);
}

TEST_CASE("empty edges round-trip") {
    const Hypergraph h(3, {VertexSet{}, VertexSet::of({0, 2})});
    const std::string doc = polyc::print_hypergraph(h);
    CHECK(doc.find("edge:\n") != std::string::npos);
    CHECK(polyc::parse_hypergraph(doc) == h);
}

TEST_CASE("parse errors carry line numbers") {
    SECTION("label out of range") {
        try {
            polyc::parse_hypergraph("vertices: 8\nedge: 9\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 2);
        }
    }
    SECTION("unknown directive") {
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 3\nvertex: 1\n"), parse_error);
    }
    SECTION("labels must increase strictly") {
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 3\nedge: 2 2\n"), parse_error);
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 3\nedge: 2 1\n"), parse_error);
    }
    SECTION("universe cap") {
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 65\n"), parse_error);
    }
    SECTION("missing or duplicate header") {
        CHECK_THROWS_AS(polyc::parse_hypergraph("edge: 1\n"), parse_error);
        CHECK_THROWS_AS(polyc::parse_hypergraph(""), parse_error);
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 3\nvertices: 3\n"), parse_error);
    }
    SECTION("labels start at 1") {
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 3\nedge: 0 1\n"), parse_error);
    }
    SECTION("malformed labels") {
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: 3\nedge: 1 x\n"), parse_error);
        CHECK_THROWS_AS(polyc::parse_hypergraph("vertices: x\n"), parse_error);
    }
}
