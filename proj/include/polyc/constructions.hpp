#pragma once

#include <vector>

#include "polyc/hypergraph.hpp"

namespace polyc {

// The 7 lines of the Fano plane over {0,...,6}: every pair of points lies
// on exactly one line.
inline std::vector<VertexSet> fano_lines() {
    return {
        VertexSet::of({0, 1, 2}), VertexSet::of({0, 3, 6}), VertexSet::of({0, 4, 5}),
        VertexSet::of({1, 3, 5}), VertexSet::of({1, 4, 6}), VertexSet::of({2, 3, 4}),
        VertexSet::of({2, 5, 6}),
    };
}

// The 8-vertex, 5-uniform hypergraph whose 7 edges are the complements
// (within {0,...,7}) of the Fano lines. Vertex 7 lies in every edge.
inline Hypergraph fano_base() {
    std::vector<VertexSet> edges;
    for (VertexSet line : fano_lines())
        edges.push_back(line.complement_in(8));
    return Hypergraph(8, std::move(edges));
}

// The four 5-edges inside {0,...,6} that extend fano_base() to the bundled
// counterexample; their complements pair vertex 7 with every other vertex,
// so together with the base every pair of vertices is missed by some edge.
inline std::vector<VertexSet> counterexample_extension() {
    return {
        VertexSet::of({2, 3, 4, 5, 6}),
        VertexSet::of({0, 1, 3, 4, 6}),
        VertexSet::of({0, 1, 2, 4, 5}),
        VertexSet::of({1, 2, 3, 5, 6}),
    };
}

// The bundled 11-edge counterexample: a 5-uniform hypergraph on 8 vertices
// with no polychromatic 3-coloring whose 3-heavy restricted subhypergraphs
// are all 2-colorable (so the hereditary family it generates has
// m_2 = 3 and m_3 = 6).
inline Hypergraph counterexample_hypergraph() {
    Hypergraph base = fano_base();
    std::vector<VertexSet> edges = base.edges();
    for (VertexSet e : counterexample_extension())
        edges.push_back(e);
    return Hypergraph(8, std::move(edges));
}

} // namespace polyc
