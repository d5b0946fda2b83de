#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyc/errors.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// Hypergraph text format:
//
//   # optional comments
//   vertices: <n>
//   edge: <v1> <v2> ...     (1-indexed, strictly increasing; may be empty)
//
// Vertices are 1-indexed in all external formats and 0-indexed internally;
// the conversion is confined to this module. Printing lists edge lines in
// document order: the characteristic vector over vertices 1..n read as a
// binary numeral (vertex 1 most significant), ascending.

namespace detail {

inline std::uint64_t document_key(VertexSet e, int n) {
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v)
        key = (key << 1) | (e.contains(v) ? 1u : 0u);
    return key;
}

} // namespace detail

inline std::string print_hypergraph(const Hypergraph& h) {
    std::vector<VertexSet> edges = h.edges();
    std::sort(edges.begin(), edges.end(), [&](VertexSet a, VertexSet b) {
        return detail::document_key(a, h.vertex_count()) < detail::document_key(b, h.vertex_count());
    });
    std::string out = "vertices: " + std::to_string(h.vertex_count()) + "\n";
    for (VertexSet e : edges) {
        out += "edge:";
        for (int v : e.members()) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    return out;
}

inline Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<VertexSet> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::size_t colon = line.find(':', start);
        if (colon == std::string::npos) throw parse_error(lineno, "expected '<directive>: ...'");
        std::string directive = line.substr(start, colon - start);
        std::istringstream rest(line.substr(colon + 1));
        if (directive == "vertices") {
            if (n >= 0) throw parse_error(lineno, "duplicate vertices header");
            long val = -1;
            if (!(rest >> val) || val < 0) throw parse_error(lineno, "vertex count must be a non-negative integer");
            if (val > VertexSet::max_universe) throw parse_error(lineno, "vertex count exceeds 64");
            std::string junk;
            if (rest >> junk) throw parse_error(lineno, "trailing tokens after vertex count");
            n = static_cast<int>(val);
        } else if (directive == "edge") {
            if (n < 0) throw parse_error(lineno, "edge before vertices header");
            VertexSet e;
            long v = 0;
            long prev = 0;
            while (rest >> v) {
                if (v < 1 || v > n) throw parse_error(lineno, "vertex label out of range 1.." + std::to_string(n));
                if (v <= prev) throw parse_error(lineno, "vertex labels must be strictly increasing");
                e = e.with(static_cast<int>(v - 1));
                prev = v;
            }
            if (!rest.eof()) throw parse_error(lineno, "malformed vertex label");
            edges.push_back(e);
        } else {
            throw parse_error(lineno, "unknown directive '" + directive + "'");
        }
    }
    if (n < 0) throw parse_error(lineno, "missing vertices header");
    return Hypergraph(n, std::move(edges));
}

} // namespace polyc
