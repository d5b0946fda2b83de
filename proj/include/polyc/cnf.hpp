#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyc/coloring.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// DIMACS CNF with leading comment lines mapping variables to
// (vertex, color) pairs. Variable indices are contiguous from 1 and the
// header clause count always matches the body.
struct CnfDocument {
    int vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<std::string> comments;

    std::string to_dimacs() const {
        std::string out;
        for (const std::string& c : comments) out += "c " + c + "\n";
        out += "p cnf " + std::to_string(vars) + " " + std::to_string(clauses.size()) + "\n";
        for (const auto& cl : clauses) {
            for (int lit : cl) out += std::to_string(lit) + " ";
            out += "0\n";
        }
        return out;
    }
};

// Property B as SAT: one variable per vertex (true = red, false = blue);
// every edge needs one of each, giving an all-positive and an all-negative
// clause per edge. Satisfiable iff the hypergraph is 2-colorable.
inline CnfDocument export_cnf_property_b(const Hypergraph& h) {
    CnfDocument doc;
    doc.vars = h.vertex_count();
    for (int v = 0; v < h.vertex_count(); ++v)
        doc.comments.push_back("var " + std::to_string(v + 1) + " : vertex " + std::to_string(v + 1) +
                               " is red (false = blue)");
    for (VertexSet e : h.edges()) {
        std::vector<int> pos, neg;
        for (int v : e.members()) {
            pos.push_back(v + 1);
            neg.push_back(-(v + 1));
        }
        doc.clauses.push_back(pos);
        doc.clauses.push_back(neg);
    }
    return doc;
}

namespace detail {

inline int poly_var(int v, int c, int k) { return v * k + c + 1; }

} // namespace detail

// Polychromatic k-colorability as SAT: variables x_{v,c}; per vertex an
// at-least-one clause and pairwise at-most-one clauses; per edge and color
// a covering clause. Satisfiable iff polychromatic k-colorable.
inline CnfDocument export_cnf_poly(const Hypergraph& h, int k) {
    if (k < 2) throw std::invalid_argument("export_cnf_poly: k must be at least 2 (use the Property B encoding or a size check)");
    CnfDocument doc;
    const int n = h.vertex_count();
    doc.vars = n * k;
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c)
            doc.comments.push_back("var " + std::to_string(detail::poly_var(v, c, k)) + " : vertex " +
                                   std::to_string(v + 1) + " has color " + std::to_string(c + 1));
    for (int v = 0; v < n; ++v) {
        std::vector<int> alo;
        for (int c = 0; c < k; ++c) alo.push_back(detail::poly_var(v, c, k));
        doc.clauses.push_back(alo);
        for (int c1 = 0; c1 < k; ++c1)
            for (int c2 = c1 + 1; c2 < k; ++c2)
                doc.clauses.push_back({-detail::poly_var(v, c1, k), -detail::poly_var(v, c2, k)});
    }
    for (VertexSet e : h.edges())
        for (int c = 0; c < k; ++c) {
            std::vector<int> clause;
            for (int v : e.members()) clause.push_back(detail::poly_var(v, c, k));
            doc.clauses.push_back(clause);
        }
    return doc;
}

// Reads a coloring back out of a satisfying assignment of export_cnf_poly
// (assignment[i] = value of variable i+1).
inline Coloring decode_poly_assignment(const Hypergraph& h, int k, const std::vector<bool>& assignment) {
    Coloring col{k, std::vector<int>(static_cast<std::size_t>(h.vertex_count()), -1)};
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int c = 0; c < k; ++c)
            if (assignment[static_cast<std::size_t>(detail::poly_var(v, c, k) - 1)]) {
                col.color[static_cast<std::size_t>(v)] = c;
                break;
            }
    return col;
}

} // namespace polyc
