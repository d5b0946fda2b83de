#pragma once

#include <string>
#include <vector>

#include "polyc/coloring.hpp"
#include "polyc/constructions.hpp"
#include "polyc/hypergraph.hpp"
#include "polyc/structure.hpp"
#include "polyc/threshold.hpp"

namespace polyc {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The full checklist for the bundled counterexample: shape, Fano base,
// pair-missing, the alpha obstruction, exact non-3-colorability, the
// 2-colorability of all 3-heavy restrictions, both thresholds with failure
// witnesses, the clique exclusion, and the VC-dimension cap.
inline std::vector<VerifyCheck> verify_counterexample() {
    std::vector<VerifyCheck> checks;
    const Hypergraph h = counterexample_hypergraph();
    const Hypergraph base = fano_base();

    checks.push_back({"shape: 8 vertices, 11 edges, 5-uniform",
                      h.vertex_count() == 8 && h.edge_count() == 11 && is_m_uniform(h, 5),
                      std::to_string(h.vertex_count()) + " vertices, " +
                          std::to_string(h.edge_count()) + " edges"});

    bool base_included = true;
    for (VertexSet e : base.edges()) base_included = base_included && h.has_edge(e);
    bool fano = base.edge_count() == 7;
    for (int a = 0; a < 7 && fano; ++a)
        for (int b = a + 1; b < 7 && fano; ++b) {
            int on_lines = 0;
            for (VertexSet e : base.edges()) {
                VertexSet line = e.complement_in(8);
                if (line.contains(a) && line.contains(b)) ++on_lines;
            }
            fano = on_lines == 1;
        }
    checks.push_back({"base: complements of the 7 base edges form the Fano plane over {1..7}",
                      fano && base_included,
                      "every pair of {1..7} lies in exactly one complement"});

    const MissesResult misses = misses_all_sets(h, 2);
    checks.push_back({"pair-missing: every pair of vertices is missed by some edge",
                      misses.all_missed, ""});

    const AlphaResult a = alpha(h);
    const auto obs3 = alpha_obstruction(h, 3);
    const auto obs2 = alpha_obstruction(h, 2);
    checks.push_back({"alpha: independence number is 5; 5/8 < 2/3 fires the k=3 obstruction, "
                      "5/8 >= 1/2 leaves k=2 open",
                      a.value == 5 && obs3.has_value() && !obs2.has_value(),
                      "alpha = " + std::to_string(a.value)});

    const ColorabilityResult solver3 = is_poly_colorable(h, 3);
    const ColorabilityResult brute3 = brute_force_poly(h, 3); // 3^8 = 6561 assignments
    checks.push_back({"no polychromatic 3-coloring (backtracking and the 6561-assignment scan agree)",
                      !solver3.colorable && !brute3.colorable, ""});

    bool all_restrictions = true;
    for (std::uint64_t x = 0; x < 256 && all_restrictions; ++x)
        all_restrictions = is_property_b(heavy_restriction(h, VertexSet{x}, 3)).colorable;
    checks.push_back({"all 256 3-heavy restrictions are 2-colorable", all_restrictions, ""});

    const HeavyThreshold m2 = min_heavy_poly(h, 2);
    checks.push_back({"m_2 of the generated hereditary family is 3, with a failure witness at m = 2",
                      m2.value == 3 && m2.failure_set.has_value() &&
                          !is_poly_colorable(heavy_restriction(h, *m2.failure_set, 2), 2).colorable,
                      ""});

    const HeavyThreshold m3 = min_heavy_poly(h, 3);
    checks.push_back({"m_3 of the generated hereditary family is 6, with a failure witness at m = 5",
                      m3.value == 6 && m3.failure_set.has_value() &&
                          !is_poly_colorable(heavy_restriction(h, *m3.failure_set, 5), 3).colorable,
                      ""});

    const CliqueResult clique = contains_clique(h, 5, 3);
    checks.push_back({"no complete 3-uniform 5-clique appears as a restricted subhypergraph",
                      !clique.found, ""});

    const VcResult vc = vc_dimension(h);
    checks.push_back({"VC dimension is at most 4", vc.dimension <= 4,
                      "vc = " + std::to_string(vc.dimension)});

    return checks;
}

} // namespace polyc
