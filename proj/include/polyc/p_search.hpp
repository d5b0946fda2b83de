#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polyc/certificate.hpp"
#include "polyc/errors.hpp"
#include "polyc/hypergraph.hpp"
#include "polyc/sweep.hpp"

namespace polyc {

// Bounded search for the least edge count of an m-uniform hypergraph with
// no polychromatic k-coloring. Vertices with equal edge incidence are
// interchangeable, so candidates are searched as multiplicity vectors over
// the nonzero incidence types {0,1}^E \ {0} with per-edge multiplicity sums
// equal to m. In an edge-minimal non-colorable hypergraph every type has
// multiplicity at most k-1 (k same-type vertices could be rainbow-colored,
// satisfying every edge through that type), and the edge counts are scanned
// upward, so the cap loses no witness at the first edge count that has one.

struct TypeCount {
    std::uint32_t edges = 0; // incidence mask over the E edges
    int multiplicity = 0;
};

struct TypeReducedInstance {
    int edge_count = 0;
    int uniformity = 0;
    std::vector<TypeCount> types; // multiplicity >= 1, ascending by mask
};

inline Hypergraph expand_instance(const TypeReducedInstance& inst) {
    int n = 0;
    for (const TypeCount& t : inst.types) n += t.multiplicity;
    if (n > VertexSet::max_universe) throw unsupported_size("expand_instance: more than 64 vertices");
    std::vector<VertexSet> edges(static_cast<std::size_t>(inst.edge_count));
    int v = 0;
    for (const TypeCount& t : inst.types)
        for (int copy = 0; copy < t.multiplicity; ++copy, ++v)
            for (int j = 0; j < inst.edge_count; ++j)
                if ((t.edges >> j) & 1u)
                    edges[static_cast<std::size_t>(j)] = edges[static_cast<std::size_t>(j)].with(v);
    return Hypergraph(n, std::move(edges));
}

namespace detail {

// A polychromatic k-coloring exists iff each color class can be given a
// set of types covering every edge, with no type supporting more classes
// than its multiplicity: spare vertices can join any class, and a class
// hits an edge exactly when it holds a vertex of a type on that edge.
class PackingDecider {
public:
    PackingDecider(int edge_count, int k) : e_(edge_count), k_(k) {
        if (k_ * e_ > 24) throw unsupported_size("packing decision limited to k*E <= 24");
        full_ = (std::uint32_t{1} << e_) - 1;
        const std::size_t words = std::size_t{1} << (k_ * e_ > 6 ? k_ * e_ - 6 : 0);
        reach_.resize(words);
        snapshot_.resize(words);
    }

    // Cheap sufficient check: peel k covers greedily.
    bool greedy(const std::vector<TypeCount>& types) {
        std::vector<int>& caps = greedy_caps_;
        caps.resize(types.size());
        for (std::size_t i = 0; i < types.size(); ++i) caps[i] = types[i].multiplicity;
        for (int cls = 0; cls < k_; ++cls) {
            std::uint32_t uncovered = full_;
            while (uncovered != 0) {
                int best = -1, best_gain = 0;
                for (std::size_t i = 0; i < types.size(); ++i) {
                    if (caps[i] <= 0) continue;
                    const int gain = std::popcount(types[i].edges & uncovered);
                    if (gain > best_gain) {
                        best_gain = gain;
                        best = static_cast<int>(i);
                    }
                }
                if (best < 0) return false;
                --caps[static_cast<std::size_t>(best)];
                uncovered &= ~types[static_cast<std::size_t>(best)].edges;
            }
        }
        return true;
    }

    // Exact reachability over k-tuples of covered-edge masks; index packs
    // the class masks into k*E bits. Each application of a type advances
    // at most one class, so a type is used by at most `multiplicity`
    // classes overall.
    bool exact(const std::vector<TypeCount>& types) {
        std::fill(reach_.begin(), reach_.end(), 0);
        set_bit(reach_, 0);
        const std::uint64_t target = (std::uint64_t{1} << (k_ * e_)) - 1;
        for (const TypeCount& t : types) {
            for (int use = 0; use < t.multiplicity; ++use) {
                snapshot_ = reach_;
                const std::size_t words = snapshot_.size();
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t bits = snapshot_[w];
                    while (bits != 0) {
                        const int b = std::countr_zero(bits);
                        bits &= bits - 1;
                        const std::uint64_t idx = (static_cast<std::uint64_t>(w) << 6) | static_cast<unsigned>(b);
                        for (int cls = 0; cls < k_; ++cls) {
                            const std::uint64_t next =
                                idx | (static_cast<std::uint64_t>(t.edges) << (cls * e_));
                            set_bit(reach_, next);
                        }
                    }
                }
                if (test_bit(reach_, target)) return true;
            }
        }
        return test_bit(reach_, target);
    }

    bool decide(const std::vector<TypeCount>& types) {
        if (e_ == 0) return true;
        return greedy(types) || exact(types);
    }

private:
    static void set_bit(std::vector<std::uint64_t>& v, std::uint64_t idx) {
        v[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
    static bool test_bit(const std::vector<std::uint64_t>& v, std::uint64_t idx) {
        return (v[idx >> 6] >> (idx & 63)) & 1u;
    }

    int e_;
    int k_;
    std::uint32_t full_ = 0;
    std::vector<std::uint64_t> reach_;
    std::vector<std::uint64_t> snapshot_;
    std::vector<int> greedy_caps_;
};

struct EdgeCountOutcome {
    std::optional<TypeReducedInstance> witness; // first in DFS order
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t greedy_prunes = 0;
    std::uint64_t exact_tests = 0;
};

// Depth-first scan of the multiplicity vectors for one edge count.
//
// Edge labels are interchangeable, so assignments are scanned only up to
// the S_E action on incidence types: a branch dies as soon as some edge
// permutation maps its decided prefix to a lexicographically greater one.
// The check runs where it is exact and cheap, at the boundaries between
// popcount classes of the type order (which every permutation maps onto
// themselves), keeping per-level lists of the permutations that still
// match the prefix.
class EdgeCountSearch {
public:
    EdgeCountSearch(int edge_count, int m, int k)
        : e_(edge_count), m_(m), k_(k), decider_(edge_count, k) {
        // Types descending by support size (ties ascending by mask): heavy
        // types first, so packable prefixes are detected early.
        for (std::uint32_t t = 1; t < (std::uint32_t{1} << e_); ++t) type_order_.push_back(t);
        std::stable_sort(type_order_.begin(), type_order_.end(),
                         [](std::uint32_t a, std::uint32_t b) {
                             return std::popcount(a) > std::popcount(b);
                         });
        const std::size_t count = type_order_.size();

        std::vector<std::size_t> pos_of_type(count + 1, 0);
        for (std::size_t i = 0; i < count; ++i) pos_of_type[type_order_[i]] = i;
        for (std::size_t i = 0; i < count; ++i)
            if (i + 1 == count ||
                std::popcount(type_order_[i]) != std::popcount(type_order_[i + 1]))
                boundaries_.push_back(i + 1);
        std::vector<int> edge_perm(static_cast<std::size_t>(e_));
        std::iota(edge_perm.begin(), edge_perm.end(), 0);
        while (std::next_permutation(edge_perm.begin(), edge_perm.end())) {
            std::vector<std::uint8_t> pos_map(count);
            for (std::size_t i = 0; i < count; ++i) {
                std::uint32_t mapped = 0;
                for (int j = 0; j < e_; ++j)
                    if ((type_order_[i] >> j) & 1u)
                        mapped |= std::uint32_t{1} << edge_perm[static_cast<std::size_t>(j)];
                pos_map[i] = static_cast<std::uint8_t>(pos_of_type[mapped]);
            }
            perm_pos_.push_back(std::move(pos_map));
        }
        alive_stack_.resize(boundaries_.size());

        suffix_cap_.assign((count + 1) * static_cast<std::size_t>(e_), 0);
        for (std::size_t i = count; i-- > 0;)
            for (int j = 0; j < e_; ++j)
                suffix_cap_[i * static_cast<std::size_t>(e_) + static_cast<std::size_t>(j)] =
                    suffix_cap_[(i + 1) * static_cast<std::size_t>(e_) + static_cast<std::size_t>(j)] +
                    (((type_order_[i] >> j) & 1u) ? k_ - 1 : 0);

        // Duplicate edges would contradict scanning edge counts upward, so
        // every pair of edges must be separated by some present type; a
        // pair whose last possible separator has gone unused kills the
        // branch.
        for (int j1 = 0; j1 < e_; ++j1)
            for (int j2 = j1 + 1; j2 < e_; ++j2) pair_list_.push_back({j1, j2});
        pairs_ending_at_.assign(count, 0);
        for (std::size_t p = 0; p < pair_list_.size(); ++p) {
            std::size_t last = 0;
            for (std::size_t i = 0; i < count; ++i)
                if (separates(type_order_[i], p)) last = i;
            pairs_ending_at_[last] |= std::uint32_t{1} << p;
        }
    }

    EdgeCountOutcome run() {
        outcome_ = {};
        cur_sum_.assign(static_cast<std::size_t>(e_), 0);
        mu_by_pos_.assign(type_order_.size(), 0);
        present_.clear();
        const std::uint32_t all_pairs =
            pair_list_.empty() ? 0 : (std::uint32_t{1} << pair_list_.size()) - 1;
        descend(0, all_pairs);
        return outcome_;
    }

private:
    bool separates(std::uint32_t type, std::size_t pair) const {
        const auto [j1, j2] = pair_list_[pair];
        return (((type >> j1) ^ (type >> j2)) & 1u) != 0;
    }

    std::uint32_t separated_by(std::uint32_t type) const {
        std::uint32_t out = 0;
        for (std::size_t p = 0; p < pair_list_.size(); ++p)
            if (separates(type, p)) out |= std::uint32_t{1} << p;
        return out;
    }

    // Lexicographic-maximality filter for the decided prefix [0, idx): a
    // permutation whose image is greater kills the branch; one whose image
    // is smaller can never fire below and is dropped from the level list.
    // Exact because every permutation maps [0, idx) onto itself here.
    bool prefix_is_canonical(std::size_t level) {
        const std::size_t begin = level == 0 ? 0 : boundaries_[level - 1];
        const std::size_t end = boundaries_[level];
        const std::size_t in_count = level == 0 ? perm_pos_.size() : alive_stack_[level - 1].size();
        std::vector<std::uint16_t>& out = alive_stack_[level];
        out.clear();
        for (std::size_t s = 0; s < in_count; ++s) {
            const std::uint16_t sigma =
                level == 0 ? static_cast<std::uint16_t>(s) : alive_stack_[level - 1][s];
            const std::vector<std::uint8_t>& map = perm_pos_[sigma];
            bool equal = true;
            for (std::size_t i = begin; i < end; ++i) {
                const int a = mu_by_pos_[i];
                const int b = mu_by_pos_[map[i]];
                if (b > a) return false;
                if (b < a) {
                    equal = false;
                    break;
                }
            }
            if (equal) out.push_back(sigma);
        }
        return true;
    }

    // Returns true when a witness has been found (stops the scan).
    bool descend(std::size_t idx, std::uint32_t unseparated) {
        if (boundary_level_count_ < boundaries_.size() &&
            idx == boundaries_[boundary_level_count_]) {
            const std::size_t level = boundary_level_count_;
            if (!prefix_is_canonical(level)) return false;
            ++boundary_level_count_;
            const bool found = descend_body(idx, unseparated);
            --boundary_level_count_;
            return found;
        }
        return descend_body(idx, unseparated);
    }

    bool descend_body(std::size_t idx, std::uint32_t unseparated) {
        if (idx == type_order_.size()) {
            ++outcome_.leaves;
            ++outcome_.exact_tests;
            if (!decider_.decide(present_)) {
                TypeReducedInstance inst;
                inst.edge_count = e_;
                inst.uniformity = m_;
                inst.types = present_;
                std::sort(inst.types.begin(), inst.types.end(),
                          [](const TypeCount& a, const TypeCount& b) { return a.edges < b.edges; });
                outcome_.witness = std::move(inst);
                return true;
            }
            return false;
        }
        const std::uint32_t t = type_order_[idx];
        int max_mu = k_ - 1;
        for (int j = 0; j < e_; ++j)
            if ((t >> j) & 1u)
                max_mu = std::min(max_mu, m_ - cur_sum_[static_cast<std::size_t>(j)]);

        for (int mu = 0; mu <= max_mu; ++mu) {
            ++outcome_.nodes;
            mu_by_pos_[idx] = mu;
            std::uint32_t next_unseparated = unseparated;
            if (mu >= 1) {
                for (int j = 0; j < e_; ++j)
                    if ((t >> j) & 1u) cur_sum_[static_cast<std::size_t>(j)] += mu;
                present_.push_back({t, mu});
                next_unseparated &= ~separated_by(t);
            }
            bool feasible = true;
            for (int j = 0; j < e_ && feasible; ++j)
                feasible = cur_sum_[static_cast<std::size_t>(j)] +
                               suffix_cap_[(idx + 1) * static_cast<std::size_t>(e_) +
                                           static_cast<std::size_t>(j)] >=
                           m_;
            if (feasible && (next_unseparated & pairs_ending_at_[idx]) != 0) feasible = false;

            bool packable = false;
            if (feasible && mu >= 1) {
                if (decider_.greedy(present_)) {
                    packable = true;
                    ++outcome_.greedy_prunes;
                }
            }
            const bool found = feasible && !packable && descend(idx + 1, next_unseparated);
            if (mu >= 1) {
                for (int j = 0; j < e_; ++j)
                    if ((t >> j) & 1u) cur_sum_[static_cast<std::size_t>(j)] -= mu;
                present_.pop_back();
            }
            if (found) return true;
            // Packing is monotone in capacity: once some multiplicity of
            // this type packs greedily, larger ones would too.
            if (packable) break;
        }
        return false;
    }

    int e_;
    int m_;
    int k_;
    PackingDecider decider_;
    std::vector<std::uint32_t> type_order_;
    std::vector<int> suffix_cap_;
    std::vector<std::pair<int, int>> pair_list_;
    std::vector<std::uint32_t> pairs_ending_at_;
    std::vector<std::size_t> boundaries_;
    std::vector<std::vector<std::uint8_t>> perm_pos_;
    std::vector<std::vector<std::uint16_t>> alive_stack_;
    std::size_t boundary_level_count_ = 0;

    std::vector<int> cur_sum_;
    std::vector<int> mu_by_pos_;
    std::vector<TypeCount> present_;
    EdgeCountOutcome outcome_;
};

} // namespace detail

// Decides polychromatic k-colorability of a type-reduced instance without
// expanding it.
inline bool type_instance_poly_colorable(const TypeReducedInstance& inst, int k) {
    detail::PackingDecider decider(inst.edge_count, k);
    return decider.decide(inst.types);
}

struct PSearchResult {
    std::optional<int> found_edges;
    std::optional<TypeReducedInstance> witness;
    SearchCertificate certificate;
};

inline std::string describe_types(const TypeReducedInstance& inst) {
    std::string out;
    for (const TypeCount& t : inst.types) {
        if (!out.empty()) out += ", ";
        out += "edges{";
        bool first = true;
        for (int j = 0; j < inst.edge_count; ++j)
            if ((t.edges >> j) & 1u) {
                if (!first) out += " ";
                out += std::to_string(j + 1);
                first = false;
            }
        out += "} x" + std::to_string(t.multiplicity);
    }
    return out;
}

inline PSearchResult p_search(int m, int k, int max_edges, const SweepOptions& opt = {}) {
    if (m < 2 || k < 2) throw unsupported_size("p_search: need m >= 2 and k >= 2");
    if (max_edges < 1 || max_edges > 8) throw unsupported_size("p_search: max_edges limited to 8");
    if (k * max_edges > 24) throw unsupported_size("p_search: k * max_edges limited to 24");

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::EdgeCountOutcome> outcomes(static_cast<std::size_t>(max_edges));

    auto run_chunk = [&](std::uint64_t chunk) {
        const int edges = static_cast<int>(chunk) + 1;
        detail::EdgeCountSearch search(edges, m, k);
        detail::EdgeCountOutcome res = search.run();
        ChunkOutcome out;
        out.nodes = res.nodes;
        out.counters["leaves"] = res.leaves;
        out.counters["greedy-prunes"] = res.greedy_prunes;
        out.counters["exact-tests"] = res.exact_tests;
        if (res.witness) {
            out.survivors.push_back(expand_instance(*res.witness));
            out.stop = true;
        }
        outcomes[chunk] = std::move(res);
        return out;
    };

    const std::string tag = "pmk-m" + std::to_string(m) + "-k" + std::to_string(k) + "-e" +
                            std::to_string(max_edges);
    SweepResult sweep = run_chunked_sweep(tag, static_cast<std::uint64_t>(max_edges), run_chunk, opt);

    PSearchResult result;
    result.certificate.search = "pmk";
    result.certificate.params = {{"uniformity", std::to_string(m)},
                                 {"colors", std::to_string(k)},
                                 {"max-edges", std::to_string(max_edges)},
                                 {"multiplicity-cap", std::to_string(k - 1)},
                                 {"predicate", "m-uniform and no polychromatic k-coloring"}};
    result.certificate.candidates = sweep.counters.count("leaves") ? sweep.counters.at("leaves") : 0;
    result.certificate.nodes = sweep.nodes;
    result.certificate.complete = !sweep.halted;
    for (const auto& [key, val] : sweep.counters)
        result.certificate.counters.push_back({key, val});
    if (sweep.halted) {
        result.certificate.result = "halted before completion (checkpoint written)";
    } else if (sweep.stopped_at_chunk) {
        const int found = static_cast<int>(*sweep.stopped_at_chunk) + 1;
        result.found_edges = found;
        result.witness = outcomes[static_cast<std::size_t>(*sweep.stopped_at_chunk)].witness;
        result.certificate.result = "found-edges: " + std::to_string(found);
        if (result.witness)
            result.certificate.observations.push_back("witness types: " + describe_types(*result.witness));
        for (const SweepSurvivor& s : sweep.survivors) result.certificate.survivors.push_back(s.hg);
    } else {
        result.certificate.result = "none within max-edges";
        result.certificate.nonexistence =
            "no " + std::to_string(m) + "-uniform hypergraph with at most " +
            std::to_string(max_edges) + " edges lacks a polychromatic " + std::to_string(k) +
            "-coloring";
    }
    result.certificate.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return result;
}

} // namespace polyc
