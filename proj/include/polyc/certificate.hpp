#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polyc/errors.hpp"
#include "polyc/hg_format.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// Replayable record of an exhaustive search: parameter echo, work counts,
// and either the explicit survivors (in the hypergraph text format) or a
// nonexistence statement. Every field except the wall-clock comment is a
// deterministic function of the search inputs, so certificate files are
// byte-identical across runs and worker counts once that comment line is
// ignored.
struct SearchCertificate {
    std::string search;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t candidates = 0;
    std::uint64_t nodes = 0;
    std::vector<std::pair<std::string, std::uint64_t>> counters;
    std::vector<std::string> observations;
    std::optional<std::string> result;
    std::optional<std::string> nonexistence;
    std::vector<Hypergraph> survivors;
    std::uint64_t wall_ms = 0;

    // In-memory status only: false when the run was abandoned via
    // --halt-after and a checkpoint was left instead of a certificate.
    bool complete = true;

    std::string render() const {
        std::string out;
        out += "certificate: " + search + "\n";
        for (const auto& [key, val] : params) out += "param: " + key + " = " + val + "\n";
        out += "candidates: " + std::to_string(candidates) + "\n";
        out += "nodes: " + std::to_string(nodes) + "\n";
        for (const auto& [key, val] : counters)
            out += "count: " + key + " = " + std::to_string(val) + "\n";
        for (const std::string& o : observations) out += "observation: " + o + "\n";
        if (result) out += "result: " + *result + "\n";
        if (nonexistence) out += "nonexistence: " + *nonexistence + "\n";
        out += "survivors: " + std::to_string(survivors.size()) + "\n";
        out += "# wall-ms: " + std::to_string(wall_ms) + "\n";
        for (std::size_t i = 0; i < survivors.size(); ++i) {
            out += "begin survivor " + std::to_string(i + 1) + "\n";
            out += print_hypergraph(survivors[i]);
            out += "end survivor " + std::to_string(i + 1) + "\n";
        }
        out += "end certificate\n";
        return out;
    }
};

// Re-reads the survivor blocks of a rendered certificate so survivors can
// be re-verified from scratch.
inline std::vector<Hypergraph> parse_certificate_survivors(const std::string& text) {
    std::vector<Hypergraph> out;
    std::istringstream in(text);
    std::string line;
    std::string block;
    bool inside = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind("begin survivor", 0) == 0) {
            if (inside) throw parse_error(lineno, "nested survivor block");
            inside = true;
            block.clear();
        } else if (line.rfind("end survivor", 0) == 0) {
            if (!inside) throw parse_error(lineno, "unmatched end survivor");
            inside = false;
            out.push_back(parse_hypergraph(block));
        } else if (inside) {
            block += line + "\n";
        }
    }
    if (inside) throw parse_error(lineno, "unterminated survivor block");
    return out;
}

// Header-field lookup for tests and tools; returns the value of the first
// matching "key: value" line.
inline std::optional<std::string> certificate_field(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    const std::string prefix = key + ": ";
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    return std::nullopt;
}

} // namespace polyc
