#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "polyc/certificate.hpp"
#include "polyc/errors.hpp"
#include "polyc/hg_format.hpp"
#include "polyc/hypergraph.hpp"

namespace polyc {

// Chunked exhaustive sweeps. The candidate space is split into fixed,
// input-determined chunks; workers claim chunks in index order and results
// are merged in chunk order, so survivors, node counts, and named counters
// are identical for every worker count. A chunk may request an early stop;
// the sweep then completes every chunk below the least stopping chunk and
// discards any work above it, keeping the aggregate deterministic.

struct SweepSurvivor {
    std::uint64_t chunk = 0;
    std::uint64_t ordinal = 0; // position within the chunk
    Hypergraph hg;
};

struct ChunkOutcome {
    std::uint64_t nodes = 0;
    std::vector<Hypergraph> survivors;
    std::map<std::string, std::uint64_t> counters;
    bool stop = false;
};

struct SweepOptions {
    int jobs = 1;
    // Progress records: once at least checkpoint_min_nodes of work has
    // accumulated, the sweep rewrites the checkpoint file every
    // checkpoint_every completed chunks. `resume` loads the file first;
    // `halt_after` abandons the run after that many chunk completions and
    // always leaves a checkpoint (the interruption hook used by tests).
    std::optional<std::string> checkpoint_path;
    std::uint64_t checkpoint_every = 32;
    std::uint64_t checkpoint_min_nodes = 1'000'000;
    std::optional<std::uint64_t> halt_after;
    bool resume = false;
};

struct SweepResult {
    std::uint64_t chunks_total = 0;
    std::uint64_t chunks_done = 0; // contiguous prefix completed
    std::uint64_t nodes = 0;
    std::vector<SweepSurvivor> survivors;
    std::map<std::string, std::uint64_t> counters;
    std::optional<std::uint64_t> stopped_at_chunk;
    bool halted = false; // stopped early via halt_after; checkpoint left behind
};

namespace detail {

inline void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

inline std::string render_checkpoint(const std::string& tag, const SweepResult& partial) {
    std::string out;
    out += "checkpoint: " + tag + "\n";
    out += "chunks-done: " + std::to_string(partial.chunks_done) + "\n";
    out += "nodes: " + std::to_string(partial.nodes) + "\n";
    for (const auto& [key, val] : partial.counters)
        out += "count: " + key + " = " + std::to_string(val) + "\n";
    out += "survivors: " + std::to_string(partial.survivors.size()) + "\n";
    for (const SweepSurvivor& s : partial.survivors) {
        out += "begin survivor " + std::to_string(s.chunk) + ":" + std::to_string(s.ordinal) + "\n";
        out += print_hypergraph(s.hg);
        out += "end survivor\n";
    }
    out += "end checkpoint\n";
    return out;
}

inline SweepResult parse_checkpoint(const std::string& text, const std::string& expected_tag) {
    SweepResult r;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool inside = false;
    std::string block;
    std::uint64_t chunk = 0, ordinal = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (inside) {
            if (line == "end survivor") {
                inside = false;
                r.survivors.push_back({chunk, ordinal, parse_hypergraph(block)});
            } else {
                block += line + "\n";
            }
            continue;
        }
        if (line.rfind("checkpoint: ", 0) == 0) {
            if (line.substr(12) != expected_tag)
                throw parse_error(lineno, "checkpoint belongs to search '" + line.substr(12) +
                                              "', expected '" + expected_tag + "'");
        } else if (line.rfind("chunks-done: ", 0) == 0) {
            r.chunks_done = std::stoull(line.substr(13));
        } else if (line.rfind("nodes: ", 0) == 0) {
            r.nodes = std::stoull(line.substr(7));
        } else if (line.rfind("count: ", 0) == 0) {
            std::string body = line.substr(7);
            std::size_t eq = body.find(" = ");
            if (eq == std::string::npos) throw parse_error(lineno, "malformed count line");
            r.counters[body.substr(0, eq)] = std::stoull(body.substr(eq + 3));
        } else if (line.rfind("begin survivor ", 0) == 0) {
            std::string id = line.substr(15);
            std::size_t colon = id.find(':');
            if (colon == std::string::npos) throw parse_error(lineno, "malformed survivor id");
            chunk = std::stoull(id.substr(0, colon));
            ordinal = std::stoull(id.substr(colon + 1));
            inside = true;
            block.clear();
        }
    }
    if (inside) throw parse_error(lineno, "unterminated survivor block");
    return r;
}

} // namespace detail

// Runs `fn` over chunks [0, chunks_total) and aggregates deterministically.
inline SweepResult run_chunked_sweep(const std::string& tag, std::uint64_t chunks_total,
                                     const std::function<ChunkOutcome(std::uint64_t)>& fn,
                                     const SweepOptions& opt = {}) {
    SweepResult seed;
    seed.chunks_total = chunks_total;

    std::uint64_t start_chunk = 0;
    if (opt.resume && opt.checkpoint_path && std::filesystem::exists(*opt.checkpoint_path)) {
        std::ifstream in(*opt.checkpoint_path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        SweepResult prior = detail::parse_checkpoint(buf.str(), tag);
        seed.chunks_done = prior.chunks_done;
        seed.nodes = prior.nodes;
        seed.counters = prior.counters;
        seed.survivors = prior.survivors;
        start_chunk = prior.chunks_done;
    }

    std::mutex mu;
    std::uint64_t next_claim = start_chunk;
    std::uint64_t completions = 0;
    std::uint64_t frontier = start_chunk; // chunks [0, frontier) completed contiguously
    std::uint64_t last_checkpoint = start_chunk;
    std::optional<std::uint64_t> stop_watermark;
    bool halt = false;
    std::vector<std::optional<ChunkOutcome>> done(chunks_total);
    std::exception_ptr failure;

    // Aggregate = resume seed + completed chunks in [start_chunk, limit).
    auto aggregate_upto = [&](std::uint64_t limit) {
        SweepResult agg = seed;
        agg.chunks_total = chunks_total;
        for (std::uint64_t c = start_chunk; c < limit; ++c) {
            const ChunkOutcome& o = *done[c];
            agg.nodes += o.nodes;
            for (std::size_t i = 0; i < o.survivors.size(); ++i)
                agg.survivors.push_back({c, i, o.survivors[i]});
            for (const auto& [key, val] : o.counters) agg.counters[key] += val;
        }
        agg.chunks_done = limit;
        std::sort(agg.survivors.begin(), agg.survivors.end(),
                  [](const SweepSurvivor& a, const SweepSurvivor& b) {
                      return std::tie(a.chunk, a.ordinal) < std::tie(b.chunk, b.ordinal);
                  });
        return agg;
    };

    auto worker = [&]() {
        while (true) {
            std::uint64_t chunk;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (failure || halt || next_claim >= chunks_total) return;
                if (stop_watermark && next_claim > *stop_watermark) return;
                chunk = next_claim++;
            }
            ChunkOutcome outcome;
            try {
                outcome = fn(chunk);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                return;
            }
            std::lock_guard<std::mutex> lock(mu);
            if (outcome.stop && (!stop_watermark || chunk < *stop_watermark))
                stop_watermark = chunk;
            done[chunk] = std::move(outcome);
            ++completions;
            while (frontier < chunks_total && done[frontier].has_value()) ++frontier;
            if (opt.halt_after && completions >= *opt.halt_after) halt = true;
            if (opt.checkpoint_path && !halt && frontier >= last_checkpoint + opt.checkpoint_every) {
                SweepResult partial = aggregate_upto(frontier);
                if (partial.nodes >= opt.checkpoint_min_nodes) {
                    detail::write_atomically(*opt.checkpoint_path,
                                             detail::render_checkpoint(tag, partial));
                    last_checkpoint = frontier;
                }
            }
        }
    };

    const int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::uint64_t limit = frontier;
    if (stop_watermark) limit = std::min(limit, *stop_watermark + 1);
    SweepResult agg = aggregate_upto(limit);
    agg.stopped_at_chunk = stop_watermark;
    agg.halted = halt && !stop_watermark && limit < chunks_total;

    if (opt.checkpoint_path) {
        if (agg.halted) {
            detail::write_atomically(*opt.checkpoint_path, detail::render_checkpoint(tag, agg));
        } else if (std::filesystem::exists(*opt.checkpoint_path)) {
            std::filesystem::remove(*opt.checkpoint_path);
        }
    }
    return agg;
}

} // namespace polyc
