#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyc/sweep.hpp"

using polyc::ChunkOutcome;
using polyc::Hypergraph;
using polyc::SweepOptions;
using polyc::SweepResult;
using polyc::VertexSet;

namespace {

// A toy sweep: chunk c contributes c nodes, a survivor when c is divisible
// by 5, and counters tracking parity.
ChunkOutcome toy_chunk(std::uint64_t c) {
    ChunkOutcome out;
    out.nodes = c + 1;
    out.counters["odd"] = c % 2;
    if (c % 5 == 0)
        out.survivors.push_back(Hypergraph(3, {VertexSet{(c / 5) % 8}}));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("aggregates are identical across worker counts") {
    SweepResult base = polyc::run_chunked_sweep("toy", 40, toy_chunk);
    for (int jobs : {2, 3, 7}) {
        SweepOptions opt;
        opt.jobs = jobs;
        SweepResult r = polyc::run_chunked_sweep("toy", 40, toy_chunk, opt);
        CHECK(r.nodes == base.nodes);
        CHECK(r.counters == base.counters);
        REQUIRE(r.survivors.size() == base.survivors.size());
        for (std::size_t i = 0; i < r.survivors.size(); ++i) {
            CHECK(r.survivors[i].chunk == base.survivors[i].chunk);
            CHECK(r.survivors[i].hg == base.survivors[i].hg);
        }
    }
    CHECK(base.chunks_done == 40);
    CHECK(base.survivors.size() == 8);
    CHECK_FALSE(base.halted);
}

TEST_CASE("early stop cuts deterministically at the least stopping chunk") {
    auto stopping = [](std::uint64_t c) {
        ChunkOutcome out = toy_chunk(c);
        out.stop = c >= 13;
        return out;
    };
    SweepResult base = polyc::run_chunked_sweep("toy", 64, stopping);
    REQUIRE(base.stopped_at_chunk.has_value());
    CHECK(*base.stopped_at_chunk == 13);
    CHECK(base.chunks_done == 14);
    for (int jobs : {2, 5}) {
        SweepOptions opt;
        opt.jobs = jobs;
        SweepResult r = polyc::run_chunked_sweep("toy", 64, stopping, opt);
        CHECK(r.stopped_at_chunk == base.stopped_at_chunk);
        CHECK(r.nodes == base.nodes);
        CHECK(r.survivors.size() == base.survivors.size());
    }
}

TEST_CASE("halt, checkpoint, resume reproduces the uninterrupted result") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "polyc_sweep_test";
    fs::create_directories(dir);
    const std::string ckpt = (dir / "toy.ckpt").string();
    fs::remove(ckpt);

    SweepResult full = polyc::run_chunked_sweep("toy", 40, toy_chunk);

    SweepOptions halt_opt;
    halt_opt.checkpoint_path = ckpt;
    halt_opt.halt_after = 12;
    SweepResult halted = polyc::run_chunked_sweep("toy", 40, toy_chunk, halt_opt);
    CHECK(halted.halted);
    CHECK(halted.chunks_done >= 12);
    CHECK(halted.chunks_done < 40);
    REQUIRE(fs::exists(ckpt));
    const std::string ckpt_text = slurp(ckpt);
    CHECK(ckpt_text.rfind("checkpoint: toy\n", 0) == 0);

    SweepOptions resume_opt;
    resume_opt.checkpoint_path = ckpt;
    resume_opt.resume = true;
    SweepResult resumed = polyc::run_chunked_sweep("toy", 40, toy_chunk, resume_opt);
    CHECK_FALSE(resumed.halted);
    CHECK(resumed.chunks_done == 40);
    CHECK(resumed.nodes == full.nodes);
    CHECK(resumed.counters == full.counters);
    REQUIRE(resumed.survivors.size() == full.survivors.size());
    for (std::size_t i = 0; i < full.survivors.size(); ++i)
        CHECK(resumed.survivors[i].hg == full.survivors[i].hg);
    CHECK_FALSE(fs::exists(ckpt)); // consumed on completion

    // resuming against the wrong search tag is rejected
    {
        std::ofstream out(ckpt, std::ios::binary);
        out << "checkpoint: other\nchunks-done: 3\nnodes: 3\nsurvivors: 0\nend checkpoint\n";
    }
    CHECK_THROWS_AS(polyc::run_chunked_sweep("toy", 40, toy_chunk, resume_opt), polyc::parse_error);
    fs::remove(ckpt);
}

TEST_CASE("periodic checkpoints appear once enough work accumulated") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "polyc_sweep_test";
    fs::create_directories(dir);
    const std::string ckpt = (dir / "periodic.ckpt").string();
    fs::remove(ckpt);

    SweepOptions opt;
    opt.checkpoint_path = ckpt;
    opt.checkpoint_every = 4;
    opt.checkpoint_min_nodes = 1; // force periodic writes for the test
    bool seen = false;
    auto chunk_fn = [&](std::uint64_t c) {
        if (fs::exists(ckpt)) seen = true;
        return toy_chunk(c);
    };
    polyc::run_chunked_sweep("toy", 40, chunk_fn, opt);
    CHECK(seen);
    CHECK_FALSE(fs::exists(ckpt));
}
