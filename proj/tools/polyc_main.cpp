// Command-line surface for the polychromatic coloring toolkit.
//
// Exit codes: 0 success (for `poly`: colorable), 1 negative decision
// (`poly`: not colorable, `verify-paper`: some check failed), 2 usage or
// input errors, 3 interrupted by --halt-after (checkpoint written).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyc/polyc.hpp"

namespace {

polyc::Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return polyc::parse_hypergraph(buf.str());
}

void write_file_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string format_vertices(polyc::VertexSet s) {
    std::string out;
    for (int v : s.members()) {
        if (!out.empty()) out += " ";
        out += std::to_string(v + 1);
    }
    return out.empty() ? "(empty)" : out;
}

std::string format_coloring(const polyc::Coloring& col) {
    std::string out;
    for (int c : col.color) {
        if (!out.empty()) out += " ";
        out += std::to_string(c + 1);
    }
    return out;
}

struct SearchCommon {
    std::string out_path;
    int jobs = 1;
    bool resume = false;
    std::optional<std::uint64_t> halt_after;

    polyc::SweepOptions sweep_options() const {
        polyc::SweepOptions opt;
        opt.jobs = jobs;
        opt.resume = resume;
        opt.halt_after = halt_after;
        if (!out_path.empty()) opt.checkpoint_path = out_path + ".ckpt";
        return opt;
    }
};

void add_search_flags(CLI::App* cmd, SearchCommon& common, bool output_required) {
    auto* o = cmd->add_option("-o,--out", common.out_path, "certificate output path");
    if (output_required) o->required();
    cmd->add_option("--jobs", common.jobs, "worker count (output is identical for every value)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--resume", common.resume, "continue from the checkpoint next to the output file");
    cmd->add_option_function<std::uint64_t>(
           "--halt-after",
           [&common](std::uint64_t v) { common.halt_after = v; },
           "abandon the run after N chunks, leaving a checkpoint (testing aid)")
        ->expected(1);
}

// Returns exit code 0/3; writes the certificate (or leaves a checkpoint).
int finish_search(const polyc::SearchCertificate& cert, bool halted, const SearchCommon& common) {
    if (halted) {
        std::cerr << "interrupted by --halt-after; checkpoint written next to " << common.out_path
                  << "\n";
        return 3;
    }
    if (!common.out_path.empty()) write_file_atomically(common.out_path, cert.render());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for polychromatic colorings of small hypergraphs"};
    app.require_subcommand(1);

    // verify-paper
    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "re-verify every claim about the bundled 8-vertex counterexample");

    // poly
    std::string poly_file;
    int poly_k = 2;
    bool poly_witness = false;
    auto* poly_cmd = app.add_subcommand("poly", "decide polychromatic k-colorability");
    poly_cmd->add_option("file", poly_file, "hypergraph file")->required();
    poly_cmd->add_option("--k", poly_k, "number of colors")->required()->check(CLI::PositiveNumber);
    poly_cmd->add_flag("--witness", poly_witness, "print a witness coloring when colorable");

    // mk
    std::string mk_file;
    int mk_k = 2;
    auto* mk_cmd = app.add_subcommand("mk", "least m with every m-heavy restriction k-colorable");
    mk_cmd->add_option("file", mk_file, "hypergraph file")->required();
    mk_cmd->add_option("--k", mk_k, "number of colors")->required()->check(CLI::PositiveNumber);

    // alpha
    std::string alpha_file;
    auto* alpha_cmd = app.add_subcommand("alpha", "independence number with witness");
    alpha_cmd->add_option("file", alpha_file, "hypergraph file")->required();

    // vcdim
    std::string vc_file;
    auto* vc_cmd = app.add_subcommand("vcdim", "VC dimension with shattered-set witness");
    vc_cmd->add_option("file", vc_file, "hypergraph file")->required();

    // clique
    std::string clique_file;
    int clique_s = 0, clique_t = 0;
    auto* clique_cmd =
        app.add_subcommand("clique", "search for a complete t-uniform clique on s vertices");
    clique_cmd->add_option("file", clique_file, "hypergraph file")->required();
    clique_cmd->add_option("--s", clique_s, "clique size")->required();
    clique_cmd->add_option("--t", clique_t, "edge size")->required();

    // misses
    std::string misses_file;
    int misses_s = 0;
    auto* misses_cmd = app.add_subcommand("misses", "is every s-set missed by some edge");
    misses_cmd->add_option("file", misses_file, "hypergraph file")->required();
    misses_cmd->add_option("--s", misses_s, "set size")->required();

    // export-cnf
    std::string cnf_file, cnf_out;
    int cnf_k = 2;
    auto* cnf_cmd = app.add_subcommand("export-cnf", "export colorability as DIMACS CNF");
    cnf_cmd->add_option("file", cnf_file, "hypergraph file")->required();
    cnf_cmd->add_option("--k", cnf_k, "number of colors (2 emits the two-clause encoding)")
        ->required();
    cnf_cmd->add_option("-o,--out", cnf_out, "output path")->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive bounded searches");
    search_cmd->require_subcommand(1);

    SearchCommon fano_common;
    auto* fano_cmd = search_cmd->add_subcommand(
        "fano-ext", "all 4-tuples of extra 5-edges over the Fano-complement base");
    add_search_flags(fano_cmd, fano_common, true);

    SearchCommon seven_common;
    auto* seven_cmd = search_cmd->add_subcommand(
        "seven", "all 2^21 5-uniform hypergraphs on 7 vertices");
    add_search_flags(seven_cmd, seven_common, true);

    SearchCommon pmk_common;
    int pmk_m = 0, pmk_k = 0, pmk_max_edges = 0;
    auto* pmk_cmd = search_cmd->add_subcommand(
        "pmk", "least edge count of an m-uniform hypergraph with no polychromatic k-coloring");
    pmk_cmd->add_option("--m", pmk_m, "uniformity")->required();
    pmk_cmd->add_option("--k", pmk_k, "number of colors")->required();
    pmk_cmd->add_option("--max-edges", pmk_max_edges, "edge-count bound")->required();
    add_search_flags(pmk_cmd, pmk_common, true);

    // cover
    SearchCommon cover_common;
    int cover_n = 0;
    auto* cover_cmd = app.add_subcommand("cover", "minimum triangle cover of all pairs");
    cover_cmd->add_option("--n", cover_n, "number of vertices")->required();
    add_search_flags(cover_cmd, cover_common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify_cmd) {
            const auto checks = polyc::verify_counterexample();
            bool all = true;
            for (const auto& c : checks) {
                std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
                if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
                std::cout << "\n";
                all = all && c.pass;
            }
            std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
            return all ? 0 : 1;
        }
        if (*poly_cmd) {
            const polyc::Hypergraph h = load_hypergraph(poly_file);
            const polyc::ColorabilityResult res = polyc::is_poly_colorable(h, poly_k);
            std::cout << "colorable: " << (res.colorable ? "yes" : "no") << "\n";
            if (res.colorable && poly_witness)
                std::cout << "coloring: " << format_coloring(*res.witness) << "\n";
            return res.colorable ? 0 : 1;
        }
        if (*mk_cmd) {
            const polyc::Hypergraph h = load_hypergraph(mk_file);
            const polyc::HeavyThreshold t = polyc::min_heavy_poly(h, mk_k);
            if (t.value)
                std::cout << "m_" << mk_k << ": " << *t.value << "\n";
            else
                std::cout << "m_" << mk_k << ": none within scanned range (up to "
                          << t.scan_limit << ")\n";
            if (t.failure_set) {
                std::cout << "failure-at: m = " << (*t.value - 1) << "\n";
                std::cout << "failure-set: " << format_vertices(*t.failure_set) << "\n";
                std::cout << "failure-restriction:\n"
                          << polyc::print_hypergraph(*t.failure_restriction);
            } else {
                std::cout << "failure-at: none (first scanned m already passes)\n";
            }
            return 0;
        }
        if (*alpha_cmd) {
            const polyc::Hypergraph h = load_hypergraph(alpha_file);
            const polyc::AlphaResult a = polyc::alpha(h);
            std::cout << "alpha: " << a.value << "\n";
            std::cout << "witness: " << format_vertices(a.witness) << "\n";
            return 0;
        }
        if (*vc_cmd) {
            const polyc::Hypergraph h = load_hypergraph(vc_file);
            const polyc::VcResult vc = polyc::vc_dimension(h);
            std::cout << "vc-dimension: " << vc.dimension << "\n";
            std::cout << "witness: " << format_vertices(vc.witness) << "\n";
            return 0;
        }
        if (*clique_cmd) {
            const polyc::Hypergraph h = load_hypergraph(clique_file);
            const polyc::CliqueResult res = polyc::contains_clique(h, clique_s, clique_t);
            std::cout << "clique: " << (res.found ? "yes" : "no") << "\n";
            if (res.found) std::cout << "witness: " << format_vertices(*res.witness) << "\n";
            return 0;
        }
        if (*misses_cmd) {
            const polyc::Hypergraph h = load_hypergraph(misses_file);
            const polyc::MissesResult res = polyc::misses_all_sets(h, misses_s);
            std::cout << "misses-all: " << (res.all_missed ? "yes" : "no") << "\n";
            if (!res.all_missed)
                std::cout << "unmissed-set: " << format_vertices(*res.counterexample) << "\n";
            return 0;
        }
        if (*cnf_cmd) {
            const polyc::Hypergraph h = load_hypergraph(cnf_file);
            if (cnf_k < 2) throw std::invalid_argument("export-cnf: k must be at least 2");
            const polyc::CnfDocument doc =
                cnf_k == 2 ? polyc::export_cnf_property_b(h) : polyc::export_cnf_poly(h, cnf_k);
            write_file_atomically(cnf_out, doc.to_dimacs());
            std::cout << "vars: " << doc.vars << "\nclauses: " << doc.clauses.size() << "\n";
            return 0;
        }
        if (*fano_cmd) {
            const auto opt = fano_common.sweep_options();
            const polyc::SearchCertificate cert = polyc::fano_extension_search(opt);
            if (cert.complete) std::cout << "survivors: " << cert.survivors.size() << "\n";
            return finish_search(cert, !cert.complete, fano_common);
        }
        if (*seven_cmd) {
            const auto opt = seven_common.sweep_options();
            const polyc::SearchCertificate cert = polyc::seven_vertex_sweep(opt);
            if (cert.complete) std::cout << "survivors: " << cert.survivors.size() << "\n";
            return finish_search(cert, !cert.complete, seven_common);
        }
        if (*pmk_cmd) {
            const auto opt = pmk_common.sweep_options();
            const polyc::PSearchResult res = polyc::p_search(pmk_m, pmk_k, pmk_max_edges, opt);
            if (res.certificate.complete) {
                if (res.found_edges)
                    std::cout << "p(" << pmk_m << "," << pmk_k << "): " << *res.found_edges << "\n";
                else
                    std::cout << "p(" << pmk_m << "," << pmk_k << "): none with at most "
                              << pmk_max_edges << " edges\n";
            }
            return finish_search(res.certificate, !res.certificate.complete, pmk_common);
        }
        if (*cover_cmd) {
            const polyc::TriangleCover cover = polyc::min_triangle_cover(cover_n);
            std::cout << cover.size << "\n";
            if (!cover_common.out_path.empty()) {
                polyc::SearchCertificate cert;
                cert.search = "cover";
                cert.params = {{"n", std::to_string(cover_n)}};
                cert.counters = {{"arithmetic-floor",
                                  static_cast<std::uint64_t>(polyc::triangle_cover_lower_bound(cover_n))}};
                cert.result = "minimum-triples: " + std::to_string(cover.size);
                for (polyc::VertexSet t : cover.triples)
                    cert.observations.push_back("triple: " + format_vertices(t));
                write_file_atomically(cover_common.out_path, cert.render());
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
