// command-line front end: generation, exact solving, theorem verification,
// table verification, chain reports, the open-problem experiment and the
// randomized property suites
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "resolv/certificate.hpp"
#include "resolv/closed_form.hpp"
#include "resolv/edgelist.hpp"
#include "resolv/families.hpp"
#include "resolv/graph.hpp"
#include "resolv/properties.hpp"
#include "resolv/resolvability.hpp"

namespace {

using namespace resolv;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // verification found a failure
constexpr int kExitUsage = 2;     // parse or parameter error
constexpr int kExitNotConnected = 3;
constexpr int kExitUnknown = 4;   // search capped before a definite answer

struct GraphArgs {
    std::string family;
    int n = -1;
    int m = -1;
    std::string input_path;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool family_only = false) {
    cmd->add_option("--family", args.family,
                    "family name: path cycle complete kmn petersen q3 antiprism2 spoly tpoly graphH");
    cmd->add_option("--n", args.n, "size parameter n");
    cmd->add_option("--m", args.m, "first part size for kmn");
    if (!family_only) cmd->add_option("--input", args.input_path, "edge-list file ('n m' header)");
}

FamilySpec spec_from_args(const GraphArgs& args) {
    auto fam = family_from_name(args.family);
    if (!fam) throw Error(Errc::parse_error, "unknown family '" + args.family + "'");
    FamilySpec spec{*fam, args.n, args.m};
    switch (*fam) {
        case Family::petersen:
        case Family::q3:
        case Family::graph_h: break;
        case Family::complete_bipartite:
            if (args.m < 0 || args.n < 0) throw Error(Errc::parse_error, "kmn requires --m and --n");
            break;
        default:
            if (args.n < 0) throw Error(Errc::parse_error, args.family + " requires --n");
    }
    return spec;
}

std::pair<Graph, std::optional<FamilySpec>> load_graph(const GraphArgs& args) {
    if (!args.family.empty() && !args.input_path.empty())
        throw Error(Errc::parse_error, "--family and --input are mutually exclusive");
    if (!args.family.empty()) {
        FamilySpec spec = spec_from_args(args);
        return {make_family(spec), spec};
    }
    if (!args.input_path.empty()) return {read_edge_list_file(args.input_path), std::nullopt};
    throw Error(Errc::parse_error, "one of --family or --input is required");
}

std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, pos));
        int hi = std::stoi(text.substr(pos + 2));
        if (lo > hi) throw Error(Errc::parse_error, "empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw Error(Errc::parse_error, "cannot parse range '" + text + "'");
    } catch (const std::out_of_range&) {
        throw Error(Errc::parse_error, "range '" + text + "' out of range");
    }
}

Family parse_polytope(const std::string& name) {
    auto fam = family_from_name(name);
    if (!fam || (*fam != Family::double_antiprism && *fam != Family::s_poly && *fam != Family::t_poly))
        throw Error(Errc::parse_error, "expected one of antiprism2, spoly, tpoly; got '" + name + "'");
    return *fam;
}

std::optional<Invariant> invariant_from_name(const std::string& name) {
    if (name == "dim") return Invariant::dim;
    if (name == "fdim") return Invariant::fdim;
    if (name == "ir") return Invariant::ir;
    if (name == "ifr") return Invariant::ifr;
    if (name == "beta") return Invariant::beta;
    return std::nullopt;
}

int cmd_gen(const GraphArgs& args, const std::string& out_path) {
    FamilySpec spec = spec_from_args(args);
    Graph g = make_family(spec);
    if (out_path.empty())
        std::cout << to_edge_list(g);
    else
        write_edge_list_file(g, out_path);
    return kExitOk;
}

int cmd_solve(const std::string& invariant, const GraphArgs& args, const std::string& format,
              const SolveOptions& opts, bool with_times) {
    auto inv = invariant_from_name(invariant);
    if (!inv) throw Error(Errc::parse_error, "unknown invariant '" + invariant + "'");
    auto [g, spec] = load_graph(args);
    Certificate cert = solve(*inv, g, opts);
    CertificateContext ctx{spec, edge_list_hash(g), with_times};
    if (format == "cert") {
        std::cout << certificate_text(cert, ctx);
    } else if (format == "csv") {
        std::cout << certificate_csv_header(with_times) << certificate_csv_row(cert, ctx);
    } else {
        std::cout << invariant_name(cert.invariant) << " = "
                  << (cert.value ? std::to_string(*cert.value) : "undefined");
        if (!cert.witness.empty())
            std::cout << "  witness " << witness_notation(spec, cert.witness);
        if (cert.status == CertStatus::undefined && !cert.exhaustion.evidence.empty())
            std::cout << "  (clique twin class " << witness_notation(spec, cert.exhaustion.evidence)
                      << ")";
        if (cert.status == CertStatus::unknown_beyond_cap)
            std::cout << "  (unknown beyond cardinality " << cert.exhaustion.cap << ")";
        std::cout << '\n';
    }
    return cert.status == CertStatus::unknown_beyond_cap ? kExitUnknown : kExitOk;
}

int cmd_verify_theorem(const std::string& family, const std::string& range, int exhaustive_limit,
                       int workers) {
    Family fam = parse_polytope(family);
    auto [lo, hi] = parse_range(range);
    bool all_pass = true;
    for (int n = lo; n <= hi; ++n) {
        WitnessReport rep = verify_witness(fam, n);
        std::cout << rep.summary();
        if (!rep.any_passes()) all_pass = false;
        if (n <= exhaustive_limit) {
            Graph g = make_family({fam, n, 0});
            DistanceMatrix d = apsp(g);
            auto three = least_ft_subset_of_size(g, d, 3, workers);
            if (three) {
                all_pass = false;
                std::cout << " | UNEXPECTED FT 3-subset " << witness_notation(FamilySpec{fam, n, 0}, *three);
            } else {
                std::cout << " | no FT 3-subset => fdim >= 4";
            }
        }
        std::cout << '\n';
    }
    std::cout << (all_pass ? "all PASS" : "FAILURES PRESENT") << '\n';
    return all_pass ? kExitOk : kExitFailure;
}

int cmd_verify_tables(const std::string& family, const std::string& range,
                      const std::string& format) {
    Family fam = parse_polytope(family);
    auto [lo, hi] = parse_range(range);
    bool header = true;
    for (int n = lo; n <= hi; ++n) {
        DiscrepancyReport rep = verify_tables(fam, n);
        if (format == "text") {
            std::cout << family_cli_name(fam) << " n=" << n << " (" << parity_name(rep.parity)
                      << "): cells=" << rep.cells.size() << " mismatches=" << rep.mismatch_count
                      << " overlaps=" << rep.overlap_count << " gaps=" << rep.gap_count << '\n';
            FamilySpec spec{fam, n, 0};
            for (const auto& c : rep.cells)
                if (!c.match)
                    std::cout << "  " << vertex_name(spec, c.vertex) << " row " << c.row
                              << " landmark " << c.landmark << ": printed " << c.printed
                              << " bfs " << c.bfs << '\n';
        } else {
            std::cout << rep.to_csv(header);
            header = false;
        }
    }
    return kExitOk;
}

int cmd_chain(const GraphArgs& args, const SolveOptions& opts) {
    auto [g, spec] = load_graph(args);
    (void)spec;
    ChainReport rep = chain_check(g, opts);
    std::cout << rep.render() << '\n';
    return kExitOk;
}

int cmd_open_problem(const std::string& range, const SolveOptions& opts, bool with_times) {
    auto [lo, hi] = parse_range(range);
    std::cout << "family,n,status,value,witness,time_ms\n";
    bool capped = false;
    for (Family fam : {Family::double_antiprism, Family::s_poly, Family::t_poly})
        for (int n = lo; n <= hi; ++n) {
            FamilySpec spec{fam, n, 0};
            Graph g = make_family(spec);
            Certificate cert = ifr_exact(g, opts);
            if (cert.status == CertStatus::unknown_beyond_cap) capped = true;
            std::cout << family_cli_name(fam) << ',' << n << ',' << status_name(cert.status) << ','
                      << (cert.value ? std::to_string(*cert.value) : "-") << ','
                      << witness_notation(spec, cert.witness) << ',';
            if (with_times) {
                std::ostringstream ms;
                ms.setf(std::ios::fixed);
                ms.precision(3);
                ms << cert.wall_ms;
                std::cout << ms.str();
            } else {
                std::cout << '-';
            }
            std::cout << '\n';
        }
    return capped ? kExitUnknown : kExitOk;
}

int cmd_properties(const PropertyOptions& options) {
    PropertyReport rep = run_property_suites(options);
    std::cout << rep.render();
    return rep.all_ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact metric resolvability toolkit: dim, fdim, ir, ifr, beta"};
    app.require_subcommand(1);
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for subset scans")->check(CLI::PositiveNumber);

    GraphArgs gen_args;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
    add_graph_options(gen, gen_args, true);
    gen->add_option("--out", gen_out, "output path (default: stdout)");

    std::string solve_inv, solve_format = "text";
    GraphArgs solve_args;
    int solve_max_k = -1;
    bool solve_no_times = false;
    auto* solve_cmd = app.add_subcommand("solve", "exact solve one invariant");
    solve_cmd->add_option("invariant", solve_inv, "dim | fdim | ir | ifr | beta")->required();
    add_graph_options(solve_cmd, solve_args);
    solve_cmd->add_option("--format", solve_format, "text | cert | csv")
        ->check(CLI::IsMember({"text", "cert", "csv"}));
    solve_cmd->add_option("--max-k", solve_max_k, "cardinality cap for ir/ifr");
    solve_cmd->add_flag("--no-times", solve_no_times, "omit timing fields (byte-reproducible output)");

    std::string vt_family, vt_range;
    int vt_limit = 14;
    auto* vt = app.add_subcommand("verify-theorem",
                                  "check the published 4-landmark witnesses (and, for small n, "
                                  "that no 3-subset is fault-tolerant)");
    vt->add_option("--family", vt_family, "antiprism2 | spoly | tpoly")->required();
    vt->add_option("--n-range", vt_range, "inclusive range a..b")->required();
    vt->add_option("--exhaustive-limit", vt_limit, "largest n for the 3-subset sweep");

    std::string tb_family, tb_range, tb_format = "csv";
    auto* tb = app.add_subcommand("verify-tables", "compare printed code tables against BFS");
    tb->add_option("--family", tb_family, "antiprism2 | spoly | tpoly")->required();
    tb->add_option("--n-range", tb_range, "inclusive range a..b")->required();
    tb->add_option("--format", tb_format, "csv | text")->check(CLI::IsMember({"csv", "text"}));

    GraphArgs chain_args;
    auto* chain = app.add_subcommand("chain", "dim/fdim/ir/ifr/beta with the inequality chain");
    add_graph_options(chain, chain_args);

    std::string op_range = "6..8";
    int op_max_k = -1;
    bool op_no_times = false;
    auto* op = app.add_subcommand("open-problem",
                                  "compute ifr for antiprism2, spoly, tpoly over an n-range");
    op->add_option("--n-range", op_range, "inclusive range a..b (default 6..8)");
    op->add_option("--max-k", op_max_k, "cardinality cap");
    op->add_flag("--no-times", op_no_times, "omit timing column");

    PropertyOptions prop_options;
    auto* props = app.add_subcommand("properties", "randomized agreement suites vs brute force");
    props->add_option("--seed", prop_options.seed, "RNG seed (required)")->required();
    props->add_option("--ft-samples", prop_options.ft_samples, "FT-equivalence sample count");
    props->add_option("--graphs", prop_options.solver_graphs, "solver agreement graph count");
    props->add_option("--max-n-ft", prop_options.ft_max_vertices, "max vertices, FT samples");
    props->add_option("--max-n-solver", prop_options.solver_max_vertices, "max vertices, solver samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    resolv::SolveOptions opts;
    opts.workers = workers;

    try {
        if (gen->parsed()) return cmd_gen(gen_args, gen_out);
        if (solve_cmd->parsed()) {
            if (solve_max_k > 0) opts.max_k = solve_max_k;
            return cmd_solve(solve_inv, solve_args, solve_format, opts, !solve_no_times);
        }
        if (vt->parsed()) return cmd_verify_theorem(vt_family, vt_range, vt_limit, workers);
        if (tb->parsed()) return cmd_verify_tables(tb_family, tb_range, tb_format);
        if (chain->parsed()) return cmd_chain(chain_args, opts);
        if (op->parsed()) {
            if (op_max_k > 0) opts.max_k = op_max_k;
            return cmd_open_problem(op_range, opts, !op_no_times);
        }
        if (props->parsed()) return cmd_properties(prop_options);
    } catch (const resolv::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return err.code() == Errc::not_connected ? kExitNotConnected : kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
