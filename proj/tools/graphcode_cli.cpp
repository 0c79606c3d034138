// Command-line front end: construct the graph families, analyze and certify
// arbitrary edge-list graphs, enumerate codewords, run repair simulations,
// and sweep the locality/rate tradeoff to CSV.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphcode/graphcode.hpp"
#include "graphcode/json_export.hpp"

namespace {

using namespace graphcode;

// Write through a temp file and rename, so readers never see partial output.
void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw format_error("cannot open " + tmp.string() + " for writing");
        os << content;
        if (!os) throw format_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw format_error("cannot rename " + tmp.string() + " to " + target.string());
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(out_path, content);
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open graph file: " + path);
    return Graph::parse_edge_list(in);
}

struct ConstructOpts {
    std::string family;
    int n = 0;
    int r = -1;
    std::string format = "edgelist";
    std::string out;
};

void cmd_construct(const ConstructOpts& opt) {
    Graph g = [&opt] {
        if (opt.family == "complete") return complete(opt.n);
        if (opt.r < 0)
            throw parameter_error("construct: family '" + opt.family + "' requires r");
        if (opt.family == "clique") return clique_partition(opt.n, opt.r);
        if (opt.family == "chain") return connected_chain(opt.n, opt.r);
        throw parameter_error("construct: unknown family '" + opt.family + "'");
    }();
    emit(opt.out, opt.format == "dot" ? g.to_dot() : g.to_edge_list_text());
}

struct AnalyzeOpts {
    std::string graph_file;
    std::string out;
};

void cmd_analyze(const AnalyzeOpts& opt) {
    const Graph g = load_graph(opt.graph_file);
    const StorageCode code = build_code(g);
    const int r = g.max_degree();

    nlohmann::ordered_json j;
    j["n"] = code.n();
    j["max_degree"] = r;
    j["connected"] = g.is_connected();
    j["rank"] = code.rank;
    j["dimension"] = code.dimension;
    j["rate_num"] = code.rate.num();
    j["rate_den"] = code.rate.den();
    if (r >= 2 && r <= code.n() - 1) {
        const CapacityBounds bounds = capacity_bounds(code.n(), r);
        j["lower_num"] = bounds.lower.num();
        j["lower_den"] = bounds.lower.den();
        j["upper_num"] = bounds.upper.num();
        j["upper_den"] = bounds.upper.den();
    } else {
        // Degree-1 graphs (disjoint edges) are valid codes but sit outside
        // the 2 <= r <= n-1 window of the capacity bounds.
        j["lower_num"] = nullptr;
        j["lower_den"] = nullptr;
        j["upper_num"] = nullptr;
        j["upper_den"] = nullptr;
    }
    emit(opt.out, j.dump(2) + "\n");
}

struct CertifyOpts {
    std::string graph_file;
    std::string out;
    bool json_only = false;
};

int cmd_certify(const CertifyOpts& opt) {
    const Graph g = load_graph(opt.graph_file);
    if (g.has_isolated_vertex())
        throw model_error("certify: graph has an isolated vertex");

    const BitMatrix a = g.augmented_adjacency();
    const RankCertificate cert = rank_certificate(a);
    const bool ok = verify_certificate(a, cert);
    const Rational bound(g.n() - static_cast<std::int64_t>(cert.size()), g.n());

    emit(opt.out, certificate_json(cert, g.n()).dump(2) + "\n");
    if (!opt.json_only) {
        const auto coverage = coverage_by_pick(a, cert);
        for (std::size_t k = 0; k < cert.picks.size(); ++k) {
            std::cout << "pick (" << cert.picks[k].first << ", " << cert.picks[k].second
                      << ") covers rows";
            for (int row : coverage[k]) std::cout << ' ' << row;
            std::cout << '\n';
        }
        std::cout << "verified=" << (ok ? "true" : "false") << '\n';
        std::cout << "rate <= " << bound << '\n';
    }
    return ok ? 0 : 4;
}

struct EnumerateOpts {
    std::string graph_file;
    std::uint64_t limit = 0;
    std::string out;
};

void cmd_enumerate(const EnumerateOpts& opt) {
    const StorageCode code = build_code(load_graph(opt.graph_file));
    std::ostringstream os;
    for (const BitVector& w : enumerate_codewords(code, opt.limit)) os << w.to_string() << '\n';
    emit(opt.out, os.str());
}

struct SimulateOpts {
    std::string graph_file;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::string message;
    int corrupt_vertex = 0;
    std::string out;
    bool json_only = false;
};

int cmd_simulate(const SimulateOpts& opt) {
    const StorageCode code = build_code(load_graph(opt.graph_file));
    SimConfig cfg;
    cfg.failure_count = opt.failures;
    cfg.seed = opt.seed;
    if (!opt.message.empty()) cfg.message = BitVector::parse(opt.message);
    cfg.corrupt_vertex = opt.corrupt_vertex;

    const SimReport report = run_sim(code, cfg);
    if (!opt.json_only) std::cout << summary_line(report) << '\n';
    emit(opt.out, sim_report_json(report).dump(2) + "\n");
    return report.all_correct ? 0 : 4;
}

struct SweepOpts {
    int n_min = 0;
    int n_max = 0;
    std::string r_rule = "sqrt";
    std::string out;
};

int rule_locality(const std::string& rule, int n) {
    int r = 0;
    if (rule == "sqrt") {
        r = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    } else if (rule == "log") {
        r = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
    } else if (rule.rfind("const:", 0) == 0) {
        try {
            r = std::stoi(rule.substr(6));
        } catch (const std::exception&) {
            throw parameter_error("sweep: bad constant in r-rule '" + rule + "'");
        }
    } else {
        throw parameter_error("sweep: unknown r-rule '" + rule +
                              "' (expected const:<k>, sqrt, or log)");
    }
    // Clamp into the valid locality window for this n.
    return std::max(2, std::min(r, n - 1));
}

void cmd_sweep(const SweepOpts& opt) {
    if (opt.n_min < 2)
        throw parameter_error("sweep: need n-min >= 2, got " + std::to_string(opt.n_min));
    if (opt.n_max < opt.n_min)
        throw parameter_error("sweep: need n-max >= n-min, got n-max = " +
                              std::to_string(opt.n_max));

    std::ostringstream csv;
    csv << "n,r,p,rank_achieved,rate_achieved,lower_bound,upper_bound,"
           "connected_rank,connected_rate,rate_float\n";
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        if (n < 3) {
            // No locality in [2, n-1] exists for n = 2; nothing to tabulate.
            std::cerr << "sweep: skipping n = " << n << " (no valid locality)\n";
            continue;
        }
        const int r = rule_locality(opt.r_rule, n);
        const int p = (n + r) / (r + 1);
        // Only the ranks are tabulated, so skip the full code build (and its
        // nullspace computation) for each row.
        const std::size_t rank = clique_partition(n, r).augmented_adjacency().rank();
        const std::size_t chain_rank = connected_chain(n, r).augmented_adjacency().rank();
        const Rational rate(n - static_cast<std::int64_t>(rank), n);
        const Rational chain_rate(n - static_cast<std::int64_t>(chain_rank), n);
        const CapacityBounds bounds = capacity_bounds(n, r);

        char float_buf[32];
        std::snprintf(float_buf, sizeof float_buf, "%.6f", rate.to_double());
        csv << n << ',' << r << ',' << p << ',' << rank << ',' << rate.to_string()
            << ',' << bounds.lower.to_string() << ',' << bounds.upper.to_string() << ','
            << chain_rank << ',' << chain_rate.to_string() << ',' << float_buf << '\n';
    }
    emit(opt.out, csv.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"storage codes on graphs: constructions, exact rates, rank "
                 "certificates, repair simulation"};
    app.require_subcommand(1);

    ConstructOpts construct_opts;
    CLI::App* construct = app.add_subcommand("construct", "build a graph family and write it out");
    construct->add_option("family", construct_opts.family, "clique | chain | complete")
        ->required()
        ->check(CLI::IsMember({"clique", "chain", "complete"}));
    construct->add_option("n", construct_opts.n, "number of vertices")->required();
    construct->add_option("r", construct_opts.r, "locality (not used by 'complete')");
    construct->add_option("--format", construct_opts.format, "edgelist | dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    construct->add_option("--out", construct_opts.out, "output file (default stdout)");

    AnalyzeOpts analyze_opts;
    CLI::App* analyze = app.add_subcommand("analyze", "rate, rank and capacity bounds of a graph");
    analyze->add_option("graph_file", analyze_opts.graph_file, "edge-list file")->required();
    analyze->add_option("--out", analyze_opts.out, "output file (default stdout)");

    CertifyOpts certify_opts;
    CLI::App* certify =
        app.add_subcommand("certify", "greedy rank certificate and rate upper bound");
    certify->add_option("graph_file", certify_opts.graph_file, "edge-list file")->required();
    certify->add_option("--out", certify_opts.out, "certificate JSON file (default stdout)");
    certify->add_flag("--json", certify_opts.json_only, "suppress the human-readable lines");

    EnumerateOpts enumerate_opts;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list every codeword, one per line");
    enumerate->add_option("graph_file", enumerate_opts.graph_file, "edge-list file")->required();
    enumerate->add_option("--limit", enumerate_opts.limit, "refuse if 2^dimension exceeds this")
        ->required();
    enumerate->add_option("--out", enumerate_opts.out, "output file (default stdout)");

    SimulateOpts simulate_opts;
    CLI::App* simulate = app.add_subcommand("simulate", "inject failures and repair via parity");
    simulate->add_option("graph_file", simulate_opts.graph_file, "edge-list file")->required();
    simulate->add_option("--failures", simulate_opts.failures, "number of failures to inject");
    simulate->add_option("--seed", simulate_opts.seed, "RNG seed");
    simulate->add_option("--message", simulate_opts.message,
                         "message bits (random message if absent)");
    simulate->add_option("--corrupt", simulate_opts.corrupt_vertex,
                         "test mode: flip this stored bit before the run");
    simulate->add_option("--out", simulate_opts.out, "report JSON file (default stdout)");
    simulate->add_flag("--json", simulate_opts.json_only, "suppress the summary line");

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "tabulate rate vs locality over a range of n");
    sweep->add_option("--n-min", sweep_opts.n_min, "first n")->required();
    sweep->add_option("--n-max", sweep_opts.n_max, "last n")->required();
    sweep->add_option("--r-rule", sweep_opts.r_rule, "const:<k> | sqrt | log");
    sweep->add_option("--out", sweep_opts.out, "CSV file (default stdout)");

    int exit_code = 0;
    construct->callback([&] { cmd_construct(construct_opts); });
    analyze->callback([&] { cmd_analyze(analyze_opts); });
    certify->callback([&] { exit_code = cmd_certify(certify_opts); });
    enumerate->callback([&] { cmd_enumerate(enumerate_opts); });
    simulate->callback([&] { exit_code = cmd_simulate(simulate_opts); });
    sweep->callback([&] { cmd_sweep(sweep_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const graphcode::parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const graphcode::format_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const graphcode::model_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
