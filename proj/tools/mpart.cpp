// mpart: command-line front end for matrix partition solving, obstruction
// certification and enumeration.
//
// Exit codes: 0 success / verified, 1 negative answer, 2 usage or input
// error, 3 indeterminate (timeout).

#include "mpart/error.hpp"
#include "mpart/obstruction.hpp"
#include "mpart/recognize.hpp"
#include "mpart/report.hpp"
#include "mpart/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace mpart;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;

struct RunConfig {
    std::string matrix_text;
    std::string matrix_file;
    std::string graph6;
    std::string edges;
    std::string graph_file;
    std::string class_name = "all";
    int n_max = 6;
    int jobs = 1;
    std::uint64_t seed = 20240601;
    bool deep = false;
    bool negative_control = false;
    std::string output = "json";
    std::string level = "quick";
    std::string out_dir = "data";
    bool persist = true;
    double timeout = 0.0;
    bool split_route = false;
    int k = 0;
    int t = 0;
    int n = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadParameters, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PatternMatrix load_matrix(const RunConfig& cfg) {
    if (cfg.matrix_text.empty() == cfg.matrix_file.empty()) {
        throw Error(Errc::BadParameters, "give exactly one of --matrix or --matrix-file");
    }
    return parse_matrix(cfg.matrix_file.empty() ? cfg.matrix_text : read_file(cfg.matrix_file));
}

Graph parse_graph_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(Errc::MalformedGraph6, "empty graph input");
    if (text.find(';') != std::string::npos) return parse_edge_list(text);
    auto line = text.substr(first);
    line = line.substr(0, line.find_first_of(" \t\r\n"));
    return parse_graph6(line);
}

Graph load_graph(const RunConfig& cfg) {
    const int sources = !cfg.graph6.empty() + !cfg.edges.empty() + !cfg.graph_file.empty();
    if (sources != 1) throw Error(Errc::BadParameters, "give exactly one of --graph6, --edges or --graph-file");
    if (!cfg.graph6.empty()) return parse_graph6(cfg.graph6);
    if (!cfg.edges.empty()) return parse_edge_list(cfg.edges);
    return parse_graph_text(read_file(cfg.graph_file));
}

std::optional<std::chrono::steady_clock::time_point> deadline_of(const RunConfig& cfg) {
    if (cfg.timeout <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(cfg.timeout));
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int indeterminate() {
    emit({{"result", "indeterminate"}});
    std::cerr << "mpart: time budget exhausted before the search finished\n";
    return kExitIndeterminate;
}

int cmd_solve(const RunConfig& cfg) {
    const auto m = load_matrix(cfg);
    const auto g = load_graph(cfg);
    std::optional<PartAssignment> witness;
    if (cfg.split_route) {
        witness = solve_split(g, m);
    } else if (auto deadline = deadline_of(cfg)) {
        auto r = solve_until(g, m, *deadline);
        if (!r.completed) return indeterminate();
        witness = std::move(r.witness);
    } else {
        witness = solve(g, m);
    }
    if (!witness) {
        emit({{"result", "no-partition"}});
        return kExitNegative;
    }
    emit(witness_json(*witness));
    return kExitOk;
}

int cmd_check_minimal(const RunConfig& cfg) {
    const auto m = load_matrix(cfg);
    const auto g = load_graph(cfg);
    if (auto deadline = deadline_of(cfg)) {
        // Every solver call the check makes must finish inside the budget.
        if (!solve_until(g, m, *deadline).completed) return indeterminate();
        for (int v = 0; v < g.order(); ++v) {
            if (!solve_until(delete_vertex(g, v), m, *deadline).completed) return indeterminate();
        }
    }
    const auto check = check_minimality(g, m);
    json out = {{"status", std::string(to_string(check.status))}};
    if (check.witness) out["witness"] = witness_json(*check.witness);
    if (check.obstructing_vertex >= 0) out["obstructing_vertex"] = check.obstructing_vertex;
    if (check.certificate) out["certificate"] = certificate_json(*check.certificate);
    emit(out);
    return check.status == MinimalityStatus::Minimal ? kExitOk : kExitNegative;
}

int cmd_recognize(const RunConfig& cfg) {
    const auto g = load_graph(cfg);
    json out = {{"class", cfg.class_name}};
    bool member = false;
    if (cfg.class_name == "split") {
        if (auto sp = split_partition(g)) {
            member = true;
            out["clique"] = members(sp->clique);
            out["independent"] = members(sp->independent);
        }
    } else if (cfg.class_name == "bipartite" || cfg.class_name == "cobipartite") {
        auto colors = cfg.class_name == "bipartite" ? is_bipartite(g) : is_cobipartite(g);
        if (colors) {
            member = true;
            out["colors"] = *colors;
        }
    } else if (cfg.class_name == "chordal") {
        if (auto peo = is_chordal(g)) {
            member = true;
            out["elimination_order"] = *peo;
        }
    } else {
        throw Error(Errc::BadParameters, "recognize supports split, bipartite, cobipartite, chordal");
    }
    out["member"] = member;
    emit(out);
    return member ? kExitOk : kExitNegative;
}

int cmd_enumerate(const RunConfig& cfg) {
    const auto m = load_matrix(cfg);
    const auto cls = parse_graph_class(cfg.class_name);
    const auto report = enumerate_minimal_obstructions(m, cls, cfg.n_max, cfg.jobs);
    if (cfg.persist) {
        const auto dir = persist_catalog(report, cfg.out_dir);
        std::cerr << "catalog written to " << dir.string() << '\n';
    }
    if (cfg.output == "tsv") {
        std::cout << report_tsv(report);
    } else {
        std::cout << report_json(report).dump(2) << '\n';
    }
    std::cerr << "order\tminimal-obstructions\n";
    for (auto [n, c] : report.counts) std::cerr << n << '\t' << c << '\n';
    if (report.diagonal_star) std::cerr << "note: diagonal Star, every graph is partitionable\n";
    std::cerr << "elapsed " << std::fixed << std::setprecision(3) << report.elapsed_seconds << " s\n";
    return kExitOk;
}

int cmd_construct(const std::string& kind, const RunConfig& cfg) {
    json out = {{"construction", kind}};
    if (kind == "mkt") {
        const auto m = make_m_kt(cfg.k, cfg.t);
        out["matrix"] = m.to_text();
        out["rows"] = m.row_strings();
        out["k"] = cfg.k;
        out["t"] = cfg.t;
    } else if (kind == "thm5") {
        const auto inst = construct_theorem5(cfg.n);
        out["graph6"] = to_graph6(inst.graph);
        out["vertices"] = inst.graph.order();
        out["matrix"] = inst.matrix.to_text();
        out["n"] = cfg.n;
        out["expected_vertices"] = theorem5_size(cfg.n);
        out["vertex_order"] = "a, b_1..b_2n, b'_1..b'_2n, s_T for n-subsets T in lexicographic order";
    } else {
        const auto g = construct_gt(cfg.t);
        out["graph6"] = to_graph6(g);
        out["vertices"] = g.order();
        out["t"] = cfg.t;
        out["chordal"] = is_chordal(g).has_value();
        out["vertex_order"] = "p_1..p_2t, u";
    }
    emit(out);
    return kExitOk;
}

int cmd_verify_paper(const RunConfig& cfg) {
    VerifyOptions opts;
    if (cfg.level != "quick" && cfg.level != "full") throw Error(Errc::BadParameters, "--level is quick or full");
    opts.level = cfg.level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
    opts.jobs = cfg.jobs;
    opts.seed = cfg.seed;
    opts.deep = cfg.deep;
    opts.negative_control = cfg.negative_control;
    const auto rows = run_acceptance(opts);
    bool all = true;
    if (cfg.output == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"criterion", r.id}, {"name", r.name}, {"result", r.pass ? "PASS" : "FAIL"},
                           {"measured", r.measured}, {"elapsed_s", r.elapsed_seconds}, {"budget_s", r.budget_seconds}});
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << "criterion\tresult\tname\tmeasured\telapsed_s\tbudget_s\n";
        for (const auto& r : rows) {
            std::cout << r.id << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.measured << '\t'
                      << std::fixed << std::setprecision(3) << r.elapsed_seconds << '\t' << r.budget_seconds << '\n';
        }
    }
    for (const auto& r : rows) all &= r.pass;
    return all ? kExitOk : kExitNegative;
}

int default_jobs() {
    if (const char* env = std::getenv("MPART_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix partition solver and obstruction enumerator"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.jobs = default_jobs();

    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", cfg.matrix_text, "matrix text, rows separated by ';'");
        sub->add_option("--matrix-file", cfg.matrix_file, "file holding matrix text");
    };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph6", cfg.graph6, "graph in graph6 format");
        sub->add_option("--edges", cfg.edges, "edge list 'n; u-v, u-v, ...'");
        sub->add_option("--graph-file", cfg.graph_file, "file holding graph6 or an edge list");
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", cfg.jobs, "worker threads (default $MPART_JOBS or 1)")->check(CLI::PositiveNumber);
    };

    auto* solve_cmd = app.add_subcommand("solve", "find an M-partition of a graph");
    add_matrix(solve_cmd);
    add_graph(solve_cmd);
    solve_cmd->add_option("--timeout", cfg.timeout, "wall-clock budget in seconds (exit 3 when exceeded)");
    solve_cmd->add_flag("--split", cfg.split_route, "use the split-graph solver (input must be split)");

    auto* minimal_cmd = app.add_subcommand("check-minimal", "certify minimal obstruction status");
    add_matrix(minimal_cmd);
    add_graph(minimal_cmd);
    minimal_cmd->add_option("--timeout", cfg.timeout, "wall-clock budget in seconds (exit 3 when exceeded)");

    auto* recognize_cmd = app.add_subcommand("recognize", "graph class membership with witness");
    add_graph(recognize_cmd);
    recognize_cmd->add_option("--class", cfg.class_name, "split | bipartite | cobipartite | chordal")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all minimal obstructions of a class up to --max-n");
    add_matrix(enumerate_cmd);
    add_jobs(enumerate_cmd);
    enumerate_cmd->add_option("--class", cfg.class_name, "all | split | bipartite | cobipartite | chordal");
    enumerate_cmd->add_option("--max-n", cfg.n_max, "largest order searched")->required();
    enumerate_cmd->add_option("--output", cfg.output, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
    enumerate_cmd->add_option("--out-dir", cfg.out_dir, "catalog root directory");
    enumerate_cmd->add_flag("!--no-persist", cfg.persist, "do not write catalog files");

    auto* construct_cmd = app.add_subcommand("construct", "explicit constructions");
    construct_cmd->require_subcommand(1);
    auto* mkt_cmd = construct_cmd->add_subcommand("mkt", "matrix M_{k,t}");
    mkt_cmd->add_option("--k", cfg.k)->required();
    mkt_cmd->add_option("--t", cfg.t)->required();
    auto* thm5_cmd = construct_cmd->add_subcommand("thm5", "split obstruction of size 4n+1+C(2n,n)");
    thm5_cmd->add_option("--n", cfg.n)->required();
    auto* gt_cmd = construct_cmd->add_subcommand("gt", "G(t): even path on 2t vertices plus u");
    gt_cmd->add_option("--t", cfg.t)->required();

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the reproduction checks, one row per criterion");
    add_jobs(verify_cmd);
    verify_cmd->add_option("--level", cfg.level, "quick | full");
    verify_cmd->add_option("--seed", cfg.seed, "master seed for randomized suites");
    verify_cmd->add_flag("--deep", cfg.deep, "include the 33-vertex thm5 instance");
    verify_cmd->add_flag("--negative-control", cfg.negative_control, "add a row that must FAIL");
    verify_cmd->add_option("--output", cfg.output, "tsv | json")->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(cfg);
        if (*minimal_cmd) return cmd_check_minimal(cfg);
        if (*recognize_cmd) return cmd_recognize(cfg);
        if (*enumerate_cmd) return cmd_enumerate(cfg);
        if (*mkt_cmd) return cmd_construct("mkt", cfg);
        if (*thm5_cmd) return cmd_construct("thm5", cfg);
        if (*gt_cmd) return cmd_construct("gt", cfg);
        if (*verify_cmd) {
            if (verify_cmd->count("--output") == 0) cfg.output = "tsv";
            return cmd_verify_paper(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "mpart: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
