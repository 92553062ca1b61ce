// srgtool: feasible-parameter enumeration, graph construction and
// verification, and star-complement reconstruction, with machine-readable
// output. Exit codes: 0 success, 1 verification/feasibility failure,
// 2 usage error, 3 search cap exceeded.
#include <srg/fixture.hpp>
#include <srg/graph6.hpp>
#include <srg/graphs.hpp>
#include <srg/hermitian.hpp>
#include <srg/params.hpp>
#include <srg/serialize.hpp>
#include <srg/starcomp.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace srg;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapped = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RecordRow {
    ParamTriple triple;
    DerivedParams derived;
    FeasibilityVerdict verdict;
};

void print_records(const std::vector<RecordRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) arr.push_back(param_record_json(row.triple, row.derived, row.verdict));
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << param_record_csv_header() << "\n";
        for (const auto& row : rows)
            out << param_record_csv_row(row.triple, row.derived, row.verdict) << "\n";
    } else if (format == "table") {
        out << "a\tc\te\tk\tl\tn\ts\tlambda2\tm1\tm2\tK1\tK2\tstatus\n";
        for (const auto& row : rows) {
            const DerivedParams& d = row.derived;
            out << row.triple.a << '\t' << row.triple.c << '\t' << row.triple.e << '\t' << d.k << '\t'
                << rat_to_string(d.l) << '\t' << rat_to_string(d.n) << '\t' << d.s << '\t' << d.lambda2
                << '\t' << (d.m1 ? rat_to_string(*d.m1) : "") << '\t'
                << (d.m2 ? rat_to_string(*d.m2) : "") << '\t' << d.K1 << '\t' << d.K2 << '\t'
                << to_string(row.verdict.status) << "\n";
        }
    } else {
        throw UsageError("unknown format: " + format);
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file " + path);
    return out;
}

int cmd_enumerate(long a, long e, const std::string& format) {
    std::vector<RecordRow> rows;
    for (auto& entry : feasible_c_list(a, e))
        rows.push_back({{Int(a), entry.c, Int(e)},
                        std::move(entry.derived),
                        {FeasibilityStatus::Feasible, ""}});
    print_records(rows, format, std::cout);
    return kExitOk;
}

int cmd_scan(long max_n, int jobs, const std::string& format) {
    std::vector<RecordRow> rows;
    for (auto& rec : scan(max_n, jobs))
        rows.push_back({rec.triple, std::move(rec.derived), {FeasibilityStatus::Feasible, ""}});
    print_records(rows, format, std::cout);
    return kExitOk;
}

int cmd_table(long a, long e_from, long e_to, const std::string& format) {
    if (e_from < 1 || e_to < e_from) throw UsageError("need 1 <= e-from <= e-to");
    struct Row {
        long e;
        NBounds bounds;
    };
    std::vector<Row> rows;
    for (long e = e_from; e <= e_to; ++e) rows.push_back({e, n_bounds(a, e)});

    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows)
            arr.push_back({{"e", std::to_string(row.e)},
                           {"n_min", row.bounds.n_min.get_str()},
                           {"n_max", row.bounds.n_max.get_str()}});
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "e,n_min,n_max\n";
        for (const auto& row : rows)
            std::cout << row.e << ',' << row.bounds.n_min << ',' << row.bounds.n_max << "\n";
    } else if (format == "table") {
        std::cout << "e\tn_min\tn_max\n";
        for (const auto& row : rows)
            std::cout << row.e << '\t' << row.bounds.n_min << '\t' << row.bounds.n_max << "\n";
    } else {
        throw UsageError("unknown format: " + format);
    }
    return kExitOk;
}

std::string certificate_line(const Graph& g) {
    const SrgVerification v = verify_srg(g);
    std::ostringstream line;
    if (v.ok()) {
        line << "SR(" << g.n() << "," << v.certificate->k << "," << v.certificate->a << ","
             << v.certificate->c << ") connected=yes identity=checked";
        std::string why;
        const auto triple =
            triple_from_kac(v.certificate->k, v.certificate->a, v.certificate->c, &why);
        if (triple)
            line << " e=" << triple->e;
        else
            line << " [" << why << "]";
    } else {
        line << "not strongly regular: " << v.failure;
    }
    return line.str();
}

int cmd_construct(const std::string& family, long n, long t, long e, long q, bool take_line_graph,
                  bool take_complement, const std::string& out_path, const std::string& format) {
    Graph g = [&] {
        if (family == "cycle") return cycle(static_cast<std::size_t>(n));
        if (family == "complete") return complete(static_cast<std::size_t>(n));
        if (family == "complete-bipartite")
            return complete_bipartite(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        if (family == "petersen") return petersen();
        if (family == "windmill") return windmill(static_cast<std::size_t>(t));
        if (family == "generalized-windmill") return generalized_windmill(static_cast<std::size_t>(e));
        if (family == "hermitian") return cayley_graph(q);
        throw UsageError("unknown family: " + family);
    }();
    if (take_line_graph) g = line_graph(g);
    if (take_complement) g = complement(g);

    const std::string payload = format == "dot" ? to_dot(g) : graph6_encode(g) + "\n";
    if (format != "dot" && format != "graph6") throw UsageError("unknown format: " + format);

    const std::string cert = certificate_line(g);
    if (out_path.empty()) {
        std::cout << payload;
        std::cerr << cert << "\n";
    } else {
        open_output(out_path) << payload;
        std::cout << cert << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw UsageError("cannot open input file " + in_path);
    std::string line;
    long line_no = 0;
    bool all_ok = true;
    bool any = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        any = true;
        const Graph g = graph6_decode(line);  // ParseError -> usage error
        const SrgVerification v = verify_srg(g);
        if (v.ok()) {
            std::cout << "line " << line_no << ": " << certificate_line(g) << "\n";
        } else {
            std::cout << "line " << line_no << ": not strongly regular: " << v.failure << "\n";
            all_ok = false;
        }
    }
    if (!any) throw UsageError("no graphs in " + in_path);
    return all_ok ? kExitOk : kExitFail;
}

struct StarComplementSpec {
    Graph graph;
    bool windmill_family = false;
    long windmill_e = 0;
};

StarComplementSpec parse_star_complement(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("star complement spec needs the form kind:arg");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "file") {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open star complement file " + arg);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return {graph6_decode(line)};
        throw UsageError("no graph in " + arg);
    }
    long value = 0;
    try {
        value = std::stol(arg);
    } catch (const std::exception&) {
        throw UsageError("bad star complement argument: " + arg);
    }
    if (kind == "cycle") return {cycle(static_cast<std::size_t>(value))};
    if (kind == "complete-bipartite")
        return {complete_bipartite(static_cast<std::size_t>(value), static_cast<std::size_t>(value))};
    if (kind == "windmill")
        return {generalized_windmill(static_cast<std::size_t>(value)), true, value};
    throw UsageError("unknown star complement kind: " + kind);
}

int cmd_reconstruct(long a, long c, long e, const std::string& spec_text, long long node_cap,
                    const std::string& out_path) {
    const ParamTriple t{a, c, e};
    const FeasibilityResult feas = feasibility(t);
    if (!feas.verdict.feasible()) {
        std::cerr << "parameters are not feasible: " << to_string(feas.verdict.status) << " ("
                  << feas.verdict.detail << ")\n";
        return kExitFail;
    }

    StarComplementSpec spec = parse_star_complement(spec_text);
    ReconstructionProblem problem;
    try {
        problem = make_reconstruction_problem(spec.graph, t);
    } catch (const DomainError& err) {
        std::cerr << "star complement rejected: " << err.what() << "\n";
        return kExitFail;
    }

    BSearchConfig config;
    config.node_cap = node_cap;
    // The windmill spec carries the clique block structure of the putative
    // distance-2 subconstituent; usable when the parameters are the
    // c = e(e+1), a = e-1 family for the same e.
    if (spec.windmill_family && Int(spec.windmill_e) == t.e && t.a == t.e - 1 &&
        t.c == t.e * (t.e + 1)) {
        const long we = spec.windmill_e;
        config.block_hints = {{we + 1, we * (we + 2), c}, {we, we * (we + 1) * (we + 1), c}};
    }

    const BSearchResult search = b_search(problem.r, problem.m, config);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }

    long graphs_written = 0;
    long rejected = 0;
    for (const BitMatrix& b : search.solutions) {
        try {
            const ExactMatrix a_p = reconstruct(problem.a_q, b, t.e);
            const AssembledGraph assembled = assemble_and_verify(a_p, b, problem.a_q, t);
            *out << graph6_encode(assembled.graph) << "\n";
            ++graphs_written;
        } catch (const NotZeroOneError&) {
            ++rejected;
        } catch (const VerificationError&) {
            ++rejected;
        }
    }

    std::cerr << "search " << (search.status == BSearchStatus::Complete ? "complete" : "capped")
              << ": " << search.solutions.size() << " factorizations, " << graphs_written
              << " graphs, " << rejected << " rejected, " << search.nodes_explored
              << " nodes explored\n";
    if (search.status == BSearchStatus::CappedInconclusive) return kExitCapped;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly regular graph toolkit: feasibility, construction, reconstruction"};
    app.require_subcommand(1);

    std::string format = "table";
    long arg_a = 0, arg_e = 1, arg_c = 1, arg_n = 0, arg_t = 1, arg_q = 2;
    long e_from = 1, e_to = 10, max_n = 100;
    int jobs = 1;
    long long node_cap = 10'000'000;
    std::string out_path, in_path, star_spec;
    bool take_line_graph = false, take_complement = false;
    std::string graph_format = "graph6";

    auto* enumerate = app.add_subcommand("enumerate", "feasible c values for fixed a and e");
    enumerate->add_option("--a", arg_a, "common neighbours of adjacent pairs")->required();
    enumerate->add_option("--e", arg_e, "positive eigenvalue")->required();
    enumerate->add_option("--format", format, "json, csv, or table");

    auto* scan_cmd = app.add_subcommand("scan", "all feasible parameter sets with n <= N");
    scan_cmd->add_option("--max-n", max_n, "largest vertex count")->required();
    scan_cmd->add_option("--jobs", jobs, "worker count (output is identical for any value)");
    scan_cmd->add_option("--format", format, "json, csv, or table");

    auto* table_cmd = app.add_subcommand("table", "n_min/n_max bounds for a range of e");
    table_cmd->add_option("--a", arg_a, "common neighbours of adjacent pairs")->required();
    table_cmd->add_option("--e-from", e_from, "first e")->required();
    table_cmd->add_option("--e-to", e_to, "last e")->required();
    table_cmd->add_option("--format", format, "json, csv, or table");

    std::string family;
    auto* construct =
        app.add_subcommand("construct", "build a named graph family, emit graph6 plus a certificate");
    construct->add_option("family", family,
                          "cycle, complete, complete-bipartite, petersen, windmill, "
                          "generalized-windmill, hermitian")
        ->required();
    construct->add_option("--n", arg_n, "order (cycle, complete, complete-bipartite part size)");
    construct->add_option("--t", arg_t, "triangle count (windmill)");
    construct->add_option("--e", arg_e, "clique size parameter (generalized-windmill)");
    construct->add_option("--q", arg_q, "prime power (hermitian)");
    construct->add_flag("--line-graph", take_line_graph, "take the line graph of the family");
    construct->add_flag("--complement", take_complement,
                        "take the complement (after --line-graph when both are given)");
    construct->add_option("--out", out_path, "output file (stdout when omitted)");
    construct->add_option("--format", graph_format, "graph6 or dot");

    auto* verify = app.add_subcommand("verify", "verify strong regularity of graph6 input");
    verify->add_option("--in", in_path, "file with one graph6 line per graph")->required();

    auto* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "search for B with BB^T = R and rebuild graphs from a star complement");
    std::string recon_spec;
    reconstruct_cmd->add_option("--a", arg_a, "common neighbours of adjacent pairs")->required();
    reconstruct_cmd->add_option("--c", arg_c, "common neighbours of non-adjacent pairs")->required();
    reconstruct_cmd->add_option("--e", arg_e, "positive eigenvalue")->required();
    reconstruct_cmd
        ->add_option("--star-complement", recon_spec,
                     "cycle:N, complete-bipartite:M, windmill:E, or file:PATH")
        ->required();
    reconstruct_cmd->add_option("--node-cap", node_cap, "search node budget");
    reconstruct_cmd->add_option("--out", out_path, "output file for graph6 lines (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(arg_a, arg_e, format);
        if (scan_cmd->parsed()) return cmd_scan(max_n, jobs, format);
        if (table_cmd->parsed()) return cmd_table(arg_a, e_from, e_to, format);
        if (construct->parsed())
            return cmd_construct(star_spec, arg_n, arg_t, arg_e, arg_q, take_line_graph,
                                 take_complement, out_path, graph_format);
        if (verify->parsed()) return cmd_verify(in_path);
        if (reconstruct_cmd->parsed())
            return cmd_reconstruct(arg_a, arg_c, arg_e, recon_spec, node_cap, out_path);
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
