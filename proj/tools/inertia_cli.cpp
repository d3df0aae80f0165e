// Command-line front end: bounds, MILP export, oracles, regression bench and
// catalog listing.

#include "inertia/errors.hpp"
#include "inertia/milp.hpp"
#include "inertia/oracles.hpp"
#include "inertia/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace inertia;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

struct InputOptions {
    std::vector<std::string> files;
    std::vector<std::string> graph6;
    std::string catalog;
    std::vector<std::string> only;
};

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    cmd->add_option("graphs", in.files, "Graph files (.g6 graph6, anything else edge list)");
    cmd->add_option("--graph6", in.graph6, "Inline graph6 string (repeatable)");
    cmd->add_option("--catalog", in.catalog, "Catalog directory with manifest.csv");
    cmd->add_option("--name", in.only, "Restrict catalog to these names (repeatable)");
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw LoadError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<GraphSource> collect_sources(const InputOptions& in)
{
    std::vector<GraphSource> out;
    if (!in.catalog.empty()) {
        for (const auto& ng : load_catalog(in.catalog)) {
            if (!in.only.empty() && std::find(in.only.begin(), in.only.end(), ng.name) == in.only.end())
                continue;
            out.push_back({ng.name, to_graph6(ng.graph), GraphFormat::graph6});
        }
    }
    for (const auto& path : in.files) {
        const std::filesystem::path p(path);
        const auto format = p.extension() == ".g6" ? GraphFormat::graph6 : GraphFormat::edge_list;
        out.push_back({p.stem().string(), read_file(path), format});
    }
    for (std::size_t i = 0; i < in.graph6.size(); ++i)
        out.push_back({"graph" + std::to_string(i), in.graph6[i], GraphFormat::graph6});
    if (out.empty())
        throw ContractError("no input graphs (give files, --graph6 or --catalog)");
    return out;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw LoadError("cannot write " + out);
    f << text;
}

struct CommonOptions {
    int k = 2;
    std::string bound = "alpha";
    std::string method = "auto";
    std::string format = "table";
    double tol_group = 0;
    double tol_zero = default_zero_tolerance;
    std::string out;
};

int cmd_bound(const CommonOptions& o, const InputOptions& in, const std::string& export_dir, int threads)
{
    RunConfig cfg;
    cfg.k = o.k;
    cfg.bound = parse_bound_kind(o.bound);
    cfg.method = parse_method(o.method);
    cfg.output = parse_output_format(o.format);
    cfg.tolerances.group = o.tol_group;
    cfg.tolerances.zero = o.tol_zero;
    cfg.threads = threads;
    if (!export_dir.empty())
        cfg.export_dir = export_dir;
    cfg.validate();
    const auto report = run(cfg, collect_sources(in));
    emit(format_report(report), o.out);
    const bool parse_failure = std::any_of(report.records.begin(), report.records.end(),
                                           [](const ReportRecord& r) { return r.n == 0 && !r.error.empty(); });
    return parse_failure ? exit_input : exit_ok;
}

int cmd_export(const CommonOptions& o, const InputOptions& in, const std::string& formulation, int vertex, int ell)
{
    if (o.out.empty())
        throw ContractError("export-milp needs --out <directory>");
    std::filesystem::create_directories(o.out);
    for (const auto& src : collect_sources(in)) {
        const Graph g = parse_graph(src.text, src.format, src.name);
        const auto ds = distinct_spectrum(g, o.tol_group);
        const auto prof = diagonal_profile(g, o.k);
        MilpModel model;
        if (formulation == "alpha_unified")
            model = build_alpha_model(ds, prof, o.k, Unified{});
        else if (formulation == "alpha_per_vertex")
            model = build_alpha_model(ds, prof, o.k, PerVertex{vertex});
        else if (formulation == "chi_unified")
            model = build_chi_model(ds, o.k, Unified{});
        else if (formulation == "chi_fixed_ell")
            model = build_chi_model(ds, o.k, FixedEll{ell});
        else
            throw ContractError("unknown formulation '" + formulation + "'");
        const auto path = std::filesystem::path(o.out) / lp_file_name(src.name, model);
        std::ofstream f(path);
        if (!f)
            throw LoadError("cannot write " + path.string());
        f << export_lp(model);
        std::cout << path.string() << "\n";
    }
    return exit_ok;
}

int cmd_oracle(const CommonOptions& o, const InputOptions& in, const std::string& quantity, int max_vertices,
               double max_seconds)
{
    if (quantity != "alpha" && quantity != "chi")
        throw ContractError("--quantity must be alpha or chi");
    const OracleBudget budget{max_vertices > 0 ? max_vertices : (quantity == "alpha" ? 30 : 20), max_seconds};
    nlohmann::json rows = nlohmann::json::array();
    std::string csv = "name,n,k,quantity,value,note\n";
    for (const auto& src : collect_sources(in)) {
        const Graph g = parse_graph(src.text, src.format, src.name);
        const auto r = quantity == "alpha" ? exact_alpha_k(g, o.k, budget) : exact_chi_k(g, o.k, budget);
        const std::string value = r.value ? std::to_string(*r.value) : "n/a";
        rows.push_back({{"name", src.name},
                        {"n", g.order()},
                        {"k", o.k},
                        {"quantity", quantity},
                        {"value", r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr)},
                        {"note", r.note}});
        csv += src.name + "," + std::to_string(g.order()) + "," + std::to_string(o.k) + "," + quantity + "," + value +
               "," + r.note + "\n";
    }
    if (o.format == "json")
        emit(rows.dump(2) + "\n", o.out);
    else
        emit(csv, o.out);
    return exit_ok;
}

int cmd_bench(const std::string& expected, const std::string& catalog, const std::string& out)
{
    const auto summary = bench(load_expected(expected), load_catalog(catalog));
    emit(format_bench(summary), out);
    return summary.passed() ? exit_ok : exit_mismatch;
}

int cmd_catalog(const CommonOptions& o, const InputOptions& in)
{
    nlohmann::json rows = nlohmann::json::array();
    std::string csv = "name,n,edges,distinct,regular,spectrum\n";
    for (const auto& src : collect_sources(in)) {
        const Graph g = parse_graph(src.text, src.format, src.name);
        const auto ds = distinct_spectrum(g, o.tol_group);
        std::ostringstream spectrum;
        for (int j = 0; j < ds.count(); ++j)
            spectrum << (j ? " " : "") << ds.thetas[j] << "^" << ds.mults[j];
        const bool regular = is_k_partially_walk_regular(g, 2);
        rows.push_back({{"name", src.name},
                        {"n", g.order()},
                        {"edges", g.edge_count()},
                        {"distinct", ds.count()},
                        {"regular", regular},
                        {"thetas", ds.thetas},
                        {"mults", ds.mults}});
        csv += "\"" + src.name + "\"," + std::to_string(g.order()) + "," + std::to_string(g.edge_count()) + "," +
               std::to_string(ds.count()) + "," + (regular ? "yes" : "no") + "," + spectrum.str() + "\n";
    }
    if (o.format == "json")
        emit(rows.dump(2) + "\n", o.out);
    else
        emit(csv, o.out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral inertia-type bounds on k-independence and distance-k chromatic numbers"};
    app.require_subcommand(1);

    CommonOptions common;
    InputOptions inputs;
    auto add_common = [&](CLI::App* cmd, bool with_bound) {
        cmd->add_option("--k", common.k, "Polynomial degree / distance k")->capture_default_str();
        if (with_bound) {
            cmd->add_option("--bound", common.bound, "alpha | chi_first | chi_second")->capture_default_str();
            cmd->add_option("--method", common.method, "auto | k1 | k2 | fixed_k | milp_reference")
                ->capture_default_str();
        }
        cmd->add_option("--format", common.format, "table | csv | json")->capture_default_str();
        cmd->add_option("--tol-group", common.tol_group, "Eigenvalue grouping tolerance (<= 0: default)");
        cmd->add_option("--tol-zero", common.tol_zero, "Relative zero tolerance for sign counts")
            ->capture_default_str();
        cmd->add_option("--out", common.out, "Output file (export-milp: directory)");
        add_input_options(cmd, inputs);
    };

    std::string export_dir;
    int threads = 0;
    auto* bound = app.add_subcommand("bound", "Compute an optimized bound for each input graph");
    add_common(bound, true);
    bound->add_option("--export-dir", export_dir, "Also write the unified MILP for each graph here");
    bound->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

    std::string formulation = "alpha_unified";
    int vertex = 0;
    int ell = 1;
    auto* exp = app.add_subcommand("export-milp", "Write MILP models in LP format");
    add_common(exp, false);
    exp->add_option("--formulation", formulation, "alpha_unified | alpha_per_vertex | chi_unified | chi_fixed_ell")
        ->capture_default_str();
    exp->add_option("--vertex", vertex, "Distinguished vertex for alpha_per_vertex");
    exp->add_option("--ell", ell, "Positive count for chi_fixed_ell");

    std::string quantity = "alpha";
    int max_vertices = 0;
    double max_seconds = 60;
    auto* oracle = app.add_subcommand("oracle", "Exact alpha_k or chi_k by exhaustive search");
    add_common(oracle, false);
    oracle->add_option("--quantity", quantity, "alpha | chi")->capture_default_str();
    oracle->add_option("--max-vertices", max_vertices, "Vertex budget (0: 30 for alpha, 20 for chi)");
    oracle->add_option("--max-seconds", max_seconds, "Time budget per graph")->capture_default_str();

    std::string expected = "data/expected.csv";
    std::string bench_catalog = "data/catalog";
    auto* bench_cmd = app.add_subcommand("bench", "Compare alpha bounds with the expected-results file");
    bench_cmd->add_option("--expected", expected, "Expected-results CSV")->capture_default_str();
    bench_cmd->add_option("--catalog", bench_catalog, "Catalog directory")->capture_default_str();
    bench_cmd->add_option("--out", common.out, "Output file");

    auto* catalog = app.add_subcommand("catalog", "List graphs with their distinct spectra");
    add_common(catalog, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*bound)
            return cmd_bound(common, inputs, export_dir, threads);
        if (*exp)
            return cmd_export(common, inputs, formulation, vertex, ell);
        if (*oracle)
            return cmd_oracle(common, inputs, quantity, max_vertices, max_seconds);
        if (*bench_cmd)
            return cmd_bench(expected, bench_catalog, common.out);
        if (*catalog) {
            if (inputs.catalog.empty() && inputs.files.empty() && inputs.graph6.empty())
                inputs.catalog = "data/catalog";
            return cmd_catalog(common, inputs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}
