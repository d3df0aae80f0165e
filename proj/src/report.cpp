#include "inertia/report.hpp"

#include "inertia/errors.hpp"
#include "inertia/milp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace inertia {

using nlohmann::json;

std::string to_string(BoundKind b)
{
    switch (b) {
    case BoundKind::alpha:
        return "alpha";
    case BoundKind::chi_first:
        return "chi_first";
    case BoundKind::chi_second:
        return "chi_second";
    }
    return "?";
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::automatic:
        return "auto";
    case Method::k1:
        return "k1";
    case Method::k2:
        return "k2";
    case Method::fixed_k:
        return "fixed_k";
    case Method::milp_reference:
        return "milp_reference";
    }
    return "?";
}

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::table:
        return "table";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::json:
        return "json";
    }
    return "?";
}

BoundKind parse_bound_kind(const std::string& s)
{
    for (auto b : {BoundKind::alpha, BoundKind::chi_first, BoundKind::chi_second})
        if (to_string(b) == s)
            return b;
    throw ContractError("unknown bound '" + s + "' (expected alpha, chi_first or chi_second)");
}

Method parse_method(const std::string& s)
{
    for (auto m : {Method::automatic, Method::k1, Method::k2, Method::fixed_k, Method::milp_reference})
        if (to_string(m) == s)
            return m;
    throw ContractError("unknown method '" + s + "' (expected auto, k1, k2, fixed_k or milp_reference)");
}

OutputFormat parse_output_format(const std::string& s)
{
    for (auto f : {OutputFormat::table, OutputFormat::csv, OutputFormat::json})
        if (to_string(f) == s)
            return f;
    throw ContractError("unknown format '" + s + "' (expected table, csv or json)");
}

void RunConfig::validate() const
{
    if (k < 1 || k > 5)
        throw ContractError("k must be in [1, 5], got " + std::to_string(k));
    if (method == Method::k1 && k != 1)
        throw ContractError("method k1 requires k = 1");
    if (method == Method::k2 && k != 2)
        throw ContractError("method k2 requires k = 2");
    if (tolerances.zero < 0 || tolerances.slack < 0)
        throw ContractError("tolerances must be nonnegative");
}

std::string ReportRecord::value_text() const
{
    return value ? to_string(*value) : "n/a";
}

// ---------------------------------------------------------------- computation

namespace {

Method resolve(Method m, int k)
{
    if (m != Method::automatic)
        return m;
    if (k == 1)
        return Method::k1;
    if (k == 2)
        return Method::k2;
    return Method::fixed_k;
}

AlphaBoundResult alpha_bound(const RunConfig& cfg, Method method, const DistinctSpectrum& ds,
                             const DiagonalProfile& prof)
{
    const FixedKOptions fixed{true, {cfg.tolerances.slack, 6}};
    switch (method) {
    case Method::k1:
        return optimize_k1(ds);
    case Method::k2:
        return optimize_k2(ds, prof);
    case Method::milp_reference: {
        const auto model = build_alpha_model(ds, prof, cfg.k, Unified{});
        const auto sol = solve_reference(model, {24, fixed.feasibility});
        if (!sol)
            throw UndefinedBoundError("alpha MILP is infeasible");
        std::vector<double> a(sol->values.begin(), sol->values.begin() + cfg.k + 1);
        return {static_cast<int>(std::lround(sol->objective)), Polynomial(a), {}, AlphaMethod::milp_reference};
    }
    default:
        return optimize_fixed_k(ds, prof, cfg.k, fixed);
    }
}

ChiBoundResult chi_second_bound(const RunConfig& cfg, Method method, const Graph& g, const DistinctSpectrum& ds,
                                const DiagonalProfile& prof)
{
    if (!is_k_partially_walk_regular(prof, cfg.k))
        throw InapplicableError("graph is not " + std::to_string(cfg.k) + "-partially walk-regular");
    const FeasibilityOptions feas{cfg.tolerances.slack, 6};
    switch (method) {
    case Method::k1:
        return optimize_second_k1(ds);
    case Method::k2:
        return optimize_second_k2(ds, static_cast<std::int64_t>(g.edge_count()), g.order());
    case Method::milp_reference: {
        const auto model = build_chi_model(ds, cfg.k, Unified{});
        const auto sol = solve_reference(model, {24, feas});
        if (!sol)
            throw UndefinedBoundError("chi MILP is infeasible");
        // Sign counts are read off the witness rather than the indicator
        // binaries, which only bound them.
        auto r = evaluate_second_bound(Polynomial(std::vector<double>(sol->values.begin(),
                                                                      sol->values.begin() + cfg.k + 1)),
                                       ds, cfg.tolerances.zero);
        r.method = ChiMethod::milp_reference;
        return r;
    }
    default:
        return optimize_second_fixed_k(ds, prof, cfg.k, feas);
    }
}

void export_model(const RunConfig& cfg, const std::string& name, const DistinctSpectrum& ds,
                  const DiagonalProfile& prof)
{
    const MilpModel model = cfg.bound == BoundKind::chi_second ? build_chi_model(ds, cfg.k, Unified{})
                                                               : build_alpha_model(ds, prof, cfg.k, Unified{});
    std::filesystem::create_directories(*cfg.export_dir);
    const auto path = *cfg.export_dir / lp_file_name(name, model);
    std::ofstream out(path);
    if (!out)
        throw LoadError("cannot write " + path.string());
    out << export_lp(model);
}

ReportRecord compute(const RunConfig& cfg, const GraphSource& src)
{
    ReportRecord rec;
    rec.name = src.name;
    rec.k = cfg.k;
    rec.bound = to_string(cfg.bound);
    const Method method = resolve(cfg.method, cfg.k);
    rec.method = to_string(method);
    const auto start = std::chrono::steady_clock::now();
    try {
        const Graph g = parse_graph(src.text, src.format).renamed(src.name);
        rec.n = g.order();
        const auto ds = distinct_spectrum(g, cfg.tolerances.group);
        rec.distinct = ds.count();
        const auto prof = diagonal_profile(g, cfg.k);
        if (cfg.export_dir)
            export_model(cfg, src.name, ds, prof);

        if (cfg.bound == BoundKind::chi_second) {
            const auto r = chi_second_bound(cfg, method, g, ds, prof);
            rec.value = r.value();
            rec.n_plus = r.n_plus;
            rec.n_minus = r.n_minus;
            rec.witness = r.witness.coeffs;
            rec.method = to_string(r.method);
        } else {
            const auto r = alpha_bound(cfg, method, ds, prof);
            rec.value = cfg.bound == BoundKind::alpha ? Rational(r.value) : first_bound(r, g.order());
            rec.witness = r.witness.coeffs;
            rec.method = to_string(r.method);
        }
    } catch (const InapplicableError& e) {
        rec.applicable = false;
        rec.error = e.what();
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

} // namespace

Report run(const RunConfig& config, const std::vector<GraphSource>& inputs)
{
    config.validate();
    Report report{config, std::vector<ReportRecord>(inputs.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++)
            report.records[i] = compute(config, inputs[i]);
    };
    unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, inputs.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    return report;
}

Report run(const RunConfig& config, const std::vector<NamedGraph>& graphs)
{
    std::vector<GraphSource> inputs;
    for (const auto& ng : graphs)
        inputs.push_back({ng.name, to_graph6(ng.graph), GraphFormat::graph6});
    return run(config, inputs);
}

// ---------------------------------------------------------------- output

json to_json(const Report& report)
{
    const auto& c = report.config;
    json cfg = {{"k", c.k},
                {"bound", to_string(c.bound)},
                {"method", to_string(c.method)},
                {"tolerances", {{"group", c.tolerances.group}, {"zero", c.tolerances.zero}, {"slack", c.tolerances.slack}}}};
    json records = json::array();
    for (const auto& r : report.records) {
        json j = {{"name", r.name},
                  {"n", r.n},
                  {"distinct", r.distinct},
                  {"k", r.k},
                  {"bound", r.bound},
                  {"method", r.method},
                  {"value", r.value ? json(r.value_text()) : json(nullptr)},
                  {"applicable", r.applicable},
                  {"witness", r.witness},
                  {"ms", r.ms}};
        if (r.bound == to_string(BoundKind::chi_second)) {
            j["n_plus"] = r.n_plus ? json(*r.n_plus) : json(nullptr);
            j["n_minus"] = r.n_minus ? json(*r.n_minus) : json(nullptr);
        }
        if (!r.error.empty())
            j["error"] = r.error;
        records.push_back(std::move(j));
    }
    return {{"config", cfg}, {"records", records}};
}

std::string format_json(const Report& report)
{
    return to_json(report).dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string fixed3(double x)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << x;
    return os.str();
}

std::string optional_int(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "";
}

} // namespace

std::string format_csv(const Report& report)
{
    std::string out = "name,n,k,bound,value,n_plus,n_minus,method,ms\n";
    for (const auto& r : report.records) {
        out += csv_field(r.name) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.bound + "," +
               r.value_text() + "," + optional_int(r.n_plus) + "," + optional_int(r.n_minus) + "," + r.method + "," +
               fixed3(r.ms) + "\n";
    }
    return out;
}

std::string format_table(const Report& report)
{
    std::vector<std::vector<std::string>> cells{{"name", "n", "d+1", "k", "bound", "value", "n+", "n-", "method", "ms", "note"}};
    for (const auto& r : report.records)
        cells.push_back({r.name, std::to_string(r.n), std::to_string(r.distinct), std::to_string(r.k), r.bound,
                         r.value_text(), optional_int(r.n_plus), optional_int(r.n_minus), r.method, fixed3(r.ms),
                         r.error});
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string format_report(const Report& report)
{
    switch (report.config.output) {
    case OutputFormat::csv:
        return format_csv(report);
    case OutputFormat::json:
        return format_json(report);
    case OutputFormat::table:
        break;
    }
    return format_table(report);
}

// ---------------------------------------------------------------- bench

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field += ch;
        }
    }
    out.push_back(field);
    return out;
}

std::optional<int> parse_optional_int(const std::string& s, const std::string& where)
{
    if (s.empty())
        return std::nullopt;
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw LoadError(where + ": expected an integer, got '" + s + "'");
    }
}

bool parse_flag(const std::string& s, const std::string& where)
{
    if (s == "1" || s == "true" || s == "yes")
        return true;
    if (s == "0" || s == "false" || s == "no")
        return false;
    throw LoadError(where + ": expected a boolean, got '" + s + "'");
}

} // namespace

std::vector<ExpectedRecord> load_expected(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw LoadError("cannot open expected-results file " + file.string());
    std::string line;
    int line_no = 0;
    std::vector<ExpectedRecord> out;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const auto f = split_csv_line(line);
        const std::string where = file.filename().string() + ":" + std::to_string(line_no);
        if (header) {
            if (f != std::vector<std::string>{"name", "k", "alpha_exact", "alpha_bound", "chi_applicable", "source"})
                throw LoadError(where + ": unexpected header");
            header = false;
            continue;
        }
        if (f.size() != 6)
            throw LoadError(where + ": expected 6 fields, got " + std::to_string(f.size()));
        ExpectedRecord r;
        r.name = f[0];
        const auto k = parse_optional_int(f[1], where);
        if (!k || *k < 1 || *k > 5)
            throw LoadError(where + ": k must be in [1, 5]");
        r.k = *k;
        r.alpha_exact = parse_optional_int(f[2], where);
        r.alpha_bound = parse_optional_int(f[3], where);
        r.chi_applicable = parse_flag(f[4], where);
        r.source = f[5];
        out.push_back(std::move(r));
    }
    return out;
}

BenchSummary bench(const std::vector<ExpectedRecord>& expected, const std::vector<NamedGraph>& catalog)
{
    std::vector<std::string> missing;
    for (const auto& e : expected) {
        const bool found = std::any_of(catalog.begin(), catalog.end(), [&](const NamedGraph& g) { return g.name == e.name; });
        if (!found && std::find(missing.begin(), missing.end(), e.name) == missing.end())
            missing.push_back(e.name);
    }
    if (!missing.empty()) {
        std::string msg = "unresolved graph names:";
        for (const auto& m : missing)
            msg += " '" + m + "'";
        throw LoadError(msg);
    }

    BenchSummary summary;
    for (const auto& e : expected) {
        const auto& g = std::find_if(catalog.begin(), catalog.end(), [&](const NamedGraph& c) { return c.name == e.name; })->graph;
        BenchRow row;
        row.expected = e;
        const auto start = std::chrono::steady_clock::now();
        const auto ds = distinct_spectrum(g);
        const auto prof = diagonal_profile(g, e.k);
        RunConfig cfg;
        cfg.k = e.k;
        row.computed = alpha_bound(cfg, resolve(Method::automatic, e.k), ds, prof).value;
        row.computed_applicable = is_k_partially_walk_regular(prof, e.k);
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        std::vector<std::string> problems;
        if (e.alpha_bound && *e.alpha_bound != *row.computed)
            problems.push_back("bound " + std::to_string(*row.computed) + " != expected " + std::to_string(*e.alpha_bound));
        if (e.alpha_exact && *row.computed < *e.alpha_exact)
            problems.push_back("bound below alpha_k = " + std::to_string(*e.alpha_exact));
        if (e.chi_applicable != row.computed_applicable)
            problems.push_back(std::string("chi applicability ") + (row.computed_applicable ? "yes" : "no") +
                               " != expected " + (e.chi_applicable ? "yes" : "no"));
        row.ok = problems.empty();
        for (std::size_t i = 0; i < problems.size(); ++i)
            row.detail += (i ? "; " : "") + problems[i];
        if (!row.ok)
            ++summary.mismatches;
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

std::string format_bench(const BenchSummary& summary)
{
    std::ostringstream os;
    os << std::left << std::setw(26) << "graph" << std::setw(3) << "k" << std::setw(10) << "expected" << std::setw(10)
       << "computed" << std::setw(6) << "chi" << std::setw(10) << "ms" << "status\n";
    for (const auto& r : summary.rows) {
        os << std::setw(26) << r.expected.name << std::setw(3) << r.expected.k << std::setw(10)
           << (r.expected.alpha_bound ? std::to_string(*r.expected.alpha_bound) : "-") << std::setw(10)
           << (r.computed ? std::to_string(*r.computed) : "-") << std::setw(6)
           << (r.computed_applicable ? "yes" : "n/a") << std::setw(10) << fixed3(r.ms)
           << (r.ok ? "ok" : "MISMATCH: " + r.detail) << "\n";
    }
    os << summary.rows.size() - summary.mismatches << "/" << summary.rows.size() << " rows match\n";
    return os.str();
}

} // namespace inertia
