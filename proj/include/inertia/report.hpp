#pragma once

#include "inertia/chi_bound.hpp"
#include "inertia/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace inertia {

enum class BoundKind { alpha, chi_first, chi_second };
enum class Method { automatic, k1, k2, fixed_k, milp_reference };
enum class OutputFormat { table, csv, json };

std::string to_string(BoundKind b);
std::string to_string(Method m);
std::string to_string(OutputFormat f);
/// Inverse of to_string; throws ContractError on unknown names.
BoundKind parse_bound_kind(const std::string& s);
Method parse_method(const std::string& s);
OutputFormat parse_output_format(const std::string& s);

struct Tolerances {
    double group = 0;  // eigenvalue grouping; <= 0 selects the default
    double zero = default_zero_tolerance;
    double slack = 1e-9;  // feasibility slack
};

struct RunConfig {
    int k = 2;
    BoundKind bound = BoundKind::alpha;
    Method method = Method::automatic;
    Tolerances tolerances{};
    OutputFormat output = OutputFormat::table;
    std::optional<std::filesystem::path> export_dir;
    int threads = 0;  // 0: hardware concurrency

    /// Throws ContractError for k outside [1, 5] or a method that does not
    /// fit k (k1 needs k = 1, k2 needs k = 2).
    void validate() const;
};

struct GraphSource {
    std::string name;
    std::string text;
    GraphFormat format = GraphFormat::graph6;
};

struct ReportRecord {
    std::string name;
    int n = 0;
    int distinct = 0;  // d + 1
    int k = 0;
    std::string bound;
    std::string method;
    std::optional<Rational> value;
    std::optional<int> n_plus;
    std::optional<int> n_minus;
    bool applicable = true;
    std::vector<double> witness;
    double ms = 0;
    std::string error;

    /// "2", "5/2", or "n/a" when there is no value.
    std::string value_text() const;
};

struct Report {
    RunConfig config;
    std::vector<ReportRecord> records;
};

/// Computes one record per input, concurrently; records keep input order.
/// Parse failures, inapplicable and undefined bounds are recorded per graph.
/// When export_dir is set, the unified MILP for each graph is written there.
Report run(const RunConfig& config, const std::vector<GraphSource>& inputs);
Report run(const RunConfig& config, const std::vector<NamedGraph>& graphs);

nlohmann::json to_json(const Report& report);
std::string format_json(const Report& report);
/// CSV with header name,n,k,bound,value,n_plus,n_minus,method,ms.
std::string format_csv(const Report& report);
std::string format_table(const Report& report);
std::string format_report(const Report& report);

/// One row of the expected-results file used by bench().
struct ExpectedRecord {
    std::string name;
    int k = 0;
    std::optional<int> alpha_exact;
    std::optional<int> alpha_bound;
    bool chi_applicable = true;
    std::string source;
};

/// CSV with header name,k,alpha_exact,alpha_bound,chi_applicable,source.
/// Empty fields are absent values. Throws LoadError on malformed lines.
std::vector<ExpectedRecord> load_expected(const std::filesystem::path& file);

struct BenchRow {
    ExpectedRecord expected;
    std::optional<int> computed;
    bool computed_applicable = true;
    bool ok = false;
    std::string detail;
    double ms = 0;
};

struct BenchSummary {
    std::vector<BenchRow> rows;
    int mismatches = 0;

    bool passed() const noexcept { return mismatches == 0; }
};

/// Recomputes the alpha bound (automatic method) for every expected row and
/// compares it exactly; also checks the bound against alpha_exact and the
/// chi applicability flag. Throws LoadError if a name is not in `catalog`.
BenchSummary bench(const std::vector<ExpectedRecord>& expected, const std::vector<NamedGraph>& catalog);

std::string format_bench(const BenchSummary& summary);

} // namespace inertia
