#pragma once

#include "inertia/feasibility.hpp"
#include "inertia/graph.hpp"
#include "inertia/spectrum.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace inertia {

enum class VarKind { continuous, binary };

struct MilpVariable {
    std::string name;
    VarKind kind = VarKind::continuous;
    std::optional<double> lower;  // unset means unbounded
    std::optional<double> upper;
};

struct MilpTerm {
    int var = 0;
    double coeff = 0;
};

struct MilpRow {
    std::string name;
    std::vector<MilpTerm> terms;
    Relation rel = Relation::less_equal;
    double rhs = 0;
};

enum class Sense { minimize, maximize };

enum class Formulation { alpha_per_vertex, alpha_unified, chi_fixed_ell, chi_unified };

std::string to_string(Formulation f);

struct MilpModel {
    Formulation formulation = Formulation::alpha_unified;
    int k = 0;
    double epsilon = 0;
    std::optional<double> big_m;
    std::optional<int> vertex;  // per-vertex alpha model
    std::optional<int> ell;     // fixed-ell chi model

    std::vector<MilpVariable> variables;
    std::vector<MilpRow> rows;
    Sense sense = Sense::minimize;
    std::vector<MilpTerm> objective;
    double objective_constant = 0;

    int add_variable(MilpVariable v);
    /// Index of the variable called `name`, or -1.
    int find(const std::string& name) const;
    int count(VarKind kind) const;
    /// Formulation tag including its parameter, e.g. "alpha_per_vertex_u3".
    std::string tag() const;
};

struct MilpOptions {
    /// Constants of the big-M models. The M-free models use epsilon / big_m,
    /// which makes them an exact rescaling of the big-M ones.
    double epsilon = 1e-3;
    double big_m = 1e3;
};

struct PerVertex {
    int u = 0;
};
struct Unified {};
struct FixedEll {
    int ell = 1;
};

using AlphaVariant = std::variant<PerVertex, Unified>;
using ChiVariant = std::variant<FixedEll, Unified>;

/// Per-vertex model: equality closed-walk row at u, inequalities elsewhere,
/// big-M sign rows. Unified model: inequalities at every vertex, M-free sign
/// rows. Throws ContractError for an invalid vertex or k > prof.k.
MilpModel build_alpha_model(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k, const AlphaVariant& variant,
                            const MilpOptions& options = {});

/// Fixed-ell model with big-M indicator rows, or the unified model with
/// selectors y_1..y_{n-1} and the ratio variable t. Throws ContractError if
/// ell is outside [1, n-1].
MilpModel build_chi_model(const DistinctSpectrum& ds, int k, const ChiVariant& variant,
                          const MilpOptions& options = {});

struct MilpSolution {
    double objective = 0;
    std::vector<double> values;  // indexed like model.variables
};

struct SolveOptions {
    int max_binaries = 24;  // binaries outside one-hot selector groups
    FeasibilityOptions feasibility{};
};

/// Exact optimum by depth-first branch and bound over the binaries, checking
/// the continuous part with feasible(). One-hot groups (rows sum y = 1) are
/// branched as a single categorical choice and do not count toward the
/// binary limit. Supports free continuous variables in rows with binaries
/// and at most one bounded continuous variable that shares no row with them.
/// Throws CapabilityError beyond these limits.
std::optional<MilpSolution> solve_reference(const MilpModel& model, const SolveOptions& options = {});

/// CPLEX LP text. Identical models produce identical text.
std::string export_lp(const MilpModel& model);

/// "<graph>_<tag>_k<k>.lp" with the graph name reduced to [A-Za-z0-9_].
std::string lp_file_name(const std::string& graph_name, const MilpModel& model);

} // namespace inertia
