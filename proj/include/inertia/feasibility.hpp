#pragma once

#include <optional>
#include <string>
#include <vector>

namespace inertia {

enum class Relation { greater_equal, less_equal, equal };

/// Where a row came from; carried for diagnostics and tests only.
enum class RowTag { eigenvalue_sign, diagonal, trace, margin };

struct LinearRow {
    std::vector<double> coeffs;
    Relation rel = Relation::greater_equal;
    double rhs = 0.0;
    RowTag tag = RowTag::margin;
};

/// Linear system over the coefficient vector (a_0, ..., a_k). Strict
/// inequalities are never represented; margins go in `rhs`.
class LinearConstraintSystem {
public:
    explicit LinearConstraintSystem(int dim);

    int dim() const noexcept { return dim_; }
    const std::vector<LinearRow>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    /// Throws ContractError if `coeffs.size() != dim()`.
    LinearConstraintSystem& add(std::vector<double> coeffs, Relation rel, double rhs, RowTag tag = RowTag::margin);
    LinearConstraintSystem& add(LinearRow row);
    void append(const LinearConstraintSystem& other);

    /// True if x satisfies every row within the slack (scaled by the row's
    /// magnitude at x, floored at 1).
    bool satisfied_by(const std::vector<double>& x, double slack = 1e-9) const;

private:
    int dim_;
    std::vector<LinearRow> rows_;
};

struct FeasibilityOptions {
    double slack = 1e-9;
    int max_dim = 6;
};

/// Find a point satisfying every row, or nullopt if none exists.
///
/// Candidate points are the intersections of `dim` linearly independent row
/// boundaries (all equalities plus a subset of inequality boundaries and
/// coordinate hyperplanes x_i = 0). If the system is feasible, some point of
/// it is such an intersection: restrict to the orthant of any feasible point,
/// which makes the region pointed, and take a vertex. Each candidate is
/// verified against every row.
///
/// Throws CapabilityError when dim > options.max_dim.
std::optional<std::vector<double>> feasible(const LinearConstraintSystem& sys, const FeasibilityOptions& options = {});

std::string to_string(Relation rel);

} // namespace inertia
