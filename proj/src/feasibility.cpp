#include "inertia/feasibility.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace inertia {

LinearConstraintSystem::LinearConstraintSystem(int dim) : dim_(dim)
{
    if (dim < 1)
        throw ContractError("LinearConstraintSystem: dimension must be positive");
}

LinearConstraintSystem& LinearConstraintSystem::add(std::vector<double> coeffs, Relation rel, double rhs, RowTag tag)
{
    return add(LinearRow{std::move(coeffs), rel, rhs, tag});
}

LinearConstraintSystem& LinearConstraintSystem::add(LinearRow row)
{
    if (static_cast<int>(row.coeffs.size()) != dim_)
        throw ContractError("LinearConstraintSystem: row length " + std::to_string(row.coeffs.size()) +
                            " does not match dimension " + std::to_string(dim_));
    rows_.push_back(std::move(row));
    return *this;
}

void LinearConstraintSystem::append(const LinearConstraintSystem& other)
{
    for (const auto& r : other.rows_)
        add(r);
}

namespace {

bool row_holds(const LinearRow& row, const std::vector<double>& x, double slack)
{
    double lhs = 0.0;
    double magnitude = std::abs(row.rhs);
    for (std::size_t i = 0; i < x.size(); ++i) {
        lhs += row.coeffs[i] * x[i];
        magnitude += std::abs(row.coeffs[i] * x[i]);
    }
    const double tol = slack * std::max(1.0, magnitude);
    switch (row.rel) {
    case Relation::greater_equal:
        return lhs >= row.rhs - tol;
    case Relation::less_equal:
        return lhs <= row.rhs + tol;
    case Relation::equal:
        return std::abs(lhs - row.rhs) <= tol;
    }
    return false;
}

constexpr int kMaxDim = 8;
using Vec = std::array<double, kMaxDim + 1>;  // coefficients followed by rhs

// Solve the square system held in `m` (dim rows of [coeffs | rhs]) by
// Gaussian elimination with partial pivoting. Returns false if singular.
bool solve_square(int dim, std::array<Vec, kMaxDim>& m, std::vector<double>& x)
{
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col]))
                piv = r;
        if (std::abs(m[piv][col]) < 1e-10)
            return false;
        std::swap(m[piv], m[col]);
        for (int r = col + 1; r < dim; ++r) {
            double f = m[r][col] / m[col][col];
            if (f == 0.0)
                continue;
            for (int c = col; c <= dim; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    x.assign(dim, 0.0);
    for (int r = dim - 1; r >= 0; --r) {
        double s = m[r][dim];
        for (int c = r + 1; c < dim; ++c)
            s -= m[r][c] * x[c];
        x[r] = s / m[r][r];
    }
    return true;
}

struct Hyperplane {
    Vec v{};  // normalized coefficients, rhs at index dim
};

bool same_hyperplane(const Hyperplane& a, const Hyperplane& b, int dim)
{
    for (int i = 0; i <= dim; ++i)
        if (std::abs(a.v[i] - b.v[i]) > 1e-12)
            return false;
    return true;
}

} // namespace

bool LinearConstraintSystem::satisfied_by(const std::vector<double>& x, double slack) const
{
    if (static_cast<int>(x.size()) != dim_)
        return false;
    return std::all_of(rows_.begin(), rows_.end(), [&](const LinearRow& r) { return row_holds(r, x, slack); });
}

std::optional<std::vector<double>> feasible(const LinearConstraintSystem& sys, const FeasibilityOptions& options)
{
    const int dim = sys.dim();
    if (dim > options.max_dim || dim > kMaxDim)
        throw CapabilityError("feasible: dimension " + std::to_string(dim) + " exceeds the supported maximum of " +
                              std::to_string(std::min(options.max_dim, kMaxDim)) +
                              "; use an external LP solver for this system");

    std::vector<Hyperplane> equalities;
    std::vector<Hyperplane> boundaries;
    for (const auto& row : sys.rows()) {
        double scale = 0.0;
        for (double c : row.coeffs)
            scale = std::max(scale, std::abs(c));
        if (scale == 0.0) {
            // Constant row 0 (rel) rhs.
            if (!row_holds(row, std::vector<double>(dim, 0.0), options.slack))
                return std::nullopt;
            continue;
        }
        Hyperplane h;
        for (int i = 0; i < dim; ++i)
            h.v[i] = row.coeffs[i] / scale;
        h.v[dim] = row.rhs / scale;
        auto& bucket = row.rel == Relation::equal ? equalities : boundaries;
        bool dup = std::any_of(bucket.begin(), bucket.end(),
                               [&](const Hyperplane& o) { return same_hyperplane(o, h, dim); });
        if (!dup)
            bucket.push_back(h);
    }

    // Independent subset of the equalities (incremental Gram-Schmidt on the
    // coefficient parts).
    std::vector<Hyperplane> eq_basis;
    std::vector<Vec> ortho;
    for (const auto& h : equalities) {
        Vec r = h.v;
        for (const auto& q : ortho) {
            double dot = 0.0;
            for (int i = 0; i < dim; ++i)
                dot += r[i] * q[i];
            for (int i = 0; i < dim; ++i)
                r[i] -= dot * q[i];
        }
        double norm = 0.0;
        for (int i = 0; i < dim; ++i)
            norm += r[i] * r[i];
        norm = std::sqrt(norm);
        if (norm < 1e-9)
            continue;
        for (int i = 0; i < dim; ++i)
            r[i] /= norm;
        ortho.push_back(r);
        eq_basis.push_back(h);
    }

    for (int i = 0; i < dim; ++i) {
        Hyperplane h;
        h.v[i] = 1.0;
        boundaries.push_back(h);
    }

    const int fixed = static_cast<int>(eq_basis.size());
    const int pick = dim - fixed;
    const int pool = static_cast<int>(boundaries.size());
    std::vector<double> x;
    std::array<Vec, kMaxDim> m{};

    auto try_candidate = [&](const std::vector<int>& chosen) -> bool {
        for (int r = 0; r < fixed; ++r)
            m[r] = eq_basis[r].v;
        for (int r = 0; r < pick; ++r)
            m[fixed + r] = boundaries[chosen[r]].v;
        if (!solve_square(dim, m, x))
            return false;
        return sys.satisfied_by(x, options.slack);
    };

    std::vector<int> chosen(pick);
    for (int i = 0; i < pick; ++i)
        chosen[i] = i;
    if (pick > pool)
        return std::nullopt;
    while (true) {
        if (try_candidate(chosen))
            return x;
        int i = pick - 1;
        while (i >= 0 && chosen[i] == pool - pick + i)
            --i;
        if (i < 0)
            break;
        ++chosen[i];
        for (int j = i + 1; j < pick; ++j)
            chosen[j] = chosen[j - 1] + 1;
    }
    return std::nullopt;
}

std::string to_string(Relation rel)
{
    switch (rel) {
    case Relation::greater_equal:
        return ">=";
    case Relation::less_equal:
        return "<=";
    case Relation::equal:
        return "=";
    }
    return "?";
}

} // namespace inertia
