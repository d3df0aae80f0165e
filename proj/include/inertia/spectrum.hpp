#pragma once

#include "inertia/graph.hpp"

#include <vector>

namespace inertia {

/// Dense symmetric matrix, row-major.
struct SymmetricMatrix {
    int n = 0;
    std::vector<double> data;

    SymmetricMatrix() = default;
    SymmetricMatrix(int size, std::vector<double> values) : n(size), data(std::move(values)) {}
    static SymmetricMatrix adjacency(const Graph& g) { return {g.order(), g.adjacency_matrix()}; }

    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

/// All eigenvalues, sorted descending (lambda_1 >= ... >= lambda_n).
struct Spectrum {
    std::vector<double> values;

    int size() const noexcept { return static_cast<int>(values.size()); }
};

/// Eigenvalues plus orthonormal eigenvectors (column i of `vectors` belongs
/// to values[i]); used for residual checks.
struct EigenDecomposition {
    Spectrum spectrum;
    std::vector<double> vectors;  // n x n, row-major
};

/// Householder tridiagonalization followed by implicitly shifted QL.
/// Throws ContractError if the input is not symmetric.
EigenDecomposition symmetric_eigen(const SymmetricMatrix& a);
Spectrum eigenvalues(const SymmetricMatrix& a);
Spectrum eigenvalues(const Graph& g);

/// Distinct eigenvalues theta_0 > ... > theta_d with multiplicities and the
/// prefix sums S_0 = 0, S_t = m_0 + ... + m_{t-1}.
struct DistinctSpectrum {
    std::vector<double> thetas;
    std::vector<int> mults;
    std::vector<int> prefix;  // size d + 2
    double tolerance = 0;     // grouping tolerance used; also the zero threshold for sign()

    int d() const noexcept { return static_cast<int>(thetas.size()) - 1; }
    int count() const noexcept { return static_cast<int>(thetas.size()); }
    int order() const noexcept { return prefix.back(); }
    /// Total multiplicity of theta_first .. theta_{last-1}.
    int weight(int first, int last) const { return prefix[last] - prefix[first]; }
    /// -1, 0 or +1 with |theta| <= tolerance treated as zero.
    int sign(int j) const;
    double spectral_radius() const;
};

/// Default grouping tolerance 1e-8 * max(1, spectral radius).
double default_group_tolerance(const Spectrum& s);

/// Merge runs of consecutive eigenvalues closer than `tol`; each group is
/// represented by its mean. `tol <= 0` selects the default.
DistinctSpectrum group_distinct(const Spectrum& s, double tol = 0);
DistinctSpectrum distinct_spectrum(const Graph& g, double tol = 0);

/// Expand back to a full (multiplicity-repeated) spectrum.
Spectrum expand(const DistinctSpectrum& ds);

/// sum_j m_j theta_j^power.
double power_sum(const DistinctSpectrum& ds, int power);

} // namespace inertia
