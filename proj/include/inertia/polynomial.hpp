#pragma once

#include "inertia/graph.hpp"
#include "inertia/spectrum.hpp"

#include <string>
#include <vector>

namespace inertia {

/// p(x) = a_0 + a_1 x + ... + a_k x^k.
struct Polynomial {
    std::vector<double> coeffs;  // a_0 .. a_k

    Polynomial() = default;
    explicit Polynomial(std::vector<double> a) : coeffs(std::move(a)) {}
    static Polynomial constant(double c, int k);

    int degree_cap() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;
    bool is_zero() const;

    Polynomial operator-() const;
    Polynomial scaled(double c) const;
    /// p - c
    Polynomial shifted_down(double c) const;
    /// Pad with zero coefficients up to degree cap k.
    Polynomial padded(int k) const;

    /// (p(A))_vv from exact closed-walk counts.
    double diagonal_at(const DiagonalProfile& prof, int v) const;

    std::string to_string() const;
};

/// Values of a polynomial on the spectrum and on the diagonal of p(A).
struct PolynomialProfile {
    std::vector<double> values_on_spectrum;  // p(theta_j)
    std::vector<double> diag_values;         // (p(A))_vv
    double W = 0;             // max diagonal
    double w = 0;             // min diagonal
    double Lambda = 0;        // max_{i in [2,n]} p(lambda_i)
    double lambda_small = 0;  // min_{i in [2,n]} p(lambda_i)
};

/// Throws ContractError if p's degree cap exceeds prof.k.
PolynomialProfile polynomial_profile(const Polynomial& p, const DistinctSpectrum& ds, const DiagonalProfile& prof);

} // namespace inertia
