#include "inertia/polynomial.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace inertia {

Polynomial Polynomial::constant(double c, int k)
{
    std::vector<double> a(k + 1, 0.0);
    a[0] = c;
    return Polynomial(std::move(a));
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

bool Polynomial::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](double a) { return a == 0.0; });
}

Polynomial Polynomial::operator-() const
{
    return scaled(-1.0);
}

Polynomial Polynomial::scaled(double c) const
{
    Polynomial p = *this;
    for (double& a : p.coeffs)
        a *= c;
    return p;
}

Polynomial Polynomial::shifted_down(double c) const
{
    Polynomial p = *this;
    if (p.coeffs.empty())
        p.coeffs.push_back(0.0);
    p.coeffs[0] -= c;
    return p;
}

Polynomial Polynomial::padded(int k) const
{
    Polynomial p = *this;
    if (static_cast<int>(p.coeffs.size()) < k + 1)
        p.coeffs.resize(k + 1, 0.0);
    return p;
}

double Polynomial::diagonal_at(const DiagonalProfile& prof, int v) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += coeffs[i] * static_cast<double>(prof.diag[v][i]);
    return s;
}

std::string Polynomial::to_string() const
{
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0)
            continue;
        std::snprintf(buf, sizeof buf, "%s%.6g", out.empty() ? "" : (coeffs[i] < 0 ? " - " : " + "),
                      out.empty() ? coeffs[i] : std::abs(coeffs[i]));
        out += buf;
        if (i == 1)
            out += "x";
        else if (i > 1)
            out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

PolynomialProfile polynomial_profile(const Polynomial& p, const DistinctSpectrum& ds, const DiagonalProfile& prof)
{
    if (p.degree_cap() > prof.k)
        throw ContractError("polynomial degree cap " + std::to_string(p.degree_cap()) +
                            " exceeds diagonal profile k=" + std::to_string(prof.k));
    PolynomialProfile out;
    out.values_on_spectrum.reserve(ds.count());
    for (double t : ds.thetas)
        out.values_on_spectrum.push_back(p(t));
    out.diag_values.reserve(prof.order());
    for (int v = 0; v < prof.order(); ++v)
        out.diag_values.push_back(p.diagonal_at(prof, v));
    out.W = *std::max_element(out.diag_values.begin(), out.diag_values.end());
    out.w = *std::min_element(out.diag_values.begin(), out.diag_values.end());

    // [2, n] drops one copy of lambda_1 = theta_0.
    out.Lambda = -std::numeric_limits<double>::infinity();
    out.lambda_small = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ds.count(); ++j) {
        if (j == 0 && ds.mults[0] == 1)
            continue;
        out.Lambda = std::max(out.Lambda, out.values_on_spectrum[j]);
        out.lambda_small = std::min(out.lambda_small, out.values_on_spectrum[j]);
    }
    return out;
}

} // namespace inertia
