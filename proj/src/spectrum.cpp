#include "inertia/spectrum.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace inertia {

namespace {

// Householder reduction of the symmetric matrix held in V (n x n, row-major)
// to tridiagonal form. On exit d holds the diagonal, e[1..n-1] the
// subdiagonal, and V the accumulated orthogonal transformation.
void tridiagonalize(int n, std::vector<double>& V, std::vector<double>& d, std::vector<double>& e)
{
    auto at = [&](int i, int j) -> double& { return V[static_cast<std::size_t>(i) * n + j]; };

    for (int j = 0; j < n; ++j)
        d[j] = at(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (int k = 0; k < i; ++k)
            scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (int j = 0; j < i; ++j) {
                d[j] = at(i - 1, j);
                at(i, j) = 0.0;
                at(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0)
                g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (int j = 0; j < i; ++j)
                e[j] = 0.0;

            for (int j = 0; j < i; ++j) {
                f = d[j];
                at(j, i) = f;
                g = e[j] + at(j, j) * f;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += at(k, j) * d[k];
                    e[k] += at(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            double hh = f / (h + h);
            for (int j = 0; j < i; ++j)
                e[j] -= hh * d[j];
            for (int j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (int k = j; k <= i - 1; ++k)
                    at(k, j) -= (f * e[k] + g * d[k]);
                d[j] = at(i - 1, j);
                at(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for (int i = 0; i < n - 1; ++i) {
        at(n - 1, i) = at(i, i);
        at(i, i) = 1.0;
        double h = d[i + 1];
        if (h != 0.0) {
            for (int k = 0; k <= i; ++k)
                d[k] = at(k, i + 1) / h;
            for (int j = 0; j <= i; ++j) {
                double g = 0.0;
                for (int k = 0; k <= i; ++k)
                    g += at(k, i + 1) * at(k, j);
                for (int k = 0; k <= i; ++k)
                    at(k, j) -= g * d[k];
            }
        }
        for (int k = 0; k <= i; ++k)
            at(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
        d[j] = at(n - 1, j);
        at(n - 1, j) = 0.0;
    }
    at(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicitly shifted QL on the tridiagonal (d, e), updating V.
void tridiagonal_ql(int n, std::vector<double>& V, std::vector<double>& d, std::vector<double>& e)
{
    auto at = [&](int i, int j) -> double& { return V[static_cast<std::size_t>(i) * n + j]; };

    for (int i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1)
                break;
            ++m;
        }
        if (m == n)
            m = n - 1;

        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 60)
                    throw CapabilityError("symmetric_eigen: QL iteration did not converge");

                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0)
                    r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i)
                    d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for (int k = 0; k < n; ++k) {
                        h = at(k, i + 1);
                        at(k, i + 1) = s * at(k, i) + c * h;
                        at(k, i) = c * at(k, i) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

} // namespace

EigenDecomposition symmetric_eigen(const SymmetricMatrix& a)
{
    const int n = a.n;
    if (n < 1 || a.data.size() != static_cast<std::size_t>(n) * n)
        throw ContractError("symmetric_eigen: matrix shape mismatch");
    double norm = 0.0;
    for (double x : a.data)
        norm = std::max(norm, std::abs(x));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12 * std::max(1.0, norm))
                throw ContractError("symmetric_eigen: matrix is not symmetric");

    std::vector<double> V = a.data;
    std::vector<double> d(n), e(n);
    tridiagonalize(n, V, d, e);
    tridiagonal_ql(n, V, d, e);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });

    EigenDecomposition out;
    out.spectrum.values.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int c = 0; c < n; ++c) {
        out.spectrum.values[c] = d[order[c]];
        for (int r = 0; r < n; ++r)
            out.vectors[static_cast<std::size_t>(r) * n + c] = V[static_cast<std::size_t>(r) * n + order[c]];
    }
    return out;
}

Spectrum eigenvalues(const SymmetricMatrix& a)
{
    return symmetric_eigen(a).spectrum;
}

Spectrum eigenvalues(const Graph& g)
{
    return eigenvalues(SymmetricMatrix::adjacency(g));
}

int DistinctSpectrum::sign(int j) const
{
    const double t = thetas[j];
    if (std::abs(t) <= tolerance)
        return 0;
    return t > 0 ? 1 : -1;
}

double DistinctSpectrum::spectral_radius() const
{
    return std::max(std::abs(thetas.front()), std::abs(thetas.back()));
}

double default_group_tolerance(const Spectrum& s)
{
    double rho = 0.0;
    for (double x : s.values)
        rho = std::max(rho, std::abs(x));
    return 1e-8 * std::max(1.0, rho);
}

DistinctSpectrum group_distinct(const Spectrum& s, double tol)
{
    if (s.values.empty())
        throw ContractError("group_distinct: empty spectrum");
    if (tol <= 0)
        tol = default_group_tolerance(s);

    std::vector<double> values = s.values;
    std::sort(values.begin(), values.end(), std::greater<>());

    DistinctSpectrum out;
    out.tolerance = tol;
    // Mean taken relative to the group's first value so that a group of
    // identical values keeps that value exactly.
    double first = values[0];
    double offset = 0.0;
    int count = 1;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i < values.size() && values[i - 1] - values[i] <= tol) {
            offset += values[i] - first;
            ++count;
            continue;
        }
        out.thetas.push_back(first + offset / count);
        out.mults.push_back(count);
        if (i < values.size()) {
            first = values[i];
            offset = 0.0;
            count = 1;
        }
    }
    out.prefix.assign(out.mults.size() + 1, 0);
    for (std::size_t t = 0; t < out.mults.size(); ++t)
        out.prefix[t + 1] = out.prefix[t] + out.mults[t];
    return out;
}

DistinctSpectrum distinct_spectrum(const Graph& g, double tol)
{
    return group_distinct(eigenvalues(g), tol);
}

Spectrum expand(const DistinctSpectrum& ds)
{
    Spectrum s;
    for (int j = 0; j < ds.count(); ++j)
        s.values.insert(s.values.end(), ds.mults[j], ds.thetas[j]);
    return s;
}

double power_sum(const DistinctSpectrum& ds, int power)
{
    double total = 0.0;
    for (int j = 0; j < ds.count(); ++j)
        total += ds.mults[j] * std::pow(ds.thetas[j], power);
    return total;
}

} // namespace inertia
