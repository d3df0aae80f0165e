#include "inertia/errors.hpp"
#include "inertia/spectrum.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace inertia;
using namespace testing;

namespace {

void check_values(const Spectrum& s, const std::vector<double>& expected)
{
    REQUIRE(s.size() == static_cast<int>(expected.size()));
    for (int i = 0; i < s.size(); ++i)
        CHECK(s.values[i] == doctest::Approx(expected[i]).epsilon(1e-10));
}

} // namespace

TEST_SUITE("spectra")
{
    TEST_CASE("eigenvalues of small graphs")
    {
        check_values(eigenvalues(complete(3)), {2, -1, -1});
        check_values(eigenvalues(cycle(4)), {2, 0, 0, -2});
        check_values(eigenvalues(petersen()), {3, 1, 1, 1, 1, 1, -2, -2, -2, -2});
        check_values(eigenvalues(edgeless(1)), {0});
        const double r2 = std::sqrt(2.0);
        check_values(eigenvalues(catalog_graph("Heawood graph")),
                     {3, r2, r2, r2, r2, r2, r2, -r2, -r2, -r2, -r2, -r2, -r2, -3});
    }

    TEST_CASE("eigenvectors satisfy A v = lambda v")
    {
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> u(-1, 1);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + trial * 3;
            std::vector<double> a(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    a[i * n + j] = a[j * n + i] = u(rng);
            const SymmetricMatrix m(n, a);
            const auto e = symmetric_eigen(m);
            for (int c = 0; c < n; ++c) {
                double norm = 0;
                for (int i = 0; i < n; ++i) {
                    double av = 0;
                    for (int j = 0; j < n; ++j)
                        av += m(i, j) * e.vectors[j * n + c];
                    CHECK(std::abs(av - e.spectrum.values[c] * e.vectors[i * n + c]) < 1e-9);
                    norm += e.vectors[i * n + c] * e.vectors[i * n + c];
                }
                CHECK(norm == doctest::Approx(1.0));
            }
            for (int i = 1; i < n; ++i)
                CHECK(e.spectrum.values[i - 1] >= e.spectrum.values[i]);
        }
        CHECK_THROWS_AS(symmetric_eigen(SymmetricMatrix(2, {0, 1, 2, 0})), ContractError);
    }

    TEST_CASE("group_distinct")
    {
        const auto a = group_distinct(Spectrum{{2, -1 - 1e-12, -1}}, 1e-9);
        CHECK(a.thetas.size() == 2);
        CHECK(a.thetas[0] == doctest::Approx(2));
        CHECK(a.thetas[1] == doctest::Approx(-1));
        CHECK(a.mults == std::vector<int>{1, 2});

        const auto p = group_distinct(Spectrum{{3, 1, 1, 1, 1, 1, -2, -2, -2, -2}}, 1e-9);
        CHECK(p.d() == 2);
        CHECK(p.mults == std::vector<int>{1, 5, 4});
        CHECK(p.prefix == std::vector<int>{0, 1, 6, 10});

        const auto one = distinct_spectrum(edgeless(1));
        CHECK(one.thetas == std::vector<double>{0});
        CHECK(one.mults == std::vector<int>{1});
    }

    TEST_CASE("grouping is idempotent and prefix sums are consistent")
    {
        std::vector<Graph> graphs{petersen(), cycle(9), path(7)};
        std::mt19937 rng(4);
        for (int i = 0; i < 20; ++i)
            graphs.push_back(random_graph(rng, 4 + i % 9, 0.4));
        for (const auto& ng : catalog())
            graphs.push_back(ng.graph);
        for (const auto& g : graphs) {
            const auto ds = distinct_spectrum(g);
            const auto again = group_distinct(expand(ds), ds.tolerance);
            CHECK(again.thetas == ds.thetas);
            CHECK(again.mults == ds.mults);
            CHECK(ds.order() == g.order());
            for (int i = 0; i <= ds.count(); ++i)
                for (int j = i; j <= ds.count(); ++j)
                    CHECK(ds.weight(i, j) == std::accumulate(ds.mults.begin() + i, ds.mults.begin() + j, 0));
            for (int j = 1; j < ds.count(); ++j)
                CHECK(ds.thetas[j - 1] > ds.thetas[j]);
        }
    }

    TEST_CASE("trace identities")
    {
        std::vector<Graph> graphs{petersen(), complete(6), cycle(11)};
        for (const auto& ng : catalog())
            graphs.push_back(ng.graph);
        for (const auto& g : graphs) {
            const auto ds = distinct_spectrum(g);
            const auto tri = triangle_counts(g);
            const double e2 = 2.0 * static_cast<double>(g.edge_count());
            const double tol = 1e-6 * std::max(1.0, e2);
            const double t = std::accumulate(tri.begin(), tri.end(), 0.0) / 3.0;
            CHECK(std::abs(power_sum(ds, 1)) <= tol);
            CHECK(std::abs(power_sum(ds, 2) - e2) <= tol);
            CHECK(std::abs(power_sum(ds, 3) - 6 * t) <= tol);
        }
    }

    TEST_CASE("sign and spectral radius")
    {
        const auto ds = distinct_spectrum(cycle(4));
        CHECK(ds.sign(0) == 1);
        CHECK(ds.sign(1) == 0);
        CHECK(ds.sign(2) == -1);
        CHECK(ds.spectral_radius() == doctest::Approx(2));
        CHECK(default_group_tolerance(eigenvalues(cycle(4))) == doctest::Approx(2e-8));
    }
}
