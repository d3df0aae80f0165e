#include "inertia/alpha_bound.hpp"
#include "inertia/errors.hpp"
#include "inertia/oracles.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace inertia;
using namespace testing;

namespace {

int evaluate(const Graph& g, std::vector<double> coeffs)
{
    const int k = static_cast<int>(coeffs.size()) - 1;
    return evaluate_bound(Polynomial(std::move(coeffs)), distinct_spectrum(g), diagonal_profile(g, k)).value;
}

std::vector<Graph> small_corpus()
{
    std::vector<Graph> graphs{petersen(), cycle(5), cycle(6), cycle(7), path(5), complete(4), edgeless(3),
                              circulant(9, {1, 3}), Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}})};
    std::mt19937 rng(101);
    for (int i = 0; i < 40; ++i)
        graphs.push_back(random_graph(rng, 4 + i % 9, i % 2 ? 0.3 : 0.5));
    return graphs;
}

} // namespace

TEST_SUITE("alpha_bound")
{
    TEST_CASE("evaluate_bound examples")
    {
        CHECK(evaluate(edgeless(4), {1.0}) == 4);
        CHECK(evaluate(catalog_graph("Heawood graph"), {-3, 0, 1}) == 2);
        CHECK(evaluate(cycle(5), {-2, 1, 1}) == 1);
        const Graph c5 = cycle(5);
        CHECK_THROWS_AS(evaluate_bound(Polynomial({0, 0, 0, 1}), distinct_spectrum(c5), diagonal_profile(c5, 2)),
                        ContractError);
    }

    TEST_CASE("optimize_k1 examples")
    {
        CHECK(optimize_k1(distinct_spectrum(complete(2))).value == 1);
        CHECK(optimize_k1(distinct_spectrum(petersen())).value == 4);
        CHECK(optimize_k1(distinct_spectrum(cycle(4))).value == 3);
        CHECK(optimize_k1(distinct_spectrum(edgeless(3))).value == 3);
    }

    TEST_CASE("optimize_k2 examples")
    {
        for (auto [name, value] : {std::pair{"Heawood graph", 2}, {"Coxeter Graph", 7}, {"Icosahedron", 4}}) {
            const Graph& g = catalog_graph(name);
            CHECK(optimize_k2(distinct_spectrum(g), diagonal_profile(g, 2)).value == value);
        }
        const Graph c5 = cycle(5);
        const auto r = optimize_k2(distinct_spectrum(c5), diagonal_profile(c5, 2));
        CHECK(r.value == 1);
        CHECK(evaluate_bound(r.witness, distinct_spectrum(c5), diagonal_profile(c5, 2)).value <= 1);
    }

    TEST_CASE("optimize_fixed_k examples")
    {
        for (auto [name, value] : {std::pair{"Heawood graph", 1}, {"Dodecahedron", 4}}) {
            const Graph& g = catalog_graph(name);
            CHECK(optimize_fixed_k(distinct_spectrum(g), diagonal_profile(g, 3), 3).value == value);
        }
        CHECK(optimize_fixed_k(distinct_spectrum(edgeless(4)), diagonal_profile(edgeless(4), 2), 2).value == 4);
        CHECK_THROWS_AS(optimize_fixed_k(distinct_spectrum(petersen()), diagonal_profile(petersen(), 6), 6),
                        ContractError);
    }

    TEST_CASE("pruned closed-walk rows")
    {
        // K4 plus a vertex joined to two of its vertices: degrees {2, 3, 4}.
        const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
        const auto rows = prune_diagonal_constraints(diagonal_profile(g, 2), 2);
        REQUIRE(rows.size() == 2);
        std::vector<double> degrees;
        for (const auto& r : rows.rows())
            degrees.push_back(r.coeffs[2]);
        std::sort(degrees.begin(), degrees.end());
        CHECK(degrees == std::vector<double>{2, 4});

        const auto hull = prune_diagonal_constraints(diagonal_profile(catalog_graph("Hexagon hull graph"), 3), 3);
        CHECK(hull.size() == 6);
        const auto pts = convex_hull(diagonal_profile(catalog_graph("Hexagon hull graph"), 3).hull_points);
        std::vector<std::pair<std::int64_t, std::int64_t>> expected{{2, 0}, {4, 2}, {3, 4}, {2, 2}, {4, 4}, {3, 0}};
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        std::sort(expected.begin(), expected.end());
        CHECK(sorted == expected);

        CHECK(prune_diagonal_constraints(diagonal_profile(petersen(), 3), 3).size() == 1);
        CHECK(prune_diagonal_constraints(diagonal_profile(petersen(), 1), 1).size() == 1);
    }

    TEST_CASE("convex hull")
    {
        using P = std::pair<std::int64_t, std::int64_t>;
        CHECK(convex_hull({{0, 0}, {1, 1}, {2, 2}}) == std::vector<P>{{0, 0}, {2, 2}});
        CHECK(convex_hull({{1, 1}, {1, 1}}) == std::vector<P>{{1, 1}});
        CHECK(convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}}) == std::vector<P>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    }

    TEST_CASE("soundness against the exact oracle")
    {
        for (const auto& g : small_corpus()) {
            const auto ds = distinct_spectrum(g);
            const auto prof = diagonal_profile(g, 3);
            CAPTURE(to_graph6(g));
            const int a1 = *exact_alpha_k(g, 1).value;
            const int a2 = *exact_alpha_k(g, 2).value;
            const int a3 = *exact_alpha_k(g, 3).value;
            CHECK(optimize_k1(ds).value >= a1);
            CHECK(optimize_k2(ds, prof).value >= a2);
            CHECK(optimize_fixed_k(ds, prof, 3).value >= a3);
        }
    }

    TEST_CASE("methods agree and witnesses certify their values")
    {
        for (const auto& g : small_corpus()) {
            const auto ds = distinct_spectrum(g);
            const auto prof = diagonal_profile(g, 3);
            CAPTURE(to_graph6(g));
            const auto k1 = optimize_k1(ds);
            const auto k2 = optimize_k2(ds, prof);
            CHECK(k1.value == optimize_fixed_k(ds, prof, 1).value);
            CHECK(k2.value == optimize_fixed_k(ds, prof, 2).value);
            for (const auto& r : {k1, k2, optimize_fixed_k(ds, prof, 3)})
                CHECK(evaluate_bound(r.witness, ds, prof).value <= r.value);
        }
    }

    TEST_CASE("pruning is lossless")
    {
        for (const auto& g : small_corpus()) {
            const auto ds = distinct_spectrum(g);
            const auto prof = diagonal_profile(g, 3);
            for (int k : {2, 3}) {
                FixedKOptions full;
                full.prune_diagonal = false;
                CHECK(optimize_fixed_k(ds, prof, k).value == optimize_fixed_k(ds, prof, k, full).value);
            }
        }
    }

    TEST_CASE("shifting the witness to zero minimum diagonal never hurts")
    {
        for (const auto& g : small_corpus()) {
            const auto ds = distinct_spectrum(g);
            const auto prof = diagonal_profile(g, 3);
            for (int k = 1; k <= 3; ++k) {
                const auto r = optimize_fixed_k(ds, prof, k);
                const auto info = polynomial_profile(r.witness, ds, prof);
                const Polynomial shifted = r.witness.shifted_down(info.w);
                const auto shifted_info = polynomial_profile(shifted, ds, prof);
                CHECK(std::abs(shifted_info.w) <= 1e-9 * std::max(1.0, std::abs(info.w)));
                for (int j = 0; j < ds.count(); ++j)
                    if (info.values_on_spectrum[j] < 0)
                        CHECK(shifted_info.values_on_spectrum[j] < 0);
                CHECK(evaluate_bound(shifted, ds, prof).value <= evaluate_bound(r.witness, ds, prof).value);
            }
        }
    }

    TEST_CASE("grid search never beats the optimizer")
    {
        for (const auto& g : {cycle(5), petersen(), cycle(6), path(4)}) {
            const auto ds = distinct_spectrum(g);
            const auto prof = diagonal_profile(g, 2);
            const int a2 = *exact_alpha_k(g, 2).value;
            const int opt = optimize_k2(ds, prof).value;
            const int grid = grid_search_bound(ds, prof, 2, 4.0, 0.25).value;
            CHECK(a2 <= opt);
            CHECK(opt <= grid);
        }
    }

    TEST_CASE("power rows")
    {
        CHECK(power_row(2.0, 3) == std::vector<double>{1, 2, 4, 8});
        CHECK(to_string(AlphaMethod::k2_two_pointer) == "k2_two_pointer");
    }
}
