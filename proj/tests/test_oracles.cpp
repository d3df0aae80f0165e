#include "inertia/errors.hpp"
#include "inertia/oracles.hpp"

#include "support.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>

using namespace inertia;
using namespace testing;

namespace {

// Subset enumeration over G^k built from the distance table.
int brute_alpha(const Graph& g, int k)
{
    const int n = g.order();
    const auto dist = distance_table(g);
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size <= best)
            continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && dist[u][v] >= 0 && dist[u][v] <= k)
                    ok = false;
        if (ok)
            best = size;
    }
    return best;
}

bool colourable(const std::vector<std::vector<int>>& dist, int k, std::vector<int>& colour, int v, int colours)
{
    const int n = static_cast<int>(colour.size());
    if (v == n)
        return true;
    for (int c = 0; c < colours; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (colour[u] == c && dist[u][v] >= 0 && dist[u][v] <= k)
                ok = false;
        if (!ok)
            continue;
        colour[v] = c;
        if (colourable(dist, k, colour, v + 1, colours))
            return true;
    }
    return false;
}

int brute_chi(const Graph& g, int k)
{
    const auto dist = distance_table(g);
    std::vector<int> colour(g.order(), -1);
    int c = 1;
    while (!colourable(dist, k, colour, 0, c))
        ++c;
    return c;
}

} // namespace

TEST_SUITE("oracles")
{
    TEST_CASE("exact_alpha_k on small named graphs")
    {
        CHECK(exact_alpha_k(petersen(), 2).value == 1);
        CHECK(exact_alpha_k(catalog_graph("Heawood graph"), 3).value == 1);
        CHECK(exact_alpha_k(cycle(6), 2).value == 2);
        CHECK(brute_alpha(cycle(6), 2) == 2);
        CHECK(exact_alpha_k(petersen(), 1).value == 4);
    }

    TEST_CASE("exact_chi_k on small named graphs")
    {
        CHECK(exact_chi_k(petersen(), 2).value == 10);
        CHECK(exact_chi_k(cycle(5), 1).value == 3);
        CHECK(exact_chi_k(catalog_graph("Heawood graph"), 2).value == 7);
        CHECK(exact_chi_k(edgeless(4), 1).value == 1);
    }

    TEST_CASE("oracles agree with subset and colouring enumeration")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 2 + trial % 8;
            const Graph g = random_graph(rng, n, trial % 2 ? 0.3 : 0.5);
            for (int k = 1; k <= 3; ++k) {
                CAPTURE(to_graph6(g));
                CAPTURE(k);
                CHECK(exact_alpha_k(g, k).value == brute_alpha(g, k));
                CHECK(exact_chi_k(g, k).value == brute_chi(g, k));
            }
        }
    }

    TEST_CASE("maximum_clique")
    {
        CHECK(maximum_clique(complete(5)) == 5);
        CHECK(maximum_clique(cycle(5)) == 2);
        CHECK(maximum_clique(edgeless(3)) == 1);
        CHECK(maximum_clique(petersen()) == 2);
    }

    TEST_CASE("alpha at k = 1 is the independence number")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = random_graph(rng, 12, 0.4);
            std::vector<Graph::Edge> comp;
            for (int u = 0; u < 12; ++u)
                for (int v = u + 1; v < 12; ++v)
                    if (!g.adjacent(u, v))
                        comp.emplace_back(u, v);
            CHECK(exact_alpha_k(g, 1).value == maximum_clique(Graph(12, comp)));
        }
    }

    TEST_CASE("chi times alpha covers the vertex set; monotone in k")
    {
        std::vector<Graph> graphs{petersen(), cycle(7), path(6), catalog_graph("Frucht graph"),
                                  catalog_graph("Hexahedron")};
        std::mt19937 rng(3);
        for (int i = 0; i < 10; ++i)
            graphs.push_back(random_graph(rng, 10, 0.3));
        for (const auto& g : graphs) {
            int prev_alpha = g.order() + 1;
            int prev_chi = 0;
            for (int k = 1; k <= 3; ++k) {
                const int a = *exact_alpha_k(g, k).value;
                const int c = *exact_chi_k(g, k).value;
                CHECK(a * c >= g.order());
                CHECK(a <= prev_alpha);
                CHECK(c >= prev_chi);
                prev_alpha = a;
                prev_chi = c;
            }
        }
    }

    TEST_CASE("budgets are reported, not exceeded")
    {
        const auto r = exact_alpha_k(catalog_graph("Tutte Graph"), 2, {30, 10});
        CHECK_FALSE(r);
        CHECK(r.note.find("46") != std::string::npos);
        const auto c = exact_chi_k(catalog_graph("Heawood graph"), 2, {10, 10});
        CHECK_FALSE(c);
        CHECK_THROWS_AS(exact_alpha_k(petersen(), 0), ContractError);
    }

    TEST_CASE("grid_search_bound")
    {
        const Graph c5 = cycle(5);
        const auto g = grid_search_bound(distinct_spectrum(c5), diagonal_profile(c5, 2), 2, 5.0, 0.1);
        CHECK(g.value == 1);
        const Graph k2 = complete(2);
        CHECK(grid_search_bound(distinct_spectrum(k2), diagonal_profile(k2, 1), 1, 2.0, 0.5).value == 1);
        const Graph e3 = edgeless(3);
        CHECK(grid_search_bound(distinct_spectrum(e3), diagonal_profile(e3, 1), 1, 2.0, 0.5).value == 3);
        CHECK_THROWS_AS(grid_search_bound(distinct_spectrum(c5), diagonal_profile(c5, 2), 2, 100.0, 0.001),
                        ContractError);
    }
}
