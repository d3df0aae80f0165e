#include "inertia/errors.hpp"
#include "inertia/graph.hpp"

#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <numeric>

using namespace inertia;
using namespace testing;

namespace {

std::vector<std::int64_t> matrix_power_traces(const Graph& g, int k)
{
    const int n = g.order();
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) * n, 0), next(p.size());
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i) * n + i] = 1;
    std::vector<std::int64_t> traces;
    for (int power = 0; power <= k; ++power) {
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i)
            tr += p[static_cast<std::size_t>(i) * n + i];
        traces.push_back(tr);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (int l : g.neighbors(j))
                    s += p[static_cast<std::size_t>(i) * n + l];
                next[static_cast<std::size_t>(i) * n + j] = s;
            }
        std::swap(p, next);
    }
    return traces;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag)
        : path(std::filesystem::temp_directory_path() / ("inertia_test_" + tag))
    {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

} // namespace

TEST_SUITE("graph")
{
    TEST_CASE("graph6 decoding and encoding")
    {
        const Graph k3 = parse_graph6("Bw");
        CHECK(k3.order() == 3);
        CHECK(k3.edge_count() == 3);
        CHECK(k3 == complete(3));
        CHECK(to_graph6(complete(3)) == "Bw");
        CHECK(to_graph6(petersen()) == "IheA@GUAo");
        CHECK(parse_graph6("IheA@GUAo") == petersen());
        CHECK(parse_graph6("Bw\n") == k3);

        std::mt19937 rng(5);
        for (int i = 0; i < 50; ++i) {
            const Graph g = random_graph(rng, 1 + i % 20, 0.4);
            CHECK(parse_graph6(to_graph6(g)) == g);
            CHECK(parse_edge_list(to_edge_list(g)) == g);
        }
    }

    TEST_CASE("graph6 errors carry a byte offset")
    {
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("B"), ParseError);
        CHECK_THROWS_AS(parse_graph6("B~~"), ParseError);
        try {
            parse_graph6("B !");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 1);
        }
    }

    TEST_CASE("edge lists")
    {
        CHECK(parse_edge_list("n=2\n0 1") == complete(2));
        CHECK(parse_edge_list("n=3\n0 1\n1 2\n") == path(3));
        CHECK_THROWS_AS(parse_edge_list("n=3\n0 0"), ParseError);
        try {
            parse_edge_list("n=3\n0 1\n1 7\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 3);
        }
        CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n=3\n0 1\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n=3\n0 x\n"), ParseError);
    }

    TEST_CASE("graph construction contracts")
    {
        CHECK_THROWS_AS(Graph(0, {}), ContractError);
        CHECK_THROWS_AS(Graph(2, {{0, 2}}), ContractError);
        CHECK_THROWS_AS(Graph(2, {{1, 1}}), ContractError);
        CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ContractError);
    }

    TEST_CASE("diagonal_profile examples")
    {
        const auto k3 = diagonal_profile(complete(3), 3);
        for (const auto& row : k3.diag)
            CHECK(row == std::vector<std::int64_t>{1, 0, 2, 2});
        const auto k2 = diagonal_profile(complete(2), 2);
        for (const auto& row : k2.diag)
            CHECK(row == std::vector<std::int64_t>{1, 0, 1});
        CHECK(k2.d_min == 1);
        CHECK(k2.d_max == 1);
        const auto pet = diagonal_profile(petersen(), 3);
        for (const auto& row : pet.diag)
            CHECK(row == std::vector<std::int64_t>{1, 0, 3, 0});
    }

    TEST_CASE("diagonal sums are traces of adjacency powers")
    {
        std::vector<Graph> graphs{petersen(), cycle(5), path(4), complete(5)};
        std::mt19937 rng(9);
        for (int i = 0; i < 25; ++i)
            graphs.push_back(random_graph(rng, 3 + i % 10, 0.5));
        for (const auto& ng : catalog())
            graphs.push_back(ng.graph);
        for (const auto& g : graphs) {
            const int k = 5;
            const auto prof = diagonal_profile(g, k);
            const auto traces = matrix_power_traces(g, k);
            const auto tri = triangle_counts(g);
            for (int i = 0; i <= k; ++i) {
                std::int64_t s = 0;
                for (const auto& row : prof.diag)
                    s += row[i];
                CHECK(s == traces[i]);
            }
            CHECK(traces[2] == 2 * static_cast<std::int64_t>(g.edge_count()));
            CHECK(traces[3] == 2 * std::accumulate(tri.begin(), tri.end(), std::int64_t{0}));
        }
    }

    TEST_CASE("graph powers")
    {
        CHECK(graph_power(petersen(), 2) == complete(10));
        const Graph c6sq = graph_power(cycle(6), 2);
        for (int v = 0; v < 6; ++v)
            CHECK(c6sq.degree(v) == 4);
        CHECK(graph_power(petersen(), 1) == petersen());
        CHECK_THROWS_AS(graph_power(petersen(), 0), ContractError);

        std::mt19937 rng(13);
        for (int i = 0; i < 20; ++i) {
            const Graph g = random_graph(rng, 10, 0.25);
            for (int k = 2; k <= 4; ++k) {
                const Graph lo = graph_power(g, k - 1);
                const Graph hi = graph_power(g, k);
                CHECK(hi.order() == g.order());
                for (auto [u, v] : lo.edges())
                    CHECK(hi.adjacent(u, v));
            }
        }
    }

    TEST_CASE("partial walk-regularity")
    {
        CHECK(is_k_partially_walk_regular(petersen(), 3));
        CHECK_FALSE(is_k_partially_walk_regular(path(3), 2));
        CHECK(is_k_partially_walk_regular(catalog_graph("Frucht graph"), 2));
        CHECK_FALSE(is_k_partially_walk_regular(catalog_graph("Frucht graph"), 3));

        std::vector<Graph> graphs{circulant(8, {1, 2}), cycle(6), path(5), complete(4)};
        for (const auto& ng : catalog())
            graphs.push_back(ng.graph);
        for (const auto& g : graphs)
            for (int k = 2; k <= 4; ++k)
                if (is_k_partially_walk_regular(g, k))
                    for (int j = 1; j < k; ++j)
                        CHECK(is_k_partially_walk_regular(g, j));
    }

    TEST_CASE("distances across components")
    {
        const Graph g(4, {{0, 1}, {2, 3}});
        const auto d = distance_table(g);
        CHECK(d[0][1] == 1);
        CHECK(d[0][2] == -1);
        CHECK(graph_power(g, 3).edge_count() == 2);
    }

    TEST_CASE("catalog loading")
    {
        const Graph& heawood = catalog_graph("Heawood graph");
        CHECK(heawood.order() == 14);
        for (int v = 0; v < 14; ++v)
            CHECK(heawood.degree(v) == 3);
        CHECK(catalog().size() == 23);

        TempDir empty("empty");
        CHECK(load_catalog(empty.path).empty());

        TempDir missing("missing");
        missing.write("manifest.csv", "name,file\nGhost,ghost.g6\n");
        CHECK_THROWS_AS(load_catalog(missing.path), LoadError);

        TempDir no_manifest("no_manifest");
        no_manifest.write("a.g6", "Bw\n");
        CHECK_THROWS_AS(load_catalog(no_manifest.path), LoadError);

        TempDir ok("ok");
        ok.write("manifest.csv", "name,file\nTriangle,k3.g6\n");
        ok.write("k3.g6", "Bw\n");
        const auto list = load_catalog(ok.path);
        REQUIRE(list.size() == 1);
        CHECK(list[0].name == "Triangle");
        CHECK(list[0].graph == complete(3));
    }
}
