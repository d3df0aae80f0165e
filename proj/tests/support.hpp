#pragma once

#include "inertia/graph.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

using inertia::Graph;

inline std::filesystem::path data_dir()
{
    return INERTIA_DATA_DIR;
}

inline std::filesystem::path catalog_dir()
{
    return data_dir() / "catalog";
}

inline const std::vector<inertia::NamedGraph>& catalog()
{
    static const auto graphs = inertia::load_catalog(catalog_dir());
    return graphs;
}

inline const Graph& catalog_graph(const std::string& name)
{
    for (const auto& ng : catalog())
        if (ng.name == name)
            return ng.graph;
    throw std::runtime_error("catalog has no graph named " + name);
}

inline Graph cycle(int n)
{
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e, "C" + std::to_string(n));
}

inline Graph path(int n)
{
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e, "P" + std::to_string(n));
}

inline Graph complete(int n)
{
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e, "K" + std::to_string(n));
}

inline Graph edgeless(int n)
{
    return Graph(n, {}, "E" + std::to_string(n));
}

inline Graph petersen()
{
    std::vector<Graph::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e, "Petersen");
}

/// Circulant graph on Z_n with the given connection set (jumps in [1, n/2]).
inline Graph circulant(int n, const std::vector<int>& jumps)
{
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int s : jumps) {
            const int j = (i + s) % n;
            const auto edge = std::minmax(i, j);
            if (std::find(e.begin(), e.end(), Graph::Edge(edge)) == e.end())
                e.emplace_back(edge);
        }
    return Graph(n, e, "circulant" + std::to_string(n));
}

/// Erdos-Renyi G(n, p).
inline Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return Graph(n, e, "random");
}

} // namespace testing
