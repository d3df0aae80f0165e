#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inertia {

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. The adjacency matrix is stored densely
/// (row-major bytes) next to sorted neighbour lists; both describe the same
/// edge set.
class Graph {
public:
    using Edge = std::pair<int, int>;

    /// Throws ContractError on n < 1, out-of-range endpoints, self-loops or
    /// repeated edges.
    Graph(int n, const std::vector<Edge>& edges, std::string name = {});

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_list_[v]; }
    int degree(int v) const { return static_cast<int>(adj_list_[v].size()); }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    /// Dense 0/1 adjacency matrix as doubles, row-major.
    std::vector<double> adjacency_matrix() const;

    const std::string& name() const noexcept { return name_; }
    Graph renamed(std::string name) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> adj_list_;
    std::string name_;
};

enum class GraphFormat { graph6, edge_list };

/// Parse a graph in the given format. Errors are reported as ParseError with
/// the byte offset (graph6) or line number (edge list) of the problem.
Graph parse_graph(std::string_view source, GraphFormat format, std::string name = {});
Graph parse_graph6(std::string_view source, std::string name = {});
/// "n=<count>" header, then one "u v" pair per line with 0-based indices.
Graph parse_edge_list(std::string_view source, std::string name = {});

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

/// Closed-walk counts (A^i)_vv for i = 0..k at every vertex.
struct DiagonalProfile {
    int k = 0;
    std::vector<std::vector<std::int64_t>> diag;  // diag[v][i]
    std::int64_t d_min = 0;
    std::int64_t d_max = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> hull_points;  // (d(v), 2t(v)) per vertex

    int order() const noexcept { return static_cast<int>(diag.size()); }
};

/// Exact integer diagonals of A^0..A^k. Degrees and triangle counts are used
/// directly for i <= 3; higher powers use repeated matrix-vector products.
DiagonalProfile diagonal_profile(const Graph& g, int k);

/// G^k: u ~ v iff 1 <= dist(u, v) <= k. Requires k >= 1.
Graph graph_power(const Graph& g, int k);

/// All-pairs BFS distances; -1 marks different components.
std::vector<std::vector<int>> distance_table(const Graph& g);

bool is_k_partially_walk_regular(const Graph& g, int k);
bool is_k_partially_walk_regular(const DiagonalProfile& prof, int k);

/// Number of triangles through each vertex.
std::vector<std::int64_t> triangle_counts(const Graph& g);

struct NamedGraph {
    std::string name;
    std::string file;
    Graph graph;
};

/// Load a directory holding `manifest.csv` ("name,file" rows) and one graph6
/// file per entry. An empty directory yields an empty list; a directory with
/// graph files but no manifest, or any unreadable entry, raises LoadError
/// listing every offending file.
std::vector<NamedGraph> load_catalog(const std::filesystem::path& dir);

} // namespace inertia
