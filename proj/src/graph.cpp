#include "inertia/graph.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace inertia {

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
    : n_(n), name_(std::move(name))
{
    if (n < 1)
        throw ContractError("graph must have at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    adj_list_.resize(n);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ContractError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw ContractError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        auto& cell = adj_[static_cast<std::size_t>(u) * n + v];
        if (cell)
            throw ContractError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        cell = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
        adj_list_[u].push_back(v);
        adj_list_[v].push_back(u);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nb : adj_list_)
        std::sort(nb.begin(), nb.end());
}

std::vector<double> Graph::adjacency_matrix() const
{
    return {adj_.begin(), adj_.end()};
}

Graph Graph::renamed(std::string name) const
{
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kGraph6Offset = 63;

bool is_graph6_byte(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view source, std::string name)
{
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (source.substr(0, header.size()) == header)
        pos = header.size();
    // Trailing newline / whitespace is not part of the encoding.
    std::size_t end = source.size();
    while (end > pos && (source[end - 1] == '\n' || source[end - 1] == '\r' || source[end - 1] == ' '))
        --end;
    if (pos >= end)
        throw ParseError("empty graph6 string", pos, "byte");

    auto read = [&](std::size_t at) -> int {
        if (at >= end)
            throw ParseError("truncated graph6 string", at, "byte");
        auto c = static_cast<unsigned char>(source[at]);
        if (!is_graph6_byte(c))
            throw ParseError("invalid graph6 byte", at, "byte");
        return c - kGraph6Offset;
    };

    long n = 0;
    if (source[pos] == '~') {
        if (pos + 1 < end && source[pos + 1] == '~')
            throw ParseError("graph6 with more than 258047 vertices is not supported", pos, "byte");
        n = 0;
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | read(pos + i);
        pos += 4;
    } else {
        n = read(pos);
        pos += 1;
    }
    if (n < 1)
        throw ParseError("graph6 encodes an empty graph", pos - 1, "byte");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (end - pos != bytes)
        throw ParseError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " + std::to_string(bytes),
                         pos, "byte");

    std::vector<Graph::Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = read(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (; bit < bytes * 6; ++bit) {
        if ((read(pos + bit / 6) >> (5 - bit % 6)) & 1)
            throw ParseError("nonzero graph6 padding bit", pos + bit / 6, "byte");
    }
    return Graph(static_cast<int>(n), edges, std::move(name));
}

std::string to_graph6(const Graph& g)
{
    std::string out;
    const int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
    return out;
}

// ---------------------------------------------------------------- edge list

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, long& out)
{
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

Graph parse_edge_list(std::string_view source, std::string name)
{
    long n = -1;
    std::vector<Graph::Edge> edges;
    std::vector<std::vector<bool>> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t stop = source.find('\n', start);
        if (stop == std::string_view::npos)
            stop = source.size();
        ++line_no;
        std::string_view line = trim(source.substr(start, stop - start));
        start = stop + 1;
        if (line.empty() || line.front() == '#')
            continue;

        if (n < 0) {
            if (line.substr(0, 2) != "n=" || !parse_int(trim(line.substr(2)), n) || n < 1)
                throw ParseError("expected header \"n=<count>\"", line_no, "line");
            seen.assign(n, std::vector<bool>(n, false));
            continue;
        }

        auto space = line.find_first_of(" \t");
        long u = 0;
        long v = 0;
        if (space == std::string_view::npos || !parse_int(trim(line.substr(0, space)), u) ||
            !parse_int(trim(line.substr(space)), v))
            throw ParseError("expected \"u v\"", line_no, "line");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex index out of range", line_no, "line");
        if (u == v)
            throw ParseError("self-loop", line_no, "line");
        if (seen[u][v])
            throw ParseError("duplicate edge", line_no, "line");
        seen[u][v] = seen[v][u] = true;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError("missing \"n=<count>\" header", line_no, "line");
    return Graph(static_cast<int>(n), edges, std::move(name));
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph(std::string_view source, GraphFormat format, std::string name)
{
    switch (format) {
    case GraphFormat::graph6:
        return parse_graph6(source, std::move(name));
    case GraphFormat::edge_list:
        return parse_edge_list(source, std::move(name));
    }
    throw ContractError("unknown graph format");
}

// ---------------------------------------------------------------- walks

std::vector<std::int64_t> triangle_counts(const Graph& g)
{
    // Sum of |N(u) ∩ N(v)| over neighbours v of u counts each triangle at u twice.
    std::vector<std::int64_t> t(g.order(), 0);
    for (int u = 0; u < g.order(); ++u) {
        std::int64_t twice = 0;
        for (int v : g.neighbors(u)) {
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(v);
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j])
                    ++i;
                else if (b[j] < a[i])
                    ++j;
                else {
                    ++twice;
                    ++i;
                    ++j;
                }
            }
        }
        t[u] = twice / 2;
    }
    return t;
}

DiagonalProfile diagonal_profile(const Graph& g, int k)
{
    if (k < 0)
        throw ContractError("diagonal_profile: k must be nonnegative");
    const int n = g.order();
    DiagonalProfile prof;
    prof.k = k;
    prof.diag.assign(n, std::vector<std::int64_t>(k + 1, 0));

    const auto tri = triangle_counts(g);
    for (int v = 0; v < n; ++v) {
        auto& row = prof.diag[v];
        row[0] = 1;
        if (k >= 2)
            row[2] = g.degree(v);
        if (k >= 3)
            row[3] = 2 * tri[v];
    }
    if (k >= 4) {
        std::vector<std::int64_t> walk(n), next(n);
        for (int v = 0; v < n; ++v) {
            std::fill(walk.begin(), walk.end(), 0);
            walk[v] = 1;
            for (int i = 1; i <= k; ++i) {
                for (int x = 0; x < n; ++x) {
                    std::int64_t s = 0;
                    for (int y : g.neighbors(x))
                        s += walk[y];
                    next[x] = s;
                }
                walk.swap(next);
                if (i >= 4)
                    prof.diag[v][i] = walk[v];
            }
        }
    }

    prof.d_min = prof.d_max = g.degree(0);
    prof.hull_points.reserve(n);
    for (int v = 0; v < n; ++v) {
        prof.d_min = std::min<std::int64_t>(prof.d_min, g.degree(v));
        prof.d_max = std::max<std::int64_t>(prof.d_max, g.degree(v));
        prof.hull_points.emplace_back(g.degree(v), 2 * tri[v]);
    }
    return prof;
}

std::vector<std::vector<int>> distance_table(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        std::queue<int> q;
        d[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (d[y] < 0) {
                    d[y] = d[x] + 1;
                    q.push(y);
                }
            }
        }
    }
    return dist;
}

Graph graph_power(const Graph& g, int k)
{
    if (k < 1)
        throw ContractError("graph_power: k must be at least 1");
    if (k == 1)
        return g;
    const int n = g.order();
    std::vector<Graph::Edge> edges;
    std::vector<int> depth(n);
    for (int s = 0; s < n; ++s) {
        std::fill(depth.begin(), depth.end(), -1);
        std::queue<int> q;
        depth[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (depth[x] == k)
                continue;
            for (int y : g.neighbors(x)) {
                if (depth[y] < 0) {
                    depth[y] = depth[x] + 1;
                    q.push(y);
                    if (y > s)
                        edges.emplace_back(s, y);
                }
            }
        }
    }
    return Graph(n, edges, g.name());
}

bool is_k_partially_walk_regular(const DiagonalProfile& prof, int k)
{
    if (k > prof.k)
        throw ContractError("profile does not cover the requested k");
    for (int i = 0; i <= k; ++i) {
        for (const auto& row : prof.diag)
            if (row[i] != prof.diag.front()[i])
                return false;
    }
    return true;
}

bool is_k_partially_walk_regular(const Graph& g, int k)
{
    return is_k_partially_walk_regular(diagonal_profile(g, k), k);
}

// ---------------------------------------------------------------- catalog

namespace {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw LoadError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<NamedGraph> load_catalog(const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw LoadError("catalog directory not found: " + dir.string());
    const fs::path manifest = dir / "manifest.csv";
    if (!fs::exists(manifest)) {
        if (fs::is_empty(dir))
            return {};
        throw LoadError("missing manifest.csv in " + dir.string());
    }

    std::vector<NamedGraph> out;
    std::vector<std::string> problems;
    std::istringstream lines(read_file(manifest));
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        std::string_view row = trim(line);
        if (row.empty())
            continue;
        if (header) {
            header = false;
            if (row == "name,file")
                continue;
        }
        auto comma = row.rfind(',');
        if (comma == std::string_view::npos) {
            problems.push_back("manifest row without comma: " + std::string(row));
            continue;
        }
        std::string name(trim(row.substr(0, comma)));
        std::string file(trim(row.substr(comma + 1)));
        try {
            std::string text = read_file(dir / file);
            out.push_back({name, file, parse_graph6(text, name)});
        } catch (const std::exception& e) {
            problems.push_back(file + ": " + e.what());
        }
    }
    if (!problems.empty()) {
        std::string msg = "catalog load failed:";
        for (const auto& p : problems)
            msg += "\n  " + p;
        throw LoadError(msg);
    }
    return out;
}

} // namespace inertia
