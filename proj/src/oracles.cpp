#include "inertia/oracles.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <set>

namespace inertia {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct TimeUp {};

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds)))
    {
    }

    void check()
    {
        if ((++ticks_ & 1023) == 0 && Clock::now() > end_)
            throw TimeUp{};
    }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

Mask all_vertices(int n)
{
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Tomita-style maximum clique: greedy colour classes give the bound.
class CliqueSearch {
public:
    CliqueSearch(std::vector<Mask> adj, Deadline* deadline) : adj_(std::move(adj)), deadline_(deadline) {}

    int run(Mask candidates)
    {
        best_ = 0;
        expand(candidates, 0);
        return best_;
    }

private:
    void expand(Mask cand, int size)
    {
        if (deadline_)
            deadline_->check();
        if (cand == 0) {
            best_ = std::max(best_, size);
            return;
        }
        // Colour the candidates greedily; vertices are visited in order of
        // increasing colour so the bound shrinks as we go.
        std::vector<int> order;
        std::vector<int> colour;
        Mask uncoloured = cand;
        int c = 0;
        while (uncoloured) {
            ++c;
            Mask avail = uncoloured;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= ~(Mask{1} << v);
                avail &= ~adj_[v];
                uncoloured &= ~(Mask{1} << v);
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + colour[i] <= best_)
                return;
            const int v = order[i];
            expand(cand & adj_[v], size + 1);
            cand &= ~(Mask{1} << v);
        }
    }

    std::vector<Mask> adj_;
    Deadline* deadline_;
    int best_ = 0;
};

// Decides k-colourability with DSATUR branching.
class ColouringSearch {
public:
    ColouringSearch(const std::vector<Mask>& adj, Deadline& deadline)
        : adj_(adj), n_(static_cast<int>(adj.size())), deadline_(deadline)
    {
    }

    bool colourable(int colours)
    {
        colours_ = colours;
        colour_.assign(n_, -1);
        return search(0, 0);
    }

private:
    bool search(int coloured, int used)
    {
        deadline_.check();
        if (coloured == n_)
            return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        Mask pick_forbidden = 0;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            Mask forbidden = 0;
            int uncoloured_deg = 0;
            for (Mask nb = adj_[v]; nb; nb &= nb - 1) {
                const int u = std::countr_zero(nb);
                if (colour_[u] >= 0)
                    forbidden |= Mask{1} << colour_[u];
                else
                    ++uncoloured_deg;
            }
            const int sat = std::popcount(forbidden);
            if (sat > pick_sat || (sat == pick_sat && uncoloured_deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = uncoloured_deg;
                pick_forbidden = forbidden;
            }
        }
        // Colours beyond `used` are interchangeable: try only the first new one.
        const int limit = std::min(colours_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (pick_forbidden & (Mask{1} << c))
                continue;
            colour_[pick] = c;
            if (search(coloured + 1, std::max(used, c + 1)))
                return true;
            colour_[pick] = -1;
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    int n_;
    Deadline& deadline_;
    int colours_ = 0;
    std::vector<int> colour_;
};

std::optional<std::string> over_budget(const Graph& g, const OracleBudget& budget)
{
    if (g.order() > budget.max_vertices)
        return "skipped: n = " + std::to_string(g.order()) + " exceeds the oracle budget of " +
               std::to_string(budget.max_vertices) + " vertices";
    if (g.order() > 64)
        return "skipped: bitset oracles support at most 64 vertices";
    return std::nullopt;
}

} // namespace

int maximum_clique(const Graph& g)
{
    if (g.order() > 64)
        throw CapabilityError("maximum_clique: at most 64 vertices are supported");
    return CliqueSearch(adjacency_masks(g), nullptr).run(all_vertices(g.order()));
}

OracleOutcome exact_alpha_k(const Graph& g, int k, const OracleBudget& budget)
{
    if (k < 1)
        throw ContractError("exact_alpha_k: k must be at least 1");
    if (auto note = over_budget(g, budget))
        return {std::nullopt, *note};
    const int n = g.order();
    auto adj = adjacency_masks(graph_power(g, k));
    const Mask all = all_vertices(n);
    for (int v = 0; v < n; ++v)
        adj[v] = ~adj[v] & all & ~(Mask{1} << v);  // complement
    Deadline deadline(budget.max_seconds);
    try {
        return {CliqueSearch(std::move(adj), &deadline).run(all), ""};
    } catch (const TimeUp&) {
        return {std::nullopt, "skipped: time budget exceeded"};
    }
}

OracleOutcome exact_chi_k(const Graph& g, int k, const OracleBudget& budget)
{
    if (k < 1)
        throw ContractError("exact_chi_k: k must be at least 1");
    if (auto note = over_budget(g, budget))
        return {std::nullopt, *note};
    const Graph power = graph_power(g, k);
    const auto adj = adjacency_masks(power);
    Deadline deadline(budget.max_seconds);
    try {
        int lower = std::max(1, CliqueSearch(adj, &deadline).run(all_vertices(g.order())));
        ColouringSearch search(adj, deadline);
        while (!search.colourable(lower))
            ++lower;
        return {lower, ""};
    } catch (const TimeUp&) {
        return {std::nullopt, "skipped: time budget exceeded"};
    }
}

AlphaBoundResult grid_search_bound(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k, double box,
                                   double step)
{
    if (k < 1 || k > 3)
        throw ContractError("grid_search_bound: k must be in [1, 3]");
    if (prof.k < k)
        throw ContractError("grid_search_bound: diagonal profile must cover k");
    if (!(step > 0) || !(box >= 0))
        throw ContractError("grid_search_bound: box and step must be positive");
    const long long per_axis = static_cast<long long>(std::floor(2 * box / step + 1e-9)) + 1;
    double total = 1.0;
    for (int i = 0; i <= k; ++i)
        total *= static_cast<double>(per_axis);
    if (total > 1e8)
        throw ContractError("grid_search_bound: grid too large (" + std::to_string(total) + " points)");

    std::set<std::vector<std::int64_t>> distinct_rows;
    for (const auto& row : prof.diag)
        distinct_rows.emplace(row.begin(), row.begin() + k + 1);
    const std::vector<std::vector<std::int64_t>> walk_rows(distinct_rows.begin(), distinct_rows.end());

    AlphaBoundResult best{ds.order(), Polynomial::constant(1.0, k), {}, AlphaMethod::grid_search};
    std::vector<double> a(k + 1);
    std::vector<long long> idx(k + 1, 0);
    std::vector<double> values(ds.count());
    while (true) {
        for (int i = 0; i <= k; ++i)
            a[i] = -box + static_cast<double>(idx[i]) * step;

        double w = std::numeric_limits<double>::infinity();
        double W = -w;
        for (const auto& row : walk_rows) {
            double s = 0.0;
            for (int i = 0; i <= k; ++i)
                s += a[i] * static_cast<double>(row[i]);
            w = std::min(w, s);
            W = std::max(W, s);
        }
        double scale = std::max({1.0, std::abs(w), std::abs(W)});
        for (int j = 0; j < ds.count(); ++j) {
            double v = 0.0;
            for (int i = k; i >= 0; --i)
                v = v * ds.thetas[j] + a[i];
            values[j] = v;
            scale = std::max(scale, std::abs(v));
        }
        const double tol = 1e-9 * scale;
        int ge = 0, le = 0;
        for (int j = 0; j < ds.count(); ++j) {
            if (values[j] >= w - tol)
                ge += ds.mults[j];
            if (values[j] <= W + tol)
                le += ds.mults[j];
        }
        const int value = std::min(ge, le);
        if (value < best.value) {
            best.value = value;
            best.witness = Polynomial(a);
            best.negative_set.clear();
            for (int j = 0; j < ds.count(); ++j) {
                const bool excluded = ge <= le ? values[j] < w - tol : values[j] > W + tol;
                if (excluded)
                    best.negative_set.push_back(j);
            }
        }

        int pos = 0;
        while (pos <= k && ++idx[pos] == per_axis)
            idx[pos++] = 0;
        if (pos > k)
            break;
    }
    return best;
}

} // namespace inertia
