#include "inertia/alpha_bound.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace inertia {

std::string to_string(AlphaMethod m)
{
    switch (m) {
    case AlphaMethod::k1:
        return "k1";
    case AlphaMethod::k2_two_pointer:
        return "k2_two_pointer";
    case AlphaMethod::fixed_k_enum:
        return "fixed_k_enum";
    case AlphaMethod::evaluate_only:
        return "evaluate_only";
    case AlphaMethod::grid_search:
        return "grid_search";
    case AlphaMethod::milp_reference:
        return "milp_reference";
    }
    return "?";
}

std::vector<double> power_row(double theta, int k)
{
    std::vector<double> row(k + 1);
    double x = 1.0;
    for (int i = 0; i <= k; ++i, x *= theta)
        row[i] = x;
    return row;
}

namespace {

bool edgeless(const DistinctSpectrum& ds)
{
    return ds.count() == 1 && ds.sign(0) == 0;
}

AlphaBoundResult trivial_result(const DistinctSpectrum& ds, int k, AlphaMethod method)
{
    return {ds.order(), Polynomial::constant(1.0, k), {}, method};
}

// Scale p so that max_{j in negative} p(theta_j) = -1.
Polynomial normalize_margin(const Polynomial& p, const DistinctSpectrum& ds, const std::vector<int>& negative)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (int j : negative)
        worst = std::max(worst, p(ds.thetas[j]));
    if (negative.empty() || worst >= 0)
        return p;
    return p.scaled(-1.0 / worst);
}

std::vector<int> index_range(int first, int last)  // [first, last]
{
    std::vector<int> out;
    for (int j = first; j <= last; ++j)
        out.push_back(j);
    return out;
}

} // namespace

AlphaBoundResult evaluate_bound(const Polynomial& p, const DistinctSpectrum& ds, const DiagonalProfile& prof)
{
    const auto pp = polynomial_profile(p, ds, prof);
    double scale = std::max({1.0, std::abs(pp.w), std::abs(pp.W)});
    for (double v : pp.values_on_spectrum)
        scale = std::max(scale, std::abs(v));
    const double tol = 1e-9 * scale;

    int ge = 0;
    int le = 0;
    std::vector<int> below_w;
    std::vector<int> above_W;
    for (int j = 0; j < ds.count(); ++j) {
        const double v = pp.values_on_spectrum[j];
        if (v >= pp.w - tol)
            ge += ds.mults[j];
        else
            below_w.push_back(j);
        if (v <= pp.W + tol)
            le += ds.mults[j];
        else
            above_W.push_back(j);
    }
    if (ge <= le)
        return {ge, p, below_w, AlphaMethod::evaluate_only};
    return {le, p, above_W, AlphaMethod::evaluate_only};
}

AlphaBoundResult optimize_k1(const DistinctSpectrum& ds)
{
    if (edgeless(ds))
        return trivial_result(ds, 1, AlphaMethod::k1);

    int nonneg = 0;
    int nonpos = 0;
    std::vector<int> negative, positive;
    for (int j = 0; j < ds.count(); ++j) {
        const int s = ds.sign(j);
        if (s >= 0)
            nonneg += ds.mults[j];
        if (s <= 0)
            nonpos += ds.mults[j];
        if (s < 0)
            negative.push_back(j);
        if (s > 0)
            positive.push_back(j);
    }
    // p(x) = x excludes the negative eigenvalues, p(x) = -x the positive ones.
    if (nonneg <= nonpos)
        return {nonneg, normalize_margin(Polynomial({0.0, 1.0}), ds, negative), negative, AlphaMethod::k1};
    return {nonpos, normalize_margin(Polynomial({0.0, -1.0}), ds, positive), positive, AlphaMethod::k1};
}

// ---------------------------------------------------------------- k = 2

namespace {

struct QuadraticCandidate {
    int value;
    Polynomial witness;
    std::vector<int> negative;
};

// a_2 > 0: p < 0 strictly between the roots alpha < beta, and the closed-walk
// rows reduce to alpha * beta >= -d_min. A run [s, e] of eigenvalues can sit
// strictly inside the roots iff the supremum of alpha * beta over
// alpha < theta_e, beta > theta_s exceeds the threshold; that supremum is
// +inf unless the run straddles zero, where it is theta_e * theta_s (not
// attained). Feasibility is inherited by sub-runs, so a two-pointer scan
// finds the heaviest run.
class InteriorScan {
public:
    InteriorScan(const DistinctSpectrum& ds, double threshold, double tol) : ds_(ds), K_(threshold), tol_(tol) {}

    bool feasible(int s, int e) const
    {
        if (ds_.sign(e) > 0 || ds_.sign(s) < 0)
            return true;
        return ds_.thetas[e] * ds_.thetas[s] > K_ + tol_;
    }

    std::optional<QuadraticCandidate> best() const
    {
        const int D = ds_.count();
        int best_weight = 0;
        int best_s = -1, best_e = -1;
        int j = 0;  // exclusive end of the current run
        for (int i = 0; i < D; ++i) {
            j = std::max(j, i);
            while (j < D && feasible(i, j))
                ++j;
            if (j - 1 >= i) {
                const int w = ds_.weight(i, j);
                if (w > best_weight) {
                    best_weight = w;
                    best_s = i;
                    best_e = j - 1;
                }
            }
        }
        if (best_s < 0 || best_weight >= ds_.order())
            return std::nullopt;
        return QuadraticCandidate{ds_.order() - best_weight, witness(best_s, best_e), index_range(best_s, best_e)};
    }

    Polynomial witness(int s, int e) const
    {
        const auto& th = ds_.thetas;
        const double below = e + 1 < ds_.count() ? th[e + 1] : th[e] - 1.0;
        const double above = s > 0 ? th[s - 1] : th[s] + 1.0;
        double alpha, beta;
        if (ds_.sign(e) > 0) {
            alpha = (std::max(below, 0.0) + th[e]) / 2;
            beta = (th[s] + above) / 2;
        } else if (ds_.sign(s) < 0) {
            alpha = (th[e] + below) / 2;
            beta = (th[s] + std::min(above, 0.0)) / 2;
        } else {
            const double slack = th[e] * th[s] - K_;
            const double width = th[s] - th[e];
            const double delta = std::min({(th[e] - below) / 2, (above - th[s]) / 2, slack / (width + 1.0), 1.0});
            alpha = th[e] - delta;
            beta = th[s] + delta;
        }
        // (x - alpha)(x - beta)
        Polynomial p({alpha * beta, -(alpha + beta), 1.0});
        return normalize_margin(p, ds_, index_range(s, e));
    }

private:
    const DistinctSpectrum& ds_;
    double K_;
    double tol_;
};

// a_2 < 0: p >= 0 exactly on [alpha, beta] and the rows reduce to
// alpha * beta <= -d_max, forcing alpha < 0 < beta. Keeping theta_{i+1} ..
// theta_{j-1} inside (theta_i > 0 and theta_j < 0 outside, or sentinels) is
// possible iff theta_i * theta_j < threshold; the infimum is not attained.
// Feasibility is inherited by wider windows, so the required j only grows
// as i moves down the positive eigenvalues.
class ExteriorScan {
public:
    ExteriorScan(const DistinctSpectrum& ds, double threshold, double tol) : ds_(ds), K_(threshold), tol_(tol) {}

    std::optional<QuadraticCandidate> best() const
    {
        const int D = ds_.count();
        int first_negative = D;
        for (int t = 0; t < D; ++t) {
            if (ds_.sign(t) < 0) {
                first_negative = t;
                break;
            }
        }
        int best_weight = std::numeric_limits<int>::max();
        int best_i = 0, best_j = 0;
        int j = first_negative;
        // i = -1 stands for beta above theta_0; j = D for alpha below theta_d.
        for (int i = -1; i < D && (i < 0 || ds_.sign(i) > 0); ++i) {
            while (j < D && !feasible(i, j))
                ++j;
            if (j >= i + 2 && !(i < 0 && j == D)) {
                const int w = ds_.weight(i + 1, j);
                if (w < best_weight) {
                    best_weight = w;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_weight == std::numeric_limits<int>::max())
            return std::nullopt;
        std::vector<int> negative;
        for (int t = 0; t <= best_i; ++t)
            negative.push_back(t);
        for (int t = best_j; t < D; ++t)
            negative.push_back(t);
        return QuadraticCandidate{best_weight, witness(best_i, best_j, negative), negative};
    }

private:
    bool feasible(int i, int j) const
    {
        if (i < 0 || j >= ds_.count())
            return true;
        return ds_.thetas[i] * ds_.thetas[j] < K_ - tol_;
    }

    Polynomial witness(int i, int j, const std::vector<int>& negative) const
    {
        const auto& th = ds_.thetas;
        const int D = ds_.count();
        double alpha, beta;
        if (i >= 0 && j < D) {
            const double slack = K_ - th[i] * th[j];
            const double a_room = (std::min(th[j - 1], 0.0) - th[j]) / 2;
            const double b_room = (th[i] - std::max(th[i + 1], 0.0)) / 2;
            const double delta = std::min({a_room, b_room, slack / (th[i] - th[j])});
            alpha = th[j] + delta;
            beta = th[i] - delta;
        } else if (i < 0) {
            alpha = (th[j] + std::min(th[j - 1], 0.0)) / 2;
            beta = std::max(K_ / alpha, std::max(th[0], 0.0)) + 1.0;
        } else {
            beta = (th[i] + std::max(th[i + 1], 0.0)) / 2;
            alpha = std::min(K_ / beta, std::min(th[D - 1], 0.0)) - 1.0;
        }
        // -(x - alpha)(x - beta)
        Polynomial p({-alpha * beta, alpha + beta, -1.0});
        return normalize_margin(p, ds_, negative);
    }

    const DistinctSpectrum& ds_;
    double K_;
    double tol_;
};

} // namespace

AlphaBoundResult optimize_k2(const DistinctSpectrum& ds, const DiagonalProfile& prof)
{
    if (prof.k < 2)
        throw ContractError("optimize_k2: diagonal profile must cover k = 2");
    if (edgeless(ds))
        return trivial_result(ds, 2, AlphaMethod::k2_two_pointer);

    const double rho = ds.spectral_radius();
    const double tol = 1e-9 * std::max(1.0, rho * rho);

    AlphaBoundResult best = trivial_result(ds, 2, AlphaMethod::k2_two_pointer);
    auto consider = [&](int value, const Polynomial& p, const std::vector<int>& negative) {
        if (value < best.value)
            best = {value, p.padded(2), negative, AlphaMethod::k2_two_pointer};
    };

    const auto linear = optimize_k1(ds);
    consider(linear.value, linear.witness, linear.negative_set);
    if (auto c = InteriorScan(ds, -static_cast<double>(prof.d_min), tol).best())
        consider(c->value, c->witness, c->negative);
    if (auto c = ExteriorScan(ds, -static_cast<double>(prof.d_max), tol).best())
        consider(c->value, c->witness, c->negative);
    return best;
}

// ---------------------------------------------------------------- closed-walk rows

std::vector<std::pair<std::int64_t, std::int64_t>> convex_hull(std::vector<std::pair<std::int64_t, std::int64_t>> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2)
        return pts;

    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    // All points collinear: the chain degenerates to the two endpoints.
    return hull;
}

namespace {

std::vector<double> diagonal_row(const std::vector<std::int64_t>& walks, int k)
{
    std::vector<double> row(k + 1);
    for (int i = 0; i <= k; ++i)
        row[i] = static_cast<double>(walks[i]);
    return row;
}

} // namespace

LinearConstraintSystem full_diagonal_constraints(const DiagonalProfile& prof, int k)
{
    if (k > prof.k)
        throw ContractError("diagonal profile does not cover the requested k");
    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& row : prof.diag)
        distinct.emplace(row.begin(), row.begin() + k + 1);
    LinearConstraintSystem sys(k + 1);
    for (const auto& walks : distinct)
        sys.add(diagonal_row(walks, k), Relation::greater_equal, 0.0, RowTag::diagonal);
    return sys;
}

LinearConstraintSystem prune_diagonal_constraints(const DiagonalProfile& prof, int k)
{
    if (k < 1)
        throw ContractError("prune_diagonal_constraints: k must be at least 1");
    if (k > prof.k)
        throw ContractError("diagonal profile does not cover the requested k");
    LinearConstraintSystem sys(k + 1);
    if (k == 1) {
        sys.add({1.0, 0.0}, Relation::greater_equal, 0.0, RowTag::diagonal);
    } else if (k == 2) {
        sys.add({1.0, 0.0, static_cast<double>(prof.d_min)}, Relation::greater_equal, 0.0, RowTag::diagonal);
        if (prof.d_max != prof.d_min)
            sys.add({1.0, 0.0, static_cast<double>(prof.d_max)}, Relation::greater_equal, 0.0, RowTag::diagonal);
    } else if (k == 3) {
        for (auto [deg, closed3] : convex_hull(prof.hull_points))
            sys.add({1.0, 0.0, static_cast<double>(deg), static_cast<double>(closed3)}, Relation::greater_equal, 0.0,
                    RowTag::diagonal);
    } else {
        return full_diagonal_constraints(prof, k);
    }
    return sys;
}

// ---------------------------------------------------------------- fixed k

namespace {

struct NegativeSetCandidate {
    std::vector<std::pair<int, int>> runs;  // inclusive [start, end], increasing, separated by >= 1 index
    int weight = 0;
};

void enumerate_runs(const DistinctSpectrum& ds, int max_runs, int min_weight, int next_start,
                    NegativeSetCandidate& current, std::vector<NegativeSetCandidate>& out)
{
    if (!current.runs.empty() && current.weight >= min_weight)
        out.push_back(current);
    if (static_cast<int>(current.runs.size()) == max_runs)
        return;
    for (int s = next_start; s < ds.count(); ++s) {
        for (int e = s; e < ds.count(); ++e) {
            current.runs.emplace_back(s, e);
            current.weight += ds.weight(s, e + 1);
            enumerate_runs(ds, max_runs, min_weight, e + 2, current, out);
            current.weight -= ds.weight(s, e + 1);
            current.runs.pop_back();
        }
    }
}

} // namespace

AlphaBoundResult optimize_fixed_k(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k,
                                  const FixedKOptions& options)
{
    if (k < 1 || k > 5)
        throw ContractError("optimize_fixed_k: k must be in [1, 5], got " + std::to_string(k));
    if (prof.k < k)
        throw ContractError("optimize_fixed_k: diagonal profile must cover k");
    if (edgeless(ds))
        return trivial_result(ds, k, AlphaMethod::fixed_k_enum);

    const int n = ds.order();
    AlphaBoundResult incumbent = k == 1 ? trivial_result(ds, k, AlphaMethod::fixed_k_enum)
                                        : optimize_fixed_k(ds, prof, k - 1, options);
    incumbent.witness = incumbent.witness.padded(k);
    incumbent.method = AlphaMethod::fixed_k_enum;

    // Only negative sets heavier than the incumbent's can improve it. A set
    // covering the whole spectrum is impossible: tr p(A) >= 0 by the
    // closed-walk rows, so p cannot be negative on every eigenvalue.
    const int min_weight = n - incumbent.value + 1;
    std::vector<NegativeSetCandidate> candidates;
    NegativeSetCandidate scratch;
    enumerate_runs(ds, k / 2 + 1, min_weight, 0, scratch, candidates);
    std::erase_if(candidates, [n](const NegativeSetCandidate& c) { return c.weight >= n; });
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.weight != b.weight)
            return a.weight > b.weight;
        return a.runs < b.runs;
    });

    const LinearConstraintSystem diagonal =
        options.prune_diagonal ? prune_diagonal_constraints(prof, k) : full_diagonal_constraints(prof, k);

    for (const auto& cand : candidates) {
        LinearConstraintSystem sys = diagonal;
        std::vector<int> negative;
        for (auto [s, e] : cand.runs) {
            for (int j = s; j <= e; ++j) {
                sys.add(power_row(ds.thetas[j], k), Relation::less_equal, -1.0, RowTag::eigenvalue_sign);
                negative.push_back(j);
            }
        }
        if (auto a = feasible(sys, options.feasibility))
            return {n - cand.weight, Polynomial(*a), negative, AlphaMethod::fixed_k_enum};
    }
    return incumbent;
}

} // namespace inertia
