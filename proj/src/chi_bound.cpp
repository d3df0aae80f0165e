#include "inertia/chi_bound.hpp"

#include "inertia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

namespace inertia {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(ChiMethod m)
{
    switch (m) {
    case ChiMethod::k1:
        return "k1";
    case ChiMethod::k2_breakpoints:
        return "k2_breakpoints";
    case ChiMethod::fixed_k_enum:
        return "fixed_k_enum";
    case ChiMethod::first_bound:
        return "first_bound";
    case ChiMethod::evaluate_only:
        return "evaluate_only";
    case ChiMethod::milp_reference:
        return "milp_reference";
    }
    return "?";
}

namespace {

// n_minus / n_plus with n_plus <= n_minus after orientation.
struct Counts {
    int plus = 0;
    int minus = 0;
};

bool defined(const Counts& c)
{
    return c.plus > 0 && c.minus > 0;
}

// True if `a` (oriented) beats `b`: larger ratio, then smaller n_plus.
bool better(const Counts& a, const Counts& b)
{
    const std::int64_t lhs = static_cast<std::int64_t>(a.minus) * b.plus;
    const std::int64_t rhs = static_cast<std::int64_t>(b.minus) * a.plus;
    if (lhs != rhs)
        return lhs > rhs;
    return a.plus < b.plus;
}

ChiBoundResult oriented(Counts c, Polynomial p, ChiMethod method)
{
    if (c.plus > c.minus) {
        std::swap(c.plus, c.minus);
        p = -p;
    }
    return {c.plus, c.minus, std::move(p), method};
}

} // namespace

ChiBoundResult evaluate_second_bound(const Polynomial& p, const DistinctSpectrum& ds, double zero_tol)
{
    double trace = 0.0;
    double mass = 0.0;
    double peak = 0.0;
    std::vector<double> values(ds.count());
    for (int j = 0; j < ds.count(); ++j) {
        values[j] = p(ds.thetas[j]);
        trace += ds.mults[j] * values[j];
        mass += ds.mults[j] * std::abs(values[j]);
        peak = std::max(peak, std::abs(values[j]));
    }
    if (peak == 0.0)
        throw UndefinedBoundError("evaluate_second_bound: polynomial vanishes on the spectrum");
    if (std::abs(trace) > 1e-6 * mass)
        throw ContractError("evaluate_second_bound: trace of p(A) is " + std::to_string(trace) + ", expected 0");

    Counts c;
    for (int j = 0; j < ds.count(); ++j) {
        if (std::abs(values[j]) <= zero_tol * peak)
            continue;
        (values[j] > 0 ? c.plus : c.minus) += ds.mults[j];
    }
    if (!defined(c))
        throw UndefinedBoundError("evaluate_second_bound: a sign class is empty");
    return oriented(c, p, ChiMethod::evaluate_only);
}

ChiBoundResult optimize_second_k1(const DistinctSpectrum& ds)
{
    Counts c;
    double smallest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ds.count(); ++j) {
        const int s = ds.sign(j);
        if (s > 0)
            c.plus += ds.mults[j];
        else if (s < 0)
            c.minus += ds.mults[j];
        if (s != 0)
            smallest = std::min(smallest, std::abs(ds.thetas[j]));
    }
    if (!defined(c))
        throw UndefinedBoundError("second bound undefined for k = 1: the spectrum lacks a positive or a negative "
                                  "eigenvalue");
    return oriented(c, Polynomial({0.0, 1.0 / smallest}), ChiMethod::k1);
}

ChiBoundResult optimize_second_k2(const DistinctSpectrum& ds, std::int64_t edge_count, int n)
{
    if (n < 1 || n != ds.order())
        throw ContractError("optimize_second_k2: n does not match the spectrum");
    const double c = 2.0 * static_cast<double>(edge_count) / n;

    // p_a(theta_j) = theta_j * (a - b_j) with b_j = (c - theta_j^2) / theta_j.
    std::vector<double> breakpoints(ds.count(), 0.0);
    std::vector<double> sorted;
    for (int j = 0; j < ds.count(); ++j) {
        if (ds.sign(j) != 0) {
            breakpoints[j] = (c - ds.thetas[j] * ds.thetas[j]) / ds.thetas[j];
            sorted.push_back(breakpoints[j]);
        }
    }
    std::sort(sorted.begin(), sorted.end());
    double scale = 1.0;
    for (double b : sorted)
        scale = std::max(scale, std::abs(b));
    const double tol = 1e-9 * scale;
    sorted.erase(std::unique(sorted.begin(), sorted.end(), [tol](double x, double y) { return y - x <= tol; }),
                 sorted.end());

    std::vector<double> candidates;
    if (!sorted.empty()) {
        candidates.push_back(sorted.front() - 1.0);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            candidates.push_back(sorted[i]);
            if (i + 1 < sorted.size())
                candidates.push_back((sorted[i] + sorted[i + 1]) / 2);
        }
        candidates.push_back(sorted.back() + 1.0);
    }

    std::optional<ChiBoundResult> best;
    auto consider = [&](Counts cnt, const Polynomial& p) {
        if (!defined(cnt))
            return;
        auto r = oriented(cnt, p, ChiMethod::k2_breakpoints);
        if (!best || better({r.n_plus, r.n_minus}, {best->n_plus, best->n_minus}))
            best = std::move(r);
    };

    try {
        const auto linear = optimize_second_k1(ds);
        consider({linear.n_plus, linear.n_minus}, linear.witness.padded(2));
    } catch (const UndefinedBoundError&) {
    }

    for (double a : candidates) {
        Counts cnt;
        for (int j = 0; j < ds.count(); ++j) {
            int s;
            if (ds.sign(j) == 0) {
                s = c > 0 ? -1 : 0;
            } else {
                const double diff = a - breakpoints[j];
                s = std::abs(diff) <= tol ? 0 : ds.sign(j) * (diff > 0 ? 1 : -1);
            }
            if (s > 0)
                cnt.plus += ds.mults[j];
            else if (s < 0)
                cnt.minus += ds.mults[j];
        }
        consider(cnt, Polynomial({-c, a, 1.0}));
    }
    if (!best)
        throw UndefinedBoundError("second bound undefined for k = 2: no quadratic takes both signs");
    return *best;
}

namespace {

// Sign patterns of degree <= k polynomials on theta_0 > ... > theta_d, read
// from the top. Real roots reduce to: a simple or double root at some
// theta_j, or a simple root inside a gap; each costs its multiplicity.
class PatternEnumerator {
public:
    PatternEnumerator(int count, int k) : count_(count), k_(k), current_(count) {}

    std::set<std::vector<int>> run()
    {
        for (int lead : {1, -1})
            visit(0, lead, 0);
        return std::move(out_);
    }

private:
    void visit(int j, int sign, int cost)
    {
        if (j == count_) {
            out_.insert(current_);
            return;
        }
        // Optional root in the gap above theta_j (none above theta_0: the
        // leading sign already covers it).
        for (int gap = 0; gap <= (j > 0 ? 1 : 0); ++gap) {
            const int s = gap ? -sign : sign;
            const int c = cost + gap;
            if (c > k_)
                continue;
            current_[j] = s;
            visit(j + 1, s, c);
            current_[j] = 0;
            if (c + 1 <= k_)
                visit(j + 1, -s, c + 1);
            if (c + 2 <= k_)
                visit(j + 1, s, c + 2);
        }
    }

    int count_;
    int k_;
    std::vector<int> current_;
    std::set<std::vector<int>> out_;
};

struct Pattern {
    std::vector<int> signs;
    Counts counts;
};

} // namespace

ChiBoundResult optimize_second_fixed_k(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k,
                                       const FeasibilityOptions& options)
{
    if (k < 1 || k > 5)
        throw ContractError("optimize_second_fixed_k: k must be in [1, 5], got " + std::to_string(k));
    if (prof.k < k)
        throw ContractError("optimize_second_fixed_k: diagonal profile must cover k");
    if (!is_k_partially_walk_regular(prof, k))
        throw InapplicableError("second bound requires a " + std::to_string(k) + "-partially walk-regular graph");

    std::optional<ChiBoundResult> incumbent;
    if (k > 1) {
        try {
            incumbent = optimize_second_fixed_k(ds, prof, k - 1, options);
            incumbent->witness = incumbent->witness.padded(k);
            incumbent->method = ChiMethod::fixed_k_enum;
        } catch (const UndefinedBoundError&) {
        }
    }

    // p and -p are simultaneously feasible, so keep one orientation per pair.
    std::vector<Pattern> patterns;
    for (const auto& signs : PatternEnumerator(ds.count(), k).run()) {
        Counts c;
        for (int j = 0; j < ds.count(); ++j) {
            if (signs[j] > 0)
                c.plus += ds.mults[j];
            else if (signs[j] < 0)
                c.minus += ds.mults[j];
        }
        if (!defined(c) || c.plus > c.minus)
            continue;
        if (c.plus == c.minus) {
            std::vector<int> neg(signs.size());
            std::transform(signs.begin(), signs.end(), neg.begin(), [](int s) { return -s; });
            if (neg < signs)
                continue;
        }
        if (incumbent && !better(c, {incumbent->n_plus, incumbent->n_minus}))
            continue;
        patterns.push_back({signs, c});
    }
    std::sort(patterns.begin(), patterns.end(), [](const Pattern& a, const Pattern& b) {
        if (better(a.counts, b.counts) != better(b.counts, a.counts))
            return better(a.counts, b.counts);
        return a.signs < b.signs;
    });

    std::vector<double> trace(k + 1, 0.0);
    for (int j = 0; j < ds.count(); ++j) {
        const auto row = power_row(ds.thetas[j], k);
        for (int i = 0; i <= k; ++i)
            trace[i] += ds.mults[j] * row[i];
    }

    for (const auto& pat : patterns) {
        LinearConstraintSystem sys(k + 1);
        sys.add(trace, Relation::equal, 0.0, RowTag::trace);
        for (int j = 0; j < ds.count(); ++j) {
            const auto row = power_row(ds.thetas[j], k);
            if (pat.signs[j] > 0)
                sys.add(row, Relation::greater_equal, 1.0, RowTag::eigenvalue_sign);
            else if (pat.signs[j] < 0)
                sys.add(row, Relation::less_equal, -1.0, RowTag::eigenvalue_sign);
            else
                sys.add(row, Relation::equal, 0.0, RowTag::eigenvalue_sign);
        }
        if (auto a = feasible(sys, options))
            return {pat.counts.plus, pat.counts.minus, Polynomial(*a), ChiMethod::fixed_k_enum};
    }
    if (!incumbent)
        throw UndefinedBoundError("second bound undefined for k = " + std::to_string(k) +
                                  ": no zero-trace polynomial takes both signs");
    return *incumbent;
}

Rational first_bound(const AlphaBoundResult& alpha_result, int n)
{
    if (alpha_result.value < 1)
        throw ContractError("first_bound: alpha bound must be at least 1");
    return Rational(n, alpha_result.value);
}

} // namespace inertia
