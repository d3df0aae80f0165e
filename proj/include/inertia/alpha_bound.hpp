#pragma once

#include "inertia/feasibility.hpp"
#include "inertia/graph.hpp"
#include "inertia/polynomial.hpp"
#include "inertia/spectrum.hpp"

#include <string>
#include <vector>

namespace inertia {

enum class AlphaMethod { k1, k2_two_pointer, fixed_k_enum, evaluate_only, grid_search, milp_reference };

std::string to_string(AlphaMethod m);

/// Upper bound on alpha_k. `negative_set` lists the theta indices the
/// witness certifies as strictly excluded; value = n - their multiplicity.
struct AlphaBoundResult {
    int value = 0;
    Polynomial witness;
    std::vector<int> negative_set;
    AlphaMethod method = AlphaMethod::evaluate_only;
};

/// min{ |i : p(lambda_i) >= w(p)|, |i : p(lambda_i) <= W(p)| } for a given p.
/// Ties within a relative 1e-9 are counted on the inclusive side.
AlphaBoundResult evaluate_bound(const Polynomial& p, const DistinctSpectrum& ds, const DiagonalProfile& prof);

/// Best linear polynomial: min of the nonnegative and nonpositive eigenvalue counts.
AlphaBoundResult optimize_k1(const DistinctSpectrum& ds);

/// Best quadratic polynomial via the two interval scans (a_2 > 0 keeps the
/// interior of the roots negative, a_2 < 0 the exterior), folded with the
/// linear optimum and the trivial bound n.
AlphaBoundResult optimize_k2(const DistinctSpectrum& ds, const DiagonalProfile& prof);

struct FixedKOptions {
    /// Use the pruned closed-walk rows (extreme degrees for k = 2, hull
    /// vertices for k = 3) instead of every distinct per-vertex row.
    bool prune_diagonal = true;
    FeasibilityOptions feasibility{};
};

/// Best polynomial of degree <= k (1 <= k <= 5) by enumerating candidate
/// negative sets, unions of at most floor(k/2)+1 runs of consecutive
/// eigenvalues, in decreasing multiplicity and testing each for a witness
/// with margin 1. The degree k-1 optimum seeds the search.
AlphaBoundResult optimize_fixed_k(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k,
                                  const FixedKOptions& options = {});

/// Closed-walk rows sum_i a_i (A^i)_vv >= 0 reduced to the ones that can be
/// tight: a_0 >= 0 (k = 1), the two extreme degrees (k = 2), the convex hull
/// vertices of {(d(v), 2t(v))} (k = 3), all distinct rows otherwise.
LinearConstraintSystem prune_diagonal_constraints(const DiagonalProfile& prof, int k);

/// Every distinct per-vertex closed-walk row for degree cap k.
LinearConstraintSystem full_diagonal_constraints(const DiagonalProfile& prof, int k);

/// Strict convex hull vertices (no collinear points), counter-clockwise
/// starting from the lowest-then-leftmost point.
std::vector<std::pair<std::int64_t, std::int64_t>> convex_hull(std::vector<std::pair<std::int64_t, std::int64_t>> points);

/// Row sum_i a_i theta^i (coefficients 1, theta, ..., theta^k).
std::vector<double> power_row(double theta, int k);

} // namespace inertia
