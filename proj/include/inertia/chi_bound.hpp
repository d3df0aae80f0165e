#pragma once

#include "inertia/alpha_bound.hpp"
#include "inertia/feasibility.hpp"
#include "inertia/graph.hpp"
#include "inertia/polynomial.hpp"
#include "inertia/spectrum.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace inertia {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

enum class ChiMethod { k1, k2_breakpoints, fixed_k_enum, first_bound, evaluate_only, milp_reference };

std::string to_string(ChiMethod m);

/// Lower bound 1 + n_minus / n_plus on chi_k. Oriented so that n_minus >= n_plus
/// (the witness is negated when needed); zeros of the witness count in neither.
struct ChiBoundResult {
    int n_plus = 0;
    int n_minus = 0;
    Polynomial witness;
    ChiMethod method = ChiMethod::evaluate_only;

    Rational value() const { return Rational(1) + Rational(n_minus, n_plus); }
};

inline constexpr double default_zero_tolerance = 1e-7;

/// 1 + max(n_-/n_+, n_+/n_-) for a witness with sum_j m_j p(theta_j) = 0.
/// |p(theta_j)| <= zero_tol * max_j |p(theta_j)| counts as zero.
/// Throws ContractError if the trace condition fails and UndefinedBoundError
/// if p vanishes on the spectrum.
ChiBoundResult evaluate_second_bound(const Polynomial& p, const DistinctSpectrum& ds,
                                     double zero_tol = default_zero_tolerance);

/// p(x) = x: strict sign counts. UndefinedBoundError if a sign class is empty.
ChiBoundResult optimize_second_k1(const DistinctSpectrum& ds);

/// Scan of p_a(x) = x^2 + a x - 2|E|/n over the breakpoints, the midpoints
/// between them and two outer sentinels, folded with the linear optimum.
/// Valid as a chromatic bound only for 2-partially walk-regular graphs; the
/// caller is responsible for that check.
ChiBoundResult optimize_second_k2(const DistinctSpectrum& ds, std::int64_t edge_count, int n);

/// Best sign pattern over degree <= k polynomials (1 <= k <= 5) with zero
/// trace. Throws InapplicableError unless the graph is k-partially
/// walk-regular and UndefinedBoundError if no pattern has both signs.
ChiBoundResult optimize_second_fixed_k(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k,
                                       const FeasibilityOptions& options = {});

/// n / alpha_result.value.
Rational first_bound(const AlphaBoundResult& alpha_result, int n);

} // namespace inertia
