#pragma once

#include "inertia/alpha_bound.hpp"
#include "inertia/graph.hpp"
#include "inertia/spectrum.hpp"

#include <optional>
#include <string>

namespace inertia {

struct OracleBudget {
    int max_vertices = 30;
    double max_seconds = 30.0;
};

inline constexpr OracleBudget default_alpha_budget{30, 30.0};
inline constexpr OracleBudget default_chi_budget{20, 30.0};

/// Exact value, or no value plus the reason it was skipped.
struct OracleOutcome {
    std::optional<int> value;
    std::string note;

    explicit operator bool() const noexcept { return value.has_value(); }
};

/// Maximum number of vertices pairwise at distance > k (independence number
/// of G^k), by bitset branch and bound with greedy-colouring bounds.
/// Requires n <= 64 in addition to the budget.
OracleOutcome exact_alpha_k(const Graph& g, int k, const OracleBudget& budget = default_alpha_budget);

/// Chromatic number of G^k: DSATUR backtracking for increasing colour counts,
/// starting from a maximum clique.
OracleOutcome exact_chi_k(const Graph& g, int k, const OracleBudget& budget = default_chi_budget);

/// Size of a maximum clique (n <= 64).
int maximum_clique(const Graph& g);

/// Best value of the inertia-type alpha bound over the coefficient grid
/// {-box, -box + step, ..., box}^(k+1). Ties are counted on the inclusive side.
/// Requires k <= 3 and at most 1e8 grid points (ContractError otherwise).
AlphaBoundResult grid_search_bound(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k, double box,
                                   double step);

} // namespace inertia
