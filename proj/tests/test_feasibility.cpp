#include "inertia/errors.hpp"
#include "inertia/feasibility.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace inertia;

namespace {

// First grid point of [-10, 10]^dim at the given resolution that satisfies
// every row, if any.
bool grid_feasible(const LinearConstraintSystem& sys, double step)
{
    const int dim = sys.dim();
    const int per_axis = static_cast<int>(std::lround(20.0 / step)) + 1;
    std::vector<int> idx(dim, 0);
    std::vector<double> x(dim);
    while (true) {
        for (int i = 0; i < dim; ++i)
            x[i] = -10.0 + idx[i] * step;
        if (sys.satisfied_by(x, 0.0))
            return true;
        int pos = 0;
        while (pos < dim && ++idx[pos] == per_axis)
            idx[pos++] = 0;
        if (pos == dim)
            return false;
    }
}

LinearConstraintSystem random_system(std::mt19937& rng, int dim, int rows, bool unit_margins)
{
    std::uniform_real_distribution<double> coef(-3, 3);
    std::uniform_int_distribution<int> rel(0, 2);
    LinearConstraintSystem sys(dim);
    for (int r = 0; r < rows; ++r) {
        std::vector<double> c(dim);
        for (auto& v : c)
            v = std::round(coef(rng) * 2) / 2;
        const int kind = rel(rng);
        if (unit_margins) {
            if (kind == 0)
                sys.add(c, Relation::greater_equal, 1.0);
            else if (kind == 1)
                sys.add(c, Relation::less_equal, -1.0);
            else
                sys.add(c, Relation::greater_equal, 0.0);
        } else {
            sys.add(c, kind == 0 ? Relation::greater_equal : Relation::less_equal, std::round(coef(rng)));
        }
    }
    return sys;
}

} // namespace

TEST_SUITE("feasibility")
{
    TEST_CASE("small examples")
    {
        LinearConstraintSystem one(1);
        one.add({1.0}, Relation::greater_equal, 0.0);
        const auto w = feasible(one);
        REQUIRE(w);
        CHECK((*w)[0] == doctest::Approx(0.0));

        LinearConstraintSystem contradiction(1);
        contradiction.add({1.0}, Relation::greater_equal, 1.0).add({1.0}, Relation::less_equal, -1.0);
        CHECK_FALSE(feasible(contradiction));

        const double phi = (1 + std::sqrt(5.0)) / 2;
        LinearConstraintSystem quad(3);
        quad.add({1, 2, 4}, Relation::greater_equal, 1.0)
            .add({1, phi - 1, (phi - 1) * (phi - 1)}, Relation::less_equal, -1.0)
            .add({1, -phi, phi * phi}, Relation::less_equal, -1.0)
            .add({1, 0, 2}, Relation::greater_equal, 0.0);
        const auto q = feasible(quad);
        REQUIRE(q);
        CHECK(quad.satisfied_by(*q));
        // x^2 + x - 2 scaled up is a witness.
        CHECK(quad.satisfied_by({-2 * 1.1, 1.1, 1.1}));
    }

    TEST_CASE("equalities and contracts")
    {
        LinearConstraintSystem sys(2);
        sys.add({1, 1}, Relation::equal, 3.0).add({1, -1}, Relation::equal, 1.0);
        const auto w = feasible(sys);
        REQUIRE(w);
        CHECK((*w)[0] == doctest::Approx(2));
        CHECK((*w)[1] == doctest::Approx(1));
        CHECK_THROWS_AS(sys.add({1}, Relation::equal, 0), ContractError);
        CHECK_THROWS_AS(feasible(LinearConstraintSystem(7)), CapabilityError);
        CHECK(feasible(LinearConstraintSystem(7), {1e-9, 8}));
    }

    TEST_CASE("witnesses satisfy every row")
    {
        std::mt19937 rng(17);
        int found = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const int dim = 1 + trial % 5;
            const auto sys = random_system(rng, dim, 2 + trial % 9, false);
            if (const auto w = feasible(sys)) {
                ++found;
                CHECK(sys.satisfied_by(*w));
            }
        }
        CHECK(found > 20);
    }

    TEST_CASE("unit margins scale")
    {
        std::mt19937 rng(23);
        int checked = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const int dim = 2 + trial % 4;
            const auto sys = random_system(rng, dim, 3 + trial % 6, true);
            LinearConstraintSystem doubled(dim);
            for (const auto& row : sys.rows())
                doubled.add(row.coeffs, row.rel, 2 * row.rhs);
            const auto a = feasible(sys);
            const auto b = feasible(doubled);
            CHECK(a.has_value() == b.has_value());
            if (a) {
                ++checked;
                std::vector<double> scaled = *a;
                for (auto& v : scaled)
                    v *= 2;
                CHECK(doubled.satisfied_by(scaled));
            }
        }
        CHECK(checked > 20);
    }

    TEST_CASE("agreement with grid search")
    {
        std::mt19937 rng(29);
        int grid_hits = 0;
        for (int trial = 0; trial < 120; ++trial) {
            const int dim = trial < 116 ? 1 + trial % 2 : 3;
            const auto sys = random_system(rng, dim, 2 + trial % 5, false);
            const bool grid = grid_feasible(sys, 0.05);
            const bool exact = feasible(sys).has_value();
            if (grid) {
                ++grid_hits;
                CHECK(exact);
            }
        }
        CHECK(grid_hits > 10);
    }
}
