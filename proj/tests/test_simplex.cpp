#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "eprb/rng.hpp"
#include "eprb/simplex.hpp"

using eprb::lp::maximize;
using eprb::lp::Problem;

TEST_CASE("box constraints: optimum at the joint cap") {
    // max x0 + x1  s.t.  x0 <= 3, x1 <= 5, x0 + x1 <= 7
    Problem p;
    p.num_vars = 2;
    p.objective = {1, 1};
    p.row_coeff = {{1, 0}, {0, 1}, {1, 1}};
    p.rhs = {3, 5, 7};
    auto sol = maximize(p);
    CHECK(sol.value == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(sol.x[0] + sol.x[1] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(sol.x[0] <= 3.0 + 1e-9);
    CHECK(sol.x[1] <= 5.0 + 1e-9);
}

TEST_CASE("fractional vertex is found") {
    // max x0 + x1  s.t.  2x0 + x1 <= 2, x0 + 2x1 <= 2; optimum (2/3, 2/3).
    Problem p;
    p.num_vars = 2;
    p.objective = {1, 1};
    p.row_coeff = {{2, 1}, {1, 2}};
    p.rhs = {2, 2};
    auto sol = maximize(p);
    CHECK(sol.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(sol.x[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(sol.x[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("zero right-hand side pins the optimum at zero") {
    Problem p;
    p.num_vars = 2;
    p.objective = {1, 1};
    p.row_coeff = {{1, 0}, {0, 1}};
    p.rhs = {0, 0};
    auto sol = maximize(p);
    CHECK(sol.value == 0.0);
}

TEST_CASE("unconstrained direction is reported as unbounded") {
    Problem p;
    p.num_vars = 2;
    p.objective = {1, 1};
    p.row_coeff = {{1, 0}};
    p.rhs = {4};
    CHECK_THROWS_AS(maximize(p), eprb::Error);
}

TEST_CASE("negative rhs is rejected") {
    Problem p;
    p.num_vars = 1;
    p.objective = {1};
    p.row_coeff = {{1}};
    p.rhs = {-1};
    CHECK_THROWS_AS(maximize(p), eprb::Error);
}

namespace {

// Independent optimality oracle: enumerate every basis of [A | I], solve the
// square system, and take the best feasible vertex. Small sizes only.
double best_vertex_by_enumeration(const Problem& p) {
    const std::size_t m = p.rhs.size();
    const std::size_t total = p.num_vars + m;
    std::vector<std::size_t> cols(total);
    for (std::size_t j = 0; j < total; ++j) cols[j] = j;

    double best = 0.0;  // x = 0 is feasible (rhs >= 0)
    std::vector<std::size_t> basis(m);
    std::vector<bool> pick(total, false);
    std::fill(pick.begin(), pick.begin() + m, true);

    do {
        std::size_t k = 0;
        for (std::size_t j = 0; j < total; ++j)
            if (pick[j]) basis[k++] = j;

        // solve B xb = rhs by Gaussian elimination
        std::vector<std::vector<double>> mat(m, std::vector<double>(m + 1, 0.0));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                const std::size_t j = basis[c];
                mat[r][c] = j < p.num_vars ? p.row_coeff[r][j] : (j - p.num_vars == r ? 1.0 : 0.0);
            }
            mat[r][m] = p.rhs[r];
        }
        bool singular = false;
        for (std::size_t col = 0; col < m && !singular; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < m; ++r)
                if (std::abs(mat[r][col]) > std::abs(mat[piv][col])) piv = r;
            if (std::abs(mat[piv][col]) < 1e-12) {
                singular = true;
                break;
            }
            std::swap(mat[col], mat[piv]);
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col) continue;
                const double f = mat[r][col] / mat[col][col];
                for (std::size_t c = col; c <= m; ++c) mat[r][c] -= f * mat[col][c];
            }
        }
        if (singular) continue;

        bool feasible = true;
        double value = 0.0;
        for (std::size_t r = 0; r < m && feasible; ++r) {
            const double xr = mat[r][m] / mat[r][r];
            if (xr < -1e-9) feasible = false;
            if (basis[r] < p.num_vars) value += p.objective[basis[r]] * xr;
        }
        if (feasible) best = std::max(best, value);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace

TEST_CASE("simplex optimum equals the best enumerated vertex") {
    eprb::Xoshiro256ss rng(1234);
    int solved = 0;
    while (solved < 300) {
        const std::size_t n = 2 + rng.next_below(3);
        const std::size_t m = 2 + rng.next_below(3);
        Problem p;
        p.num_vars = n;
        p.objective.assign(n, 0.0);
        p.row_coeff.assign(m, std::vector<double>(n, 0.0));
        p.rhs.assign(m, 0.0);
        for (auto& c : p.objective) c = static_cast<double>(rng.next_below(4));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t j = 0; j < n; ++j)
                p.row_coeff[r][j] = static_cast<double>(rng.next_below(4));
            p.rhs[r] = static_cast<double>(rng.next_below(7));
        }
        // skip problems where a profitable variable is entirely unconstrained
        bool bounded = true;
        for (std::size_t j = 0; j < n && bounded; ++j) {
            if (p.objective[j] == 0.0) continue;
            bool covered = false;
            for (std::size_t r = 0; r < m; ++r) covered = covered || p.row_coeff[r][j] > 0;
            bounded = covered;
        }
        if (!bounded) continue;
        ++solved;

        const auto sol = maximize(p);
        CHECK(sol.value == doctest::Approx(best_vertex_by_enumeration(p)).epsilon(1e-9));
    }
}

TEST_CASE("random degenerate 0/1 problems satisfy weak duality against enumeration") {
    // On problems with 0/1 coefficients and small integer rhs, compare the
    // simplex optimum with an exhaustive integer grid search; the LP optimum
    // must dominate it, and the solution must be feasible.
    eprb::Xoshiro256ss rng(88);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 2 + rng.next_below(3);  // 2..4 vars
        const std::size_t m = 1 + rng.next_below(4);  // 1..4 rows
        Problem p;
        p.num_vars = n;
        p.objective.assign(n, 1.0);
        p.row_coeff.assign(m, std::vector<double>(n, 0.0));
        p.rhs.assign(m, 0.0);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t j = 0; j < n; ++j)
                p.row_coeff[r][j] = static_cast<double>(rng.next_below(2));
            p.rhs[r] = static_cast<double>(rng.next_below(6));
        }
        // Bound the grid: any variable missing from every row is unbounded.
        bool bounded = true;
        for (std::size_t j = 0; j < n && bounded; ++j) {
            bool covered = false;
            for (std::size_t r = 0; r < m; ++r) covered = covered || p.row_coeff[r][j] > 0;
            bounded = covered;
        }
        if (!bounded) continue;

        const auto sol = maximize(p);

        for (std::size_t r = 0; r < m; ++r) {
            double lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += p.row_coeff[r][j] * sol.x[j];
            CHECK(lhs <= p.rhs[r] + 1e-9);
        }
        for (double v : sol.x) CHECK(v >= -1e-9);

        std::vector<std::size_t> grid(n, 0);
        double best_int = 0;
        while (true) {
            bool feasible = true;
            double value = 0;
            for (std::size_t r = 0; r < m && feasible; ++r) {
                double lhs = 0;
                for (std::size_t j = 0; j < n; ++j) lhs += p.row_coeff[r][j] * grid[j];
                feasible = lhs <= p.rhs[r];
            }
            if (feasible)
                for (std::size_t j = 0; j < n; ++j) value += static_cast<double>(grid[j]);
            best_int = std::max(best_int, feasible ? value : 0.0);

            std::size_t pos = 0;
            while (pos < n && ++grid[pos] > 6) grid[pos++] = 0;
            if (pos == n) break;
        }
        CHECK(sol.value >= best_int - 1e-9);
    }
}
