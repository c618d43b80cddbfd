#include "eprb/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace eprb::lp {

namespace {

// Column j of [A | I]: structural variables first, then slacks.
double column_entry(const Problem& p, std::size_t row, std::size_t j) {
    if (j < p.num_vars) return p.row_coeff[row][j];
    return (j - p.num_vars) == row ? 1.0 : 0.0;
}

}  // namespace

Solution maximize(const Problem& p) {
    const std::size_t m = p.rhs.size();
    const std::size_t n = p.num_vars;
    const std::size_t total = n + m;

    if (p.row_coeff.size() != m || p.objective.size() != n)
        throw Error("lp: inconsistent problem dimensions");
    for (std::size_t r = 0; r < m; ++r) {
        if (p.row_coeff[r].size() != n) throw Error("lp: ragged constraint row");
        if (p.rhs[r] < 0.0)
            throw Error("lp: negative right-hand side in row " + std::to_string(r));
    }

    // Basis = slacks, B^-1 = I, basic values = b.
    std::vector<std::size_t> basis(m);
    std::vector<bool> is_basic(total, false);
    for (std::size_t r = 0; r < m; ++r) {
        basis[r] = n + r;
        is_basic[n + r] = true;
    }
    std::vector<std::vector<double>> binv(m, std::vector<double>(m, 0.0));
    for (std::size_t r = 0; r < m; ++r) binv[r][r] = 1.0;
    std::vector<double> xb = p.rhs;

    std::vector<double> y(m);       // simplex multipliers c_B' B^-1
    std::vector<double> d(m);       // B^-1 A_j for the entering column
    Solution sol;

    for (sol.pivots = 0; sol.pivots < kMaxPivots; ++sol.pivots) {
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0.0;
            for (std::size_t r = 0; r < m; ++r)
                if (basis[r] < n) acc += p.objective[basis[r]] * binv[r][i];
            y[i] = acc;
        }

        // Bland: entering variable is the lowest index with positive reduced cost.
        std::size_t entering = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (is_basic[j]) continue;
            double reduced = (j < n) ? p.objective[j] : 0.0;
            for (std::size_t r = 0; r < m; ++r) reduced -= y[r] * column_entry(p, r, j);
            if (reduced > kPivotTol) {
                entering = j;
                break;
            }
        }
        if (entering == total) break;  // optimal

        for (std::size_t r = 0; r < m; ++r) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) acc += binv[r][i] * column_entry(p, i, entering);
            d[r] = acc;
        }

        // Ratio test; ties broken on the smallest basic variable index (Bland).
        std::size_t leave = m;
        double theta = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (d[r] <= kPivotTol) continue;
            const double ratio = xb[r] / d[r];
            if (leave == m || ratio < theta - kPivotTol ||
                (std::abs(ratio - theta) <= kPivotTol && basis[r] < basis[leave])) {
                leave = r;
                theta = ratio;
            }
        }
        if (leave == m) throw Error("lp: unbounded problem");

        // Pivot: update basic values and the basis inverse in place.
        theta = xb[leave] / d[leave];
        for (std::size_t r = 0; r < m; ++r)
            if (r != leave) xb[r] -= theta * d[r];
        xb[leave] = theta;

        const double pivot = d[leave];
        for (std::size_t i = 0; i < m; ++i) binv[leave][i] /= pivot;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || std::abs(d[r]) == 0.0) continue;
            const double factor = d[r];
            for (std::size_t i = 0; i < m; ++i) binv[r][i] -= factor * binv[leave][i];
        }

        is_basic[basis[leave]] = false;
        is_basic[entering] = true;
        basis[leave] = entering;
    }
    if (sol.pivots >= kMaxPivots)
        throw SolverStall("lp: pivot cap reached (" + std::to_string(kMaxPivots) + ")");

    sol.x.assign(n, 0.0);
    sol.value = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) {
            sol.x[basis[r]] = xb[r];
            sol.value += p.objective[basis[r]] * xb[r];
        }
    }
    return sol;
}

}  // namespace eprb::lp
