#pragma once

// Small dense LP maximizer used by the quadruple solver. Handles the form
//
//     maximize c'x   subject to  A x <= b,  x >= 0,  b >= 0,
//
// starting from the all-slack basis (feasible because b >= 0). Revised
// simplex with an explicit basis inverse; entering and leaving variables
// follow Bland's rule, which terminates on the highly degenerate instances
// this project produces. Not a general-purpose solver.

#include <cstddef>
#include <vector>

#include "eprb/errors.hpp"

namespace eprb::lp {

// Pivot cap: these problems have at most a few dozen rows, so running into
// the cap means a bug, not a hard instance.
inline constexpr int kMaxPivots = 10'000;

inline constexpr double kPivotTol = 1e-9;

struct Problem {
    std::size_t num_vars = 0;
    std::vector<std::vector<double>> row_coeff;  // one entry per constraint
    std::vector<double> rhs;                     // nonnegative
    std::vector<double> objective;
};

struct Solution {
    double value = 0.0;
    std::vector<double> x;
    int pivots = 0;
};

// Throws SolverStall if the pivot cap is reached, Error on an unbounded or
// malformed problem.
Solution maximize(const Problem& problem);

}  // namespace eprb::lp
