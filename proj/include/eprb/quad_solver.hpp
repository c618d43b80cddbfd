#pragma once

// Maximum quadruple fraction Delta = K_max / N.
//
// A quadruple (x, y, z, w) consumes one value-matching pair from each data
// set: (x,z) from set ac, (x,w) from ad, (y,z) from bc, (y,w) from bd.
// Which quadruples can coexist depends on the data only through the
// per-setting cell counts, so the permutation search reduces to a 16-variable
// integer program: maximize the total quadruple count subject to one <=
// constraint per (setting, cell). The LP relaxation is solved first; on the
// instances studied so far its optimum is integral, but a branch-and-bound
// fallback guarantees an exact K_max regardless.

#include <array>
#include <cstdint>
#include <string>

#include "eprb/statistics.hpp"
#include "eprb/types.hpp"

namespace eprb {

// Integral quadruple counts are within this distance of an integer before the
// LP solution is accepted as the integer optimum.
inline constexpr double kIntegralityTol = 1e-6;

// Slack allowed when flagging the inequalities; correlations are exact
// rationals, only the 4 - 2*Delta arithmetic is floating point.
inline constexpr double kInequalityEps = 1e-9;

// Exhaustive permutation search is limited to this many pairs per set.
inline constexpr std::size_t kBruteForceMaxN = 8;

// Variable index for quadruple values (x, y, z, w), sign_index convention.
constexpr int tally_index(int ix, int iy, int iz, int iw) {
    return (ix << 3) | (iy << 2) | (iz << 1) | iw;
}

// 16 quadruple counts indexed by tally_index.
struct QuadrupleTally {
    std::array<std::int64_t, 16> n{};

    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto v : n) t += v;
        return t;
    }
};

// The 16-variable LP: maximize sum(n) subject to row r: sum over the
// variables projecting onto row r's cell <= rhs[r]. Row layout is
// 4*setting + 2*sign_index(first) + sign_index(second), where the projected
// components per setting are ac:(x,z), ad:(x,w), bc:(y,z), bd:(y,w).
struct LpProblem {
    std::array<double, 16> rhs{};
    std::uint64_t n_total = 0;
    std::uint64_t source_digest = 0;
};

// Whether variable `var` contributes to constraint `row`; the 0/1 matrix is a
// fixed property of the reduction.
constexpr bool lp_row_has_var(int row, int var) {
    const int ix = (var >> 3) & 1, iy = (var >> 2) & 1;
    const int iz = (var >> 1) & 1, iw = var & 1;
    const int s = row / 4, cell = row % 4;
    int first = 0, second = 0;
    switch (s) {
        case 0: first = ix; second = iz; break;
        case 1: first = ix; second = iw; break;
        case 2: first = iy; second = iz; break;
        default: first = iy; second = iw; break;
    }
    return (first << 1 | second) == cell;
}

LpProblem build_lp(const PairCounts& counts);

struct LpSolution {
    double value = 0.0;
    std::array<double, 16> tally{};
};

// Optimal basic solution of the relaxation.
LpSolution solve_lp(const LpProblem& lp);

enum class SolveMethod { LpIntegral, BranchAndBound, BruteForce };

const char* solve_method_name(SolveMethod m);

struct QuadResult {
    std::uint64_t k_max = 0;
    double delta = 0.0;  // k_max / N
    QuadrupleTally tally;
    SolveMethod method = SolveMethod::LpIntegral;
    double lp_value = 0.0;
    std::uint64_t n_total = 0;
    std::uint64_t source_digest = 0;
};

// Exact K_max: LP first, rounded if integral, branch-and-bound otherwise.
QuadResult solve_quadruples(const PairCounts& counts);

struct IpSolution {
    std::uint64_t value = 0;
    QuadrupleTally tally;
};

// Exact integer optimum by branch-and-bound on the 16 variables, using the LP
// relaxation for bounds. Called by solve_quadruples when the relaxation is
// fractional; exposed so the fallback path can be exercised directly.
IpSolution branch_and_bound(const LpProblem& lp);

// Exact K_max over explicit reshufflings of the first N pairs of each set.
// Independent of the LP reduction; the search works on pair positions, with
// two exactness-preserving cuts (quadruples ordered by their set-ac position,
// and equal-valued positions within a set tried once). Throws TooLarge when
// N > kBruteForceMaxN.
std::uint64_t brute_force_quadruples(const ExperimentData& data);

struct InequalityCheck {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double s_chsh = 0.0;
    double delta = 0.0;
    double bound = 0.0;  // 4 - 2*delta
    bool c_plus_ok = false;
    bool c_minus_ok = false;
    bool s_chsh_ok = false;
    bool chsh2_applicable = false;  // delta == 1: the S <= 2 special case
    bool chsh2_ok = false;
};

// Flags the three inequalities against 4 - 2*delta (slack kInequalityEps) and
// the S <= 2 specialization when delta = 1. Throws MismatchedProvenance if
// the inputs were not computed from the same data.
InequalityCheck verify_inequality(const CorrelationSet& corr, const QuadResult& quad);

}  // namespace eprb
