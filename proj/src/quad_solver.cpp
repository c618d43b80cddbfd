#include "eprb/quad_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "eprb/simplex.hpp"

namespace eprb {

namespace {

lp::Problem relaxation(const LpProblem& lp) {
    lp::Problem p;
    p.num_vars = 16;
    p.objective.assign(16, 1.0);
    p.rhs.assign(lp.rhs.begin(), lp.rhs.end());
    p.row_coeff.assign(16, std::vector<double>(16, 0.0));
    for (int row = 0; row < 16; ++row)
        for (int var = 0; var < 16; ++var)
            if (lp_row_has_var(row, var)) p.row_coeff[row][var] = 1.0;
    return p;
}

bool nearly_integral(double v) { return std::abs(v - std::round(v)) <= kIntegralityTol; }

}  // namespace

const char* solve_method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::LpIntegral: return "lp-integral";
        case SolveMethod::BranchAndBound: return "branch-and-bound";
        case SolveMethod::BruteForce: return "brute-force";
    }
    return "?";
}

LpProblem build_lp(const PairCounts& counts) {
    LpProblem lp;
    lp.n_total = counts.n;
    lp.source_digest = counts.source_digest;
    for (int s = 0; s < 4; ++s)
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                lp.rhs[4 * s + 2 * u + v] = static_cast<double>(counts.counts[s][u][v]);
    return lp;
}

LpSolution solve_lp(const LpProblem& lp) {
    const lp::Solution s = lp::maximize(relaxation(lp));
    LpSolution out;
    out.value = s.value;
    std::copy(s.x.begin(), s.x.end(), out.tally.begin());
    return out;
}

QuadResult solve_quadruples(const PairCounts& counts) {
    const LpProblem lp = build_lp(counts);
    const LpSolution relaxed = solve_lp(lp);

    QuadResult result;
    result.n_total = counts.n;
    result.source_digest = counts.source_digest;
    result.lp_value = relaxed.value;

    const bool integral = std::all_of(relaxed.tally.begin(), relaxed.tally.end(),
                                      [](double v) { return nearly_integral(v); });
    if (integral) {
        result.method = SolveMethod::LpIntegral;
        std::int64_t total = 0;
        for (int v = 0; v < 16; ++v) {
            result.tally.n[v] = static_cast<std::int64_t>(std::llround(relaxed.tally[v]));
            total += result.tally.n[v];
        }
        result.k_max = static_cast<std::uint64_t>(total);
    } else {
        const IpSolution exact = branch_and_bound(lp);
        result.method = SolveMethod::BranchAndBound;
        result.tally = exact.tally;
        result.k_max = exact.value;
    }
    result.delta = static_cast<double>(result.k_max) / static_cast<double>(counts.n);
    return result;
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

namespace {

struct BbNode {
    std::array<std::int64_t, 16> lo{};
    std::array<std::int64_t, 16> hi{};
};

// Node relaxation over shifted variables y = n - lo, with explicit upper
// bound rows y_v <= hi_v - lo_v. Returns false when the node is infeasible.
bool solve_node(const LpProblem& lp, const BbNode& node, double& value,
                std::array<double, 16>& solution) {
    lp::Problem p;
    p.num_vars = 16;
    p.objective.assign(16, 1.0);
    p.row_coeff.assign(32, std::vector<double>(16, 0.0));
    p.rhs.assign(32, 0.0);
    for (int row = 0; row < 16; ++row) {
        double slack = lp.rhs[row];
        for (int var = 0; var < 16; ++var) {
            if (!lp_row_has_var(row, var)) continue;
            p.row_coeff[row][var] = 1.0;
            slack -= static_cast<double>(node.lo[var]);
        }
        if (slack < 0.0) return false;
        p.rhs[row] = slack;
    }
    for (int var = 0; var < 16; ++var) {
        const std::int64_t width = node.hi[var] - node.lo[var];
        if (width < 0) return false;
        p.row_coeff[16 + var][var] = 1.0;
        p.rhs[16 + var] = static_cast<double>(width);
    }

    const lp::Solution s = lp::maximize(p);
    value = s.value;
    for (int var = 0; var < 16; ++var) solution[var] = s.x[var];
    return true;
}

}  // namespace

IpSolution branch_and_bound(const LpProblem& lp) {
    // Every variable sits in four constraints with unit coefficient, so its
    // value can never exceed the smallest of those right-hand sides.
    BbNode root;
    for (int var = 0; var < 16; ++var) {
        double cap = lp.rhs[0];
        bool seen = false;
        for (int row = 0; row < 16; ++row) {
            if (!lp_row_has_var(row, var)) continue;
            cap = seen ? std::min(cap, lp.rhs[row]) : lp.rhs[row];
            seen = true;
        }
        root.hi[var] = static_cast<std::int64_t>(std::floor(cap + kIntegralityTol));
    }

    IpSolution best;  // the all-zero tally is always feasible
    best.value = 0;

    std::vector<BbNode> stack{root};
    while (!stack.empty()) {
        const BbNode node = stack.back();
        stack.pop_back();

        double value = 0.0;
        std::array<double, 16> y{};
        if (!solve_node(lp, node, value, y)) continue;

        std::int64_t base = 0;
        for (int var = 0; var < 16; ++var) base += node.lo[var];
        const double node_bound = static_cast<double>(base) + value;
        // The objective is integral at any integer point, so a node whose
        // rounded-down bound cannot beat the incumbent is done.
        if (static_cast<std::uint64_t>(std::floor(node_bound + kIntegralityTol)) <= best.value)
            continue;

        int branch_var = -1;
        for (int var = 0; var < 16; ++var) {
            if (!nearly_integral(y[var])) {
                branch_var = var;
                break;
            }
        }

        if (branch_var < 0) {
            std::int64_t total = base;
            QuadrupleTally tally;
            for (int var = 0; var < 16; ++var) {
                tally.n[var] = node.lo[var] + static_cast<std::int64_t>(std::llround(y[var]));
                total += static_cast<std::int64_t>(std::llround(y[var]));
            }
            if (static_cast<std::uint64_t>(total) > best.value) {
                best.value = static_cast<std::uint64_t>(total);
                best.tally = tally;
            }
            continue;
        }

        const double split = static_cast<double>(node.lo[branch_var]) + y[branch_var];
        BbNode down = node;
        down.hi[branch_var] = static_cast<std::int64_t>(std::floor(split));
        BbNode up = node;
        up.lo[branch_var] = static_cast<std::int64_t>(std::ceil(split));
        stack.push_back(up);
        stack.push_back(down);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

namespace {

// Depth-first search over explicit pair positions. Quadruples are canonicalized
// by strictly increasing set-ac position, and within each set only the lowest
// unused position of a given value is tried (equal-valued pairs are
// interchangeable). Both cuts preserve the maximum.
struct BruteForceSearch {
    int n = 0;
    std::array<std::array<std::int8_t, 8>, 4> av{};
    std::array<std::array<std::int8_t, 8>, 4> bv{};
    std::uint32_t best = 0;

    int lowest_unused_match(int set, std::uint32_t used, int want_a, int want_b) const {
        for (int i = 0; i < n; ++i) {
            if (used & (1u << i)) continue;
            if (want_a != 0 && av[set][i] != want_a) continue;
            if (want_b != 0 && bv[set][i] != want_b) continue;
            return i;
        }
        return -1;
    }

    void dfs(int last_ac, std::array<std::uint32_t, 4> used, std::uint32_t depth) {
        best = std::max(best, depth);

        std::uint32_t remaining = 0xFFFFFFFFu;
        for (int s = 0; s < 4; ++s)
            remaining = std::min(remaining,
                                 static_cast<std::uint32_t>(n) - std::popcount(used[s]));
        if (depth + remaining <= best) return;

        bool tried_value[2][2] = {{false, false}, {false, false}};
        for (int i0 = last_ac + 1; i0 < n; ++i0) {
            if (used[0] & (1u << i0)) continue;
            const int x = av[0][i0], z = bv[0][i0];
            if (tried_value[sign_index(x)][sign_index(z)]) continue;
            tried_value[sign_index(x)][sign_index(z)] = true;

            for (int w : kSignOfIndex) {
                const int i1 = lowest_unused_match(1, used[1], x, w);
                if (i1 < 0) continue;
                for (int y : kSignOfIndex) {
                    const int i2 = lowest_unused_match(2, used[2], y, z);
                    if (i2 < 0) continue;
                    const int i3 = lowest_unused_match(3, used[3], y, w);
                    if (i3 < 0) continue;
                    auto next = used;
                    next[0] |= 1u << i0;
                    next[1] |= 1u << i1;
                    next[2] |= 1u << i2;
                    next[3] |= 1u << i3;
                    dfs(i0, next, depth + 1);
                }
            }
        }
    }
};

}  // namespace

std::uint64_t brute_force_quadruples(const ExperimentData& data) {
    const std::size_t n = data.n_common;
    if (n > kBruteForceMaxN)
        throw TooLarge("exhaustive search limited to N <= " +
                       std::to_string(kBruteForceMaxN) + ", got N = " + std::to_string(n));
    if (n == 0) return 0;

    BruteForceSearch search;
    search.n = static_cast<int>(n);
    for (int s = 0; s < 4; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            search.av[s][i] = data.sets[s].pairs[i].a;
            search.bv[s][i] = data.sets[s].pairs[i].b;
        }
    }
    search.dfs(-1, {0, 0, 0, 0}, 0);
    return search.best;
}

// ---------------------------------------------------------------------------
// Inequality verification
// ---------------------------------------------------------------------------

InequalityCheck verify_inequality(const CorrelationSet& corr, const QuadResult& quad) {
    if (corr.source_digest != quad.source_digest)
        throw MismatchedProvenance("correlations and quadruple result come from different data");

    const ChshStatistics chsh = s_chsh(corr);
    InequalityCheck check;
    check.c_plus = chsh.c_plus;
    check.c_minus = chsh.c_minus;
    check.s_chsh = chsh.s_chsh;
    check.delta = quad.delta;
    check.bound = 4.0 - 2.0 * quad.delta;
    check.c_plus_ok = check.c_plus <= check.bound + kInequalityEps;
    check.c_minus_ok = check.c_minus <= check.bound + kInequalityEps;
    check.s_chsh_ok = check.s_chsh <= check.bound + kInequalityEps;
    check.chsh2_applicable = quad.k_max == quad.n_total;
    check.chsh2_ok = !check.chsh2_applicable || check.s_chsh <= 2.0 + kInequalityEps;
    return check;
}

}  // namespace eprb
