#include "iamod/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace iamod {

namespace {

// Ratio-test eligibility: entries smaller than this are treated as
// non-positive so that near-degenerate pivots are not selected.
constexpr double kEligibleEntry = 1e-9;

void check_well_formed(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    if (n == 0) throw std::invalid_argument("lp: empty objective");
    if (lp.eq_lhs.size() != lp.eq_rhs.size())
        throw std::invalid_argument("lp: eq row/rhs count mismatch");
    if (lp.ub_lhs.size() != lp.ub_rhs.size())
        throw std::invalid_argument("lp: ub row/rhs count mismatch");
    auto check_rows = [n](const std::vector<std::vector<double>>& rows) {
        for (const auto& row : rows) {
            if (row.size() != n) throw std::invalid_argument("lp: row width mismatch");
            for (double v : row)
                if (!std::isfinite(v)) throw std::invalid_argument("lp: non-finite coefficient");
        }
    };
    check_rows(lp.eq_lhs);
    check_rows(lp.ub_lhs);
    for (double v : lp.objective)
        if (!std::isfinite(v)) throw std::invalid_argument("lp: non-finite objective");
    for (double v : lp.eq_rhs)
        if (!std::isfinite(v)) throw std::invalid_argument("lp: non-finite rhs");
    for (double v : lp.ub_rhs)
        if (!std::isfinite(v)) throw std::invalid_argument("lp: non-finite rhs");
}

struct Tableau {
    // rows x (num_total + 1); last column is the rhs, kept >= 0.
    std::vector<std::vector<double>> a;
    std::vector<double> z;       // phase-2 reduced-cost row
    std::vector<double> w;       // phase-1 reduced-cost row
    std::vector<int> basis;      // basis[i] = variable basic in row i
    std::size_t num_structural;  // original variables
    std::size_t num_real;        // structural + slacks
    std::size_t num_total;       // + artificials

    std::size_t rows() const { return a.size(); }
    double& rhs(std::size_t i) { return a[i][num_total]; }

    void pivot(std::size_t r, std::size_t s) {
        const double piv = a[r][s];
        if (std::fabs(piv) < kLpPivotFloor)
            throw SolverFailure("lp: pivot below breakdown floor");
        const double inv = 1.0 / piv;
        for (double& v : a[r]) v *= inv;
        a[r][s] = 1.0;
        auto eliminate = [&](std::vector<double>& row) {
            const double factor = row[s];
            if (factor == 0.0) return;
            for (std::size_t j = 0; j <= num_total; ++j) row[j] -= factor * a[r][j];
            row[s] = 0.0;
        };
        for (std::size_t i = 0; i < rows(); ++i)
            if (i != r) eliminate(a[i]);
        eliminate(z);
        eliminate(w);
        basis[r] = static_cast<int>(s);
    }
};

// One simplex phase with Bland's rule. `cost` is the active reduced-cost
// row. Returns true at optimality, false when an improving column has no
// blocking row (unbounded direction).
bool run_phase(Tableau& t, std::vector<double>& cost) {
    // Bland's rule terminates finitely; the cap only guards against a
    // numerically corrupted tableau.
    const std::size_t max_pivots = 2000 * (t.rows() + t.num_real) + 100000;
    for (std::size_t iter = 0; iter < max_pivots; ++iter) {
        // Entering: lowest-index non-artificial column with negative reduced cost.
        std::size_t enter = t.num_total;
        for (std::size_t j = 0; j < t.num_real; ++j) {
            if (cost[j] < -kLpOptimalityTol) {
                enter = j;
                break;
            }
        }
        if (enter == t.num_total) return true;

        // Leaving: minimum ratio, ties by smallest basic variable index.
        std::size_t leave = t.rows();
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < t.rows(); ++i) {
            const double entry = t.a[i][enter];
            if (entry <= kEligibleEntry) continue;
            const double ratio = t.rhs(i) / entry;
            if (ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 &&
                 (leave == t.rows() || t.basis[i] < t.basis[leave]))) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == t.rows()) return false;
        t.pivot(leave, enter);
        if (t.rhs(leave) < 0.0) t.rhs(leave) = 0.0;  // clip rounding dust
    }
    throw SolverFailure("lp: pivot limit exceeded");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    check_well_formed(lp);

    const std::size_t n = lp.num_vars();
    const std::size_t me = lp.eq_lhs.size();
    const std::size_t mu = lp.ub_lhs.size();
    const std::size_t m = me + mu;

    Tableau t;
    t.num_structural = n;
    t.num_real = n + mu;
    t.basis.assign(m, -1);

    // Assemble rows: equalities first, then inequalities with unit slacks.
    // Each row is scaled by its largest coefficient magnitude so the shared
    // tolerances are meaningful across differently scaled constraints.
    std::vector<std::vector<double>> rows(m);
    std::vector<double> rhs(m);
    std::vector<bool> slack_usable(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        auto& row = rows[i];
        row.assign(t.num_real, 0.0);
        const bool is_eq = i < me;
        const auto& src = is_eq ? lp.eq_lhs[i] : lp.ub_lhs[i - me];
        std::copy(src.begin(), src.end(), row.begin());
        rhs[i] = is_eq ? lp.eq_rhs[i] : lp.ub_rhs[i - me];
        if (!is_eq) row[n + (i - me)] = 1.0;

        double scale = 0.0;
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(row[j]));
        if (scale > 0.0) {
            for (double& v : row) v /= scale;
            rhs[i] /= scale;
        }
        if (rhs[i] < 0.0) {
            for (double& v : row) v = -v;
            rhs[i] = -rhs[i];
        } else if (!is_eq) {
            slack_usable[i] = true;  // slack still has coefficient +1
        }
    }

    // Artificial variables where no slack can seed the basis.
    std::size_t num_art = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (!slack_usable[i]) ++num_art;
    t.num_total = t.num_real + num_art;

    t.a.assign(m, std::vector<double>(t.num_total + 1, 0.0));
    std::size_t next_art = t.num_real;
    for (std::size_t i = 0; i < m; ++i) {
        std::copy(rows[i].begin(), rows[i].end(), t.a[i].begin());
        t.rhs(i) = rhs[i];
        if (slack_usable[i]) {
            t.basis[i] = static_cast<int>(n + (i - me));
        } else {
            t.a[i][next_art] = 1.0;
            t.basis[i] = static_cast<int>(next_art);
            ++next_art;
        }
    }

    // Reduced-cost rows. Initial basic variables all have zero phase-2
    // cost, so z starts as the raw objective. w prices the artificials.
    t.z.assign(t.num_total + 1, 0.0);
    std::copy(lp.objective.begin(), lp.objective.end(), t.z.begin());
    t.w.assign(t.num_total + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= static_cast<int>(t.num_real)) {
            for (std::size_t j = 0; j <= t.num_total; ++j) t.w[j] -= t.a[i][j];
            t.w[static_cast<std::size_t>(t.basis[i])] = 0.0;
        }
    }

    LpSolution sol;

    if (num_art > 0) {
        if (!run_phase(t, t.w))
            throw SolverFailure("lp: phase 1 reported an unbounded direction");
        const double infeasibility = -t.w[t.num_total];
        if (infeasibility > kLpFeasibilityTol) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive leftover artificials out of the basis; rows that cannot
        // pivot on any real column are redundant and get dropped.
        for (std::size_t i = t.rows(); i-- > 0;) {
            if (t.basis[i] < static_cast<int>(t.num_real)) continue;
            std::size_t col = t.num_real;
            for (std::size_t j = 0; j < t.num_real; ++j) {
                if (std::fabs(t.a[i][j]) > kEligibleEntry) {
                    col = j;
                    break;
                }
            }
            if (col < t.num_real) {
                t.pivot(i, col);
            } else {
                t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    if (!run_phase(t, t.z)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const auto b = static_cast<std::size_t>(t.basis[i]);
        if (b < n) sol.x[b] = t.rhs(i);
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) obj += lp.objective[j] * sol.x[j];
    sol.objective_value = obj;
    return sol;
}

}  // namespace iamod
