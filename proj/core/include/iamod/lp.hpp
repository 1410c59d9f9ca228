#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace iamod {

// Solver tolerances. Pinned here so tests can assert them.
inline constexpr double kLpFeasibilityTol = 1e-6;   // constraint residual, per scaled row
inline constexpr double kLpOptimalityTol = 1e-9;    // reduced-cost threshold
inline constexpr double kLpPivotFloor = 1e-11;      // below this a pivot is numerical breakdown

/**
 * minimize  objective . x
 * s.t.      eq_lhs x  = eq_rhs
 *           ub_lhs x <= ub_rhs
 *           x >= 0
 */
struct LinearProgram {
    std::vector<double> objective;
    std::vector<std::vector<double>> eq_lhs;
    std::vector<double> eq_rhs;
    std::vector<std::vector<double>> ub_lhs;
    std::vector<double> ub_rhs;

    std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;          // valid iff Optimal
    double objective_value = 0.0;   // valid iff Optimal
};

/// Numerical breakdown (pivot below kLpPivotFloor, or a phase-1 anomaly).
/// Distinct from an Infeasible verdict, which is a property of the input.
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Two-phase primal simplex on a dense tableau, Bland's anti-cycling rule.
 *
 * Deterministic: identical inputs produce identical outputs. Redundant
 * equality rows are tolerated (phase 1 prunes them). Throws
 * std::invalid_argument on dimension mismatches or non-finite input,
 * SolverFailure on numerical breakdown.
 */
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace iamod
