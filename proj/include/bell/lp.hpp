#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bell/rational.hpp"

namespace bell {

// Equality-form linear program over non-negative rationals:
//   maximize objective . x   s.t.   rows[i] . x = rhs[i],  x >= 0.
struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> primal;

    // Certificate data. kept_rows lists the original row indices that
    // survived redundancy elimination in phase 1; basis[k] is the structural
    // column basic in kept row k. reduced_costs are the termination-time
    // reduced costs over all structural columns (all <= 0 on Optimal).
    std::vector<std::size_t> kept_rows;
    std::vector<std::size_t> basis;
    std::vector<Rational> reduced_costs;

    std::size_t pivot_count = 0;
};

// Exact two-phase dense-tableau simplex with Bland's anti-cycling rule.
// Deterministic: identical input yields identical output. Redundant equality
// rows are detected in phase 1 and dropped. Throws DomainError on malformed
// input; Infeasible and Unbounded are statuses, not failures.
LpSolution solve_lp(const LpProblem& problem);

// Independent optimality check: re-derives the dual from (kept_rows, basis)
// by Gaussian elimination and verifies primal feasibility on every original
// row, non-positive reduced costs, and objective consistency. Does not reuse
// any solver state. On failure, `why` (if given) names the violated check.
bool check_certificate(const LpProblem& problem, const LpSolution& solution,
                       std::string* why = nullptr);

}  // namespace bell
