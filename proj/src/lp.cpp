#include "bell/lp.hpp"

#include <cassert>

#include "bell/errors.hpp"

namespace bell {

namespace {

// Dense tableau in canonical form: one basic column per row, unit in its own
// row, zero elsewhere. Artificial variables are implicit (they never
// re-enter, so their columns are not stored); basis_[i] < 0 marks row i as
// still basic in the artificial of original row -(basis_[i])-1.
class Simplex {
public:
    explicit Simplex(const LpProblem& pb) : n_(pb.num_vars) {
        const std::size_t m = pb.rows.size();
        tableau_.reserve(m);
        basis_.reserve(m);
        kept_.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> row(n_ + 1);
            const bool flip = pb.rhs[i] < 0;
            for (std::size_t j = 0; j < n_; ++j)
                row[j] = flip ? Rational(-pb.rows[i][j]) : pb.rows[i][j];
            row[n_] = flip ? Rational(-pb.rhs[i]) : pb.rhs[i];
            tableau_.push_back(std::move(row));
            basis_.push_back(-static_cast<long>(i) - 1);
            kept_.push_back(i);
        }
    }

    // Returns false on infeasibility.
    bool phase1() {
        // w-row of the auxiliary problem (minimize the artificial sum),
        // maintained by elimination like any other row.
        cost_.assign(n_ + 1, Rational(0));
        for (const auto& row : tableau_)
            for (std::size_t j = 0; j <= n_; ++j) cost_[j] += row[j];
        run();
        if (cost_[n_] != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Returns false when unbounded.
    bool phase2(const std::vector<Rational>& objective) {
        cost_.assign(n_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = objective[j];
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            assert(basis_[i] >= 0);
            const Rational cb = cost_[static_cast<std::size_t>(basis_[i])];
            if (cb != 0) eliminate(cost_, cb, tableau_[i]);
        }
        // The phase-2 start basis is structural, so its (identity) columns
        // live in the stored tableau and can serve as the lexicographic
        // reference for free.
        ref_cols_.clear();
        for (long b : basis_) ref_cols_.push_back(static_cast<std::size_t>(b));
        bland_ = false;
        return run();
    }

    void fill_solution(const LpProblem& pb, LpSolution& sol) const {
        sol.primal.assign(n_, Rational(0));
        for (std::size_t i = 0; i < tableau_.size(); ++i)
            sol.primal[static_cast<std::size_t>(basis_[i])] = tableau_[i][n_];
        sol.value = 0;
        for (std::size_t j = 0; j < n_; ++j) sol.value += pb.objective[j] * sol.primal[j];
        sol.kept_rows = kept_;
        sol.basis.assign(basis_.size(), 0);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            sol.basis[i] = static_cast<std::size_t>(basis_[i]);
        sol.reduced_costs.assign(cost_.begin(), cost_.begin() + static_cast<long>(n_));
        sol.pivot_count = pivots_;
    }

private:
    // row -= factor * src, skipping src zeros.
    static void eliminate(std::vector<Rational>& row, const Rational& factor,
                          const std::vector<Rational>& src) {
        mpq_class tmp;
        for (std::size_t j = 0; j < src.size(); ++j) {
            if (src[j] == 0) continue;
            mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), src[j].get_mpq_t());
            mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
        }
    }

    // Lexicographic ratio-test comparison for phase 2: row i precedes row j
    // when (row_i / a_i) < (row_j / a_j) over [rhs, reference columns], with
    // a the entering-column entries (both positive). Against a fixed
    // reference basis this is the classical anti-cycling rule: every pivot
    // strictly decreases the extended objective state, so no basis repeats.
    bool lex_less(std::size_t i, std::size_t j, std::size_t enter) const {
        const Rational& ai = tableau_[i][enter];
        const Rational& aj = tableau_[j][enter];
        const auto compare = [&](std::size_t c) {
            return cmp(tableau_[i][c] * aj, tableau_[j][c] * ai);
        };
        if (const int c = compare(n_); c != 0) return c < 0;
        for (std::size_t rc : ref_cols_)
            if (const int c = compare(rc); c != 0) return c < 0;
        return label(basis_[i]) < label(basis_[j]);
    }

    // Bland's variable label: structural j is j, artificial of row r is n + r.
    std::size_t label(long basis_entry) const {
        return basis_entry >= 0 ? static_cast<std::size_t>(basis_entry)
                                : n_ + static_cast<std::size_t>(-basis_entry - 1);
    }

    // Entering rule: largest reduced cost, lowest index on ties. Phase 2
    // breaks ratio-test ties lexicographically (see lex_less), which rules
    // out cycling on its own. Phase 1 has no stored reference columns, so it
    // instead flips to Bland's rule (smallest improving index) after a
    // streak of degenerate pivots and back once the objective moves again:
    // any unbounded degenerate run would eventually be pure Bland, which
    // cannot cycle, so every solve terminates. All rules are deterministic.
    static constexpr std::size_t kDegenerateStreakLimit = 16;

    bool run() {
        std::size_t degenerate_streak = 0;
        for (;;) {
            std::size_t enter = n_;
            if (bland_ && ref_cols_.empty()) {
                for (std::size_t j = 0; j < n_; ++j)
                    if (cost_[j] > 0) { enter = j; break; }
            } else {
                for (std::size_t j = 0; j < n_; ++j)
                    if (cost_[j] > 0 && (enter == n_ || cost_[j] > cost_[enter])) enter = j;
            }
            if (enter == n_) return true;

            std::size_t leave = tableau_.size();
            if (ref_cols_.empty()) {
                Rational best_ratio;
                for (std::size_t i = 0; i < tableau_.size(); ++i) {
                    const Rational& a = tableau_[i][enter];
                    if (a <= 0) continue;
                    Rational ratio = tableau_[i][n_] / a;
                    if (leave == tableau_.size() || ratio < best_ratio
                        || (ratio == best_ratio && label(basis_[i]) < label(basis_[leave]))) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            } else {
                for (std::size_t i = 0; i < tableau_.size(); ++i) {
                    if (tableau_[i][enter] <= 0) continue;
                    if (leave == tableau_.size() || lex_less(i, leave, enter)) leave = i;
                }
            }
            if (leave == tableau_.size()) return false;  // unbounded column
            if (ref_cols_.empty()) {
                if (tableau_[leave][n_] == 0) {
                    if (++degenerate_streak >= kDegenerateStreakLimit) bland_ = true;
                } else {
                    degenerate_streak = 0;
                    bland_ = false;
                }
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& prow = tableau_[row];
        const Rational inv = 1 / prow[col];
        if (inv != 1)
            for (auto& v : prow)
                if (v != 0) v *= inv;
        prow[col] = 1;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == row) continue;
            const Rational factor = tableau_[i][col];
            if (factor != 0) eliminate(tableau_[i], factor, prow);
        }
        const Rational cfactor = cost_[col];
        if (cfactor != 0) eliminate(cost_, cfactor, prow);
        basis_[row] = static_cast<long>(col);
        ++pivots_;
    }

    // After phase 1 every artificial still basic sits at level zero: pivot it
    // out on any structural column, or drop the row as redundant.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < tableau_.size();) {
            if (basis_[i] >= 0) { ++i; continue; }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (tableau_[i][j] != 0) { col = j; break; }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                assert(tableau_[i][n_] == 0);
                tableau_.erase(tableau_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                kept_.erase(kept_.begin() + static_cast<long>(i));
            }
        }
    }

    std::size_t n_;
    std::vector<std::vector<Rational>> tableau_;  // rows x (n_ + 1), last is rhs
    std::vector<Rational> cost_;                  // reduced-cost row, last is -z
    std::vector<long> basis_;
    std::vector<std::size_t> kept_;
    std::size_t pivots_ = 0;
    std::vector<std::size_t> ref_cols_;  // phase-2 lexicographic reference
    bool bland_ = false;
};

void validate_problem(const LpProblem& pb) {
    if (pb.num_vars == 0) throw DomainError("LP needs at least one variable");
    if (pb.rows.empty()) throw DomainError("LP needs at least one constraint");
    if (pb.objective.size() != pb.num_vars)
        throw DomainError("LP objective length mismatch");
    if (pb.rhs.size() != pb.rows.size()) throw DomainError("LP rhs length mismatch");
    for (const auto& row : pb.rows)
        if (row.size() != pb.num_vars) throw DomainError("LP row length mismatch");
}

}  // namespace

LpSolution solve_lp(const LpProblem& pb) {
    validate_problem(pb);
    Simplex simplex(pb);
    LpSolution sol;
    if (!simplex.phase1()) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    if (!simplex.phase2(pb.objective)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    simplex.fill_solution(pb, sol);
    return sol;
}

namespace {

bool fail(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

}  // namespace

bool check_certificate(const LpProblem& pb, const LpSolution& sol, std::string* why) {
    validate_problem(pb);
    if (sol.status != LpStatus::Optimal) return fail(why, "solution is not Optimal");
    if (sol.primal.size() != pb.num_vars) return fail(why, "primal length mismatch");
    for (std::size_t j = 0; j < pb.num_vars; ++j)
        if (sol.primal[j] < 0) return fail(why, "negative primal entry " + std::to_string(j));
    for (std::size_t i = 0; i < pb.rows.size(); ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < pb.num_vars; ++j) dot += pb.rows[i][j] * sol.primal[j];
        if (dot != pb.rhs[i])
            return fail(why, "nonzero primal residual in row " + std::to_string(i));
    }
    Rational value = 0;
    for (std::size_t j = 0; j < pb.num_vars; ++j) value += pb.objective[j] * sol.primal[j];
    if (value != sol.value) return fail(why, "objective value mismatch");

    // Re-derive the dual over the kept rows from the basis alone and verify
    // non-positive reduced costs everywhere.
    const std::size_t k = sol.kept_rows.size();
    if (sol.basis.size() != k) return fail(why, "basis/kept size mismatch");
    // Solve y^T B = c_B, i.e. B^T y = c_B, by exact Gaussian elimination.
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < k; ++r) {
        if (sol.kept_rows[r] >= pb.rows.size()) return fail(why, "kept row out of range");
        if (sol.basis[r] >= pb.num_vars) return fail(why, "basis column out of range");
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < k; ++r)
            aug[c][r] = pb.rows[sol.kept_rows[r]][sol.basis[c]];
        aug[c][k] = pb.objective[sol.basis[c]];
    }
    std::vector<Rational> y(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = k;
        for (std::size_t r = col; r < k; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv == k) return fail(why, "singular basis matrix");
        std::swap(aug[col], aug[piv]);
        const Rational inv = 1 / aug[col][col];
        for (std::size_t j = col; j <= k; ++j) aug[col][j] *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (std::size_t j = col; j <= k; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    for (std::size_t r = 0; r < k; ++r) y[r] = aug[r][k];

    Rational dual_value = 0;
    for (std::size_t r = 0; r < k; ++r) dual_value += y[r] * pb.rhs[sol.kept_rows[r]];
    if (dual_value != sol.value) return fail(why, "duality gap");

    for (std::size_t j = 0; j < pb.num_vars; ++j) {
        Rational reduced = pb.objective[j];
        for (std::size_t r = 0; r < k; ++r)
            reduced -= y[r] * pb.rows[sol.kept_rows[r]][j];
        if (reduced > 0)
            return fail(why, "positive reduced cost at column " + std::to_string(j));
    }
    return true;
}

}  // namespace bell
