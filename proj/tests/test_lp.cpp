#include <doctest.h>

#include <algorithm>

#include "bell/errors.hpp"
#include "bell/lp.hpp"

using namespace bell;

namespace {

LpProblem make(std::size_t vars, std::vector<Rational> obj,
               std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
    return LpProblem{vars, std::move(obj), std::move(rows), std::move(rhs)};
}

}  // namespace

TEST_CASE("maximize x1 on a simplex edge") {
    const auto pb = make(2, {1, 0}, {{1, 1}}, {1});
    const auto sol = solve_lp(pb);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(sol.primal == std::vector<Rational>{1, 0});
    CHECK(check_certificate(pb, sol));
}

TEST_CASE("degenerate objective still optimal") {
    const auto pb = make(2, {1, 1}, {{1, 1}}, {1});
    const auto sol = solve_lp(pb);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(check_certificate(pb, sol));
}

TEST_CASE("infeasible sign constraint") {
    const auto sol = solve_lp(make(1, {1}, {{1}}, {-1}));
    CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded ray") {
    // x1 - x2 = 0 leaves the diagonal ray free.
    const auto sol = solve_lp(make(2, {1, 0}, {{1, -1}}, {0}));
    CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("redundant rows are dropped, residuals stay exact") {
    const auto pb = make(3, {2, 1, 0},
                         {{1, 1, 1}, {2, 2, 2}, {1, 0, 0}, {1, 1, 1}},
                         {1, 2, Rational(1, 3), 1});
    const auto sol = solve_lp(pb);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.kept_rows.size() == 2);
    CHECK(sol.value == Rational(2, 3) + Rational(2, 3));  // 2*(1/3) + 1*(2/3)
    for (std::size_t i = 0; i < pb.rows.size(); ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < pb.num_vars; ++j) dot += pb.rows[i][j] * sol.primal[j];
        CHECK(dot == pb.rhs[i]);
    }
    CHECK(check_certificate(pb, sol));
}

TEST_CASE("fractional data stays exact") {
    const auto pb = make(2, {Rational(1, 3), Rational(1, 7)},
                         {{Rational(2, 5), Rational(3, 5)}}, {Rational(1, 2)});
    const auto sol = solve_lp(pb);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == Rational(1, 3) * Rational(5, 4));  // x1 = 5/4
    CHECK(check_certificate(pb, sol));
}

TEST_CASE("dimension mismatches are errors") {
    CHECK_THROWS_AS(solve_lp(make(2, {1}, {{1, 1}}, {1})), DomainError);
    CHECK_THROWS_AS(solve_lp(make(2, {1, 0}, {{1}}, {1})), DomainError);
    CHECK_THROWS_AS(solve_lp(make(2, {1, 0}, {{1, 1}}, {1, 2})), DomainError);
    CHECK_THROWS_AS(solve_lp(make(2, {1, 0}, {}, {})), DomainError);
}

TEST_CASE("variable permutation preserves the optimal value") {
    // max x1 + 2 x2 s.t. x1 + x2 + x3 = 1, x2 + x3 = 1/2.
    const auto pb = make(3, {1, 2, 0}, {{1, 1, 1}, {0, 1, 1}}, {1, Rational(1, 2)});
    const auto base = solve_lp(pb);
    REQUIRE(base.status == LpStatus::Optimal);

    const std::vector<std::vector<std::size_t>> perms{
        {0, 1, 2}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}};
    for (const auto& perm : perms) {
        LpProblem q;
        q.num_vars = 3;
        q.objective.resize(3);
        for (std::size_t j = 0; j < 3; ++j) q.objective[perm[j]] = pb.objective[j];
        for (std::size_t i = 0; i < pb.rows.size(); ++i) {
            std::vector<Rational> row(3);
            for (std::size_t j = 0; j < 3; ++j) row[perm[j]] = pb.rows[i][j];
            q.rows.push_back(std::move(row));
        }
        q.rhs = pb.rhs;
        const auto sol = solve_lp(q);
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.value == base.value);
        CHECK(check_certificate(q, sol));
    }
}

TEST_CASE("certificate checker rejects tampering") {
    const auto pb = make(2, {1, 0}, {{1, 1}}, {1});
    auto sol = solve_lp(pb);
    REQUIRE(check_certificate(pb, sol));

    auto wrong_value = sol;
    wrong_value.value += 1;
    std::string why;
    CHECK_FALSE(check_certificate(pb, wrong_value, &why));
    CHECK(why == "objective value mismatch");

    auto wrong_primal = sol;
    wrong_primal.primal = {Rational(1, 2), Rational(1, 2)};
    wrong_primal.value = Rational(1, 2);
    CHECK(check_certificate(pb, wrong_primal, &why) == false);
    CHECK(why == "duality gap");  // feasible but suboptimal point

    auto infeasible = sol;
    infeasible.primal = {Rational(2), Rational(0)};
    infeasible.value = 2;
    CHECK_FALSE(check_certificate(pb, infeasible, &why));
    CHECK(why.find("residual") != std::string::npos);
}

TEST_CASE("deterministic resolve") {
    const auto pb = make(4, {3, 1, 4, 1},
                         {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}},
                         {1, 1, 1});
    const auto a = solve_lp(pb);
    const auto b = solve_lp(pb);
    CHECK(a.status == b.status);
    CHECK(a.value == b.value);
    CHECK(a.primal == b.primal);
    CHECK(a.basis == b.basis);
    CHECK(a.pivot_count == b.pivot_count);
}
