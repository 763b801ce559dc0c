#include "bell/bounds.hpp"

#include <random>
#include <string>

#include "bell/errors.hpp"

namespace bell {

LocalBoundResult local_bound(const BellFunctional& f) {
    if (f.form == FunctionalForm::CorrelatorCoefficients)
        return local_bound(expand_correlators(f));
    validate_functional(f);
    const Scenario& sc = f.scenario;

    // One mixed-radix digit per (party, setting): the strategy's response.
    std::vector<int> radices;
    std::size_t count = 1;
    for (const auto& party : sc.parties())
        for (int s = 0; s < party.settings; ++s) {
            radices.push_back(party.outcomes);
            if (count > kEnumerationCap / static_cast<std::size_t>(party.outcomes))
                throw DomainError("deterministic strategy count exceeds cap "
                                  + std::to_string(kEnumerationCap));
            count *= static_cast<std::size_t>(party.outcomes);
        }

    DeterministicStrategy strategy(sc.party_count());
    for (std::size_t i = 0; i < sc.party_count(); ++i)
        strategy[i].assign(static_cast<std::size_t>(sc.party(i).settings), 0);

    LocalBoundResult best;
    best.value = evaluate_on_strategy(f, strategy);
    best.witness = strategy;

    std::vector<int> digits(radices.size(), 0);
    while (mixed_radix_next(digits, radices)) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < sc.party_count(); ++i)
            for (int s = 0; s < sc.party(i).settings; ++s) strategy[i][s] = digits[k++];
        Rational value = evaluate_on_strategy(f, strategy);
        if (value > best.value) {
            best.value = std::move(value);
            best.witness = strategy;
        }
    }
    return best;
}

std::vector<Rational> functional_objective(const BellFunctional& f) {
    const BellFunctional expanded =
        f.form == FunctionalForm::CorrelatorCoefficients ? expand_correlators(f) : f;
    validate_functional(expanded);
    const Scenario& sc = expanded.scenario;
    std::vector<Rational> objective(sc.table_size(), Rational(0));
    for (const auto& [key, coeff] : expanded.terms) {
        const std::size_t idx = sc.settings_index(key.first) * sc.joint_outcomes()
                                + sc.outcomes_index(key.second);
        objective[idx] += coeff;
    }
    return objective;
}

LpProblem ns_polytope_lp(const Scenario& sc, std::vector<Rational> objective) {
    const std::size_t jo = sc.joint_outcomes();
    LpProblem pb;
    pb.num_vars = sc.table_size();
    if (objective.empty()) objective.assign(pb.num_vars, Rational(0));
    if (objective.size() != pb.num_vars) throw DomainError("objective length mismatch");
    pb.objective = std::move(objective);

    // Normalization: one row per joint settings tuple.
    for (std::size_t s = 0; s < sc.joint_settings(); ++s) {
        std::vector<Rational> row(pb.num_vars, Rational(0));
        for (std::size_t o = 0; o < jo; ++o) row[s * jo + o] = 1;
        pb.rows.push_back(std::move(row));
        pb.rhs.emplace_back(1);
    }

    // Marginal consistency, party-wise over adjacent setting pairs: for each
    // context of the other parties, the marginal over everyone but party i
    // agrees between settings si and si+1.
    const std::size_t parties = sc.party_count();
    std::vector<int> s(parties, 0);
    for (std::size_t i = 0; i < parties; ++i) {
        const int ni = sc.party(i).settings;
        const int di = sc.party(i).outcomes;
        if (ni < 2) continue;
        std::vector<int> other_radix;
        for (std::size_t j = 0; j < parties; ++j)
            if (j != i) other_radix.push_back(sc.party(j).settings);
        std::vector<int> others(other_radix.size(), 0);
        do {
            std::size_t k = 0;
            for (std::size_t j = 0; j < parties; ++j)
                if (j != i) s[j] = others[k++];
            for (int si = 0; si + 1 < ni; ++si) {
                for (std::size_t oo = 0; oo < jo; ++oo) {
                    std::vector<int> ot = sc.outcomes_tuple(oo);
                    if (ot[i] != 0) continue;
                    std::vector<Rational> row(pb.num_vars, Rational(0));
                    for (int a = 0; a < di; ++a) {
                        ot[i] = a;
                        const std::size_t oidx = sc.outcomes_index(ot);
                        s[i] = si;
                        row[sc.settings_index(s) * jo + oidx] += 1;
                        s[i] = si + 1;
                        row[sc.settings_index(s) * jo + oidx] -= 1;
                    }
                    pb.rows.push_back(std::move(row));
                    pb.rhs.emplace_back(0);
                }
            }
        } while (mixed_radix_next(others, other_radix));
    }
    return pb;
}

namespace {

Behavior behavior_from_primal(const Scenario& sc, const std::vector<Rational>& primal) {
    return Behavior(sc, primal);
}

}  // namespace

NsBoundResult ns_bound(const BellFunctional& f) {
    const BellFunctional expanded =
        f.form == FunctionalForm::CorrelatorCoefficients ? expand_correlators(f) : f;
    LpProblem pb = ns_polytope_lp(expanded.scenario, functional_objective(expanded));
    LpSolution sol = solve_lp(pb);
    if (sol.status != LpStatus::Optimal)
        throw DomainError("no-signaling LP did not reach an optimum (internal error)");
    NsBoundResult result{sol.value, behavior_from_primal(expanded.scenario, sol.primal),
                         std::move(pb), std::move(sol)};
    return result;
}

Behavior sample_ns_behavior(const Scenario& sc, std::uint64_t seed, int mixing) {
    if (mixing < 1) throw DomainError("mixing count must be >= 1");
    std::mt19937_64 gen(seed);
    std::vector<Behavior> vertices;
    vertices.reserve(static_cast<std::size_t>(mixing));
    for (int k = 0; k < mixing; ++k) {
        std::vector<Rational> objective(sc.table_size());
        for (auto& c : objective) {
            // Small signed integers in [-12, 12]; raw modulo keeps the stream
            // identical across standard libraries.
            c = static_cast<long>(gen() % 25) - 12;
        }
        LpSolution sol = solve_lp(ns_polytope_lp(sc, std::move(objective)));
        if (sol.status != LpStatus::Optimal)
            throw DomainError("no-signaling LP did not reach an optimum (internal error)");
        vertices.push_back(behavior_from_primal(sc, sol.primal));
    }
    std::vector<Rational> weights(vertices.size(),
                                  Rational(1, static_cast<unsigned long>(vertices.size())));
    return mix_behaviors(vertices, weights);
}

}  // namespace bell
