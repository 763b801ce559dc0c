#include "bell/monogamy.hpp"

#include <string>

#include "bell/errors.hpp"

namespace bell {

MonogamySetup extend_scenario(const BellFunctional& f) {
    if (f.scenario.party_count() != 2)
        throw DomainError("monogamy setup needs a bipartite functional");
    if (!is_nonnegative_form(f))
        throw DomainError("monogamy setup needs non-negative probability coefficients; "
                          "run normalize_nonneg (after expand_correlators if needed)");
    if (f.bound < 0) throw DomainError("monogamy setup needs a non-negative bound");
    validate_functional(f);

    MonogamySetup setup;
    setup.base = f;
    setup.n = f.scenario.party(1).settings;
    std::vector<PartySpec> parties;
    parties.push_back(f.scenario.party(0));
    for (int m = 0; m < setup.n; ++m) parties.push_back(f.scenario.party(1));
    setup.extended = Scenario(parties);
    return setup;
}

namespace {

void check_m(const MonogamySetup& setup, int m) {
    if (m < 1 || m > setup.n)
        throw DomainError("chain index m=" + std::to_string(m) + " out of range 1.."
                          + std::to_string(setup.n));
}

// Pair value with the other Bobs' settings pinned to their first setting;
// well-defined for any behavior, equal to the NS marginal value when p is
// non-signaling.
Rational pair_value_canonical(const MonogamySetup& setup, const Behavior& p, int m) {
    check_m(setup, m);
    if (!(p.scenario() == setup.extended))
        throw DomainError("behavior is not on the extended scenario");
    std::vector<int> others(setup.extended.party_count(), 0);
    const Behavior pair = marginal_behavior(p, {0, static_cast<std::size_t>(m)}, others);
    return evaluate(setup.base, pair);
}

}  // namespace

std::vector<int> chain_settings(const MonogamySetup& setup, int m) {
    check_m(setup, m);
    // Bob j (1-based) measures setting (j - m mod n) + 1 in 1-based math; the
    // 0-based rendering below is used everywhere in code.
    std::vector<int> settings(static_cast<std::size_t>(setup.n));
    for (int j = 0; j < setup.n; ++j)
        settings[static_cast<std::size_t>(j)] = ((j - (m - 1)) % setup.n + setup.n) % setup.n;
    return settings;
}

Rational pair_value(const MonogamySetup& setup, const Behavior& p, int m) {
    if (auto witness = signaling_witness(p))
        throw DomainError("pair marginal is ill-defined for a signaling behavior: "
                          + witness->describe());
    return pair_value_canonical(setup, p, m);
}

BellFunctional chain_functional(const MonogamySetup& setup, int m) {
    check_m(setup, m);
    const std::vector<int> fixed = chain_settings(setup, m);
    const int n = setup.n;
    const int bob_outcomes = setup.base.scenario.party(1).outcomes;

    BellFunctional out;
    out.scenario = setup.extended;
    out.form = FunctionalForm::ProbabilityCoefficients;
    out.bound = setup.base.bound;

    std::vector<int> settings(static_cast<std::size_t>(n) + 1);
    settings[0] = 0;
    for (int j = 0; j < n; ++j) settings[static_cast<std::size_t>(j) + 1] = fixed[static_cast<std::size_t>(j)];

    const std::vector<int> rest_radix(static_cast<std::size_t>(n) - 1, bob_outcomes);
    for (const auto& [key, coeff] : setup.base.terms) {
        const int x = key.first[0], y = key.first[1];
        const int a = key.second[0], b = key.second[1];
        const int bob = (y + (m - 1)) % n;  // 0-based Bob position measuring setting y
        settings[0] = x;
        // Sum over the unconstrained Bobs' outcomes; coefficients merge.
        std::vector<int> rest(rest_radix.size(), 0);
        std::vector<int> outcomes(static_cast<std::size_t>(n) + 1);
        outcomes[0] = a;
        do {
            std::size_t k = 0;
            for (int j = 0; j < n; ++j)
                outcomes[static_cast<std::size_t>(j) + 1] =
                    (j == bob) ? b : rest[k++];
            out.terms[{settings, outcomes}] += coeff;
        } while (mixed_radix_next(rest, rest_radix));
    }
    out.prune_zeros();
    return out;
}

MonogamyReport monogamy_check(const MonogamySetup& setup, const Behavior& p) {
    if (!(p.scenario() == setup.extended))
        throw DomainError("behavior is not on the extended scenario");
    validate_behavior(p);
    MonogamyReport report;
    report.ns_witness = signaling_witness(p);
    report.sum = 0;
    for (int m = 1; m <= setup.n; ++m) {
        Rational v = pair_value_canonical(setup, p, m);
        report.sum += v;
        report.per_pair.push_back(std::move(v));
    }
    report.bound = Rational(setup.n) * setup.base.bound;
    report.holds = report.sum <= report.bound;
    return report;
}

MonogamyLpResult monogamy_lp_max(const MonogamySetup& setup) {
    // Objective: sum of the chained expressions B_1 .. B_n.
    BellFunctional total;
    total.scenario = setup.extended;
    total.form = FunctionalForm::ProbabilityCoefficients;
    for (int m = 1; m <= setup.n; ++m)
        for (const auto& [key, coeff] : chain_functional(setup, m).terms)
            total.terms[key] += coeff;

    LpProblem pb = ns_polytope_lp(setup.extended, functional_objective(total));
    LpSolution sol = solve_lp(pb);
    if (sol.status != LpStatus::Optimal)
        throw DomainError("monogamy LP did not reach an optimum (internal error)");
    return MonogamyLpResult{sol.value, Behavior(setup.extended, sol.primal), std::move(pb),
                            std::move(sol)};
}

Rational LhvModel::joint(int x, int a, const std::vector<int>& bobs_outcomes) const {
    const auto hit = hidden.find(bobs_outcomes);
    if (hit == hidden.end() || hit->second == 0) return 0;
    const auto rit = responses.find({bobs_outcomes, x});
    if (rit == responses.end()) throw DomainError("LHV model has no response for this context");
    return hit->second * rit->second[static_cast<std::size_t>(a)];
}

LhvModel fixed_setting_lhv(const MonogamySetup& setup, const Behavior& p, int m) {
    check_m(setup, m);
    if (!(p.scenario() == setup.extended))
        throw DomainError("behavior is not on the extended scenario");
    if (auto witness = signaling_witness(p))
        throw DomainError("LHV reconstruction needs a non-signaling behavior: "
                          + witness->describe());

    const std::vector<int> fixed = chain_settings(setup, m);
    const int n = setup.n;
    const int alice_settings = setup.extended.party(0).settings;
    const int alice_outcomes = setup.extended.party(0).outcomes;
    const int bob_outcomes = setup.extended.party(1).outcomes;

    std::vector<int> settings(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) settings[static_cast<std::size_t>(j) + 1] = fixed[static_cast<std::size_t>(j)];

    LhvModel model;
    const std::vector<int> bob_radix(static_cast<std::size_t>(n), bob_outcomes);
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    std::vector<int> outcomes(static_cast<std::size_t>(n) + 1);
    do {
        // Bobs' marginal at the fixed settings; x-independent by NS, taken at x = 0.
        settings[0] = 0;
        for (int j = 0; j < n; ++j) outcomes[static_cast<std::size_t>(j) + 1] = b[static_cast<std::size_t>(j)];
        Rational weight = 0;
        for (int a = 0; a < alice_outcomes; ++a) {
            outcomes[0] = a;
            weight += p.at(settings, outcomes);
        }
        model.hidden[b] = weight;
        for (int x = 0; x < alice_settings; ++x) {
            settings[0] = x;
            std::vector<Rational> response(static_cast<std::size_t>(alice_outcomes));
            if (weight == 0) {
                // Any valid distribution works on zero-weight branches.
                for (auto& r : response)
                    r = Rational(1, static_cast<unsigned long>(alice_outcomes));
            } else {
                for (int a = 0; a < alice_outcomes; ++a) {
                    outcomes[0] = a;
                    response[static_cast<std::size_t>(a)] = p.at(settings, outcomes) / weight;
                }
            }
            model.responses[{b, x}] = std::move(response);
        }
    } while (mixed_radix_next(b, bob_radix));
    return model;
}

Rational chain_value_on_lhv(const MonogamySetup& setup, const LhvModel& model, int m) {
    const BellFunctional bm = chain_functional(setup, m);
    Rational total = 0;
    for (const auto& [key, coeff] : bm.terms) {
        const int x = key.first[0];
        const int a = key.second[0];
        const std::vector<int> b(key.second.begin() + 1, key.second.end());
        total += coeff * model.joint(x, a, b);
    }
    return total;
}

}  // namespace bell
