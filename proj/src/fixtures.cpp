#include "bell/fixtures.hpp"

#include "bell/errors.hpp"

namespace bell {
namespace fixtures {

namespace {

// Pell convergents p/q of sqrt(2) satisfy p^2 - 2 q^2 = +-1, so both p/q and
// q/p square to within 1/q^2 resp. 1/(2 p^2) of their targets. Iterate until
// both errors drop below 1e-24.
void pell_convergent(mpz_class& p, mpz_class& q) {
    p = 1;
    q = 1;
    const mpz_class threshold = mpz_class("1000000000000000000000000");  // 1e24
    while (2 * p * p < threshold || q * q < threshold) {
        const mpz_class np = p + 2 * q;
        q = p + q;
        p = np;
    }
}

BellFunctional correlator_functional(Scenario sc, const std::vector<std::pair<std::vector<int>, int>>& entries,
                                     Rational bound) {
    BellFunctional f;
    f.scenario = std::move(sc);
    f.form = FunctionalForm::CorrelatorCoefficients;
    f.bound = std::move(bound);
    for (const auto& [settings, sign] : entries) f.terms[{settings, {}}] = sign;
    return f;
}

}  // namespace

Scenario chsh_scenario() {
    return Scenario({PartySpec{2, 2}, PartySpec{2, 2}});
}

BellFunctional chsh_prob() {
    BellFunctional f;
    f.scenario = chsh_scenario();
    f.form = FunctionalForm::ProbabilityCoefficients;
    f.bound = 3;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a) {
                const int b = (x == 1 && y == 1) ? 1 - a : a;
                f.terms[{{x, y}, {a, b}}] = 1;
            }
    return f;
}

BellFunctional chsh_corr() {
    return correlator_functional(chsh_scenario(),
                                 {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, -1}}, 2);
}

BellFunctional chained3_corr() {
    return correlator_functional(
        Scenario({PartySpec{3, 2}, PartySpec{3, 2}}),
        {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{0, 2}, -1}}, 4);
}

BellFunctional chained3_prob() {
    BellFunctional f;
    f.scenario = Scenario({PartySpec{3, 2}, PartySpec{3, 2}});
    f.form = FunctionalForm::ProbabilityCoefficients;
    f.bound = 5;
    const std::vector<std::pair<std::vector<int>, int>> pairs = {
        {{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{0, 2}, -1}};
    for (const auto& [s, sign] : pairs)
        for (int a = 0; a < 2; ++a) {
            const int b = sign > 0 ? a : 1 - a;  // P(a=b) on plus pairs, P(a!=b) on (0,2)
            f.terms[{s, {a, b}}] = 1;
        }
    return f;
}

BellFunctional mermin_corr() {
    return correlator_functional(
        Scenario({PartySpec{2, 2}, PartySpec{2, 2}, PartySpec{2, 2}}),
        {{{0, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}, {{1, 1, 1}, -1}}, 2);
}

Behavior pr_box() {
    const Scenario sc = chsh_scenario();
    std::vector<Rational> table(sc.table_size(), Rational(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((a ^ b) == (x & y)) {
                        const std::vector<int> s{x, y}, o{a, b};
                        table[sc.settings_index(s) * sc.joint_outcomes() + sc.outcomes_index(o)] =
                            Rational(1, 2);
                    }
    return Behavior(sc, std::move(table));
}

Rational sqrt2_approx() {
    mpz_class p, q;
    pell_convergent(p, q);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational inv_sqrt2_approx() {
    mpz_class p, q;
    pell_convergent(p, q);
    Rational r(q, p);
    r.canonicalize();
    return r;
}

Behavior tsirelson() {
    const Scenario sc = chsh_scenario();
    const Rational r = inv_sqrt2_approx();
    std::vector<Rational> table(sc.table_size());
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const int parity = (a ^ b ^ (x & y)) ? -1 : 1;
                    const std::vector<int> s{x, y}, o{a, b};
                    table[sc.settings_index(s) * sc.joint_outcomes() + sc.outcomes_index(o)] =
                        (1 + parity * r) / 4;
                }
    return Behavior(sc, std::move(table));
}

DeterministicStrategy all_zero_strategy(const Scenario& sc) {
    DeterministicStrategy strategy(sc.party_count());
    for (std::size_t i = 0; i < sc.party_count(); ++i)
        strategy[i].assign(static_cast<std::size_t>(sc.party(i).settings), 0);
    return strategy;
}

std::vector<std::string> names() {
    return {"chsh-scenario", "chsh-prob",   "chsh-corr", "chained3-corr", "chained3-prob",
            "mermin-corr",   "pr-box",      "uniform",   "tsirelson",     "all-zero"};
}

Fixture by_name(const std::string& name) {
    if (name == "chsh-scenario") return chsh_scenario();
    if (name == "chsh-prob") return chsh_prob();
    if (name == "chsh-corr") return chsh_corr();
    if (name == "chained3-corr") return chained3_corr();
    if (name == "chained3-prob") return chained3_prob();
    if (name == "mermin-corr") return mermin_corr();
    if (name == "pr-box") return pr_box();
    if (name == "uniform") return uniform_behavior(chsh_scenario());
    if (name == "tsirelson") return tsirelson();
    if (name == "all-zero") return deterministic_behavior(chsh_scenario(), all_zero_strategy(chsh_scenario()));
    throw DocumentError("unknown fixture '" + name + "'");
}

}  // namespace fixtures
}  // namespace bell
