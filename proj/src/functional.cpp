#include "bell/functional.hpp"

#include <string>

#include "bell/errors.hpp"

namespace bell {

void BellFunctional::prune_zeros() {
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
}

namespace {

void check_tuple(const std::vector<int>& tuple, const Scenario& sc, bool settings,
                 const char* what) {
    if (tuple.size() != sc.party_count())
        throw DomainError(std::string(what) + " tuple arity mismatch");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        const int radix = settings ? sc.party(i).settings : sc.party(i).outcomes;
        if (tuple[i] < 0 || tuple[i] >= radix)
            throw DomainError(std::string(what) + " index " + std::to_string(tuple[i])
                              + " out of range for party " + std::to_string(i));
    }
}

}  // namespace

void validate_functional(const BellFunctional& f) {
    const bool correlator = f.form == FunctionalForm::CorrelatorCoefficients;
    if (correlator && !f.scenario.all_binary_outcomes())
        throw DomainError("correlator form requires every party binary-outcome");
    for (const auto& [key, coeff] : f.terms) {
        check_tuple(key.first, f.scenario, true, "settings");
        if (correlator) {
            if (!key.second.empty())
                throw DomainError("correlator-form keys must carry an empty outcomes tuple");
        } else {
            check_tuple(key.second, f.scenario, false, "outcomes");
        }
    }
}

bool is_nonnegative_form(const BellFunctional& f) {
    if (f.form != FunctionalForm::ProbabilityCoefficients) return false;
    for (const auto& [key, coeff] : f.terms)
        if (coeff < 0) return false;
    return true;
}

BellFunctional expand_correlators(const BellFunctional& f) {
    if (f.form != FunctionalForm::CorrelatorCoefficients)
        throw DomainError("expand_correlators expects a correlator-form functional");
    if (!f.scenario.all_binary_outcomes())
        throw DomainError("correlator expansion requires every party binary-outcome");
    validate_functional(f);

    BellFunctional out;
    out.scenario = f.scenario;
    out.form = FunctionalForm::ProbabilityCoefficients;
    out.bound = f.bound;
    const std::size_t parties = f.scenario.party_count();
    for (const auto& [key, coeff] : f.terms) {
        if (coeff == 0) continue;
        std::vector<int> o(parties, 0);
        const std::vector<int> radix(parties, 2);
        do {
            int parity = 0;
            for (int v : o) parity ^= v;
            const Rational signed_coeff = parity ? Rational(-coeff) : coeff;
            out.terms[{key.first, o}] += signed_coeff;
        } while (mixed_radix_next(o, radix));
    }
    out.prune_zeros();
    return out;
}

Rational evaluate(const BellFunctional& f, const Behavior& p) {
    if (!(f.scenario == p.scenario()))
        throw DomainError("functional and behavior scenarios differ");
    if (f.form == FunctionalForm::CorrelatorCoefficients)
        return evaluate(expand_correlators(f), p);
    validate_functional(f);
    Rational total = 0;
    for (const auto& [key, coeff] : f.terms)
        total += coeff * p.at(key.first, key.second);
    return total;
}

NonnegResult normalize_nonneg(const BellFunctional& f) {
    if (f.form != FunctionalForm::ProbabilityCoefficients)
        throw DomainError("normalize_nonneg expects probability coefficients; expand correlators first");
    validate_functional(f);

    NonnegResult result;
    result.functional.scenario = f.scenario;
    result.functional.form = FunctionalForm::ProbabilityCoefficients;
    result.offset = 0;

    const std::size_t joint_outcomes = f.scenario.joint_outcomes();
    for (const auto& [key, coeff] : f.terms) {
        if (coeff == 0) continue;
        if (coeff > 0) {
            result.functional.terms[key] += coeff;
            continue;
        }
        // -c P(o|s) -> +c on every other outcome tuple at s, plus constant c.
        const Rational c = -coeff;
        result.offset += c;
        const std::size_t skip = f.scenario.outcomes_index(key.second);
        for (std::size_t oo = 0; oo < joint_outcomes; ++oo) {
            if (oo == skip) continue;
            result.functional.terms[{key.first, f.scenario.outcomes_tuple(oo)}] += c;
        }
    }
    result.functional.prune_zeros();
    result.functional.bound = f.bound + result.offset;
    return result;
}

Rational evaluate_on_strategy(const BellFunctional& f, const DeterministicStrategy& strategy) {
    if (f.form == FunctionalForm::CorrelatorCoefficients)
        return evaluate_on_strategy(expand_correlators(f), strategy);
    Rational total = 0;
    for (const auto& [key, coeff] : f.terms) {
        bool match = true;
        for (std::size_t i = 0; i < key.first.size() && match; ++i)
            match = strategy[i][key.first[i]] == key.second[i];
        if (match) total += coeff;
    }
    return total;
}

}  // namespace bell
