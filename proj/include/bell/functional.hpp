#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bell/behavior.hpp"
#include "bell/rational.hpp"
#include "bell/scenario.hpp"

namespace bell {

enum class FunctionalForm {
    ProbabilityCoefficients,
    CorrelatorCoefficients,
};

// Key of one functional term. Probability-form keys carry both tuples;
// correlator-form keys carry only the settings tuple (outcomes empty).
using TermKey = std::pair<std::vector<int>, std::vector<int>>;

// Sparse linear expression in behavior entries together with its
// local-realistic bound. Term order is the map's lexicographic key order,
// which keeps every downstream output deterministic.
struct BellFunctional {
    Scenario scenario;
    FunctionalForm form = FunctionalForm::ProbabilityCoefficients;
    std::map<TermKey, Rational> terms;
    Rational bound;

    // Drops explicit zero coefficients (canonical sparse form).
    void prune_zeros();
};

// Throws DomainError if any key is out of range for the scenario or has the
// wrong arity for the declared form.
void validate_functional(const BellFunctional& f);

// True iff probability form with every coefficient >= 0.
bool is_nonnegative_form(const BellFunctional& f);

// Value of the functional on a behavior; correlator forms are expanded
// internally (losslessly) first. Scenario mismatch is an error.
Rational evaluate(const BellFunctional& f, const Behavior& p);

// Lossless rewrite of correlator coefficients into signed probability
// coefficients: a weight c on settings tuple s becomes c * prod_i (-1)^{o_i}
// on every outcome tuple o at s. Requires all parties binary-outcome.
BellFunctional expand_correlators(const BellFunctional& f);

struct NonnegResult {
    BellFunctional functional;  // all coefficients >= 0, bound = f.bound + offset
    Rational offset;            // sum of |c| over the negative terms of f
};

// Complement substitution: each negative term -c * P(o|s) is replaced by +c
// on every other outcome tuple at the same settings tuple, merging with any
// existing coefficient. evaluate(result, p) = evaluate(f, p) + offset for
// every behavior p.
NonnegResult normalize_nonneg(const BellFunctional& f);

// Value of a functional on a deterministic strategy without building the
// dense behavior table.
Rational evaluate_on_strategy(const BellFunctional& f, const DeterministicStrategy& strategy);

}  // namespace bell
