#pragma once

#include <cstdint>
#include <utility>

#include "bell/functional.hpp"
#include "bell/lp.hpp"

namespace bell {

inline constexpr std::size_t kEnumerationCap = 10'000'000;

struct LocalBoundResult {
    Rational value;
    DeterministicStrategy witness;  // first argmax in mixed-radix order
};

// Exact maximum over all local deterministic strategies. Correlator forms
// are expanded first. Errors out (naming the count) when the strategy count
// exceeds kEnumerationCap.
LocalBoundResult local_bound(const BellFunctional& f);

struct NsBoundResult {
    Rational value;
    Behavior witness;       // optimal vertex, passes is_nonsignaling
    LpProblem problem;      // the solved LP, kept for certificate checking
    LpSolution solution;
};

// Exact maximum over the no-signaling polytope via solve_lp. Variables are
// the behavior entries; constraints are per-settings normalization plus
// party-wise adjacent-setting marginal equalities (redundancy is fine, the
// solver drops dependent rows).
NsBoundResult ns_bound(const BellFunctional& f);

// The NS polytope of a scenario as an LpProblem with the given dense
// objective over (settings-major) behavior entries.
LpProblem ns_polytope_lp(const Scenario& scenario, std::vector<Rational> objective);

// Dense objective vector of a probability-form functional.
std::vector<Rational> functional_objective(const BellFunctional& f);

// Reproducible convex mixture of `mixing` NS-polytope vertices, each the
// optimizer of a pseudorandom small-integer objective drawn from a
// seed-determined generator. Always valid and non-signaling.
Behavior sample_ns_behavior(const Scenario& scenario, std::uint64_t seed, int mixing);

}  // namespace bell
