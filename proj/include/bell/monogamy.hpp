#pragma once

#include <map>
#include <optional>

#include "bell/bounds.hpp"
#include "bell/functional.hpp"

namespace bell {

// One Alice plus n Bobs, each Bob a copy of the base inequality's Bob. The
// Bob setting count doubles as the number of Bobs; the base functional must
// be in non-negative probability form.
struct MonogamySetup {
    BellFunctional base;  // bipartite, non-negative form
    int n = 0;            // number of Bobs = base Bob's setting count
    Scenario extended;    // parties [Alice, Bob_1 .. Bob_n]
};

MonogamySetup extend_scenario(const BellFunctional& f);

// Fixed Bobs-settings tuple of the m-th chained expression: Bob j measures
// setting (j - m + 1 mod n). Both m and j are 1-based in the math; this
// returns 0-based settings for 0-based Bob positions, and is the single
// place where the convention is applied.
std::vector<int> chain_settings(const MonogamySetup& setup, int m);

// Value of the base inequality on the (Alice, Bob_m) marginal of p. Requires
// p non-signaling so the marginal is independent of the other Bobs'
// settings; signaling input is an error carrying the witness.
Rational pair_value(const MonogamySetup& setup, const Behavior& p, int m);

// The chained expression B_m as a functional on the extended scenario: the
// base coefficient on (x, y, a, b) lands on Alice (x, a) and Bob
// (y + m - 1 mod n) outcome b, with all Bobs' settings pinned to
// chain_settings(m) and the unconstrained Bobs' outcomes summed out
// (coefficients merged additively). Its bound is the base bound.
BellFunctional chain_functional(const MonogamySetup& setup, int m);

struct MonogamyReport {
    Rational sum;
    Rational bound;  // n * R
    bool holds = false;
    std::vector<Rational> per_pair;
    std::optional<SignalingWitness> ns_witness;
};

// Sum of pair values against n*R. Signaling behaviors are not refused: pair
// marginals are then taken at the canonical all-first-setting context and
// the witness is attached to the report.
MonogamyReport monogamy_check(const MonogamySetup& setup, const Behavior& p);

struct MonogamyLpResult {
    Rational value;     // max of sum_m B_m over the extended NS polytope
    Behavior witness;
    LpProblem problem;
    LpSolution solution;
};

MonogamyLpResult monogamy_lp_max(const MonogamySetup& setup);

// Local hidden-variable model over the Bobs' joint outcome vector: the
// source distributes b with probability hidden[b]; Alice answers x with
// responses[(b, x)].
struct LhvModel {
    std::map<std::vector<int>, Rational> hidden;
    std::map<std::pair<std::vector<int>, int>, std::vector<Rational>> responses;

    // P(a, b | x) reproduced by the model.
    Rational joint(int x, int a, const std::vector<int>& bobs_outcomes) const;
};

// Explicit local-realistic reconstruction of the fixed-settings slice of B_m:
// hidden weights are p's Bobs-marginal at chain_settings(m), responses the
// conditionals P(a | b, x). Reproduces p(a,b|x, chain settings) exactly;
// zero-weight branches get uniform responses.
LhvModel fixed_setting_lhv(const MonogamySetup& setup, const Behavior& p, int m);

// B_m evaluated on an LHV model (used to check the single-chain bound).
Rational chain_value_on_lhv(const MonogamySetup& setup, const LhvModel& model, int m);

}  // namespace bell
