#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bell/behavior.hpp"
#include "bell/functional.hpp"

namespace bell {
namespace fixtures {

// 2-setting / 2-outcome bipartite scenario.
Scenario chsh_scenario();

// P(a=b|0,0) + P(a=b|0,1) + P(a=b|1,0) + P(a!=b|1,1) <= 3.
BellFunctional chsh_prob();

// E(0,0) + E(0,1) + E(1,0) - E(1,1) <= 2.
BellFunctional chsh_corr();

// Chained 3-setting correlator inequality
// E(0,0) + E(1,0) + E(1,1) + E(2,1) + E(2,2) - E(0,2) <= 4.
BellFunctional chained3_corr();

// Its grouped probability form: P(a=b) on the five plus pairs, P(a!=b) on
// (0,2); local bound 5.
BellFunctional chained3_prob();

// Three-party Mermin correlator inequality
// E(0,0,1) + E(0,1,0) + E(1,0,0) - E(1,1,1) <= 2.
BellFunctional mermin_corr();

// P(a,b|x,y) = 1/2 iff a xor b = x.y, else 0.
Behavior pr_box();

// The quantum-optimal CHSH behavior (1 + (-1)^{a+b+xy} r) / 4, with r a
// rational approximation of 1/sqrt(2) satisfying |r^2 - 1/2| <= 1e-24.
Behavior tsirelson();

// Pell-convergent approximations; errors |r^2 - target| <= 1e-24.
Rational sqrt2_approx();
Rational inv_sqrt2_approx();

// All-zero-outcome deterministic strategy on a scenario.
DeterministicStrategy all_zero_strategy(const Scenario& scenario);

using Fixture = std::variant<Scenario, BellFunctional, Behavior>;

// Built-ins addressable as fixtures:<name> in the CLI. Behaviors: pr-box,
// uniform, tsirelson, all-zero (all on the CHSH scenario).
std::vector<std::string> names();
Fixture by_name(const std::string& name);

}  // namespace fixtures
}  // namespace bell
