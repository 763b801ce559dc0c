#pragma once

#include "bell/functional.hpp"

namespace bell {

// Ordered two-set division of the parties; both groups non-empty, disjoint,
// covering.
struct Bipartition {
    std::vector<std::size_t> group_a;
    std::vector<std::size_t> group_b;
};

// group_b defaults to the complement of group_a in listed-party order.
Bipartition make_bipartition(const Scenario& scenario, std::vector<std::size_t> group_a);

// Index bookkeeping of a flattening: composite settings and outcomes are
// mixed-radix tuples over the group members, most-significant first in the
// group's listed order.
struct FlattenMaps {
    Bipartition cut;
    std::vector<int> settings_radix_a, outcomes_radix_a;
    std::vector<int> settings_radix_b, outcomes_radix_b;

    // Full N-party tuple -> composite (pair) tuple, and back.
    std::vector<int> settings_to_pair(std::span<const int> full) const;
    std::vector<int> outcomes_to_pair(std::span<const int> full) const;
    std::vector<int> settings_to_full(std::span<const int> pair) const;
    std::vector<int> outcomes_to_full(std::span<const int> pair) const;
};

struct FlattenResult {
    BellFunctional functional;  // bipartite, probability form
    FlattenMaps maps;
};

// Rewrites an N-party functional as a bipartite one on the composite
// scenario, transporting coefficients along the index bijection. Correlator
// forms are expanded first (composite outcomes are no longer binary).
FlattenResult flatten_bipartition(const BellFunctional& f, const Bipartition& cut);

// Same bijection applied to a behavior table; evaluation commutes with
// flattening.
Behavior flatten_behavior(const Behavior& p, const Bipartition& cut);

}  // namespace bell
