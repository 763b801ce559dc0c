#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bell/rational.hpp"
#include "bell/scenario.hpp"

namespace bell {

// Returned by is_nonsignaling on failure: party whose setting leaks into the
// others' marginal, the offending setting pair, the context it was found in,
// and the exact marginal difference.
struct SignalingWitness {
    std::size_t party = 0;
    int setting_a = 0;
    int setting_b = 0;
    std::vector<int> other_settings;  // full-length tuple, entry at `party` unused
    std::vector<int> other_outcomes;  // full-length tuple, entry at `party` unused
    Rational difference;

    std::string describe() const;
};

// Dense table of conditional probabilities P(outcomes | settings), stored in
// settings-major lexicographic order. Entries are exact rationals; immutable
// after construction.
class Behavior {
public:
    Behavior(Scenario scenario, std::vector<Rational> table);

    const Scenario& scenario() const { return scenario_; }
    const std::vector<Rational>& table() const { return table_; }

    const Rational& at(std::size_t settings_index, std::size_t outcomes_index) const {
        return table_[settings_index * scenario_.joint_outcomes() + outcomes_index];
    }
    const Rational& at(std::span<const int> settings, std::span<const int> outcomes) const {
        return at(scenario_.settings_index(settings), scenario_.outcomes_index(outcomes));
    }

private:
    Scenario scenario_;
    std::vector<Rational> table_;
};

// Checks non-negativity and per-settings normalization; the error message
// names the offending index.
void validate_behavior(const Behavior& p);

// True iff every party's discarded-marginal is independent of that party's
// setting (exact comparison over adjacent setting pairs, which is equivalent
// to all pairs). On failure the witness identifies one violation.
std::optional<SignalingWitness> signaling_witness(const Behavior& p);
inline bool is_nonsignaling(const Behavior& p) { return !signaling_witness(p).has_value(); }

// Marginal behavior on the ordered party subset `keep`, with every other
// party's setting pinned by `other_settings` (full-length tuple; entries at
// kept positions are ignored). Outcomes of discarded parties are summed out.
Behavior marginal_behavior(const Behavior& p, const std::vector<std::size_t>& keep,
                           const std::vector<int>& other_settings);

// Product of independent single-party deterministic responses: party i maps
// setting s to outcome strategy[i][s].
using DeterministicStrategy = std::vector<std::vector<int>>;
Behavior deterministic_behavior(const Scenario& scenario, const DeterministicStrategy& strategy);

Behavior uniform_behavior(const Scenario& scenario);

// Convex combination; weights must be non-negative and sum to 1.
Behavior mix_behaviors(const std::vector<Behavior>& parts, const std::vector<Rational>& weights);

}  // namespace bell
