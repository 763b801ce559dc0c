#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bell/errors.hpp"

namespace bell {

struct PartySpec {
    int settings = 1;  // >= 1
    int outcomes = 2;  // >= 2, uniform across this party's settings

    friend bool operator==(const PartySpec&, const PartySpec&) = default;
};

// Joint index spaces (settings and outcomes) are mixed-radix products over
// the parties, most-significant party first. Both products are capped to
// keep dense tables desk-scale.
class Scenario {
public:
    static constexpr std::size_t kIndexCap = 100'000'000;

    Scenario() = default;
    explicit Scenario(std::vector<PartySpec> parties);

    const std::vector<PartySpec>& parties() const { return parties_; }
    std::size_t party_count() const { return parties_.size(); }
    const PartySpec& party(std::size_t i) const { return parties_[i]; }

    std::size_t joint_settings() const { return joint_settings_; }
    std::size_t joint_outcomes() const { return joint_outcomes_; }
    std::size_t table_size() const { return joint_settings_ * joint_outcomes_; }

    std::size_t settings_index(std::span<const int> tuple) const;
    std::size_t outcomes_index(std::span<const int> tuple) const;
    std::vector<int> settings_tuple(std::size_t index) const;
    std::vector<int> outcomes_tuple(std::size_t index) const;

    bool all_binary_outcomes() const;

    const std::vector<int>& settings_radix() const { return settings_radix_; }
    const std::vector<int>& outcomes_radix() const { return outcomes_radix_; }

    friend bool operator==(const Scenario& a, const Scenario& b) {
        return a.parties_ == b.parties_;
    }

private:
    std::vector<PartySpec> parties_;
    std::vector<int> settings_radix_;
    std::vector<int> outcomes_radix_;
    std::size_t joint_settings_ = 1;
    std::size_t joint_outcomes_ = 1;
};

// Mixed-radix counter helpers shared by the enumeration and flattening code.
// flatten/unflatten use the most-significant-first convention throughout.
std::size_t mixed_radix_flatten(std::span<const int> digits, std::span<const int> radices);
std::vector<int> mixed_radix_unflatten(std::size_t index, std::span<const int> radices);
// Advances `digits` to the next tuple; returns false after the last one.
bool mixed_radix_next(std::vector<int>& digits, std::span<const int> radices);
// Product of radices, throws DomainError above `cap`.
std::size_t mixed_radix_size(std::span<const int> radices, std::size_t cap);

}  // namespace bell
