#include "bell/scenario.hpp"

#include <limits>
#include <string>

namespace bell {

std::size_t mixed_radix_size(std::span<const int> radices, std::size_t cap) {
    std::size_t total = 1;
    for (int r : radices) {
        if (r < 1) throw DomainError("mixed-radix radix must be >= 1");
        if (total > cap / static_cast<std::size_t>(r))
            throw DomainError("index space exceeds cap of " + std::to_string(cap));
        total *= static_cast<std::size_t>(r);
    }
    return total;
}

std::size_t mixed_radix_flatten(std::span<const int> digits, std::span<const int> radices) {
    if (digits.size() != radices.size())
        throw DomainError("tuple arity mismatch");
    std::size_t index = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= radices[i])
            throw DomainError("tuple entry " + std::to_string(digits[i]) + " out of range at position "
                              + std::to_string(i));
        index = index * static_cast<std::size_t>(radices[i]) + static_cast<std::size_t>(digits[i]);
    }
    return index;
}

std::vector<int> mixed_radix_unflatten(std::size_t index, std::span<const int> radices) {
    std::vector<int> digits(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        digits[i] = static_cast<int>(index % static_cast<std::size_t>(radices[i]));
        index /= static_cast<std::size_t>(radices[i]);
    }
    return digits;
}

bool mixed_radix_next(std::vector<int>& digits, std::span<const int> radices) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radices[i]) return true;
        digits[i] = 0;
    }
    return false;
}

Scenario::Scenario(std::vector<PartySpec> parties) : parties_(std::move(parties)) {
    if (parties_.empty()) throw DomainError("scenario needs at least one party");
    for (const auto& p : parties_) {
        if (p.settings < 1) throw DomainError("party settings count must be >= 1");
        if (p.outcomes < 2) throw DomainError("party outcomes count must be >= 2");
        settings_radix_.push_back(p.settings);
        outcomes_radix_.push_back(p.outcomes);
    }
    joint_settings_ = mixed_radix_size(settings_radix_, kIndexCap);
    joint_outcomes_ = mixed_radix_size(outcomes_radix_, kIndexCap);
    if (joint_settings_ > kIndexCap / joint_outcomes_)
        throw DomainError("behavior table exceeds cap of " + std::to_string(kIndexCap));
}

std::size_t Scenario::settings_index(std::span<const int> tuple) const {
    return mixed_radix_flatten(tuple, settings_radix_);
}

std::size_t Scenario::outcomes_index(std::span<const int> tuple) const {
    return mixed_radix_flatten(tuple, outcomes_radix_);
}

std::vector<int> Scenario::settings_tuple(std::size_t index) const {
    return mixed_radix_unflatten(index, settings_radix_);
}

std::vector<int> Scenario::outcomes_tuple(std::size_t index) const {
    return mixed_radix_unflatten(index, outcomes_radix_);
}

bool Scenario::all_binary_outcomes() const {
    for (const auto& p : parties_)
        if (p.outcomes != 2) return false;
    return true;
}

}  // namespace bell
