#include "bell/multipartite.hpp"

#include <algorithm>

#include "bell/errors.hpp"

namespace bell {

Bipartition make_bipartition(const Scenario& sc, std::vector<std::size_t> group_a) {
    Bipartition cut;
    cut.group_a = std::move(group_a);
    std::vector<bool> used(sc.party_count(), false);
    if (cut.group_a.empty()) throw DomainError("bipartition group A must be non-empty");
    for (std::size_t i : cut.group_a) {
        if (i >= sc.party_count()) throw DomainError("bipartition party index out of range");
        if (used[i]) throw DomainError("bipartition has a duplicate party index");
        used[i] = true;
    }
    for (std::size_t i = 0; i < sc.party_count(); ++i)
        if (!used[i]) cut.group_b.push_back(i);
    if (cut.group_b.empty()) throw DomainError("bipartition group B must be non-empty");
    return cut;
}

namespace {

void validate_cut(const Scenario& sc, const Bipartition& cut) {
    if (cut.group_a.empty() || cut.group_b.empty())
        throw DomainError("bipartition groups must be non-empty");
    std::vector<bool> used(sc.party_count(), false);
    auto mark = [&](const std::vector<std::size_t>& group) {
        for (std::size_t i : group) {
            if (i >= sc.party_count()) throw DomainError("bipartition party index out of range");
            if (used[i]) throw DomainError("bipartition groups overlap");
            used[i] = true;
        }
    };
    mark(cut.group_a);
    mark(cut.group_b);
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw DomainError("bipartition does not cover every party");
}

FlattenMaps build_maps(const Scenario& sc, const Bipartition& cut) {
    FlattenMaps maps;
    maps.cut = cut;
    for (std::size_t i : cut.group_a) {
        maps.settings_radix_a.push_back(sc.party(i).settings);
        maps.outcomes_radix_a.push_back(sc.party(i).outcomes);
    }
    for (std::size_t i : cut.group_b) {
        maps.settings_radix_b.push_back(sc.party(i).settings);
        maps.outcomes_radix_b.push_back(sc.party(i).outcomes);
    }
    return maps;
}

std::vector<int> group_values(std::span<const int> full, const std::vector<std::size_t>& group) {
    std::vector<int> v;
    v.reserve(group.size());
    for (std::size_t i : group) v.push_back(full[i]);
    return v;
}

Scenario composite_scenario(const Scenario& sc, const FlattenMaps& maps) {
    const auto size = [](std::span<const int> radix) {
        return static_cast<int>(mixed_radix_size(radix, Scenario::kIndexCap));
    };
    return Scenario({PartySpec{size(maps.settings_radix_a), size(maps.outcomes_radix_a)},
                     PartySpec{size(maps.settings_radix_b), size(maps.outcomes_radix_b)}});
}

}  // namespace

std::vector<int> FlattenMaps::settings_to_pair(std::span<const int> full) const {
    return {static_cast<int>(mixed_radix_flatten(group_values(full, cut.group_a), settings_radix_a)),
            static_cast<int>(mixed_radix_flatten(group_values(full, cut.group_b), settings_radix_b))};
}

std::vector<int> FlattenMaps::outcomes_to_pair(std::span<const int> full) const {
    return {static_cast<int>(mixed_radix_flatten(group_values(full, cut.group_a), outcomes_radix_a)),
            static_cast<int>(mixed_radix_flatten(group_values(full, cut.group_b), outcomes_radix_b))};
}

std::vector<int> FlattenMaps::settings_to_full(std::span<const int> pair) const {
    std::vector<int> full(cut.group_a.size() + cut.group_b.size());
    const auto a = mixed_radix_unflatten(static_cast<std::size_t>(pair[0]), settings_radix_a);
    const auto b = mixed_radix_unflatten(static_cast<std::size_t>(pair[1]), settings_radix_b);
    for (std::size_t k = 0; k < cut.group_a.size(); ++k) full[cut.group_a[k]] = a[k];
    for (std::size_t k = 0; k < cut.group_b.size(); ++k) full[cut.group_b[k]] = b[k];
    return full;
}

std::vector<int> FlattenMaps::outcomes_to_full(std::span<const int> pair) const {
    std::vector<int> full(cut.group_a.size() + cut.group_b.size());
    const auto a = mixed_radix_unflatten(static_cast<std::size_t>(pair[0]), outcomes_radix_a);
    const auto b = mixed_radix_unflatten(static_cast<std::size_t>(pair[1]), outcomes_radix_b);
    for (std::size_t k = 0; k < cut.group_a.size(); ++k) full[cut.group_a[k]] = a[k];
    for (std::size_t k = 0; k < cut.group_b.size(); ++k) full[cut.group_b[k]] = b[k];
    return full;
}

FlattenResult flatten_bipartition(const BellFunctional& f, const Bipartition& cut) {
    if (f.form == FunctionalForm::CorrelatorCoefficients)
        return flatten_bipartition(expand_correlators(f), cut);
    validate_functional(f);
    validate_cut(f.scenario, cut);

    FlattenResult result;
    result.maps = build_maps(f.scenario, cut);
    result.functional.scenario = composite_scenario(f.scenario, result.maps);
    result.functional.form = FunctionalForm::ProbabilityCoefficients;
    result.functional.bound = f.bound;
    for (const auto& [key, coeff] : f.terms)
        result.functional.terms[{result.maps.settings_to_pair(key.first),
                                 result.maps.outcomes_to_pair(key.second)}] += coeff;
    result.functional.prune_zeros();
    return result;
}

Behavior flatten_behavior(const Behavior& p, const Bipartition& cut) {
    validate_cut(p.scenario(), cut);
    const FlattenMaps maps = build_maps(p.scenario(), cut);
    const Scenario flat = composite_scenario(p.scenario(), maps);

    std::vector<Rational> table(flat.table_size());
    for (std::size_t s = 0; s < flat.joint_settings(); ++s) {
        const auto pair_s = flat.settings_tuple(s);
        const auto full_s = maps.settings_to_full(pair_s);
        for (std::size_t o = 0; o < flat.joint_outcomes(); ++o) {
            const auto full_o = maps.outcomes_to_full(flat.outcomes_tuple(o));
            table[s * flat.joint_outcomes() + o] = p.at(full_s, full_o);
        }
    }
    return Behavior(flat, std::move(table));
}

}  // namespace bell
