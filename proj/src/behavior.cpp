#include "bell/behavior.hpp"

#include <sstream>

#include "bell/errors.hpp"

namespace bell {

std::string SignalingWitness::describe() const {
    std::ostringstream os;
    os << "party " << party << " signals via settings " << setting_a << " vs " << setting_b
       << " (marginal difference " << rational_string(difference) << " at context settings [";
    for (std::size_t i = 0; i < other_settings.size(); ++i) {
        if (i) os << ",";
        os << (i == party ? -1 : other_settings[i]);
    }
    os << "], outcomes [";
    for (std::size_t i = 0; i < other_outcomes.size(); ++i) {
        if (i) os << ",";
        os << (i == party ? -1 : other_outcomes[i]);
    }
    os << "])";
    return os.str();
}

Behavior::Behavior(Scenario scenario, std::vector<Rational> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
    if (table_.size() != scenario_.table_size())
        throw DomainError("behavior table has " + std::to_string(table_.size()) + " entries, expected "
                          + std::to_string(scenario_.table_size()));
}

void validate_behavior(const Behavior& p) {
    const auto& sc = p.scenario();
    for (std::size_t s = 0; s < sc.joint_settings(); ++s) {
        Rational sum = 0;
        for (std::size_t o = 0; o < sc.joint_outcomes(); ++o) {
            const Rational& v = p.at(s, o);
            if (v < 0)
                throw DomainError("negative probability at settings index " + std::to_string(s)
                                  + ", outcomes index " + std::to_string(o));
            sum += v;
        }
        if (sum != 1)
            throw DomainError("settings slice " + std::to_string(s) + " sums to "
                              + rational_string(sum) + ", expected 1");
    }
}

std::optional<SignalingWitness> signaling_witness(const Behavior& p) {
    const auto& sc = p.scenario();
    const std::size_t parties = sc.party_count();
    std::vector<int> s(parties, 0), o(parties, 0);

    for (std::size_t i = 0; i < parties; ++i) {
        const int ni = sc.party(i).settings;
        const int di = sc.party(i).outcomes;
        if (ni < 2) continue;
        // Radices of the other parties' settings; party i's slot runs last.
        std::vector<int> other_radix;
        for (std::size_t j = 0; j < parties; ++j)
            if (j != i) other_radix.push_back(sc.party(j).settings);
        std::vector<int> others(other_radix.size(), 0);
        do {
            std::size_t k = 0;
            for (std::size_t j = 0; j < parties; ++j)
                if (j != i) s[j] = others[k++];
            for (int si = 0; si + 1 < ni; ++si) {
                // Marginal over everyone but party i, for settings si vs si+1.
                for (std::size_t oo = 0; oo < sc.joint_outcomes(); ++oo) {
                    std::vector<int> ot = sc.outcomes_tuple(oo);
                    if (ot[i] != 0) continue;  // enumerate others' outcomes once
                    Rational lhs = 0, rhs = 0;
                    for (int a = 0; a < di; ++a) {
                        ot[i] = a;
                        s[i] = si;
                        lhs += p.at(s, ot);
                        s[i] = si + 1;
                        rhs += p.at(s, ot);
                    }
                    ot[i] = 0;
                    if (lhs != rhs) {
                        SignalingWitness w;
                        w.party = i;
                        w.setting_a = si;
                        w.setting_b = si + 1;
                        w.other_settings = s;
                        w.other_outcomes = ot;
                        w.difference = lhs - rhs;
                        return w;
                    }
                }
            }
        } while (mixed_radix_next(others, other_radix));
    }
    return std::nullopt;
}

Behavior marginal_behavior(const Behavior& p, const std::vector<std::size_t>& keep,
                           const std::vector<int>& other_settings) {
    const auto& sc = p.scenario();
    if (other_settings.size() != sc.party_count())
        throw DomainError("other_settings tuple arity mismatch");
    std::vector<bool> kept(sc.party_count(), false);
    std::vector<PartySpec> sub_parties;
    for (std::size_t i : keep) {
        if (i >= sc.party_count()) throw DomainError("marginal party index out of range");
        if (kept[i]) throw DomainError("duplicate party in marginal subset");
        kept[i] = true;
        sub_parties.push_back(sc.party(i));
    }
    Scenario sub(sub_parties);

    std::vector<Rational> table(sub.table_size(), Rational(0));
    std::vector<int> full_s(sc.party_count()), full_o(sc.party_count(), 0);
    for (std::size_t i = 0; i < sc.party_count(); ++i)
        full_s[i] = kept[i] ? 0 : other_settings[i];

    // Radices of the discarded parties' outcomes.
    std::vector<int> rest_radix;
    for (std::size_t i = 0; i < sc.party_count(); ++i)
        if (!kept[i]) rest_radix.push_back(sc.party(i).outcomes);

    for (std::size_t ss = 0; ss < sub.joint_settings(); ++ss) {
        const auto sub_s = sub.settings_tuple(ss);
        for (std::size_t k = 0; k < keep.size(); ++k) full_s[keep[k]] = sub_s[k];
        for (std::size_t so = 0; so < sub.joint_outcomes(); ++so) {
            const auto sub_o = sub.outcomes_tuple(so);
            for (std::size_t k = 0; k < keep.size(); ++k) full_o[keep[k]] = sub_o[k];
            Rational sum = 0;
            std::vector<int> rest(rest_radix.size(), 0);
            do {
                std::size_t k = 0;
                for (std::size_t i = 0; i < sc.party_count(); ++i)
                    if (!kept[i]) full_o[i] = rest[k++];
                sum += p.at(full_s, full_o);
            } while (mixed_radix_next(rest, rest_radix));
            table[ss * sub.joint_outcomes() + so] = sum;
        }
    }
    return Behavior(sub, std::move(table));
}

Behavior deterministic_behavior(const Scenario& scenario, const DeterministicStrategy& strategy) {
    if (strategy.size() != scenario.party_count())
        throw DomainError("strategy party count mismatch");
    for (std::size_t i = 0; i < strategy.size(); ++i) {
        if (static_cast<int>(strategy[i].size()) != scenario.party(i).settings)
            throw DomainError("strategy settings count mismatch for party " + std::to_string(i));
        for (int out : strategy[i])
            if (out < 0 || out >= scenario.party(i).outcomes)
                throw DomainError("strategy outcome out of range for party " + std::to_string(i));
    }
    std::vector<Rational> table(scenario.table_size(), Rational(0));
    for (std::size_t s = 0; s < scenario.joint_settings(); ++s) {
        const auto st = scenario.settings_tuple(s);
        std::vector<int> ot(scenario.party_count());
        for (std::size_t i = 0; i < scenario.party_count(); ++i) ot[i] = strategy[i][st[i]];
        table[s * scenario.joint_outcomes() + scenario.outcomes_index(ot)] = 1;
    }
    return Behavior(scenario, std::move(table));
}

Behavior uniform_behavior(const Scenario& scenario) {
    Rational w(1, static_cast<unsigned long>(scenario.joint_outcomes()));
    std::vector<Rational> table(scenario.table_size(), w);
    return Behavior(scenario, std::move(table));
}

Behavior mix_behaviors(const std::vector<Behavior>& parts, const std::vector<Rational>& weights) {
    if (parts.empty() || parts.size() != weights.size())
        throw DomainError("mixture needs matching non-empty parts and weights");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw DomainError("negative mixture weight");
        total += w;
    }
    if (total != 1) throw DomainError("mixture weights must sum to 1");
    const Scenario& sc = parts.front().scenario();
    std::vector<Rational> table(sc.table_size(), Rational(0));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!(parts[k].scenario() == sc)) throw DomainError("mixture scenario mismatch");
        for (std::size_t i = 0; i < table.size(); ++i) table[i] += weights[k] * parts[k].table()[i];
    }
    return Behavior(sc, std::move(table));
}

}  // namespace bell
