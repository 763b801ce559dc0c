#include "bell/io.hpp"

#include <fstream>

#include "bell/errors.hpp"

namespace bell {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end())
        throw DocumentError("document is missing field '" + std::string(name) + "'");
    return *it;
}

std::vector<int> int_tuple(const json& arr, const char* what) {
    if (!arr.is_array()) throw DocumentError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw DocumentError(std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Rational rational_field(const json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw DocumentError(std::string(what) + " must be a \"p/q\" string");
    return parse_rational(v.get<std::string>());
}

}  // namespace

json scenario_to_json(const Scenario& s) {
    json parties = json::array();
    for (const auto& p : s.parties())
        parties.push_back({{"settings", p.settings}, {"outcomes", p.outcomes}});
    return json{{"parties", parties}};
}

Scenario scenario_from_json(const json& doc) {
    const json& parties = field(doc, "parties");
    if (!parties.is_array() || parties.empty())
        throw DocumentError("'parties' must be a non-empty array");
    std::vector<PartySpec> specs;
    for (const auto& p : parties) {
        PartySpec spec;
        spec.settings = field(p, "settings").get<int>();
        spec.outcomes = field(p, "outcomes").get<int>();
        specs.push_back(spec);
    }
    try {
        return Scenario(specs);
    } catch (const DomainError& e) {
        throw DocumentError(std::string("bad scenario: ") + e.what());
    }
}

json functional_to_json(const BellFunctional& f) {
    json terms = json::array();
    for (const auto& [key, coeff] : f.terms)
        terms.push_back({{"settings", key.first},
                         {"outcomes", key.second},
                         {"coeff", rational_string(coeff)}});
    return json{{"scenario", scenario_to_json(f.scenario)},
                {"form", f.form == FunctionalForm::CorrelatorCoefficients ? "correlator" : "probability"},
                {"bound", rational_string(f.bound)},
                {"terms", terms}};
}

BellFunctional functional_from_json(const json& doc) {
    BellFunctional f;
    f.scenario = scenario_from_json(field(doc, "scenario"));
    const std::string form = field(doc, "form").get<std::string>();
    if (form == "probability")
        f.form = FunctionalForm::ProbabilityCoefficients;
    else if (form == "correlator")
        f.form = FunctionalForm::CorrelatorCoefficients;
    else
        throw DocumentError("'form' must be \"probability\" or \"correlator\"");
    f.bound = rational_field(field(doc, "bound"), "bound");
    const json& terms = field(doc, "terms");
    if (!terms.is_array()) throw DocumentError("'terms' must be an array");
    for (const auto& t : terms) {
        TermKey key{int_tuple(field(t, "settings"), "term settings"),
                    int_tuple(field(t, "outcomes"), "term outcomes")};
        f.terms[key] += rational_field(field(t, "coeff"), "term coeff");
    }
    try {
        validate_functional(f);
    } catch (const DomainError& e) {
        throw DocumentError(std::string("bad functional: ") + e.what());
    }
    return f;
}

json behavior_to_json(const Behavior& p) {
    json entries = json::array();
    for (const auto& v : p.table()) entries.push_back(rational_string(v));
    return json{{"scenario", scenario_to_json(p.scenario())},
                {"order", "settings-major-lex"},
                {"entries", entries}};
}

Behavior behavior_from_json(const json& doc) {
    const Scenario sc = scenario_from_json(field(doc, "scenario"));
    const std::string order = field(doc, "order").get<std::string>();
    if (order != "settings-major-lex")
        throw DocumentError("'order' must be \"settings-major-lex\"");
    const json& entries = field(doc, "entries");
    if (!entries.is_array()) throw DocumentError("'entries' must be an array");
    if (entries.size() != sc.table_size())
        throw DocumentError("'entries' has " + std::to_string(entries.size()) + " values, expected "
                            + std::to_string(sc.table_size()));
    std::vector<Rational> table;
    table.reserve(entries.size());
    for (const auto& v : entries) table.push_back(rational_field(v, "behavior entry"));
    return Behavior(sc, std::move(table));
}

json lhv_to_json(const LhvModel& model) {
    json hidden = json::array();
    for (const auto& [b, w] : model.hidden)
        hidden.push_back({{"outcomes", b}, {"weight", rational_string(w)}});
    json responses = json::array();
    for (const auto& [key, dist] : model.responses) {
        json probs = json::array();
        for (const auto& v : dist) probs.push_back(rational_string(v));
        responses.push_back({{"outcomes", key.first}, {"setting", key.second}, {"distribution", probs}});
    }
    return json{{"hidden", hidden}, {"responses", responses}};
}

json monogamy_report_to_json(const MonogamyReport& report) {
    json per_pair = json::array();
    for (const auto& v : report.per_pair)
        per_pair.push_back({{"value", rational_string(v)}, {"decimal", rational_decimal(v)}});
    json doc{{"sum", rational_string(report.sum)},
             {"sum_decimal", rational_decimal(report.sum)},
             {"bound", rational_string(report.bound)},
             {"holds", report.holds},
             {"per_pair", per_pair},
             {"nonsignaling", !report.ns_witness.has_value()}};
    if (report.ns_witness) doc["signaling_witness"] = report.ns_witness->describe();
    return doc;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DocumentError("cannot parse '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw DocumentError("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

}  // namespace bell
