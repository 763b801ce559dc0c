// bellcli: command-line front end over the document formats. Every verb maps
// to one library operation; output is deterministic byte-for-byte for
// identical inputs. Exit codes: 0 success, 1 domain error, 2 usage/document
// error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "bell/bounds.hpp"
#include "bell/cloning.hpp"
#include "bell/errors.hpp"
#include "bell/fixtures.hpp"
#include "bell/io.hpp"
#include "bell/monogamy.hpp"
#include "bell/multipartite.hpp"

namespace {

using namespace bell;

// Resolves "fixtures:<name>" against the built-in registry, anything else as
// a JSON file path. The document kind is detected from its fields.
fixtures::Fixture load_any(const std::string& ref) {
    constexpr const char* kScheme = "fixtures:";
    if (ref.rfind(kScheme, 0) == 0) return fixtures::by_name(ref.substr(9));
    const nlohmann::json doc = load_json_file(ref);
    if (!doc.is_object()) throw DocumentError(ref + ": expected a JSON object");
    if (doc.contains("form")) return functional_from_json(doc);
    if (doc.contains("entries")) return behavior_from_json(doc);
    if (doc.contains("parties")) return scenario_from_json(doc);
    throw DocumentError(ref + ": not a scenario, functional, or behavior document");
}

BellFunctional load_functional(const std::string& ref) {
    auto any = load_any(ref);
    if (auto* f = std::get_if<BellFunctional>(&any)) return std::move(*f);
    throw DocumentError(ref + ": expected a functional document");
}

Behavior load_behavior(const std::string& ref) {
    auto any = load_any(ref);
    if (auto* p = std::get_if<Behavior>(&any)) return std::move(*p);
    throw DocumentError(ref + ": expected a behavior document");
}

Scenario load_scenario(const std::string& ref) {
    auto any = load_any(ref);
    if (auto* s = std::get_if<Scenario>(&any)) return *s;
    if (auto* f = std::get_if<BellFunctional>(&any)) return f->scenario;
    if (auto* p = std::get_if<Behavior>(&any)) return p->scenario();
    throw DocumentError(ref + ": expected a scenario document");
}

// --base literals: "sqrt2", "1/sqrt2", "p/q", "p/q*sqrt2", "p/q+sqrt2". The
// sqrt2 token resolves to the fixture-precision rational approximation.
Rational parse_base(const std::string& text) {
    if (text == "sqrt2") return fixtures::sqrt2_approx();
    if (text == "1/sqrt2") return fixtures::inv_sqrt2_approx();
    const auto star = text.rfind("*sqrt2");
    if (star != std::string::npos && star + 6 == text.size())
        return parse_rational(text.substr(0, star)) * fixtures::sqrt2_approx();
    const auto plus = text.rfind("+sqrt2");
    if (plus != std::string::npos && plus + 6 == text.size())
        return parse_rational(text.substr(0, plus)) + fixtures::sqrt2_approx();
    return parse_rational(text);
}

std::string value_line(const Rational& v) {
    return rational_string(v) + " (" + rational_decimal(v) + ")";
}

// Common document output policy: --out writes the file, --format
// json-document dumps to stdout; text mode prints nothing here (the verb
// prints its own summary lines).
struct OutputOpts {
    std::string out;
    std::string format = "text";

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", out, "write the result document to this path");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json-document"}));
    }

    void emit(const nlohmann::json& doc) const {
        if (!out.empty()) write_json_file(out, doc);
        if (format == "json-document") std::cout << doc.dump(2) << "\n";
    }
};

void print_witness_strategy(const DeterministicStrategy& strategy) {
    for (std::size_t i = 0; i < strategy.size(); ++i) {
        std::cout << "witness party " << i << ":";
        for (int o : strategy[i]) std::cout << " " << o;
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Bell monogamy toolkit"};
    app.require_subcommand(1);

    std::string doc_ref, second_ref;
    std::uint64_t seed = 0;
    int mixing = 2;
    int chain_index = 1;
    std::vector<std::size_t> cut;
    std::string base_text;
    OutputOpts out;

    auto* validate = app.add_subcommand("validate", "validate a document");
    validate->add_option("document", doc_ref)->required();

    auto* evaluate_cmd = app.add_subcommand("evaluate", "evaluate a functional on a behavior");
    evaluate_cmd->add_option("functional", doc_ref)->required();
    evaluate_cmd->add_option("behavior", second_ref)->required();

    auto* normalize = app.add_subcommand("normalize", "rewrite into non-negative form");
    normalize->add_option("functional", doc_ref)->required();
    out.attach(normalize);

    auto* expand = app.add_subcommand("expand", "expand correlator coefficients");
    expand->add_option("functional", doc_ref)->required();
    out.attach(expand);

    auto* local = app.add_subcommand("local-bound", "exact local-realistic bound");
    local->add_option("functional", doc_ref)->required();

    auto* ns = app.add_subcommand("ns-bound", "exact no-signaling bound");
    ns->add_option("functional", doc_ref)->required();
    out.attach(ns);

    auto* sample = app.add_subcommand("sample", "sample a no-signaling behavior");
    sample->add_option("scenario", doc_ref)->required();
    sample->add_option("--seed", seed, "generator seed");
    sample->add_option("--mix", mixing, "number of mixed vertices")->check(CLI::PositiveNumber);
    out.attach(sample);

    auto* mono = app.add_subcommand("monogamy-check", "check the monogamy relation");
    mono->add_option("functional", doc_ref)->required();
    mono->add_option("behavior", second_ref)->required();
    out.attach(mono);

    auto* monolp = app.add_subcommand("monogamy-lp", "maximize the monogamy sum over NS");
    monolp->add_option("functional", doc_ref)->required();
    out.attach(monolp);

    auto* lhv = app.add_subcommand("lhv-reconstruct", "local model of a fixed-settings slice");
    lhv->add_option("functional", doc_ref)->required();
    lhv->add_option("behavior", second_ref)->required();
    lhv->add_option("chain", chain_index, "chain index m (1-based)")->required();
    out.attach(lhv);

    auto* flatten = app.add_subcommand("flatten", "flatten a multipartite functional");
    flatten->add_option("functional", doc_ref)->required();
    flatten->add_option("--cut", cut, "ordered party indices of group A")
        ->required()
        ->delimiter(',');
    out.attach(flatten);

    auto* clone = app.add_subcommand("clone-bound", "NS bound on the mean shrinking factor");
    clone->add_option("functional", doc_ref)->required();
    clone->add_option("--base", base_text, "base Bell value")->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "list built-in fixtures");
    (void)fixtures_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(validate)) {
        const auto any = load_any(doc_ref);
        if (const auto* s = std::get_if<Scenario>(&any)) {
            std::cout << "scenario: ok (" << s->party_count() << " parties)\n";
        } else if (const auto* f = std::get_if<BellFunctional>(&any)) {
            validate_functional(*f);
            std::cout << "functional: ok (" << f->terms.size() << " terms, bound "
                      << value_line(f->bound) << ")\n";
        } else if (const auto* p = std::get_if<Behavior>(&any)) {
            validate_behavior(*p);
            std::cout << "behavior: ok\n";
            if (const auto witness = signaling_witness(*p)) {
                std::cout << "non-signaling: no\n" << witness->describe() << "\n";
            } else {
                std::cout << "non-signaling: yes\n";
            }
        }
        return 0;
    }
    if (app.got_subcommand(evaluate_cmd)) {
        const auto f = load_functional(doc_ref);
        const auto p = load_behavior(second_ref);
        std::cout << value_line(evaluate(f, p)) << "\n";
        return 0;
    }
    if (app.got_subcommand(normalize)) {
        auto f = load_functional(doc_ref);
        if (f.form == FunctionalForm::CorrelatorCoefficients) f = expand_correlators(f);
        const auto result = normalize_nonneg(f);
        std::cout << "offset: " << value_line(result.offset) << "\n";
        std::cout << "bound: " << value_line(result.functional.bound) << "\n";
        out.emit(functional_to_json(result.functional));
        return 0;
    }
    if (app.got_subcommand(expand)) {
        const auto expanded = expand_correlators(load_functional(doc_ref));
        std::cout << "terms: " << expanded.terms.size() << "\n";
        out.emit(functional_to_json(expanded));
        return 0;
    }
    if (app.got_subcommand(local)) {
        const auto result = local_bound(load_functional(doc_ref));
        std::cout << value_line(result.value) << "\n";
        print_witness_strategy(result.witness);
        return 0;
    }
    if (app.got_subcommand(ns)) {
        const auto result = ns_bound(load_functional(doc_ref));
        std::cout << value_line(result.value) << "\n";
        std::string why;
        if (!check_certificate(result.problem, result.solution, &why))
            throw DomainError("certificate check failed: " + why);
        std::cout << "certificate: ok\n";
        out.emit(behavior_to_json(result.witness));
        return 0;
    }
    if (app.got_subcommand(sample)) {
        const auto p = sample_ns_behavior(load_scenario(doc_ref), seed, mixing);
        out.emit(behavior_to_json(p));
        if (out.format == "text" && out.out.empty())
            std::cout << behavior_to_json(p).dump(2) << "\n";
        return 0;
    }
    if (app.got_subcommand(mono)) {
        const auto setup = extend_scenario(load_functional(doc_ref));
        const auto report = monogamy_check(setup, load_behavior(second_ref));
        std::cout << "sum: " << value_line(report.sum) << "\n";
        std::cout << "bound: " << value_line(report.bound) << "\n";
        std::cout << "holds: " << (report.holds ? "yes" : "no") << "\n";
        for (std::size_t m = 0; m < report.per_pair.size(); ++m)
            std::cout << "pair " << m + 1 << ": " << value_line(report.per_pair[m]) << "\n";
        if (report.ns_witness) std::cout << report.ns_witness->describe() << "\n";
        out.emit(monogamy_report_to_json(report));
        return 0;
    }
    if (app.got_subcommand(monolp)) {
        const auto setup = extend_scenario(load_functional(doc_ref));
        const auto result = monogamy_lp_max(setup);
        std::cout << value_line(result.value) << "\n";
        std::string why;
        if (!check_certificate(result.problem, result.solution, &why))
            throw DomainError("certificate check failed: " + why);
        std::cout << "certificate: ok\n";
        out.emit(behavior_to_json(result.witness));
        return 0;
    }
    if (app.got_subcommand(lhv)) {
        const auto setup = extend_scenario(load_functional(doc_ref));
        const auto p = load_behavior(second_ref);
        const auto model = fixed_setting_lhv(setup, p, chain_index);
        std::cout << "chain value: "
                  << value_line(chain_value_on_lhv(setup, model, chain_index)) << "\n";
        out.emit(lhv_to_json(model));
        return 0;
    }
    if (app.got_subcommand(flatten)) {
        const auto f = load_functional(doc_ref);
        const auto result = flatten_bipartition(f, make_bipartition(f.scenario, cut));
        std::cout << "bound: " << value_line(result.functional.bound) << "\n";
        out.emit(functional_to_json(result.functional));
        return 0;
    }
    if (app.got_subcommand(clone)) {
        const auto f = load_functional(doc_ref);
        const Rational base = parse_base(base_text);
        const auto bound = mean_shrink_bound(f, base);
        std::cout << rational_decimal(bound.bound)
                  << (bound.trivial ? " (trivial)" : " (saturates bound)") << "\n";
        if (f.form == FunctionalForm::CorrelatorCoefficients) {
            // The affine non-negative rewrite shifts both the bound and the
            // base, so the ratio differs; report it alongside.
            const auto normalized = normalize_nonneg(expand_correlators(f));
            const auto shifted =
                mean_shrink_bound(normalized.functional, base + normalized.offset);
            std::cout << "non-negative form: " << rational_decimal(shifted.bound)
                      << (shifted.trivial ? " (trivial)" : " (saturates bound)") << "\n";
        }
        return 0;
    }
    if (app.got_subcommand(fixtures_cmd)) {
        for (const auto& name : fixtures::names()) std::cout << name << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bell::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bell::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
