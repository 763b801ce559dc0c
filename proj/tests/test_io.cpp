#include <doctest.h>

#include "bell/errors.hpp"
#include "bell/fixtures.hpp"
#include "bell/io.hpp"

using namespace bell;
using nlohmann::json;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(rational_string(Rational(3)) == "3/1");
    CHECK(rational_string(Rational(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), DocumentError);
    CHECK_THROWS_AS(parse_rational("1/-2"), DocumentError);
    CHECK_THROWS_AS(parse_rational("a/b"), DocumentError);
    CHECK_THROWS_AS(parse_rational(""), DocumentError);
    CHECK_THROWS_AS(parse_rational("1.5"), DocumentError);
}

TEST_CASE("decimal rendering has 12 significant digits") {
    CHECK(rational_decimal(Rational(3)) == "3.00000000000");
    CHECK(rational_decimal(Rational(6)) == "6.00000000000");
    CHECK(rational_decimal(Rational(1, 2)) == "0.500000000000");
    CHECK(rational_decimal(Rational(-1, 3)) == "-0.333333333333");
    CHECK(rational_decimal(Rational(2, 3)) == "0.666666666667");
    CHECK(rational_decimal(Rational(0)) == "0.00000000000");
    CHECK(rational_decimal(fixtures::inv_sqrt2_approx()) == "0.707106781187");
    CHECK(rational_decimal(Rational(1, 100000)) == "1.00000000000e-5");
}

TEST_CASE("scenario document round trip") {
    const Scenario sc({PartySpec{2, 2}, PartySpec{3, 4}});
    CHECK(scenario_from_json(scenario_to_json(sc)) == sc);
    CHECK_THROWS_AS(scenario_from_json(json{{"parties", json::array()}}), DocumentError);
    CHECK_THROWS_AS(scenario_from_json(json::object()), DocumentError);
    CHECK_THROWS_AS(scenario_from_json(json{{"parties", {{{"settings", 1}, {"outcomes", 1}}}}}),
                    DocumentError);
}

TEST_CASE("functional document round trip") {
    for (const auto* name : {"chsh-prob", "chsh-corr", "chained3-prob", "mermin-corr"}) {
        const auto f = std::get<BellFunctional>(fixtures::by_name(name));
        const auto back = functional_from_json(functional_to_json(f));
        CHECK(back.scenario == f.scenario);
        CHECK(back.form == f.form);
        CHECK(back.bound == f.bound);
        CHECK(back.terms == f.terms);
    }
}

TEST_CASE("functional document errors") {
    auto doc = functional_to_json(fixtures::chsh_prob());
    doc["form"] = "mystery";
    CHECK_THROWS_AS(functional_from_json(doc), DocumentError);
    doc["form"] = "probability";
    doc["terms"][0]["settings"] = {9, 9};
    CHECK_THROWS_AS(functional_from_json(doc), DocumentError);
    doc["terms"] = "not-an-array";
    CHECK_THROWS_AS(functional_from_json(doc), DocumentError);
}

TEST_CASE("behavior document round trip") {
    for (const auto* name : {"pr-box", "tsirelson", "uniform"}) {
        const auto p = std::get<Behavior>(fixtures::by_name(name));
        const auto back = behavior_from_json(behavior_to_json(p));
        CHECK(back.scenario() == p.scenario());
        CHECK(back.table() == p.table());
    }
}

TEST_CASE("behavior document errors") {
    auto doc = behavior_to_json(fixtures::pr_box());
    doc["order"] = "outcome-major";
    CHECK_THROWS_AS(behavior_from_json(doc), DocumentError);
    doc["order"] = "settings-major-lex";
    doc["entries"].erase(0);
    CHECK_THROWS_WITH_AS(behavior_from_json(doc), doctest::Contains("expected"), DocumentError);
}

TEST_CASE("documents load gcd-reduced") {
    json doc = behavior_to_json(fixtures::pr_box());
    doc["entries"][0] = "2/4";
    const auto p = behavior_from_json(doc);
    CHECK(p.table()[0] == Rational(1, 2));
    CHECK(rational_string(p.table()[0]) == "1/2");
}
