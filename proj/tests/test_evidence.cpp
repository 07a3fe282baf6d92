#include <doctest.h>

#include <random>
#include <string>

#include "bpa/evidence.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace bpa;

TEST_CASE("frame construction enforces its invariants") {
    CHECK_NOTHROW(FrameOfDiscernment({"A"}));
    CHECK_THROWS_AS(FrameOfDiscernment({}), ArgumentError);
    CHECK_THROWS_AS(FrameOfDiscernment({"A", "A"}), ArgumentError);
    CHECK_THROWS_AS(FrameOfDiscernment({"A", ""}), ArgumentError);

    const FrameOfDiscernment frame({"A", "B", "C"});
    CHECK(frame.size() == 3);
    CHECK(frame.contains("B"));
    CHECK_FALSE(frame.contains("D"));
    CHECK(frame.index_of("C") == 2);
    CHECK_THROWS_AS(frame.index_of("D"), ArgumentError);
}

TEST_CASE("focal elements canonicalize to frame order") {
    const FrameOfDiscernment frame({"A", "B", "C"});

    const auto ba = FocalElement::subset_of(frame, {"B", "A"});
    CHECK(ba.members() == std::vector<std::string>{"A", "B"});
    CHECK(ba == FocalElement::subset_of(frame, {"A", "B"}));
    CHECK(ba.to_string() == "{A,B}");

    const FocalElement empty;
    CHECK(empty.is_empty());
    CHECK(empty.to_string() == "∅");
    CHECK(FocalElement::subset_of(frame, {}) == empty);

    CHECK_THROWS_AS(FocalElement::subset_of(frame, {"A", "D"}), ArgumentError);
    CHECK_THROWS_AS(FocalElement::subset_of(frame, {"A", "A"}), ArgumentError);
}

TEST_CASE("validate accepts every reference BPA") {
    CHECK(validate(fixtures::x()).ok());
    CHECK(validate(fixtures::x1()).ok());
    CHECK(validate(fixtures::x2()).ok());  // mass 0.7 on the empty set is legal here
    CHECK(validate(fixtures::x_actual()).ok());
    CHECK(validate(fixtures::singleton()).ok());
}

TEST_CASE("validate reports violations instead of throwing") {
    SUBCASE("mass sum far from 1") {
        const auto mf = make_mass_function({"A"}, {{{"A"}, 0.5}});
        const auto report = validate(mf);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].find("sum") != std::string::npos);
    }
    SUBCASE("mass outside the unit interval") {
        const auto mf = make_mass_function({"A", "B"}, {{{"A"}, 1.5}, {{"B"}, -0.5}});
        CHECK(validate(mf).violations.size() == 2);
    }
    SUBCASE("NaN mass is out of range") {
        const auto mf = make_mass_function(
            {"A"}, {{{"A"}, std::numeric_limits<double>::quiet_NaN()}});
        CHECK_FALSE(validate(mf).ok());
    }
    SUBCASE("duplicate focal element") {
        const auto mf =
            make_mass_function({"A", "B"}, {{{"A"}, 0.5}, {{"A"}, 0.5}});
        const auto report = validate(mf);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].find("more than once") != std::string::npos);
    }
    SUBCASE("empty assignment list fails the sum axiom") {
        const MassFunction mf{FrameOfDiscernment({"A"}), {}};
        CHECK_FALSE(validate(mf).ok());
    }
    SUBCASE("sum tolerance is configurable") {
        const auto mf = make_mass_function({"A"}, {{{"A"}, 0.9999}});
        CHECK_FALSE(validate(mf, 1e-9).ok());
        CHECK(validate(mf, 1e-3).ok());
    }
}

TEST_CASE("mass_of is total over subsets of the frame") {
    const auto x = fixtures::x();
    CHECK(mass_of(x, FocalElement{}) == 0.0);
    CHECK(mass_of(x, FocalElement::subset_of(x.frame, {"B"})) == 0.25);
    // undeclared subsets default to zero
    CHECK(mass_of(x, FocalElement::subset_of(x.frame, {"A", "B", "C"})) == 0.0);

    const auto x2 = fixtures::x2();
    CHECK(mass_of(x2, FocalElement{}) == 0.7);

    const FrameOfDiscernment other({"A", "D"});
    CHECK_THROWS_AS(mass_of(x, FocalElement::subset_of(other, {"D"})), ArgumentError);
}

TEST_CASE("parse_bpa reads the document format") {
    const std::string text = R"({
      "frame": ["A", "B", "C"],
      "masses": [
        {"focal": ["A"], "mass": 0.2},
        {"focal": ["B"], "mass": 0.25},
        {"focal": ["C"], "mass": 0.55}
      ]
    })";
    CHECK(parse_bpa(text) == fixtures::x());
}

TEST_CASE("parse_bpa does not auto-validate") {
    const auto mf = parse_bpa(R"({"frame": ["A"], "masses": []})");
    CHECK(mf.assignments.empty());
    CHECK_FALSE(validate(mf).ok());

    // an out-of-range mass parses; validation flags it
    const auto bad = parse_bpa(R"({"frame": ["A"], "masses": [{"focal": ["A"], "mass": 1.5}]})");
    CHECK(bad.assignments[0].mass == 1.5);
    CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("parse_bpa rejects malformed documents") {
    SUBCASE("syntax error carries position info") {
        try {
            parse_bpa("{\"frame\": [\"A\"],\n  \"masses\": oops}");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SUBCASE("focal member outside the declared frame") {
        CHECK_THROWS_AS(
            parse_bpa(R"({"frame": ["A", "B"], "masses": [{"focal": ["A", "D"], "mass": 1.0}]})"),
            ParseError);
    }
    SUBCASE("structural errors") {
        CHECK_THROWS_AS(parse_bpa("[]"), ParseError);
        CHECK_THROWS_AS(parse_bpa(R"({"masses": []})"), ParseError);
        CHECK_THROWS_AS(parse_bpa(R"({"frame": ["A"]})"), ParseError);
        CHECK_THROWS_AS(parse_bpa(R"({"frame": [], "masses": []})"), ParseError);
        CHECK_THROWS_AS(parse_bpa(R"({"frame": ["A", "A"], "masses": []})"), ParseError);
        CHECK_THROWS_AS(parse_bpa(R"({"frame": ["A"], "masses": [{"focal": ["A"]}]})"),
                        ParseError);
        CHECK_THROWS_AS(
            parse_bpa(R"({"frame": ["A"], "masses": [{"focal": ["A"], "mass": "x"}]})"),
            ParseError);
        CHECK_THROWS_AS(parse_bpa(R"({"frame": ["A"], "masses": [{"focal": [1], "mass": 1}]})"),
                        ParseError);
    }
}

TEST_CASE("serialize/parse round-trip is the identity") {
    CHECK(parse_bpa(serialize_bpa(fixtures::x())) == fixtures::x());
    CHECK(parse_bpa(serialize_bpa(fixtures::x2())) == fixtures::x2());
    CHECK(parse_bpa(serialize_bpa(fixtures::x_actual())) == fixtures::x_actual());

    std::mt19937 rng(20240917);
    for (int round = 0; round < 50; ++round) {
        const MassFunction mf = testgen::random_bpa(rng, 3, 16);
        CAPTURE(round);
        CHECK(parse_bpa(serialize_bpa(mf)) == mf);
    }
}

TEST_CASE("load_bpa distinguishes missing files from bad content") {
    CHECK_THROWS_AS(load_bpa("/nonexistent/dir/missing.json"), IoError);
}
