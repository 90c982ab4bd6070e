#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "charq/json_io.hpp"
#include "charq/worked.hpp"
#include "doctest.h"

using namespace charq;

TEST_CASE("integers travel as numbers when small, strings when large") {
    CHECK(int_to_json(Int(5)).is_number_integer());
    CHECK(int_to_json(Int(-7)).get<long long>() == -7);

    const Int big = Int("123456789012345678901234567890");
    const Json jb = int_to_json(big);
    CHECK(jb.is_string());
    CHECK(json_to_int(jb) == big);

    CHECK(json_to_int(Json(42)) == 42);
    CHECK(json_to_int(Json("-42")) == -42);
    CHECK_THROWS_AS(json_to_int(Json("not a number")), InputError);
    CHECK_THROWS_AS(json_to_int(Json(1.5)), InputError);
}

TEST_CASE("polynomial round-trip") {
    LaurentPoly p(2);
    p.add_term({3, -2}, Int("9999999999999999999999"));
    p.add_term({0, 0}, -1);
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
    CHECK(laurent_from_json(laurent_to_json(p), 2) == p);
    CHECK_THROWS_AS(laurent_from_json(laurent_to_json(p), 3), InputError);

    CHECK(laurent_from_json(Json::array()).is_zero());
    CHECK_THROWS_AS(laurent_from_json(Json{{"bogus", 1}}), InputError);
}

TEST_CASE("series round-trips") {
    const CharacterSeries s = free_algebra_character(2, 6);
    CHECK(character_series_from_json(character_series_to_json(s)) == s);

    const IntSeries z(std::vector<Int>{1, 0, Int("88888888888888888888"), -3});
    CHECK(int_series_from_json(int_series_to_json(z)) == z);

    CHECK_THROWS_AS(int_series_from_json(Json{{"coeffs", Json::array()}}), InputError);
}

TEST_CASE("rational function round-trip and defaults") {
    const NiceRational f(2, {{2, {1, 0}, 1}, {-1, {0, 0}, 0}},
                         {{{1, 0}, 1, 2}, {{1, 1}, 2, 1}});
    CHECK(nice_rational_from_json(nice_rational_to_json(f)) == f);

    // mult defaults to 1 when absent.
    const Json j{{"vars", 2},
                 {"numerator", {{{"coeff", 1}, {"alpha", {0, 0}}, {"qpow", 0}}}},
                 {"denominator", {{{"alpha", {1, 0}}, {"qpow", 1}}}}};
    const NiceRational g = nice_rational_from_json(j);
    REQUIRE(g.denominator().size() == 1);
    CHECK(g.denominator()[0].mult == 1);

    // Schema violations become input errors.
    Json bad = j;
    bad["denominator"][0]["qpow"] = -1;
    CHECK_THROWS_AS(nice_rational_from_json(bad), InputError);
    CHECK_THROWS_AS(nice_rational_from_json(Json{{"vars", 2}}), InputError);
}

TEST_CASE("group round-trips") {
    const std::vector<GroupSpec> groups{
        FullGL{2}, SpecialLinear{3}, DiagonalTorus{2, {{1, -1}, {2, 0}}},
        MaximalUnipotent{2}, CyclicDiagonal{2, 6, {1, 5}}};
    for (const auto& g : groups) {
        const GroupSpec back = group_from_json(group_to_json(g));
        CHECK(group_to_json(back) == group_to_json(g));
    }

    CHECK_THROWS_AS(group_from_json(Json{{"type", "orthogonal"}, {"n", 2}}), InputError);
    CHECK_THROWS_AS(group_from_json(Json{{"type", "torus"}, {"n", 2}}), InputError);
    CHECK_THROWS_AS(
        group_from_json(Json{{"type", "cyclic"}, {"n", 2}, {"order", 0}, {"exponents", {1, 1}}}),
        InputError);
}

TEST_CASE("expansion and decomposition round-trips") {
    const SchurExpansion e = schur_expand(schur_poly(2, {1, 0}) * schur_poly(2, {2, 1}));
    const SchurExpansion eback = schur_expansion_from_json(schur_expansion_to_json(e));
    CHECK(eback == e);

    const NiceRational f(2, {{1, {0, 0}, 0}}, {{{1, 0}, 1, 1}, {{0, 1}, 1, 1}});
    const Decomposition d = nr_decompose(f);
    const Decomposition dback = decomposition_from_json(decomposition_to_json(d));
    CHECK(dback.a == d.a);
    CHECK(dback.terms == d.terms);
}

TEST_CASE("fit and recurrence reports") {
    CHECK(fit_report_to_json(std::nullopt) == Json{{"fit", false}});

    FittedForm form;
    form.numerator = {1, 0, -2};
    form.denominator_degrees = {2, 2};
    form.verified_to = 30;
    const Json j = fit_report_to_json(form);
    CHECK(j.at("fit") == true);
    CHECK(j.at("denominator_degrees") == Json::array({2, 2}));
    CHECK(j.at("verified_to") == 30);

    RecurrenceGuess guess;
    guess.found = true;
    guess.order = 2;
    guess.denom_poly = {Rational(1), Rational(-1, 2)};
    const Json jr = recurrence_to_json(guess);
    CHECK(jr.at("found") == true);
    CHECK(jr.at("denominator_poly") == Json::array({"1", "-1/2"}));
}

TEST_CASE("shipped sample inputs parse and mean what they say") {
    std::ifstream in(std::string(CHARQ_DATA_DIR) + "/fhl.json");
    REQUIRE(in.good());
    const NiceRational f = nice_rational_from_json(Json::parse(in));
    // The sample file is the worked two-variable model series: same expansion.
    CHECK(nr_series(nr_substitute_tq(f), 10) ==
          nr_series(nr_substitute_tq(fhl_series()), 10));

    std::ifstream gin(std::string(CHARQ_DATA_DIR) + "/torus.json");
    REQUIRE(gin.good());
    const GroupSpec g = group_from_json(Json::parse(gin));
    CHECK(is_diagonal_group(g));
    CHECK(group_vars(g) == 2);
}
