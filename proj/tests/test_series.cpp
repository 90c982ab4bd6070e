#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "charq/series.hpp"
#include "doctest.h"

using namespace charq;

TEST_CASE("truncated series basics") {
    CharacterSeries s(2, 4);
    CHECK(s.order() == 4);
    CHECK(s.num_vars() == 2);
    for (int d = 0; d <= 4; ++d) CHECK(s.coeff(d).is_zero());
    CHECK_THROWS_AS(CharacterSeries(2, -1), Error);
}

TEST_CASE("geometric factor expansion") {
    // 1/(1 - t1 q^2) = sum_m t1^m q^(2m).
    const CharacterSeries g = qs_geom({1, 0}, 2, 7);
    for (int d = 0; d <= 7; ++d) {
        if (d % 2 == 0) {
            CHECK(g.coeff(d).term_count() == 1);
            CHECK(g.coeff(d).coeff({d / 2, 0}) == 1);
        } else {
            CHECK(g.coeff(d).is_zero());
        }
    }

    // Factors with no q cannot be expanded degreewise.
    CHECK_THROWS_AS(qs_geom({1, 0}, 0, 5), FactorNotExpandableError);
    CHECK_THROWS_AS(qs_geom({1, 0}, -1, 5), FactorNotExpandableError);
}

TEST_CASE("series product") {
    // 1/((1 - t1 q)(1 - t2 q)): coefficient of q^d is the full degree-d
    // monomial sum t1^i t2^(d-i).
    const CharacterSeries p = qs_mul(qs_geom({1, 0}, 1, 6), qs_geom({0, 1}, 1, 6));
    for (int d = 0; d <= 6; ++d) {
        CHECK(p.coeff(d).term_count() == static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i) CHECK(p.coeff(d).coeff({i, d - i}) == 1);
    }
}

TEST_CASE("product truncates to the shorter order") {
    const CharacterSeries a = qs_geom({1, 0}, 1, 9);
    const CharacterSeries b = qs_geom({0, 1}, 1, 4);
    CHECK(qs_mul(a, b).order() == 4);
    CHECK(qs_add(a, b).order() == 4);
}

TEST_CASE("series sum") {
    const CharacterSeries a = qs_geom({1, 0}, 1, 5);
    const CharacterSeries b = qs_geom({0, 1}, 1, 5);
    const CharacterSeries s = qs_add(a, b);
    CHECK(s.coeff(0).coeff({0, 0}) == 2);
    CHECK(s.coeff(3).coeff({3, 0}) == 1);
    CHECK(s.coeff(3).coeff({0, 3}) == 1);
}

TEST_CASE("integer series") {
    IntSeries z(3);
    CHECK(z.order() == 3);
    CHECK(z.coeff(2) == 0);
    z.coeff(2) = 7;
    CHECK(z.coeff(2) == 7);

    const IntSeries from_list(std::vector<Int>{1, 2, 3});
    CHECK(from_list.order() == 2);
    CHECK(from_list.coeff(1) == 2);
    CHECK_THROWS_AS(IntSeries(std::vector<Int>{}), Error);
}
