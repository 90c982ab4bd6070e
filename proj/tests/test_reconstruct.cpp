#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "charq/reconstruct.hpp"
#include "charq/worked.hpp"
#include "doctest.h"

using namespace charq;

namespace {

// Dense expansion of numerator / prod (1 - q^(d_j)) to the given order.
IntSeries expand_rational(std::vector<Int> numerator, const std::vector<int>& degs, int order) {
    numerator.resize(order + 1, 0);
    for (int d : degs)
        for (int i = d; i <= order; ++i) numerator[i] += numerator[i - d];
    return IntSeries(std::move(numerator));
}

IntSeries catalan_interleaved(int order) {
    std::vector<Int> catalan{1};
    while (2 * static_cast<int>(catalan.size()) <= order + 1) {
        Int next = 0;
        const int n = static_cast<int>(catalan.size()) - 1;
        for (int i = 0; i <= n; ++i) next += catalan[i] * catalan[n - i];
        catalan.push_back(next);
    }
    std::vector<Int> coeffs(order + 1, 0);
    for (int n = 0; 2 * n <= order; ++n) coeffs[2 * n] = catalan[n];
    return IntSeries(std::move(coeffs));
}

}  // namespace

TEST_CASE("numerator fitting recovers planted forms") {
    const IntSeries s = expand_rational({1, 1}, {1, 1}, 30);
    const auto fit = fit_numerator(s, {1, 1});
    REQUIRE(fit.has_value());
    CHECK(fit->numerator == std::vector<Int>{1, 1});
    CHECK(fit->denominator_degrees == std::vector<int>{1, 1});
    CHECK(fit->verified_to == 30);
}

TEST_CASE("degrees are reported in ascending order") {
    const IntSeries s = expand_rational({1}, {3, 1, 2}, 25);
    const auto fit = fit_numerator(s, {3, 1, 2});
    REQUIRE(fit.has_value());
    CHECK(fit->denominator_degrees == std::vector<int>{1, 2, 3});
    CHECK(fit->numerator == std::vector<Int>{1});
}

TEST_CASE("fitting refuses a wrong denominator") {
    CHECK_FALSE(fit_numerator(catalan_interleaved(40), {1, 1}).has_value());
    CHECK_FALSE(fit_numerator(catalan_interleaved(40), {2, 2, 2}).has_value());
}

TEST_CASE("guard requires enough trailing zeros") {
    // Numerator degree exactly order - guard + 1: one zero short of the guard.
    std::vector<Int> num(17, 0);
    num[0] = 1;
    num[16] = 1;
    const IntSeries s = expand_rational(num, {1}, 20);
    CHECK_FALSE(fit_numerator(s, {1}, 5).has_value());
    CHECK(fit_numerator(s, {1}, 4).has_value());
}

TEST_CASE("random planted numerators are recovered exactly") {
    std::mt19937 rng(461209);
    std::uniform_int_distribution<int> ncoef(-5, 5);
    std::uniform_int_distribution<int> ndeg(1, 6);
    std::uniform_int_distribution<int> nfac(1, 4);
    std::uniform_int_distribution<int> nlen(1, 8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> num(nlen(rng));
        for (auto& c : num) c = ncoef(rng);
        num[0] = 1;  // keep the leading coefficient nonzero and the form monic-ish
        while (!num.empty() && num.back() == 0) num.pop_back();
        std::vector<int> degs(nfac(rng));
        for (auto& d : degs) d = ndeg(rng);
        const IntSeries s = expand_rational(num, degs, 40);
        const auto fit = fit_numerator(s, degs);
        REQUIRE(fit.has_value());
        CHECK(fit->numerator == num);
    }
}

TEST_CASE("linear recurrences are identified") {
    // Fibonacci: c_n = c_(n-1) + c_(n-2).
    std::vector<Int> fib{1, 1};
    for (int i = 2; i < 30; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    const RecurrenceGuess g = find_recurrence(IntSeries(fib), 5);
    CHECK(g.found);
    CHECK(g.order == 2);
    CHECK(g.denom_poly == std::vector<Rational>{1, -1, -1});

    // Geometric.
    std::vector<Int> geom;
    Int v = 1;
    for (int i = 0; i < 20; ++i, v *= 3) geom.push_back(v);
    const RecurrenceGuess gg = find_recurrence(IntSeries(geom), 5);
    CHECK(gg.found);
    CHECK(gg.order == 1);
    CHECK(gg.denom_poly == std::vector<Rational>{1, -3});

    // Polynomial growth: c_n = n + 1 satisfies (1 - q)^2.
    std::vector<Int> lin;
    for (int i = 0; i < 20; ++i) lin.push_back(i + 1);
    const RecurrenceGuess gl = find_recurrence(IntSeries(lin), 5);
    CHECK(gl.found);
    CHECK(gl.order == 2);
    CHECK(gl.denom_poly == std::vector<Rational>{1, -2, 1});
}

TEST_CASE("recurrence search respects its preconditions") {
    const IntSeries tiny(std::vector<Int>{1, 1, 2, 3, 5});
    CHECK_THROWS_AS(find_recurrence(tiny, 3), InsufficientPrefixError);

    // 40 Catalan-flavored terms admit no recurrence of order up to 12.
    const RecurrenceGuess g = find_recurrence(catalan_interleaved(39), 12);
    CHECK_FALSE(g.found);
}

TEST_CASE("denominator search finds the minimal multiset") {
    const IntSeries s = expand_rational({1}, {1, 2}, 30);
    const auto fit = search_denominators(s);
    REQUIRE(fit.has_value());
    CHECK(fit->denominator_degrees == std::vector<int>{1, 2});
    CHECK(fit->numerator == std::vector<Int>{1});

    // 1/(1 - q^2) fits with total 2; the search must not return a padded form.
    const IntSeries t = expand_rational({1}, {2}, 30);
    const auto ft = search_denominators(t);
    REQUIRE(ft.has_value());
    CHECK(ft->denominator_degrees == std::vector<int>{2});
}

TEST_CASE("denominator search gives up within its caps") {
    CHECK_FALSE(search_denominators(catalan_interleaved(40), 10, 10).has_value());
}

TEST_CASE("search is deterministic") {
    const IntSeries s = expand_rational({1, 0, 1}, {2, 2, 3}, 35);
    const auto a = search_denominators(s);
    const auto b = search_denominators(s);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->denominator_degrees == b->denominator_degrees);
    CHECK(a->numerator == b->numerator);
}
