#pragma once

#include <optional>
#include <vector>

#include "charq/series.hpp"

namespace charq {

// A verified presentation  c(q) = numerator / prod_j (1 - q^(d_j))
// that reproduced the input prefix up to q^verified_to.
struct FittedForm {
    std::vector<Int> numerator;          // coefficient of q^i at index i, no trailing zeros
    std::vector<int> denominator_degrees;  // the d_j, ascending
    int verified_to = 0;
};

/*
 * Multiplies the series by prod_j (1 - q^(d_j)) and accepts the hypothesis
 * iff every coefficient beyond degree c.order - guard vanishes; the guard
 * window is what separates a clean cancellation from a truncation artifact.
 * Returns std::nullopt when the tail does not vanish (a no-fit verdict, not
 * an error).  Needs sum(degs) + guard <= c.order (InsufficientPrefixError)
 * and re-expands the result internally as a soundness check.
 */
std::optional<FittedForm> fit_numerator(const IntSeries& c, std::vector<int> degs, int guard = 5);

// Minimal linear recurrence for the prefix, when one of order <= max_order
// exists.  denom_poly is the connection polynomial 1 + a1 q + ... + aL q^L:
// the recurrence c_n = -(a1 c_(n-1) + ... + aL c_(n-L)) holds for n >= order.
struct RecurrenceGuess {
    bool found = false;
    std::vector<Rational> denom_poly;
    int order = 0;
};

/*
 * Berlekamp-Massey over exact rationals on the full prefix c_0..c_order.
 * The prefix must satisfy c.order >= 2*max_order + margin, otherwise
 * InsufficientPrefixError: a shorter prefix cannot refute anything.  When the
 * minimal recurrence order exceeds max_order the guess reports found = false.
 */
RecurrenceGuess find_recurrence(const IntSeries& c, int max_order, int margin = 4);

/*
 * First-fit search over denominator-degree multisets, smallest total degree
 * first, ties broken lexicographically on the ascending-sorted multiset.
 * Hypotheses with sum + guard > c.order cannot be verified and are skipped.
 */
std::optional<FittedForm> search_denominators(const IntSeries& c, int max_total = 60,
                                              int max_part = 30, int guard = 5);

}  // namespace charq
