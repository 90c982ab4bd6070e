#include "charq/reconstruct.hpp"

#include <algorithm>
#include <numeric>

namespace charq {

namespace {

// In-place multiplication by (1 - q^d) on a dense coefficient vector.
void apply_factor(std::vector<Int>& p, int d) {
    for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) p[i] -= p[i - d];
}

// Inverse of apply_factor: multiplication by 1/(1 - q^d) = 1 + q^d + q^2d + ...
void unapply_factor(std::vector<Int>& p, int d) {
    for (int i = d; i < static_cast<int>(p.size()); ++i) p[i] += p[i - d];
}

bool tail_vanishes(const std::vector<Int>& p, int guard) {
    for (int i = static_cast<int>(p.size()) - guard; i < static_cast<int>(p.size()); ++i)
        if (p[i] != 0) return false;
    return true;
}

}  // namespace

std::optional<FittedForm> fit_numerator(const IntSeries& c, std::vector<int> degs, int guard) {
    if (guard < 1) throw Error("fit_numerator: guard must be positive");
    for (int d : degs)
        if (d < 1) throw Error("fit_numerator: denominator degrees must be positive");
    const int total = std::accumulate(degs.begin(), degs.end(), 0);
    if (total + guard > c.order())
        throw InsufficientPrefixError("fit needs order >= " + std::to_string(total + guard) +
                                      ", series has " + std::to_string(c.order()));

    std::vector<Int> p = c.coeffs();
    for (int d : degs) apply_factor(p, d);
    if (!tail_vanishes(p, guard)) return std::nullopt;

    int deg = static_cast<int>(p.size()) - 1;
    while (deg >= 0 && p[deg] == 0) --deg;
    std::vector<Int> numerator(p.begin(), p.begin() + (deg + 1));

    // Soundness: grow the fitted form back into a series and compare.
    std::vector<Int> back(c.order() + 1, 0);
    std::copy(numerator.begin(), numerator.end(), back.begin());
    for (int d : degs) unapply_factor(back, d);
    if (back != c.coeffs()) throw Error("internal: fitted form failed re-expansion");

    std::sort(degs.begin(), degs.end());
    return FittedForm{std::move(numerator), std::move(degs), c.order()};
}

RecurrenceGuess find_recurrence(const IntSeries& c, int max_order, int margin) {
    if (max_order < 1) throw Error("find_recurrence: max_order must be positive");
    if (c.order() < 2 * max_order + margin)
        throw InsufficientPrefixError("recurrence refutation needs order >= " +
                                      std::to_string(2 * max_order + margin) + ", series has " +
                                      std::to_string(c.order()));

    const std::vector<Int>& s = c.coeffs();
    const int count = static_cast<int>(s.size());

    /*
     * Berlekamp-Massey.  C is the current connection polynomial (C[0] = 1),
     * L its LFSR length, B the last connection polynomial before L grew,
     * b the discrepancy observed back then, m the distance since.
     */
    std::vector<Rational> C{1}, B{1};
    int L = 0, m = 1;
    Rational b = 1;
    for (int n = 0; n < count; ++n) {
        Rational delta = Rational(s[n]);
        for (int i = 1; i <= L && i < static_cast<int>(C.size()); ++i)
            delta += C[i] * Rational(s[n - i]);
        if (delta == 0) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<Rational> T = C;
            const Rational coef = delta / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
            L = n + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            const Rational coef = delta / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
            ++m;
        }
    }

    RecurrenceGuess guess;
    if (L > max_order) return guess;

    C.resize(L + 1, 0);
    // Defensive replay: the minimal recurrence must reproduce the prefix.
    for (int n = L; n < count; ++n) {
        Rational acc = Rational(s[n]);
        for (int i = 1; i <= L; ++i) acc += C[i] * Rational(s[n - i]);
        if (acc != 0) throw Error("internal: recurrence failed to replay the prefix");
    }
    guess.found = true;
    guess.denom_poly = std::move(C);
    guess.order = L;
    return guess;
}

std::optional<FittedForm> search_denominators(const IntSeries& c, int max_total, int max_part,
                                              int guard) {
    if (guard < 1) throw Error("search_denominators: guard must be positive");

    std::vector<Int> p = c.coeffs();
    std::vector<int> parts;
    std::optional<std::vector<int>> best;
    int best_total = max_total + 1;

    /*
     * Depth-first over ascending part lists, sharing the partial product:
     * entering a node multiplies by (1 - q^d), leaving divides it back out.
     * Among hypotheses of equal total the first one visited is already the
     * lexicographically smallest, so a recorded best is only ever replaced
     * by a strictly smaller total.
     */
    auto visit = [&](auto&& self, int last, int total) -> void {
        if (total + guard <= c.order() && total < best_total && tail_vanishes(p, guard)) {
            best = parts;
            best_total = total;
        }
        for (int d = last; d <= max_part; ++d) {
            const int next = total + d;
            if (next > max_total || next >= best_total) break;
            if (next + guard > c.order()) break;
            apply_factor(p, d);
            parts.push_back(d);
            self(self, d, next);
            parts.pop_back();
            unapply_factor(p, d);
        }
    };
    visit(visit, 1, 0);

    if (!best) return std::nullopt;
    return fit_numerator(c, *best, guard);
}

}  // namespace charq
