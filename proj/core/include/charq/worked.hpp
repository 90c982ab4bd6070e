#pragma once

#include <optional>
#include <utility>

#include "charq/invariants.hpp"
#include "charq/nice_rational.hpp"
#include "charq/reconstruct.hpp"

namespace charq {

/*
 * Exact quadratic irrational (a + b*sqrt(d)) / c with integer a, b, d >= 0
 * and c > 0.  A perfect-square radicand is folded into the rational part at
 * construction, so is_rational() is authoritative.  All comparisons and
 * floors go through integer square roots; no floating point anywhere.
 */
class QuadraticIrrational {
public:
    QuadraticIrrational(Int a, Int b, Int d, Int c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& d() const { return d_; }
    const Int& c() const { return c_; }
    bool is_rational() const { return b_ == 0; }
    bool radicand_square_free() const { return square_free_; }

    // floor(n * value), exact for any integer n.
    Int floor_scaled(const Int& n) const;

    // -1, 0, +1 against an integer threshold.
    int compare(const Int& x) const;

    bool in_unit_interval() const { return compare(0) > 0 && compare(1) < 0; }

private:
    Int a_, b_, d_, c_;
    bool square_free_ = true;
};

// Bivariate Hilbert series of the algebra generated by two generic 2x2
// trace-zero matrices: 1/((1-t1)(1-t2)) + t1 t2/((1-t1)^2 (1-t2)^2 (1-t1 t2)),
// assembled over the common denominator.
NiceRational fhl_series();

/*
 * Dimension of the bidegree-(d, m) component of the invariant ring behind
 * the degree-9 specialization below:
 *   binom(d+2, 2)                      if m <= 0,
 *   binom(d+2, 2) - 9 binom(m+1, 2)    if d >= 3m > 0,
 *   0                                  if 3m > d.
 */
Int nagata_dim(int d, int m);

// c_n = sum_m dim of the (n+m, m) component, split into the m <= 0 range and
// the 1 <= m <= floor(n/2) range where the dimension is still positive.
Int nagata_cn(int n);

// The univariate specialization: coefficient c_n sits at q^(9n).
IntSeries nagata_series(int order);

/*
 * The closed-form bookkeeping behind c_n, checked exactly at one n:
 *   sum_(m=-n..0) binom(n+m+2, 2) = binom(n+3, 3),
 * and for the positive-m range with n = 2s resp. n = 2s+1:
 *   sum = (10s^3 + 3s^2 - 7s)/6  = 10 binom(s,3) + 11 binom(s,2) + s,
 *   sum = (10s^3 + 18s^2 + 8s)/6 = 10 binom(s,3) + 16 binom(s,2) + 6s.
 */
bool nagata_identity_check(int n);

// Hilbert coefficients of the numerical-semigroup-like ring attached to
// beta: 1 at degree 0 and 1 + floor(d * beta) for d >= 1.
// Needs 0 < beta < 1 (BetaOutOfRangeError).
Int semigroup_coeff(const QuadraticIrrational& beta, int d);

// First differences coeff(d) - coeff(d-1) for d = 1..window, as a series of
// length window.  Each difference is 0 or 1.
IntSeries semigroup_differences(const QuadraticIrrational& beta, int window);

/*
 * Smallest period p <= max_period (with the smallest offset N <= max_offset
 * valid for it) such that c_(d+p) = c_d for all N <= d <= c.order - p;
 * std::nullopt when no such pair exists.  Returned as (offset, period).
 */
std::optional<std::pair<int, int>> detect_eventual_period(const IntSeries& c, int max_offset,
                                                          int max_period);

/*
 * Brute-force invariant dimension in the d-th tensor power of the natural
 * 2-dimensional representation, by exact linear algebra on the 2^d basis of
 * x/y words: kernel of the raising operator for the maximal unipotent, joint
 * kernel of raising and lowering for SL_2, weight counting for the diagonal
 * subgroups.  Only n = 2 and d <= 12 (UnsupportedSizeError otherwise).
 */
Int tensor_invariant_dim_oracle(const GroupSpec& g, int d);

}  // namespace charq
