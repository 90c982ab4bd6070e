#pragma once

#include <vector>

#include "charq/laurent.hpp"

namespace charq {

/*
 * Generalized partition: a weakly decreasing integer tuple, one entry per
 * variable.  Entries may be negative; (a1 >= ... >= an) with an < 0 labels a
 * representation twisted by a negative power of the determinant.
 */
using GenPartition = std::vector<int>;

bool is_weakly_decreasing(const GenPartition& lam);

/*
 * Schur polynomial s_lam(t1..tn) by tableau enumeration: the sum of t^content
 * over semistandard Young tableaux of shape lam with entries in 1..n (rows
 * weakly increase, columns strictly increase), enumerated depth-first column
 * by column.  A tuple with negative entries is normalized first,
 *   s_lam = (t1*...*tn)^m * s_(lam - m*(1,..,1)),  m = lam_n,
 * which matches twisting by the m-th power of the determinant.
 */
LaurentPoly schur_poly(int num_vars, const GenPartition& lam);

/*
 * The same polynomial as a quotient of alternants:
 *   s_lam = det(t_j^(lam_i + n - i)) / prod_{i<j} (t_i - t_j).
 * Independent of the tableau route; the division is exact.
 */
LaurentPoly schur_poly_bialternant(int num_vars, const GenPartition& lam);

struct SchurTerm {
    Int coeff;
    GenPartition lam;

    bool operator==(const SchurTerm& rhs) const { return coeff == rhs.coeff && lam == rhs.lam; }
};

// Terms are listed with lam strictly decreasing in lex order.
using SchurExpansion = std::vector<SchurTerm>;

/*
 * Expands a symmetric Laurent polynomial in the Schur basis by greedy
 * peel-off: the lex-greatest exponent vector of a symmetric polynomial is
 * weakly decreasing, and s_lam has lex-leading term 1 * t^lam, so subtracting
 * coeff * s_(leading exponent) strictly lowers the leading term.
 */
SchurExpansion schur_expand(const LaurentPoly& p);

// Number of semistandard tableaux of shape lam and content mu (both
// nonnegative, same length); equals the coefficient of t^mu in s_lam.
Int kostka(const GenPartition& lam, const std::vector<int>& mu);

// One factor (1 - t^alpha q^qpow)^mult of a denominator product.
struct GeomFactor {
    Exponents alpha;
    int qpow = 0;
    int mult = 1;

    bool operator==(const GeomFactor& rhs) const {
        return alpha == rhs.alpha && qpow == rhs.qpow && mult == rhs.mult;
    }
};

/*
 * Factor list of e^lam_k: one factor (1 - t^alpha q^k) per monomial t^alpha
 * of s_lam, with the monomial's coefficient as multiplicity.  Factors come
 * out ordered by alpha (lex ascending), which is the canonical order used by
 * the rational-function layer.
 */
std::vector<GeomFactor> e_factor(int num_vars, const GenPartition& lam, int k);

}  // namespace charq
