#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "charq/errors.hpp"

namespace charq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vector of a Laurent monomial t1^a1 * ... * tn^an.  Entries may be
// negative.  std::vector's operator< is lexicographic, which is exactly the
// term order used throughout (leading term = lex-greatest exponent vector).
using Exponents = std::vector<int>;

int total_degree(const Exponents& alpha);

/*
 * Sparse Laurent polynomial over Z in a fixed number of variables.
 *
 * Invariants:
 *   - every stored coefficient is nonzero (zero terms are pruned on the spot),
 *   - all exponent vectors have length num_vars(),
 *   - the term map is ordered lexicographically, so equality is structural
 *     and iteration order is canonical.
 */
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, Int>;

    explicit LaurentPoly(int num_vars = 0) : num_vars_(num_vars) {
        if (num_vars < 0) throw Error("LaurentPoly: negative variable count");
    }

    static LaurentPoly constant(int num_vars, const Int& c);
    static LaurentPoly monomial(int num_vars, const Exponents& alpha, const Int& c = 1);
    // t_i as a polynomial (i is 0-based).
    static LaurentPoly variable(int num_vars, int i);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of t^alpha (zero if absent).
    const Int& coeff(const Exponents& alpha) const;

    // Adds c * t^alpha, pruning the term if the sum cancels.
    void add_term(const Exponents& alpha, const Int& c);

    // Lex-greatest term.  Only valid on a nonzero polynomial.
    const std::pair<const Exponents, Int>& leading_term() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    LaurentPoly operator-() const;
    LaurentPoly& operator*=(const Int& c);
    friend LaurentPoly operator*(LaurentPoly p, const Int& c) { return p *= c; }

    bool operator==(const LaurentPoly& rhs) const {
        return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    // Multiplies every term by t^alpha (monomial shift; always invertible).
    LaurentPoly shifted(const Exponents& alpha) const;

private:
    void check_vars(const LaurentPoly& other) const;
    void check_alpha(const Exponents& alpha) const;

    int num_vars_;
    TermMap terms_;
};

/*
 * Exact division a / b.  Repeatedly cancels the lex-leading term of the
 * remainder against the lex-leading term of b.  Over an integral domain the
 * leading term of a true quotient q satisfies LT(a) = LT(q) * LT(b), so each
 * step peels off one genuine term of q and the loop runs at most
 * term_count(q) times when the division is exact.
 *
 * Failure is detected without looping forever: per-variable degree bounds of
 * a quotient are forced (top and bottom slices of a product in one variable
 * multiply without cancellation), so a candidate quotient monomial outside
 * that box, or a coefficient that does not divide, throws NotDivisibleError.
 */
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// True when the polynomial is invariant under every adjacent transposition
// of the variables (hence under all of S_n).
bool is_symmetric(const LaurentPoly& p);

// Sum of the coefficients, i.e. the evaluation at t1 = ... = tn = 1.
Int eval_ones(const LaurentPoly& p);

// Total-degree-d slice: the sum of the terms whose exponents add up to d.
LaurentPoly degree_slice(const LaurentPoly& p, int d);

}  // namespace charq
