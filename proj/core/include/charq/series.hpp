#pragma once

#include <vector>

#include "charq/laurent.hpp"

namespace charq {

/*
 * Power series in q truncated at a fixed order, with Laurent-polynomial
 * coefficients in the t-variables.  A series of order N stores exactly the
 * N+1 coefficients of q^0 .. q^N.
 */
class CharacterSeries {
public:
    CharacterSeries(int num_vars, int order)
        : num_vars_(num_vars), coeffs_(static_cast<std::size_t>(order) + 1, LaurentPoly(num_vars)) {
        if (order < 0) throw Error("CharacterSeries: negative order");
    }

    int num_vars() const { return num_vars_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const LaurentPoly& coeff(int d) const { return coeffs_.at(d); }
    LaurentPoly& coeff(int d) { return coeffs_.at(d); }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    bool operator==(const CharacterSeries& rhs) const {
        return num_vars_ == rhs.num_vars_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const CharacterSeries& rhs) const { return !(*this == rhs); }

private:
    int num_vars_;
    std::vector<LaurentPoly> coeffs_;
};

// Sum / Cauchy product; the result is truncated at the smaller order.
CharacterSeries qs_add(const CharacterSeries& a, const CharacterSeries& b);
CharacterSeries qs_mul(const CharacterSeries& a, const CharacterSeries& b);

/*
 * Geometric series 1 / (1 - t^alpha q^k) up to order N:
 * sum_{m >= 0} t^(m*alpha) q^(m*k).  Requires k >= 1; a factor with k = 0 has
 * no q-power-series expansion and throws FactorNotExpandableError.
 */
CharacterSeries qs_geom(const Exponents& alpha, int k, int order);

// Integer coefficient series in q alone, same truncation convention.
class IntSeries {
public:
    explicit IntSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Int(0)) {
        if (order < 0) throw Error("IntSeries: negative order");
    }
    explicit IntSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw Error("IntSeries: empty coefficient list");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int d) const { return coeffs_.at(d); }
    Int& coeff(int d) { return coeffs_.at(d); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntSeries& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntSeries& rhs) const { return !(*this == rhs); }

private:
    std::vector<Int> coeffs_;
};

}  // namespace charq
