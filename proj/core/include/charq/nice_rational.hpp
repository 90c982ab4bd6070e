#pragma once

#include <vector>

#include "charq/schur.hpp"
#include "charq/series.hpp"

namespace charq {

// One numerator term coeff * t^alpha * q^qpow.
struct NumTerm {
    Int coeff;
    Exponents alpha;
    int qpow = 0;

    bool operator==(const NumTerm& rhs) const {
        return coeff == rhs.coeff && alpha == rhs.alpha && qpow == rhs.qpow;
    }
};

/*
 * Rational function of the shape
 *
 *     P(t, q) / prod_j (1 - t^alpha_j q^k_j)^m_j
 *
 * with P a Laurent polynomial in t and ordinary polynomial in q.  Numerator
 * terms and denominator factors are kept canonically sorted and merged, so
 * equal functions built along different routes compare equal componentwise.
 * Factors with k_j = 0 are legal data (multigraded series before the t -> tq
 * substitution) but refuse to expand as q-power series.
 */
class NiceRational {
public:
    explicit NiceRational(int num_vars = 0) : num_vars_(num_vars) {
        if (num_vars < 0) throw Error("NiceRational: negative variable count");
    }
    NiceRational(int num_vars, std::vector<NumTerm> numerator, std::vector<GeomFactor> denominator);

    static NiceRational one(int num_vars);

    int num_vars() const { return num_vars_; }
    const std::vector<NumTerm>& numerator() const { return numerator_; }
    const std::vector<GeomFactor>& denominator() const { return denominator_; }

    bool operator==(const NiceRational& rhs) const {
        return num_vars_ == rhs.num_vars_ && numerator_ == rhs.numerator_ &&
               denominator_ == rhs.denominator_;
    }
    bool operator!=(const NiceRational& rhs) const { return !(*this == rhs); }

private:
    int num_vars_;
    std::vector<NumTerm> numerator_;
    std::vector<GeomFactor> denominator_;
};

// q-power-series expansion up to the given order.  Every denominator factor
// needs qpow >= 1; otherwise FactorNotExpandableError.
CharacterSeries nr_series(const NiceRational& f, int order);

/*
 * The substitution t_i -> t_i * q.  A numerator term picks up q^(sum alpha),
 * a denominator factor's q-power shifts by sum alpha.  Any shifted exponent
 * below zero throws NegativeQPowerError, since the result would leave the
 * power-series ring in q.
 */
NiceRational nr_substitute_tq(const NiceRational& f);

// Sum over the least common denominator (multiplicity max per factor key).
NiceRational nr_add(const NiceRational& f, const NiceRational& g);
// Product: numerators convolve, denominator multiplicities add.
NiceRational nr_mul(const NiceRational& f, const NiceRational& g);

// One entry of the denominator multiset A: e^lam_k to the power mult.
struct AEntry {
    GenPartition lam;
    int qpow = 0;
    int mult = 1;

    bool operator==(const AEntry& rhs) const {
        return lam == rhs.lam && qpow == rhs.qpow && mult == rhs.mult;
    }
};

// One numerator term coeff * s_lam * q^qpow of a decomposition.
struct DecompTerm {
    Int coeff;
    GenPartition lam;
    int qpow = 0;

    bool operator==(const DecompTerm& rhs) const {
        return coeff == rhs.coeff && lam == rhs.lam && qpow == rhs.qpow;
    }
};

/*
 * f written as  sum_i m_i s_(mu_i) q^(r_i) / prod_(lam,k) in A  (e^lam_k)^mult.
 * Terms are grouped by q-power (ascending), each q-slice in Schur-expansion
 * order; (mu, r) keys are distinct.
 */
struct Decomposition {
    std::vector<AEntry> a;
    std::vector<DecompTerm> terms;
};

/*
 * Rewrites f over denominators of the form e^lam_k.  Denominator factors are
 * grouped by (sort-descending(alpha), k); each group is covered by the least
 * number of copies of e^lam_k that contains it, and the numerator picks up
 * the complementary factors.  The completed numerator must be symmetric in t
 * at every q-degree (NonSymmetricError otherwise) and is Schur-expanded
 * q-slice by q-slice.  Every factor needs qpow >= 1 (FactorNotExpandableError).
 */
Decomposition nr_decompose(const NiceRational& f);

// The decomposition read back as a NiceRational (numerators from the Schur
// terms, denominator factors from e_factor), for re-expansion checks.
NiceRational decomposition_to_rational(int num_vars, const Decomposition& d);

}  // namespace charq
