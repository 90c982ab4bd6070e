#include "charq/nice_rational.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace charq {

namespace {

bool all_zero(const Exponents& alpha) {
    return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
}

std::vector<NumTerm> canonical_terms(int num_vars, std::vector<NumTerm> terms) {
    std::map<std::pair<int, Exponents>, Int> merged;
    for (auto& t : terms) {
        if (static_cast<int>(t.alpha.size()) != num_vars)
            throw VarMismatchError("numerator term exponent length does not match variable count");
        if (t.qpow < 0) throw Error("numerator q-power must be nonnegative");
        if (t.coeff == 0) continue;
        merged[{t.qpow, std::move(t.alpha)}] += t.coeff;
    }
    std::vector<NumTerm> out;
    out.reserve(merged.size());
    for (auto& [key, c] : merged)
        if (c != 0) out.push_back({std::move(c), key.second, key.first});
    return out;
}

std::vector<GeomFactor> canonical_factors(int num_vars, std::vector<GeomFactor> factors) {
    std::map<std::pair<Exponents, int>, long long> merged;
    for (auto& f : factors) {
        if (static_cast<int>(f.alpha.size()) != num_vars)
            throw VarMismatchError("denominator factor exponent length does not match variable count");
        if (f.qpow < 0) throw Error("denominator factor q-power must be nonnegative");
        if (f.mult < 1) throw Error("denominator factor multiplicity must be positive");
        if (f.qpow == 0 && all_zero(f.alpha))
            throw Error("denominator factor (1 - 1) is zero");
        merged[{std::move(f.alpha), f.qpow}] += f.mult;
    }
    std::vector<GeomFactor> out;
    out.reserve(merged.size());
    for (auto& [key, m] : merged)
        out.push_back({key.first, key.second, static_cast<int>(m)});
    return out;
}

// terms * (1 - t^alpha q^k)^mult, expanded and merged.
std::vector<NumTerm> terms_times_factor(int num_vars, std::vector<NumTerm> terms,
                                        const Exponents& alpha, int k, int mult) {
    for (int rep = 0; rep < mult; ++rep) {
        std::vector<NumTerm> next = terms;
        for (const auto& t : terms) {
            NumTerm shifted;
            shifted.coeff = -t.coeff;
            shifted.alpha = t.alpha;
            for (int i = 0; i < num_vars; ++i) shifted.alpha[i] += alpha[i];
            shifted.qpow = t.qpow + k;
            next.push_back(std::move(shifted));
        }
        terms = canonical_terms(num_vars, std::move(next));
    }
    return terms;
}

std::vector<NumTerm> terms_mul(int num_vars, const std::vector<NumTerm>& a,
                               const std::vector<NumTerm>& b) {
    std::vector<NumTerm> out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a) {
        for (const auto& tb : b) {
            NumTerm t;
            t.coeff = ta.coeff * tb.coeff;
            t.alpha = ta.alpha;
            for (int i = 0; i < num_vars; ++i) t.alpha[i] += tb.alpha[i];
            t.qpow = ta.qpow + tb.qpow;
            out.push_back(std::move(t));
        }
    }
    return canonical_terms(num_vars, std::move(out));
}

}  // namespace

NiceRational::NiceRational(int num_vars, std::vector<NumTerm> numerator,
                           std::vector<GeomFactor> denominator)
    : num_vars_(num_vars),
      numerator_(canonical_terms(num_vars, std::move(numerator))),
      denominator_(canonical_factors(num_vars, std::move(denominator))) {
    if (num_vars < 0) throw Error("NiceRational: negative variable count");
}

NiceRational NiceRational::one(int num_vars) {
    return NiceRational(num_vars, {{1, Exponents(num_vars, 0), 0}}, {});
}

CharacterSeries nr_series(const NiceRational& f, int order) {
    CharacterSeries out(f.num_vars(), order);
    for (const auto& t : f.numerator())
        if (t.qpow <= order) out.coeff(t.qpow).add_term(t.alpha, t.coeff);
    for (const auto& fac : f.denominator()) {
        const CharacterSeries geom = qs_geom(fac.alpha, fac.qpow, order);
        for (int rep = 0; rep < fac.mult; ++rep) out = qs_mul(out, geom);
    }
    return out;
}

NiceRational nr_substitute_tq(const NiceRational& f) {
    std::vector<NumTerm> numerator;
    numerator.reserve(f.numerator().size());
    for (const auto& t : f.numerator()) {
        const int shift = t.qpow + total_degree(t.alpha);
        if (shift < 0)
            throw NegativeQPowerError("substitution drives a numerator term to q^" +
                                      std::to_string(shift));
        numerator.push_back({t.coeff, t.alpha, shift});
    }
    std::vector<GeomFactor> denominator;
    denominator.reserve(f.denominator().size());
    for (const auto& fac : f.denominator()) {
        const int shift = fac.qpow + total_degree(fac.alpha);
        if (shift < 0)
            throw NegativeQPowerError("substitution drives a denominator factor to q^" +
                                      std::to_string(shift));
        denominator.push_back({fac.alpha, shift, fac.mult});
    }
    return NiceRational(f.num_vars(), std::move(numerator), std::move(denominator));
}

namespace {

void check_same_vars(const NiceRational& f, const NiceRational& g) {
    if (f.num_vars() != g.num_vars())
        throw VarMismatchError("rational operands have different variable counts");
}

}  // namespace

NiceRational nr_add(const NiceRational& f, const NiceRational& g) {
    check_same_vars(f, g);
    const int n = f.num_vars();

    std::map<std::pair<Exponents, int>, int> common;
    for (const auto& fac : f.denominator()) {
        auto& m = common[{fac.alpha, fac.qpow}];
        m = std::max(m, fac.mult);
    }
    for (const auto& fac : g.denominator()) {
        auto& m = common[{fac.alpha, fac.qpow}];
        m = std::max(m, fac.mult);
    }

    auto scaled_numerator = [&](const NiceRational& h) {
        std::map<std::pair<Exponents, int>, int> have;
        for (const auto& fac : h.denominator()) have[{fac.alpha, fac.qpow}] = fac.mult;
        std::vector<NumTerm> terms = h.numerator();
        for (const auto& [key, mult] : common) {
            const int missing = mult - (have.count(key) ? have.at(key) : 0);
            if (missing > 0)
                terms = terms_times_factor(n, std::move(terms), key.first, key.second, missing);
        }
        return terms;
    };

    std::vector<NumTerm> numerator = scaled_numerator(f);
    for (auto& t : scaled_numerator(g)) numerator.push_back(std::move(t));

    std::vector<GeomFactor> denominator;
    for (const auto& [key, mult] : common) denominator.push_back({key.first, key.second, mult});
    return NiceRational(n, std::move(numerator), std::move(denominator));
}

NiceRational nr_mul(const NiceRational& f, const NiceRational& g) {
    check_same_vars(f, g);
    std::vector<GeomFactor> denominator = f.denominator();
    for (const auto& fac : g.denominator()) denominator.push_back(fac);
    return NiceRational(f.num_vars(), terms_mul(f.num_vars(), f.numerator(), g.numerator()),
                        std::move(denominator));
}

Decomposition nr_decompose(const NiceRational& f) {
    const int n = f.num_vars();

    // Group denominator factors by the sorted exponent and the q-power.
    std::map<std::pair<GenPartition, int>, std::vector<std::pair<Exponents, int>>> groups;
    for (const auto& fac : f.denominator()) {
        if (fac.qpow == 0)
            throw FactorNotExpandableError("decomposition needs every factor q-power >= 1");
        GenPartition lam(fac.alpha.begin(), fac.alpha.end());
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        groups[{std::move(lam), fac.qpow}].push_back({fac.alpha, fac.mult});
    }

    Decomposition out;
    std::vector<NumTerm> numerator = f.numerator();
    for (const auto& [key, members] : groups) {
        const auto& [lam, k] = key;
        const std::vector<GeomFactor> full = e_factor(n, lam, k);

        std::map<Exponents, int> have;
        for (const auto& [alpha, mult] : members) have[alpha] += mult;

        // Copies of e^lam_k needed to cover the group, factor by factor.
        int copies = 1;
        std::size_t covered = 0;
        for (const auto& fac : full) {
            auto it = have.find(fac.alpha);
            if (it == have.end()) continue;
            ++covered;
            copies = std::max(copies, (it->second + fac.mult - 1) / fac.mult);
        }
        if (covered != have.size())
            throw Error("internal: a denominator exponent is not a weight of its own orbit sum");

        // Multiply the numerator by everything the copies add beyond the
        // factors already present.
        for (const auto& fac : full) {
            const int present = have.count(fac.alpha) ? have.at(fac.alpha) : 0;
            const int missing = copies * fac.mult - present;
            if (missing < 0)
                throw Error("internal: completion multiplicity went negative");
            if (missing > 0)
                numerator = terms_times_factor(n, std::move(numerator), fac.alpha, k, missing);
        }
        out.a.push_back({lam, k, copies});
    }

    // Slice the completed numerator by q-power and Schur-expand each slice.
    std::map<int, LaurentPoly> slices;
    for (const auto& t : numerator) {
        auto [it, inserted] = slices.emplace(t.qpow, LaurentPoly(n));
        it->second.add_term(t.alpha, t.coeff);
    }
    for (const auto& [r, poly] : slices) {
        if (!is_symmetric(poly))
            throw NonSymmetricError("completed numerator is not symmetric at q^" +
                                    std::to_string(r));
        for (auto& term : schur_expand(poly))
            out.terms.push_back({std::move(term.coeff), std::move(term.lam), r});
    }
    return out;
}

NiceRational decomposition_to_rational(int num_vars, const Decomposition& d) {
    std::vector<NumTerm> numerator;
    for (const auto& term : d.terms) {
        const LaurentPoly s = schur_poly(num_vars, term.lam);
        for (const auto& [alpha, c] : s.terms())
            numerator.push_back({term.coeff * c, alpha, term.qpow});
    }
    std::vector<GeomFactor> denominator;
    for (const auto& entry : d.a) {
        for (auto fac : e_factor(num_vars, entry.lam, entry.qpow)) {
            fac.mult *= entry.mult;
            denominator.push_back(std::move(fac));
        }
    }
    return NiceRational(num_vars, std::move(numerator), std::move(denominator));
}

}  // namespace charq
