#include "charq/invariants.hpp"

#include <algorithm>

namespace charq {

int group_vars(const GroupSpec& g) {
    return std::visit([](const auto& spec) { return spec.n; }, g);
}

bool is_diagonal_group(const GroupSpec& g) {
    return std::holds_alternative<DiagonalTorus>(g) || std::holds_alternative<CyclicDiagonal>(g);
}

void validate_group(const GroupSpec& g) {
    if (group_vars(g) < 1) throw Error("group rank must be at least 1");
    if (const auto* torus = std::get_if<DiagonalTorus>(&g)) {
        for (const auto& w : torus->weights)
            if (static_cast<int>(w.size()) != torus->n)
                throw VarMismatchError("torus weight length does not match rank");
    } else if (const auto* cyclic = std::get_if<CyclicDiagonal>(&g)) {
        if (cyclic->order < 1) throw Error("cyclic group order must be positive");
        if (static_cast<int>(cyclic->exponents.size()) != cyclic->n)
            throw VarMismatchError("cyclic exponent length does not match rank");
    }
}

namespace {

bool fixed_by_torus(const DiagonalTorus& g, const Exponents& alpha) {
    for (const auto& w : g.weights) {
        long long dot = 0;
        for (int i = 0; i < g.n; ++i) dot += static_cast<long long>(w[i]) * alpha[i];
        if (dot != 0) return false;
    }
    return true;
}

bool fixed_by_cyclic(const CyclicDiagonal& g, const Exponents& alpha) {
    long long dot = 0;
    for (int i = 0; i < g.n; ++i) dot += static_cast<long long>(g.exponents[i]) * alpha[i];
    return ((dot % g.order) + g.order) % g.order == 0;
}

// Sum of the coefficients of the monomials fixed by a diagonal subgroup.
Int filtered_sum(const GroupSpec& g, const LaurentPoly& p) {
    Int total = 0;
    if (const auto* torus = std::get_if<DiagonalTorus>(&g)) {
        for (const auto& [alpha, c] : p.terms())
            if (fixed_by_torus(*torus, alpha)) total += c;
    } else {
        const auto& cyclic = std::get<CyclicDiagonal>(g);
        for (const auto& [alpha, c] : p.terms())
            if (fixed_by_cyclic(cyclic, alpha)) total += c;
    }
    return total;
}

}  // namespace

Int d_schur(const GroupSpec& g, const GenPartition& lam) {
    validate_group(g);
    const int n = group_vars(g);
    if (static_cast<int>(lam.size()) != n)
        throw VarMismatchError("partition length does not match group rank");
    if (!is_weakly_decreasing(lam)) throw Error("partition entries must be weakly decreasing");

    if (std::holds_alternative<FullGL>(g)) {
        return std::all_of(lam.begin(), lam.end(), [](int a) { return a == 0; }) ? 1 : 0;
    }
    if (std::holds_alternative<SpecialLinear>(g)) {
        return std::all_of(lam.begin(), lam.end(), [&](int a) { return a == lam.front(); }) ? 1 : 0;
    }
    if (std::holds_alternative<MaximalUnipotent>(g)) {
        return 1;
    }
    return filtered_sum(g, schur_poly(n, lam));
}

Int d_character(const GroupSpec& g, const LaurentPoly& p) {
    validate_group(g);
    if (p.num_vars() != group_vars(g))
        throw VarMismatchError("polynomial variable count does not match group rank");

    // Diagonal subgroups act monomial by monomial, so any polynomial counts;
    // the connected non-diagonal groups need an actual character.
    if (is_diagonal_group(g)) return filtered_sum(g, p);
    if (!is_symmetric(p)) throw NonSymmetricError("invariant count needs a symmetric character");

    Int total = 0;
    for (const auto& term : schur_expand(p)) total += term.coeff * d_schur(g, term.lam);
    return total;
}

IntSeries hilbert_invariants(const GroupSpec& g, const CharacterSeries& ch) {
    IntSeries out(ch.order());
    for (int d = 0; d <= ch.order(); ++d) {
        try {
            out.coeff(d) = d_character(g, ch.coeff(d));
        } catch (const NonSymmetricError& e) {
            throw NonSymmetricError(std::string(e.what()) + " (coefficient of q^" +
                                    std::to_string(d) + ")");
        }
    }
    return out;
}

CharacterSeries free_algebra_character(int num_vars, int order) {
    if (num_vars < 1) throw Error("free algebra needs at least one letter");
    CharacterSeries out(num_vars, order);
    LaurentPoly sum(num_vars);
    for (int i = 0; i < num_vars; ++i) sum += LaurentPoly::variable(num_vars, i);
    LaurentPoly power = LaurentPoly::constant(num_vars, 1);
    out.coeff(0) = power;
    for (int d = 1; d <= order; ++d) {
        power *= sum;
        out.coeff(d) = power;
    }
    return out;
}

}  // namespace charq
