#pragma once

#include <variant>
#include <vector>

#include "charq/schur.hpp"
#include "charq/series.hpp"

namespace charq {

// The reductive or unipotent subgroup of GL_n whose invariants are counted.
struct FullGL {
    int n = 1;
};
struct SpecialLinear {
    int n = 1;
};
// Subtorus of the diagonal cut out by characters: an element
// diag(z1..zn) acts on it iff prod z_i^(w_i) = 1 for every weight row w.
struct DiagonalTorus {
    int n = 1;
    std::vector<std::vector<int>> weights;
};
struct MaximalUnipotent {
    int n = 1;
};
// Cyclic group of the given order generated by diag(zeta^e1, ..., zeta^en).
struct CyclicDiagonal {
    int n = 1;
    long long order = 1;
    std::vector<int> exponents;
};

using GroupSpec = std::variant<FullGL, SpecialLinear, DiagonalTorus, MaximalUnipotent, CyclicDiagonal>;

int group_vars(const GroupSpec& g);
// Torus and cyclic subgroups live in the diagonal; their invariant counts
// read off monomials directly instead of going through the Schur expansion.
bool is_diagonal_group(const GroupSpec& g);
void validate_group(const GroupSpec& g);

/*
 * Dimension of the invariant subspace of the irreducible with highest
 * weight lam:
 *   - full GL_n: 1 iff lam = 0,
 *   - SL_n: 1 iff all entries of lam are equal (powers of the determinant),
 *   - maximal unipotent: always 1 (the highest weight line),
 *   - diagonal subgroups: the dimension of the weight subspace fixed by the
 *     group, summed from the monomials of s_lam.
 */
Int d_schur(const GroupSpec& g, const GenPartition& lam);

// Applies the same count to a symmetric polynomial: through its Schur
// expansion in general, by direct monomial filtering for diagonal subgroups.
Int d_character(const GroupSpec& g, const LaurentPoly& p);

// Hilbert series of the invariants: d_character applied to every q-degree.
IntSeries hilbert_invariants(const GroupSpec& g, const CharacterSeries& ch);

// Graded character of the free associative algebra on n letters:
// the coefficient of q^d is (t1 + ... + tn)^d.
CharacterSeries free_algebra_character(int num_vars, int order);

}  // namespace charq
