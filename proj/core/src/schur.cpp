#include "charq/schur.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace charq {

bool is_weakly_decreasing(const GenPartition& lam) {
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    return true;
}

namespace {

void check_partition(int num_vars, const GenPartition& lam) {
    if (static_cast<int>(lam.size()) != num_vars)
        throw VarMismatchError("partition length " + std::to_string(lam.size()) +
                               " does not match variable count " + std::to_string(num_vars));
    if (!is_weakly_decreasing(lam))
        throw Error("partition entries must be weakly decreasing");
}

/*
 * Column-major tableau walk.  Cells of column c are (0,c)..(len_c - 1,c)
 * where len_c counts the rows with lam_r > c.  When cell (r,c) is filled its
 * left and upper neighbours already have values, so both tableau constraints
 * are checked on the spot.  `content` accumulates how often each entry is
 * used; every completed tableau contributes t^content.
 */
struct TableauWalk {
    int n;                              // largest allowed entry
    std::vector<int> shape;             // nonnegative weakly decreasing parts
    std::vector<int> col_len;           // rows in each column
    std::vector<std::vector<int>> cell; // cell[r][c] entries as they are set
    std::vector<int> content;
    const std::vector<int>* target = nullptr;  // optional content filter
    LaurentPoly* sum = nullptr;                // optional monomial accumulator
    Int count = 0;

    TableauWalk(int num_vars, const std::vector<int>& parts) : n(num_vars), shape(parts) {
        const int width = shape.empty() ? 0 : shape.front();
        col_len.assign(width, 0);
        for (int r = 0; r < static_cast<int>(shape.size()); ++r)
            for (int c = 0; c < shape[r]; ++c) ++col_len[c];
        cell.assign(shape.size(), std::vector<int>(width, 0));
        content.assign(n, 0);
    }

    void fill(int r, int c) {
        if (r == col_len[c]) {
            ++c;
            r = 0;
            if (c == static_cast<int>(col_len.size())) {
                if (sum) sum->add_term(Exponents(content.begin(), content.end()), 1);
                ++count;
                return;
            }
        }
        int lo = 1;
        if (r > 0) lo = std::max(lo, cell[r - 1][c] + 1);                  // strict down the column
        if (c > 0 && r < col_len[c - 1]) lo = std::max(lo, cell[r][c - 1]);  // weak along the row
        // Entries below in this column must still fit strictly increasing values <= n.
        const int hi = n - (col_len[c] - 1 - r);
        for (int v = lo; v <= hi; ++v) {
            if (target && content[v - 1] + 1 > (*target)[v - 1]) continue;
            cell[r][c] = v;
            ++content[v - 1];
            fill(r + 1, c);
            --content[v - 1];
        }
    }

    void run() {
        if (col_len.empty()) {
            if (sum) sum->add_term(Exponents(content.begin(), content.end()), 1);
            count = 1;
            return;
        }
        fill(0, 0);
    }
};

}  // namespace

LaurentPoly schur_poly(int num_vars, const GenPartition& lam) {
    check_partition(num_vars, lam);
    if (num_vars == 0) return LaurentPoly::constant(0, 1);
    const int twist = std::min(lam.back(), 0);
    std::vector<int> parts(lam);
    for (int& p : parts) p -= twist;

    LaurentPoly out(num_vars);
    TableauWalk walk(num_vars, parts);
    walk.sum = &out;
    walk.run();
    if (twist != 0) out = out.shifted(Exponents(num_vars, twist));
    return out;
}

LaurentPoly schur_poly_bialternant(int num_vars, const GenPartition& lam) {
    check_partition(num_vars, lam);
    const int n = num_vars;
    if (n == 0) return LaurentPoly::constant(0, 1);

    // Staircase-shifted exponents lam_i + n - i are strictly decreasing.
    std::vector<int> expo(n);
    for (int i = 0; i < n; ++i) expo[i] = lam[i] + (n - 1 - i);

    LaurentPoly alternant(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Exponents mono(n);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        for (int i = 0; i < n; ++i) mono[perm[i]] = expo[i];
        alternant.add_term(mono, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    LaurentPoly vandermonde = LaurentPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vandermonde *= LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j);
    return exact_div(alternant, vandermonde);
}

SchurExpansion schur_expand(const LaurentPoly& p) {
    if (!is_symmetric(p)) throw NonSymmetricError("schur_expand: input is not symmetric");
    SchurExpansion out;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        const auto& [alpha, c] = rest.leading_term();
        GenPartition lam(alpha.begin(), alpha.end());
        if (!is_weakly_decreasing(lam))
            throw NonSymmetricError("schur_expand: leading exponent is not weakly decreasing");
        Int coefficient = c;
        rest -= schur_poly(rest.num_vars(), lam) * coefficient;
        out.push_back({std::move(coefficient), std::move(lam)});
    }
    return out;
}

Int kostka(const GenPartition& lam, const std::vector<int>& mu) {
    if (!is_weakly_decreasing(lam)) throw Error("kostka: shape must be weakly decreasing");
    for (int p : lam)
        if (p < 0) throw Error("kostka: shape entries must be nonnegative");
    for (int m : mu)
        if (m < 0) throw Error("kostka: content entries must be nonnegative");
    if (std::accumulate(lam.begin(), lam.end(), 0) != std::accumulate(mu.begin(), mu.end(), 0))
        return 0;

    // Entries are bounded by the content length, so a shape with more nonzero
    // rows than that admits no filling; shorter shapes are padded with empty
    // rows.
    GenPartition shape = lam;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.size() > mu.size()) return 0;
    shape.resize(mu.size(), 0);

    TableauWalk walk(static_cast<int>(mu.size()), shape);
    walk.target = &mu;
    walk.run();
    return walk.count;
}

std::vector<GeomFactor> e_factor(int num_vars, const GenPartition& lam, int k) {
    if (k < 1)
        throw FactorNotExpandableError("e_factor: factors need a positive q power");
    const LaurentPoly s = schur_poly(num_vars, lam);
    std::vector<GeomFactor> out;
    out.reserve(s.term_count());
    for (const auto& [alpha, c] : s.terms()) {
        if (c > std::numeric_limits<int>::max())
            throw Error("e_factor: weight multiplicity exceeds int range");
        out.push_back({alpha, k, static_cast<int>(c)});
    }
    return out;
}

}  // namespace charq
