#include "charq/series.hpp"

#include <algorithm>

namespace charq {

namespace {

void check_vars(const CharacterSeries& a, const CharacterSeries& b) {
    if (a.num_vars() != b.num_vars())
        throw VarMismatchError("series operands have different variable counts");
}

}  // namespace

CharacterSeries qs_add(const CharacterSeries& a, const CharacterSeries& b) {
    check_vars(a, b);
    const int order = std::min(a.order(), b.order());
    CharacterSeries out(a.num_vars(), order);
    for (int d = 0; d <= order; ++d) out.coeff(d) = a.coeff(d) + b.coeff(d);
    return out;
}

CharacterSeries qs_mul(const CharacterSeries& a, const CharacterSeries& b) {
    check_vars(a, b);
    const int order = std::min(a.order(), b.order());
    CharacterSeries out(a.num_vars(), order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

CharacterSeries qs_geom(const Exponents& alpha, int k, int order) {
    if (k < 1)
        throw FactorNotExpandableError(
            "geometric factor with q-power " + std::to_string(k) + " has no series expansion");
    const int n = static_cast<int>(alpha.size());
    CharacterSeries out(n, order);
    Exponents e(n, 0);
    for (int m = 0; m * k <= order; ++m) {
        out.coeff(m * k) = LaurentPoly::monomial(n, e);
        for (int i = 0; i < n; ++i) e[i] += alpha[i];
    }
    return out;
}

}  // namespace charq
