#include "charq/laurent.hpp"

#include <limits>

namespace charq {

int total_degree(const Exponents& alpha) {
    int d = 0;
    for (int a : alpha) d += a;
    return d;
}

LaurentPoly LaurentPoly::constant(int num_vars, const Int& c) {
    LaurentPoly p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, const Exponents& alpha, const Int& c) {
    LaurentPoly p(num_vars);
    p.add_term(alpha, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw Error("LaurentPoly::variable: index out of range");
    Exponents alpha(num_vars, 0);
    alpha[i] = 1;
    return monomial(num_vars, alpha);
}

const Int& LaurentPoly::coeff(const Exponents& alpha) const {
    static const Int zero = 0;
    check_alpha(alpha);
    auto it = terms_.find(alpha);
    return it == terms_.end() ? zero : it->second;
}

void LaurentPoly::add_term(const Exponents& alpha, const Int& c) {
    check_alpha(alpha);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const Exponents, Int>& LaurentPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

void LaurentPoly::check_vars(const LaurentPoly& other) const {
    if (num_vars_ != other.num_vars_)
        throw VarMismatchError("operands have " + std::to_string(num_vars_) + " and " +
                               std::to_string(other.num_vars_) + " variables");
}

void LaurentPoly::check_alpha(const Exponents& alpha) const {
    if (static_cast<int>(alpha.size()) != num_vars_)
        throw VarMismatchError("exponent vector has length " + std::to_string(alpha.size()) +
                               ", polynomial has " + std::to_string(num_vars_) + " variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_vars(rhs);
    for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_vars(rhs);
    for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    lhs.check_vars(rhs);
    LaurentPoly out(lhs.num_vars_);
    // Schoolbook product of sparse maps; term merging keeps the result canonical.
    Exponents sum(lhs.num_vars_);
    for (const auto& [a, ca] : lhs.terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            for (int i = 0; i < lhs.num_vars_; ++i) sum[i] = a[i] + b[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(num_vars_);
    for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [alpha, v] : terms_) v *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::shifted(const Exponents& alpha) const {
    check_alpha(alpha);
    LaurentPoly out(num_vars_);
    Exponents e(num_vars_);
    for (const auto& [beta, c] : terms_) {
        for (int i = 0; i < num_vars_; ++i) e[i] = beta[i] + alpha[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

namespace {

// Per-variable [min, max] exponent box of a polynomial's support.
struct Box {
    Exponents lo, hi;
};

Box support_box(const LaurentPoly& p) {
    Box box;
    box.lo.assign(p.num_vars(), std::numeric_limits<int>::max());
    box.hi.assign(p.num_vars(), std::numeric_limits<int>::min());
    for (const auto& [alpha, c] : p.terms()) {
        for (int i = 0; i < p.num_vars(); ++i) {
            box.lo[i] = std::min(box.lo[i], alpha[i]);
            box.hi[i] = std::max(box.hi[i], alpha[i]);
        }
    }
    return box;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars() != b.num_vars())
        throw VarMismatchError("exact_div: operand variable counts differ");
    if (b.is_zero()) throw NotDivisibleError("exact_div: division by zero polynomial");
    const int n = a.num_vars();
    LaurentPoly quotient(n);
    if (a.is_zero()) return quotient;

    // The quotient's support is confined to boxa - boxb coordinatewise: in each
    // single variable the extreme-degree slices of a product are products of
    // the factors' extreme slices, so min/max exponents subtract exactly.
    const Box box_a = support_box(a);
    const Box box_b = support_box(b);

    const auto& [lead_b, cb] = b.leading_term();
    LaurentPoly r = a;
    Exponents mono(n);
    while (!r.is_zero()) {
        const auto& [lead_r, cr] = r.leading_term();
        if (cr % cb != 0)
            throw NotDivisibleError("exact_div: leading coefficient does not divide");
        for (int i = 0; i < n; ++i) {
            mono[i] = lead_r[i] - lead_b[i];
            if (mono[i] < box_a.lo[i] - box_b.lo[i] || mono[i] > box_a.hi[i] - box_b.hi[i])
                throw NotDivisibleError("exact_div: non-cancelling remainder");
        }
        Int q = cr / cb;
        quotient.add_term(mono, q);
        r -= b.shifted(mono) * q;
    }
    return quotient;
}

bool is_symmetric(const LaurentPoly& p) {
    const int n = p.num_vars();
    Exponents swapped;
    for (int i = 0; i + 1 < n; ++i) {
        for (const auto& [alpha, c] : p.terms()) {
            if (alpha[i] == alpha[i + 1]) continue;
            swapped = alpha;
            std::swap(swapped[i], swapped[i + 1]);
            if (p.coeff(swapped) != c) return false;
        }
    }
    return true;
}

Int eval_ones(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [alpha, c] : p.terms()) s += c;
    return s;
}

LaurentPoly degree_slice(const LaurentPoly& p, int d) {
    LaurentPoly out(p.num_vars());
    for (const auto& [alpha, c] : p.terms())
        if (total_degree(alpha) == d) out.add_term(alpha, c);
    return out;
}

}  // namespace charq
