#include "charq/worked.hpp"

#include <algorithm>
#include <map>

namespace charq {

namespace {

Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

bool is_perfect_square(const Int& x) {
    if (x < 0) return false;
    const Int r = isqrt(x);
    return r * r == x;
}

// floor(b * sqrt(d)) for d >= 0, exact on both signs of b.
Int floor_sqrt_multiple(const Int& b, const Int& d) {
    const Int sq = b * b * d;
    if (b >= 0) return isqrt(sq);
    return is_perfect_square(sq) ? -isqrt(sq) : -isqrt(sq) - 1;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int binomial(long long n, int k) {
    if (k < 0 || n < k) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

}  // namespace

QuadraticIrrational::QuadraticIrrational(Int a, Int b, Int d, Int c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
    if (c_ <= 0) throw Error("QuadraticIrrational: denominator must be positive");
    if (d_ < 0) throw Error("QuadraticIrrational: radicand must be nonnegative");
    if (b_ == 0) d_ = 0;
    // Pull square factors out of the radicand so d is square-free (or zero);
    // a perfect square folds the whole term into the rational part.
    for (Int f = 2; f * f <= d_; ++f) {
        while (d_ % (f * f) == 0) {
            d_ /= f * f;
            b_ *= f;
        }
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    if (d_ == 0) b_ = 0;
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a_), abs(b_)), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

Int QuadraticIrrational::floor_scaled(const Int& n) const {
    // n*(a + b sqrt(d))/c lies in [A + F, A + F + 1) with F = floor(n*b*sqrt(d)),
    // and c*floor(G/c) <= G <= value < G + 1 <= c*(floor(G/c) + 1), so the
    // integer part of the quotient is exactly floor((A + F)/c).
    const Int A = n * a_;
    const Int F = floor_sqrt_multiple(n * b_, d_);
    return floor_div(A + F, c_);
}

int QuadraticIrrational::compare(const Int& x) const {
    // sign of (a - c*x) + b*sqrt(d)
    const Int lhs = a_ - c_ * x;
    if (b_ == 0) return lhs == 0 ? 0 : (lhs > 0 ? 1 : -1);
    if (b_ > 0) {
        if (lhs >= 0) return 1;
        // compare b*sqrt(d) against -lhs > 0
        const Int diff = b_ * b_ * d_ - lhs * lhs;
        return diff == 0 ? 0 : (diff > 0 ? 1 : -1);
    }
    if (lhs <= 0) return -1;
    const Int diff = lhs * lhs - b_ * b_ * d_;
    return diff == 0 ? 0 : (diff > 0 ? 1 : -1);
}

NiceRational fhl_series() {
    const NiceRational first(2, {{1, {0, 0}, 0}}, {{{1, 0}, 0, 1}, {{0, 1}, 0, 1}});
    const NiceRational second(2, {{1, {1, 1}, 0}},
                              {{{1, 0}, 0, 2}, {{0, 1}, 0, 2}, {{1, 1}, 0, 1}});
    return nr_add(first, second);
}

Int nagata_dim(int d, int m) {
    if (d < 0) return 0;
    if (m <= 0) return binomial(d + 2, 2);
    if (3 * m > d) return 0;
    return binomial(d + 2, 2) - 9 * binomial(m + 1, 2);
}

Int nagata_cn(int n) {
    if (n < 0) throw Error("nagata_cn: degree must be nonnegative");
    Int total = 0;
    for (int m = -n; m <= 0; ++m) total += nagata_dim(n + m, m);
    for (int m = 1; 2 * m <= n; ++m) total += nagata_dim(n + m, m);
    return total;
}

IntSeries nagata_series(int order) {
    IntSeries out(order);
    for (int n = 0; 9 * n <= order; ++n) out.coeff(9 * n) = nagata_cn(n);
    return out;
}

bool nagata_identity_check(int n) {
    if (n < 0) throw Error("nagata_identity_check: degree must be nonnegative");

    Int low = 0;
    for (int m = -n; m <= 0; ++m) low += binomial(n + m + 2, 2);
    if (low != binomial(n + 3, 3)) return false;

    Int high = 0;
    for (int m = 1; 2 * m <= n; ++m) high += nagata_dim(n + m, m);
    const long long s = n / 2;
    const Int s3 = Int(s) * s * s, s2 = Int(s) * s;
    if (n % 2 == 0) {
        if (n > 0) {
            if (high * 6 != 10 * s3 + 3 * s2 - 7 * s) return false;
            if (high != 10 * binomial(s, 3) + 11 * binomial(s, 2) + s) return false;
        }
    } else {
        if (high * 6 != 10 * s3 + 18 * s2 + 8 * s) return false;
        if (high != 10 * binomial(s, 3) + 16 * binomial(s, 2) + 6 * s) return false;
    }
    return true;
}

Int semigroup_coeff(const QuadraticIrrational& beta, int d) {
    if (!beta.in_unit_interval())
        throw BetaOutOfRangeError("semigroup parameter must satisfy 0 < beta < 1");
    if (d < 0) throw Error("semigroup_coeff: degree must be nonnegative");
    if (d == 0) return 1;
    return 1 + beta.floor_scaled(d);
}

IntSeries semigroup_differences(const QuadraticIrrational& beta, int window) {
    if (window < 1) throw Error("semigroup_differences: window must be positive");
    IntSeries out(window - 1);
    Int prev = semigroup_coeff(beta, 0);
    for (int d = 1; d <= window; ++d) {
        Int cur = semigroup_coeff(beta, d);
        out.coeff(d - 1) = cur - prev;
        prev = std::move(cur);
    }
    return out;
}

std::optional<std::pair<int, int>> detect_eventual_period(const IntSeries& c, int max_offset,
                                                          int max_period) {
    if (max_offset < 0 || max_period < 1)
        throw Error("detect_eventual_period: bounds out of range");
    for (int p = 1; p <= max_period; ++p) {
        if (p > c.order()) break;
        // Largest d with c_(d+p) != c_d decides the smallest workable offset.
        int offset = 0;
        for (int d = c.order() - p; d >= 0; --d) {
            if (c.coeff(d + p) != c.coeff(d)) {
                offset = d + 1;
                break;
            }
        }
        if (offset <= max_offset && c.order() - p >= offset)
            return std::make_pair(offset, p);
    }
    return std::nullopt;
}

namespace {

// Rank of an integer matrix by fraction-free elimination; rows are combined
// with cross-multiples and reduced by their content, which keeps the entries
// small for the 0/1 incidence matrices this sees.
int integer_rank(std::vector<std::vector<Int>>& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            if (pivot < 0 || abs(m[r][col]) < abs(m[pivot][col])) pivot = r;
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Int g = gcd(m[rank][col], m[r][col]);
            const Int a = m[r][col] / g, b = m[rank][col] / g;
            Int content = 0;
            for (int j = col; j < cols; ++j) {
                m[r][j] = b * m[r][j] - a * m[rank][j];
                if (content != 1) content = gcd(content, m[r][j]);
            }
            if (content > 1)
                for (int j = col; j < cols; ++j) m[r][j] /= content;
        }
        ++rank;
    }
    return rank;
}

// Words in x (bit 0) and y (bit 1) of length d with exactly j letters y form
// the j-th weight block; raising turns one y into x, lowering one x into y.
struct WeightBlocks {
    int d;
    std::vector<std::vector<unsigned>> masks;        // masks[j]
    std::vector<std::map<unsigned, int>> index;      // mask -> column in block j

    explicit WeightBlocks(int depth) : d(depth), masks(depth + 1), index(depth + 1) {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            const int j = __builtin_popcount(mask);
            index[j][mask] = static_cast<int>(masks[j].size());
            masks[j].push_back(mask);
        }
    }

    // Matrix rows of the raising operator restricted to block j (true) or
    // the lowering operator (false).
    std::vector<std::vector<Int>> operator_rows(int j, bool raising) const {
        const int target = raising ? j - 1 : j + 1;
        const auto& cols = masks[j];
        const int nrows = (target < 0 || target > d) ? 0 : static_cast<int>(masks[target].size());
        std::vector<std::vector<Int>> rows(nrows, std::vector<Int>(cols.size(), 0));
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
            const unsigned mask = cols[c];
            for (int pos = 0; pos < d; ++pos) {
                const bool is_y = (mask >> pos) & 1u;
                if (raising != is_y) continue;
                const unsigned image = mask ^ (1u << pos);
                if (nrows == 0) continue;
                rows[index[target].at(image)][c] += 1;
            }
        }
        return rows;
    }
};

}  // namespace

Int tensor_invariant_dim_oracle(const GroupSpec& g, int d) {
    validate_group(g);
    if (group_vars(g) != 2)
        throw UnsupportedSizeError("tensor oracle only covers two variables");
    if (d < 0 || d > 12)
        throw UnsupportedSizeError("tensor oracle only covers tensor degree 0..12");
    if (std::holds_alternative<FullGL>(g))
        throw UnsupportedSizeError("tensor oracle does not cover the full linear group");

    if (is_diagonal_group(g)) {
        // The group fixes each word, scaled by its (x-count, y-count) weight.
        Int count = 0;
        for (int j = 0; j <= d; ++j) {
            const Exponents weight{d - j, j};
            bool fixed;
            if (const auto* torus = std::get_if<DiagonalTorus>(&g)) {
                fixed = true;
                for (const auto& w : torus->weights) {
                    if (static_cast<long long>(w[0]) * weight[0] +
                            static_cast<long long>(w[1]) * weight[1] !=
                        0) {
                        fixed = false;
                        break;
                    }
                }
            } else {
                const auto& cyclic = std::get<CyclicDiagonal>(g);
                const long long dot = static_cast<long long>(cyclic.exponents[0]) * weight[0] +
                                      static_cast<long long>(cyclic.exponents[1]) * weight[1];
                fixed = ((dot % cyclic.order) + cyclic.order) % cyclic.order == 0;
            }
            if (fixed) count += binomial(d, j);
        }
        return count;
    }

    const WeightBlocks blocks(d);
    const bool need_lowering = std::holds_alternative<SpecialLinear>(g);
    Int dim = 0;
    for (int j = 0; j <= d; ++j) {
        std::vector<std::vector<Int>> rows = blocks.operator_rows(j, true);
        if (need_lowering) {
            for (auto& row : blocks.operator_rows(j, false)) rows.push_back(std::move(row));
        }
        const int cols = static_cast<int>(blocks.masks[j].size());
        if (rows.empty()) {
            dim += cols;
            continue;
        }
        dim += cols - integer_rank(rows);
    }
    return dim;
}

}  // namespace charq
