#include "strictclose/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace strictclose {

long long gcd_ll(long long a, long long b) {
    return std::gcd(std::llabs(a), std::llabs(b));
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = gcd_ll(n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("rational: division by zero");
    return Rational(num * o.den, den * o.num);
}

void make_primitive(std::vector<long long>& row) {
    long long g = 0;
    for (auto x : row) g = gcd_ll(g, x);
    if (g > 1)
        for (auto& x : row) x /= g;
}

IntMat hermite_normal_form(IntMat rows) {
    if (rows.empty()) return rows;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows.size(); ++col) {
        // Euclid on the column entries below r until one nonzero remains.
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool cleared = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                long long q = rows[i][col] / rows[r][col];
                for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[r][col] == 0) continue;  // column carries no pivot
        if (rows[r][col] < 0)
            for (auto& x : rows[r]) x = -x;
        // Reduce the entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            long long q = rows[i][col] / rows[r][col];
            if (rows[i][col] % rows[r][col] < 0) q -= 1;
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<size_t> pivot_columns(const IntMat& hnf) {
    std::vector<size_t> piv;
    piv.reserve(hnf.size());
    for (const auto& row : hnf) {
        size_t j = 0;
        while (j < row.size() && row[j] == 0) ++j;
        piv.push_back(j);
    }
    return piv;
}

std::optional<std::vector<long long>> lattice_solve(const IntMat& hnf, const ExponentVec& v) {
    std::vector<long long> w(v.begin(), v.end());
    std::vector<long long> c(hnf.size(), 0);
    auto piv = pivot_columns(hnf);
    for (size_t k = 0; k < hnf.size(); ++k) {
        long long p = hnf[k][piv[k]];
        if (w[piv[k]] % p != 0) return std::nullopt;
        c[k] = w[piv[k]] / p;
        if (c[k] != 0)
            for (size_t j = 0; j < w.size(); ++j) w[j] -= c[k] * hnf[k][j];
    }
    for (auto x : w)
        if (x != 0) return std::nullopt;
    return c;
}

namespace {

/// Back-substitution of hnf * x = rhs over Q with the given values fixed
/// on non-pivot columns; returns the full solution, integer-scaled primitive.
std::vector<long long> echelon_solve(const IntMat& hnf, const std::vector<Rational>& rhs,
                                     const std::vector<Rational>& free_values) {
    const size_t cols = hnf.empty() ? free_values.size() : hnf[0].size();
    auto piv = pivot_columns(hnf);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;

    std::vector<Rational> x(cols);
    {
        size_t f = 0;
        for (size_t j = 0; j < cols; ++j)
            if (!is_pivot[j]) x[j] = free_values[f++];
    }
    for (size_t k = hnf.size(); k-- > 0;) {
        Rational acc = rhs[k];
        for (size_t j = piv[k] + 1; j < cols; ++j)
            if (hnf[k][j] != 0) acc = acc - Rational(hnf[k][j]) * x[j];
        x[piv[k]] = acc / Rational(hnf[k][piv[k]]);
    }

    long long l = 1;
    for (const auto& q : x) l = l / gcd_ll(l, q.den) * q.den;
    std::vector<long long> out(cols);
    for (size_t j = 0; j < cols; ++j) out[j] = x[j].num * (l / x[j].den);
    make_primitive(out);
    return out;
}

}  // namespace

IntMat kernel_basis(const IntMat& hnf) {
    if (hnf.empty()) return {};
    const size_t cols = hnf[0].size();
    auto piv = pivot_columns(hnf);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;

    IntMat basis;
    size_t free_count = cols - hnf.size();
    std::vector<Rational> zero_rhs(hnf.size(), Rational(0));
    for (size_t f = 0; f < free_count; ++f) {
        std::vector<Rational> fv(free_count, Rational(0));
        fv[f] = Rational(1);
        basis.push_back(echelon_solve(hnf, zero_rhs, fv));
    }
    return basis;
}

std::vector<long long> lift_from_lattice_coords(const IntMat& hnf, const std::vector<long long>& rhs) {
    const size_t cols = hnf[0].size();
    std::vector<Rational> r(rhs.size());
    for (size_t i = 0; i < rhs.size(); ++i) r[i] = Rational(rhs[i]);
    std::vector<Rational> fv(cols - hnf.size(), Rational(0));
    return echelon_solve(hnf, r, fv);
}

namespace {

/// Bareiss forward elimination in place; returns the rank. When `aug` is
/// set, the last column is treated as a right-hand side and excluded
/// from pivot selection.
size_t bareiss_rank(IntMat& m, bool aug, bool* consistent) {
    if (m.empty()) {
        if (consistent) *consistent = true;
        return 0;
    }
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    const size_t pivot_cols = aug ? cols - 1 : cols;
    long long prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < pivot_cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c] != 0 && (sel == rows || std::llabs(m[i][c]) < std::llabs(m[sel][c])))
                sel = i;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    if (consistent) {
        *consistent = true;
        for (size_t i = r; i < rows; ++i)
            if (m[i][cols - 1] != 0) *consistent = false;
    }
    return r;
}

}  // namespace

size_t matrix_rank(IntMat m) {
    return bareiss_rank(m, false, nullptr);
}

bool system_consistent(const IntMat& a, const std::vector<long long>& b) {
    if (a.empty()) {
        for (auto x : b)
            if (x != 0) return false;
        return true;
    }
    IntMat aug(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    bool ok = false;
    bareiss_rank(aug, true, &ok);
    return ok;
}

}  // namespace strictclose
