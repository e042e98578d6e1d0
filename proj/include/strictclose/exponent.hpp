#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace strictclose {

/// A lattice point of Z^d. Domain values (multidegrees of monomials) are
/// componentwise nonnegative; intermediate lattice arithmetic may not be.
using ExponentVec = std::vector<long long>;

inline bool is_nonnegative(const ExponentVec& v) {
    for (auto x : v)
        if (x < 0) return false;
    return true;
}

inline bool is_zero(const ExponentVec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

inline long long total_degree(const ExponentVec& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

inline ExponentVec add(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExponentVec sub(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// Componentwise a <= b.
inline bool dominated_by(const ExponentVec& a, const ExponentVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Canonical order for all reported sets: lexicographic ascending.
inline bool lex_less(const ExponentVec& a, const ExponentVec& b) {
    return a < b;
}

/// Search order for witness enumeration: total degree first, ties listed
/// the way monomials of one degree are conventionally written
/// (x-power descending, i.e. lex descending).
inline bool graded_order_less(const ExponentVec& a, const ExponentVec& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

/// Componentwise truncation bound for sweeps over graded pieces.
struct DegreeBox {
    ExponentVec bound;

    explicit DegreeBox(ExponentVec b) : bound(std::move(b)) {
        if (bound.empty())
            throw std::invalid_argument("degree box: empty bound");
        for (auto x : bound)
            if (x < 1) throw std::invalid_argument("degree box: all coordinates must be >= 1");
    }

    size_t dim() const { return bound.size(); }
};

/// Visits every lattice point of [0, bound] in lex-ascending order
/// (last coordinate fastest). Lex order refines componentwise order,
/// so p - g is always visited before p.
template <class Fn>
void for_each_point(const ExponentVec& bound, Fn&& fn) {
    ExponentVec p(bound.size(), 0);
    while (true) {
        fn(const_cast<const ExponentVec&>(p));
        size_t i = p.size();
        while (i > 0) {
            --i;
            if (p[i] < bound[i]) {
                ++p[i];
                std::fill(p.begin() + i + 1, p.end(), 0);
                break;
            }
            if (i == 0) return;
        }
    }
}

inline size_t box_cell_count(const ExponentVec& bound) {
    size_t n = 1;
    for (auto x : bound) n *= static_cast<size_t>(x + 1);
    return n;
}

/// Row-major index of v inside [0, bound].
inline size_t box_index(const ExponentVec& bound, const ExponentVec& v) {
    size_t idx = 0;
    for (size_t i = 0; i < bound.size(); ++i)
        idx = idx * static_cast<size_t>(bound[i] + 1) + static_cast<size_t>(v[i]);
    return idx;
}

/// "5 0" style, used in report listings and algebra files.
inline std::string vec_row(const ExponentVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

/// "(5,0)" style, used for witnesses and failing pairs.
inline std::string vec_tuple(const ExponentVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += ')';
    return s;
}

}  // namespace strictclose
