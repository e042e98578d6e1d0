#pragma once

#include <optional>
#include <vector>

#include "strictclose/exponent.hpp"

namespace strictclose {

using IntMat = std::vector<std::vector<long long>>;

/// Exact fraction with 64-bit numerator/denominator, always normalized
/// with den > 0. Big enough for the desk-scale solves done here.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    bool is_zero() const { return num == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

long long gcd_ll(long long a, long long b);

/// Divides a row by the gcd of its entries (no-op on zero rows).
void make_primitive(std::vector<long long>& row);

/// Hermite normal form of the row span: echelon rows, positive pivots,
/// entries above each pivot reduced into [0, pivot). Returns only the
/// nonzero rows; their span is the integer row span of the input.
IntMat hermite_normal_form(IntMat rows);

/// Pivot column of each HNF row.
std::vector<size_t> pivot_columns(const IntMat& hnf);

/// Integer coordinates c with c * hnf == v, if v lies in the row lattice.
std::optional<std::vector<long long>> lattice_solve(const IntMat& hnf, const ExponentVec& v);

/// Primitive integer basis of { x : hnf * x = 0 }, one vector per
/// non-pivot column (the orthogonal complement of the row span).
IntMat kernel_basis(const IntMat& hnf);

/// One integer solution n of hnf * n = rhs (free coordinates set to zero),
/// scaled primitive with the orientation of the rational solution kept.
/// The HNF rows have full row rank, so this always succeeds.
std::vector<long long> lift_from_lattice_coords(const IntMat& hnf, const std::vector<long long>& rhs);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
size_t matrix_rank(IntMat m);

/// Whether a * x = b has a rational solution, by comparing the rank of a
/// with the rank of the augmented matrix under one shared elimination.
bool system_consistent(const IntMat& a, const std::vector<long long>& b);

}  // namespace strictclose
