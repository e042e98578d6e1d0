#pragma once

#include <optional>
#include <vector>

#include "strictclose/linalg.hpp"
#include "strictclose/semigroup.hpp"

namespace strictclose {

/// Basis of group(S), the subgroup of Z^d generated by the semigroup
/// generators, in Hermite normal form (one row per basis vector).
struct LatticeBasis {
    IntMat rows;

    bool operator==(const LatticeBasis& o) const { return rows == o.rows; }
};

/// Outer description of cone(S): the set of x with <n, x> >= 0 for every
/// normal n. Equations cutting out the span appear as opposite pairs.
struct ConeInequalities {
    std::vector<std::vector<long long>> normals;
};

struct NormalizationResult {
    std::vector<ExponentVec> generators;  // lex ascending
    bool complete;
};

LatticeBasis group_lattice(const AffineSemigroup& s);

ConeInequalities cone_facets(const AffineSemigroup& s);

/// Whether x^v is integral over the algebra of S: v in group(S) /\ cone(S).
bool saturation_contains(const AffineSemigroup& s, const ExponentVec& v);

/// Lattice basis and facet tests prepared once for repeated saturation
/// queries against the same semigroup.
class SaturationTester {
public:
    explicit SaturationTester(const AffineSemigroup& s);

    bool contains(const ExponentVec& v) const;
    const LatticeBasis& lattice() const { return lattice_; }

    /// Facet normals expressed in lattice coordinates (the full-dimensional
    /// picture inside the span of the lattice).
    const IntMat& lattice_facets() const { return lattice_facets_; }

private:
    LatticeBasis lattice_;
    IntMat lattice_facets_;
};

/// Minimal generators of the saturation group(S) /\ cone(S) found inside
/// the box. For ambient dimension 1 the result is certified complete via
/// the conductor; otherwise the shell heuristic of module_generators_over
/// applies.
NormalizationResult normalization_generators(const AffineSemigroup& s, const DegreeBox& box);

/// Conductor of the numerical semigroup generated by gens/gcd(gens),
/// i.e. Frobenius number + 1, by round-robin shortest residues.
/// Requires ambient dimension 1 and at least one generator.
long long numerical_conductor(const AffineSemigroup& s);

/// Conductor in absolute terms: gcd * conductor(S/gcd). Every multiple of
/// gcd(S) at or above this value belongs to S. Zero for the empty
/// semigroup is deliberately not defined; callers pass nonempty S or
/// handle that case themselves.
long long absolute_conductor(const AffineSemigroup& s);

}  // namespace strictclose
