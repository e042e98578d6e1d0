#pragma once

#include <vector>

#include "strictclose/exponent.hpp"

namespace strictclose {

/// Three-way outcome of a bounded decision: the property holds, fails
/// with evidence, or the box was too small to tell.
enum class Verdict { holds, fails, indeterminate };

/// A finitely generated subsemigroup of N^d, given by its generators.
/// Generators are kept nonzero, distinct and lex-sorted; they are not
/// forced minimal (see minimize_generators).
struct AffineSemigroup {
    size_t ambient_dim;
    std::vector<ExponentVec> generators;

    AffineSemigroup(size_t dim, std::vector<ExponentVec> gens);

    bool operator==(const AffineSemigroup& o) const {
        return ambient_dim == o.ambient_dim && generators == o.generators;
    }
};

/// The semigroup ring Q[x^a : a in S]. The coefficient field is fixed to
/// the rationals; every graded piece is Q * x^h or zero, so all graded
/// computations reduce to the semigroup.
struct MonomialAlgebra {
    AffineSemigroup semigroup;

    explicit MonomialAlgebra(AffineSemigroup s) : semigroup(std::move(s)) {}

    size_t dim() const { return semigroup.ambient_dim; }
    const std::vector<ExponentVec>& gens() const { return semigroup.generators; }

    bool operator==(const MonomialAlgebra& o) const { return semigroup == o.semigroup; }
};

/// Membership of every point of [0, bound] at once, by the same dynamic
/// program contains() runs for a single point. Queries outside the box
/// are a caller bug except for negative coordinates, which are simply
/// not in N^d.
class MembershipTable {
public:
    MembershipTable(const AffineSemigroup& s, ExponentVec bound);

    bool at(const ExponentVec& v) const;
    const ExponentVec& bound() const { return bound_; }

private:
    ExponentVec bound_;
    std::vector<char> in_;
};

/// Whether v is a nonnegative integer combination of the generators,
/// decided by dynamic programming over the box [0, v].
bool contains(const AffineSemigroup& s, const ExponentVec& v);

/// The unique minimal generating set: the generators that are not sums
/// of two nonzero semigroup elements. The semigroup itself is unchanged.
AffineSemigroup minimize_generators(const AffineSemigroup& s);

struct ModuleGenerators {
    std::vector<ExponentVec> gens;  // lex ascending, 0 excluded (the unit is implicit)
    bool complete;
};

/// Monomial generators of T as an R-module inside the box: the m in S_T
/// with m - g outside S_T for every generator g of S_R. The complete flag
/// is a certificate only for ambient dimension 1 (conductor bound); in
/// higher dimension it is the documented shell heuristic: no generator
/// found within max-generator-width of the box boundary.
ModuleGenerators module_generators_over(const MonomialAlgebra& rsub, const MonomialAlgebra& tsup,
                                        const DegreeBox& box);

}  // namespace strictclose
