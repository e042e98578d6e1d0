#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strictclose/normalization.hpp"
#include "strictclose/semigroup.hpp"

namespace strictclose {

/// Raised when x^h cannot be written over the listed module generators,
/// i.e. the truncated presentation misses a generator below h.
struct PresentationIncomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// T presented as an R-module: T = R*1 + sum_i R*x^{f_i}. Index 0 is the
/// implicit unit; module_gens holds f_1..f_n, lex ascending.
struct ModulePresentation {
    MonomialAlgebra base;       // R
    MonomialAlgebra extension;  // T
    std::vector<ExponentVec> module_gens;
    bool complete;

    size_t dim() const { return base.dim(); }

    /// Degree of slot i: 0 for the unit, f_i otherwise.
    ExponentVec slot_degree(size_t i) const {
        return i == 0 ? ExponentVec(dim(), 0) : module_gens[i - 1];
    }
};

/// A homogeneous element of T^(n+1): entry i is coeff * x^{degree - d_i} e_i.
/// Graded pieces are at most one-dimensional, so integer coefficients
/// suffice; the span tests downstream are still rational.
struct GradedVector {
    ExponentVec degree;
    std::map<size_t, long long> entries;
};

/// Basis of the degree-g piece of Ker(a |-> sum a_i x^{d_i}) over R:
/// difference vectors e_i - e_j over consecutive supported slots.
struct SyzygyBasisAtDegree {
    ExponentVec degree;
    std::vector<GradedVector> basis;
};

struct StrictClosureReport {
    MonomialAlgebra closure;              // R*, minimal generators
    std::vector<ExponentVec> new_degrees; // all of (S_{R*} \ S_R) /\ box, lex ascending
    bool complete;
};

ModulePresentation present(const MonomialAlgebra& r, const MonomialAlgebra& t, const DegreeBox& box);

/// Slots i with g - d_i in S_R, the support of the degree-g piece.
std::vector<size_t> syzygy_support(const ModulePresentation& p, const ExponentVec& g);

SyzygyBasisAtDegree syzygy_basis_at(const ModulePresentation& p, const ExponentVec& g);

/// The tensor condition x^h (x) 1 = 1 (x) x^h in T (x)_R T, decided by one
/// exact linear solve: write x^h over the module generators, form
/// v = x^h e_0 - sum a_i e_i, and test v against the T-span of the syzygy
/// bases at all degrees g <= h with h - g in S_T.
bool in_strict_closure(const ModulePresentation& p, const ExponentVec& h);

/// Same, but with the representation slot forced (0 = the unit route,
/// requires h in S_R; i >= 1 requires h - f_i in S_R). The verdict does
/// not depend on the choice; this entry point exists so tests can say so.
bool in_strict_closure_via(const ModulePresentation& p, const ExponentVec& h, size_t slot);

/// All representation slots valid for h, in slot order.
std::vector<size_t> representation_slots(const ModulePresentation& p, const ExponentVec& h);

StrictClosureReport strict_closure(const MonomialAlgebra& r, const MonomialAlgebra& t,
                                   const DegreeBox& box);

/// Strict closedness of R in its normalization, computed within the box.
/// Indeterminate when a completeness flag fails.
Verdict is_strictly_closed(const MonomialAlgebra& r, const DegreeBox& box);

/// Sufficient criterion: if x^(u+v) lies in R for all u, v in V (u = v
/// included), R is strictly closed in R[V] with no sweep needed.
bool criterion_pairwise_products(const MonomialAlgebra& r, const std::vector<ExponentVec>& v);

/// First pair u <= v (lex) with x^(u+v) outside R, if any.
std::optional<std::pair<ExponentVec, ExponentVec>> pairwise_product_violation(
    const MonomialAlgebra& r, const std::vector<ExponentVec>& v);

/// A[{fg : f,g in V}, {f^3 : f in V}]: strictly closed by construction,
/// with normalization A[V].
MonomialAlgebra build_cor23b(const MonomialAlgebra& a, const std::vector<ExponentVec>& v);

/// Rees algebra of the monomial ideal generated by ideal_gens inside the
/// polynomial ring on d variables, as a monomial algebra in d+1 variables
/// (last coordinate = t-degree).
MonomialAlgebra rees_algebra(size_t d, const std::vector<ExponentVec>& ideal_gens);

/// 2 x (componentwise max of normalization generators + max of R's
/// generators), the documented default sweep bound.
DegreeBox default_box(const MonomialAlgebra& r);

}  // namespace strictclose
