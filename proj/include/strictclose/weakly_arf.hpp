#pragma once

#include <array>
#include <optional>

#include "strictclose/normalization.hpp"
#include "strictclose/semigroup.hpp"

namespace strictclose {

/// A certified violation of the weak Arf condition: a, b, c lie in S_R,
/// b - a and c - a are integral (saturation members), but b + c - a is
/// not in S_R. In ring terms x = x^a, y = x^b, z = x^c with
/// y/x, z/x integral and yz/x outside R.
struct WeakArfWitness {
    ExponentVec a, b, c;
};

/// Exhaustive search over monomial triples in (S_R /\ box)^3, enumerated
/// by total degree and then lex-descending (the order monomials of one
/// degree are conventionally listed). A witness disproves the weak Arf
/// property; absence of one is a bounded report only, never a proof,
/// except in ambient dimension 1.
std::optional<WeakArfWitness> monomial_weak_arf(const MonomialAlgebra& r, const DegreeBox& box);

/// Re-checks the four membership claims of a witness from scratch.
bool verify_witness(const MonomialAlgebra& r, const WeakArfWitness& w);

struct NumericalWeakArfResult {
    bool weakly_arf;
    std::optional<std::array<long long, 3>> witness;  // (a, b, c) on the input scale
    long long conductor;                              // of the gcd-rescaled semigroup
};

/// Certified decision for a numerical semigroup (ambient dimension 1).
/// Generators are rescaled by their gcd first; triples above the
/// conductor cannot violate the condition, so the check is finite.
NumericalWeakArfResult numerical_weak_arf(const AffineSemigroup& s);

struct ConductorCriterion {
    Verdict verdict;
    std::optional<std::pair<ExponentVec, ExponentVec>> failure;  // (g, u) with g + u outside S_R
};

/// The maximal-ideal criterion: if g + u lies in S_R for every minimal
/// generator g of S_R and every module generator u of the normalization
/// over R, then R is weakly Arf. Indeterminate when a completeness flag
/// fails.
ConductorCriterion conductor_criterion(const MonomialAlgebra& r, const DegreeBox& box);

}  // namespace strictclose
