#pragma once

#include <set>
#include <vector>

#include "strictclose/exponent.hpp"

namespace strictclose {

/// A simplicial complex given by its facets (an antichain of nonempty
/// vertex subsets of {1..n}). Determines the face ring via the minimal
/// primes P_i = (X_a : a not in F_i).
struct SimplicialComplex {
    size_t n_vertices;
    std::vector<std::set<int>> facets;

    SimplicialComplex(size_t n, std::vector<std::set<int>> fs);
};

struct FacetPrime {
    size_t index;             // 1-based facet index
    std::set<int> variables;  // complement of the facet
};

std::vector<FacetPrime> minimal_primes(const SimplicialComplex& cx);

/// Facet indices whose facet contains the support U; the monomial X^h
/// with supp(h) = U survives in exactly these components of the
/// normalization.
std::vector<size_t> gamma_of_support(const SimplicialComplex& cx, const std::set<int>& u);

struct SupportComponent {
    int dim_star;  // solution space of the gluing constraints on gamma(U)
    int dim_ring;  // the graded piece of the ring itself: 1 iff gamma(U) nonempty
};

/// Gluing analysis at one support class: tuples (c_i) over gamma(U)
/// with c_i = c_j whenever U lies in F_i /\ F_j, counted by connected
/// components of that constraint graph. dim_star is always 0 or 1 here
/// (any two facets containing U share it), which the computation checks
/// rather than assumes.
SupportComponent sr_component(const SimplicialComplex& cx, const std::set<int>& u);

/// Whether the face ring equals its strict closure: the gluing dimension
/// matches the ring dimension at every nonempty support. Supports are
/// swept exhaustively, so the decision is complete, not box-bounded.
bool sr_is_strictly_closed(const SimplicialComplex& cx);

}  // namespace strictclose
