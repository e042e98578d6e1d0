#include "strictclose/stanley_reisner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace strictclose {

SimplicialComplex::SimplicialComplex(size_t n, std::vector<std::set<int>> fs)
    : n_vertices(n), facets(std::move(fs)) {
    if (n_vertices == 0) throw std::invalid_argument("complex: vertex count must be positive");
    if (facets.empty()) throw std::invalid_argument("complex: facet list must be nonempty");
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("complex: facets must be nonempty");
        for (int v : f)
            if (v < 1 || static_cast<size_t>(v) > n_vertices)
                throw std::invalid_argument("complex: facet vertex out of range");
    }
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j) {
            if (i == j) continue;
            if (std::includes(facets[j].begin(), facets[j].end(),
                              facets[i].begin(), facets[i].end()))
                throw std::invalid_argument("complex: facet list is not an antichain");
        }
}

std::vector<FacetPrime> minimal_primes(const SimplicialComplex& cx) {
    std::vector<FacetPrime> out;
    for (size_t i = 0; i < cx.facets.size(); ++i) {
        FacetPrime p;
        p.index = i + 1;
        for (int v = 1; v <= static_cast<int>(cx.n_vertices); ++v)
            if (!cx.facets[i].count(v)) p.variables.insert(v);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

bool subset_of(const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<size_t> gamma_of_support(const SimplicialComplex& cx, const std::set<int>& u) {
    std::vector<size_t> gamma;
    for (size_t i = 0; i < cx.facets.size(); ++i)
        if (subset_of(u, cx.facets[i])) gamma.push_back(i);
    return gamma;
}

SupportComponent sr_component(const SimplicialComplex& cx, const std::set<int>& u) {
    if (u.empty()) throw std::invalid_argument("support class: support must be nonempty");
    for (int v : u)
        if (v < 1 || static_cast<size_t>(v) > cx.n_vertices)
            throw std::invalid_argument("support class: vertex out of range");

    auto gamma = gamma_of_support(cx, u);
    if (gamma.empty()) return SupportComponent{0, 0};

    // Union-find over gamma; the edge (i, j) carries the constraint
    // c_i = c_j, present exactly when U lies in F_i /\ F_j.
    std::vector<size_t> parent(gamma.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t a = 0; a < gamma.size(); ++a)
        for (size_t b = a + 1; b < gamma.size(); ++b) {
            std::set<int> meet;
            std::set_intersection(cx.facets[gamma[a]].begin(), cx.facets[gamma[a]].end(),
                                  cx.facets[gamma[b]].begin(), cx.facets[gamma[b]].end(),
                                  std::inserter(meet, meet.begin()));
            if (subset_of(u, meet)) parent[find(a)] = find(b);
        }
    int components = 0;
    for (size_t x = 0; x < gamma.size(); ++x)
        if (find(x) == x) ++components;

    if (components > 1)
        throw std::logic_error("support class: gluing constraints failed to connect gamma(U)");
    return SupportComponent{components, 1};
}

bool sr_is_strictly_closed(const SimplicialComplex& cx) {
    if (cx.n_vertices > 25)
        throw std::invalid_argument("support sweep: too many vertices for an exhaustive sweep");
    const unsigned long long all = 1ULL << cx.n_vertices;
    for (unsigned long long mask = 1; mask < all; ++mask) {
        std::set<int> u;
        for (size_t v = 0; v < cx.n_vertices; ++v)
            if (mask & (1ULL << v)) u.insert(static_cast<int>(v + 1));
        auto comp = sr_component(cx, u);
        if (comp.dim_star != comp.dim_ring) return false;
    }
    return true;
}

}  // namespace strictclose
