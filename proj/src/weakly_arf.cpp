#include "strictclose/weakly_arf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strictclose {

std::optional<WeakArfWitness> monomial_weak_arf(const MonomialAlgebra& r, const DegreeBox& box) {
    const auto& s = r.semigroup;
    if (box.dim() != s.ambient_dim)
        throw std::invalid_argument("weak arf search: box dimension mismatch");
    if (s.generators.empty()) return std::nullopt;

    // b + c - a can reach twice the bound, so membership is tabulated on
    // the doubled box; saturation of differences stays inside the box.
    ExponentVec doubled(box.bound);
    for (auto& x : doubled) x *= 2;
    MembershipTable member(s, doubled);

    std::vector<ExponentVec> elems;
    for_each_point(box.bound, [&](const ExponentVec& p) {
        if (member.at(p)) elems.push_back(p);
    });
    std::sort(elems.begin(), elems.end(), graded_order_less);

    SaturationTester sat(s);
    std::vector<char> sat_table(box_cell_count(box.bound), 0);
    for_each_point(box.bound, [&](const ExponentVec& p) {
        if (sat.contains(p)) sat_table[box_index(box.bound, p)] = 1;
    });
    auto integral_diff = [&](const ExponentVec& x, const ExponentVec& base) {
        ExponentVec d = sub(x, base);
        return is_nonnegative(d) && sat_table[box_index(box.bound, d)] != 0;
    };

    for (const auto& a : elems) {
        if (is_zero(a)) continue;  // b + c - 0 is a semigroup sum, never a witness
        for (const auto& b : elems) {
            if (!integral_diff(b, a)) continue;
            for (const auto& c : elems) {
                if (!integral_diff(c, a)) continue;
                ExponentVec y = sub(add(b, c), a);
                if (!member.at(y)) return WeakArfWitness{a, b, c};
            }
        }
    }
    return std::nullopt;
}

bool verify_witness(const MonomialAlgebra& r, const WeakArfWitness& w) {
    const auto& s = r.semigroup;
    if (!contains(s, w.a) || !contains(s, w.b) || !contains(s, w.c)) return false;
    ExponentVec ba = sub(w.b, w.a), ca = sub(w.c, w.a);
    if (!is_nonnegative(ba) || !is_nonnegative(ca)) return false;
    if (!saturation_contains(s, ba) || !saturation_contains(s, ca)) return false;
    return !contains(s, sub(add(w.b, w.c), w.a));
}

NumericalWeakArfResult numerical_weak_arf(const AffineSemigroup& s) {
    if (s.ambient_dim != 1)
        throw std::invalid_argument("numerical weak arf: ambient dimension must be 1");
    if (s.generators.empty())
        return NumericalWeakArfResult{true, std::nullopt, 0};  // the ground field

    long long g = 0;
    for (const auto& v : s.generators) g = std::gcd(g, v[0]);
    std::vector<ExponentVec> rescaled;
    for (const auto& v : s.generators) rescaled.push_back({v[0] / g});
    AffineSemigroup sr(1, std::move(rescaled));

    long long c = numerical_conductor(sr);
    if (c == 0) return NumericalWeakArfResult{true, std::nullopt, 0};  // saturated

    // Membership table to 2C: a witness needs b, c < C (anything at or
    // above the conductor keeps b + c - a there too), so sums stay below 2C.
    std::vector<char> in(2 * c, 0);
    {
        MembershipTable t(sr, {2 * c - 1});
        for (long long x = 0; x < 2 * c; ++x)
            in[x] = t.at({x});
    }
    for (long long a = 1; a < c; ++a) {
        if (!in[a]) continue;
        for (long long b = a; b < c; ++b) {
            if (!in[b]) continue;
            for (long long cc = a; cc < c; ++cc) {
                if (!in[cc]) continue;
                if (!in[b + cc - a])
                    return NumericalWeakArfResult{
                        false, std::array<long long, 3>{a * g, b * g, cc * g}, c};
            }
        }
    }
    return NumericalWeakArfResult{true, std::nullopt, c};
}

ConductorCriterion conductor_criterion(const MonomialAlgebra& r, const DegreeBox& box) {
    auto norm = normalization_generators(r.semigroup, box);
    if (!norm.complete)
        return ConductorCriterion{Verdict::indeterminate, std::nullopt};
    MonomialAlgebra t{AffineSemigroup(r.dim(), norm.generators)};
    for (const auto& g : r.gens())
        if (!contains(t.semigroup, g))  // the truncated normalization misses generators
            return ConductorCriterion{Verdict::indeterminate, std::nullopt};
    auto mg = module_generators_over(r, t, box);
    if (!mg.complete)
        return ConductorCriterion{Verdict::indeterminate, std::nullopt};

    auto minimal = minimize_generators(r.semigroup);
    for (const auto& g : minimal.generators)
        for (const auto& u : mg.gens)
            if (!contains(r.semigroup, add(g, u)))
                return ConductorCriterion{Verdict::fails, std::make_pair(g, u)};
    return ConductorCriterion{Verdict::holds, std::nullopt};
}

}  // namespace strictclose
