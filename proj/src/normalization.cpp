#include "strictclose/normalization.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strictclose {

LatticeBasis group_lattice(const AffineSemigroup& s) {
    if (s.generators.empty())
        throw std::invalid_argument("group lattice: semigroup has no generators");
    IntMat rows;
    for (const auto& g : s.generators) rows.emplace_back(g.begin(), g.end());
    return LatticeBasis{hermite_normal_form(std::move(rows))};
}

namespace {

/// One constraint over (x_0..x_{r-1}, lam_0..lam_{m-1}):
/// coeffs . vars >= 0, or = 0 when eq is set.
struct FmRow {
    std::vector<long long> coeffs;
    bool eq;

    bool operator<(const FmRow& o) const {
        if (eq != o.eq) return eq < o.eq;
        return coeffs < o.coeffs;
    }
};

bool all_zero(const std::vector<long long>& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

/// t := |e[v]| * t - sign(e[v]) * t[v] * e. The multiplier on t is
/// positive, so inequality direction is preserved.
FmRow combine_with_equation(const FmRow& t, const FmRow& e, size_t v) {
    long long ev = e.coeffs[v];
    long long se = ev > 0 ? 1 : -1;
    FmRow out;
    out.eq = t.eq;
    out.coeffs.resize(t.coeffs.size());
    for (size_t j = 0; j < t.coeffs.size(); ++j)
        out.coeffs[j] = se * ev * t.coeffs[j] - se * t.coeffs[v] * e.coeffs[j];
    make_primitive(out.coeffs);
    return out;
}

/// Fourier-Motzkin: eliminate variable v from the inequality system.
std::vector<FmRow> fm_eliminate(std::vector<FmRow> rows, size_t v) {
    // Prefer substitution through an equation containing v.
    size_t eq_idx = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].eq && rows[i].coeffs[v] != 0 &&
            (eq_idx == rows.size() ||
             std::llabs(rows[i].coeffs[v]) < std::llabs(rows[eq_idx].coeffs[v])))
            eq_idx = i;

    std::vector<FmRow> out;
    if (eq_idx != rows.size()) {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == eq_idx) continue;
            FmRow r = rows[i].coeffs[v] != 0 ? combine_with_equation(rows[i], rows[eq_idx], v) : rows[i];
            if (!all_zero(r.coeffs)) out.push_back(std::move(r));
        }
    } else {
        std::vector<const FmRow*> pos, neg;
        for (const auto& r : rows) {
            if (r.coeffs[v] > 0) pos.push_back(&r);
            else if (r.coeffs[v] < 0) neg.push_back(&r);
            else if (!all_zero(r.coeffs)) out.push_back(r);
        }
        for (const auto* p : pos)
            for (const auto* n : neg) {
                FmRow r;
                r.eq = false;
                r.coeffs.resize(p->coeffs.size());
                for (size_t j = 0; j < r.coeffs.size(); ++j)
                    r.coeffs[j] = -n->coeffs[v] * p->coeffs[j] + p->coeffs[v] * n->coeffs[j];
                make_primitive(r.coeffs);
                if (!all_zero(r.coeffs)) out.push_back(std::move(r));
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FmRow& a, const FmRow& b) { return !(a < b) && !(b < a); }),
              out.end());
    return out;
}

/// Facet normals, in lattice coordinates, of the full-dimensional cone
/// spanned by the given coordinate vectors: project
/// { (x, lam) : x = sum lam_i c_i, lam >= 0 } onto x and keep the
/// inequalities whose tight generator set has rank r - 1.
IntMat lattice_cone_facets(const IntMat& coord_gens, size_t r) {
    const size_t m = coord_gens.size();
    std::vector<FmRow> rows;
    for (size_t t = 0; t < r; ++t) {
        FmRow e;
        e.eq = true;
        e.coeffs.assign(r + m, 0);
        e.coeffs[t] = 1;
        for (size_t i = 0; i < m; ++i) e.coeffs[r + i] = -coord_gens[i][t];
        rows.push_back(std::move(e));
    }
    for (size_t i = 0; i < m; ++i) {
        FmRow q;
        q.eq = false;
        q.coeffs.assign(r + m, 0);
        q.coeffs[r + i] = 1;
        rows.push_back(std::move(q));
    }
    for (size_t v = r + m; v-- > r;) rows = fm_eliminate(std::move(rows), v);

    std::set<std::vector<long long>> candidates;
    for (auto& row : rows) {
        std::vector<long long> n(row.coeffs.begin(), row.coeffs.begin() + r);
        if (all_zero(n)) continue;
        make_primitive(n);
        candidates.insert(n);
        if (row.eq) {
            for (auto& x : n) x = -x;
            candidates.insert(n);
        }
    }

    IntMat facets;
    for (const auto& n : candidates) {
        IntMat tight;
        bool valid = true;
        for (const auto& c : coord_gens) {
            long long dot = 0;
            for (size_t j = 0; j < r; ++j) dot += n[j] * c[j];
            if (dot < 0) { valid = false; break; }
            if (dot == 0) tight.push_back(c);
        }
        if (valid && matrix_rank(tight) == r - 1) facets.push_back(n);
    }
    return facets;
}

/// Generators rewritten in the coordinates of the lattice basis.
IntMat lattice_coordinates(const AffineSemigroup& s, const LatticeBasis& basis) {
    IntMat coords;
    for (const auto& g : s.generators) {
        auto c = lattice_solve(basis.rows, g);
        assert(c);
        coords.push_back(*c);
    }
    return coords;
}

}  // namespace

SaturationTester::SaturationTester(const AffineSemigroup& s) : lattice_(group_lattice(s)) {
    lattice_facets_ = lattice_cone_facets(lattice_coordinates(s, lattice_), lattice_.rows.size());
}

bool SaturationTester::contains(const ExponentVec& v) const {
    auto c = lattice_solve(lattice_.rows, v);
    if (!c) return false;
    for (const auto& n : lattice_facets_) {
        long long dot = 0;
        for (size_t j = 0; j < c->size(); ++j) dot += n[j] * (*c)[j];
        if (dot < 0) return false;
    }
    return true;
}

ConeInequalities cone_facets(const AffineSemigroup& s) {
    SaturationTester tester(s);
    const auto& basis = tester.lattice().rows;
    ConeInequalities out;
    for (const auto& nf : tester.lattice_facets())
        out.normals.push_back(lift_from_lattice_coords(basis, nf));
    // The span of the semigroup, as opposite inequality pairs.
    for (const auto& e : kernel_basis(basis)) {
        out.normals.push_back(e);
        auto neg = e;
        for (auto& x : neg) x = -x;
        out.normals.push_back(std::move(neg));
    }
    std::sort(out.normals.begin(), out.normals.end());
    return out;
}

bool saturation_contains(const AffineSemigroup& s, const ExponentVec& v) {
    if (v.size() != s.ambient_dim)
        throw std::invalid_argument("saturation: vector length does not match ambient dimension");
    if (is_zero(v)) return true;
    if (s.generators.empty()) return false;
    return SaturationTester(s).contains(v);
}

long long numerical_conductor(const AffineSemigroup& s) {
    if (s.ambient_dim != 1)
        throw std::invalid_argument("conductor: ambient dimension must be 1");
    if (s.generators.empty())
        throw std::invalid_argument("conductor: semigroup has no generators");
    long long g = 0;
    for (const auto& v : s.generators) g = std::gcd(g, v[0]);
    std::vector<long long> gens;
    for (const auto& v : s.generators) gens.push_back(v[0] / g);
    long long m = *std::min_element(gens.begin(), gens.end());
    if (m == 1) return 0;

    // Round-robin relaxation: n[r] = least element of S congruent to r mod m.
    const long long kInf = 1LL << 60;
    std::vector<long long> least(m, kInf);
    least[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long long r = 0; r < m; ++r) {
            if (least[r] == kInf) continue;
            for (auto a : gens) {
                long long to = least[r] + a;
                if (to < least[to % m]) {
                    least[to % m] = to;
                    changed = true;
                }
            }
        }
    }
    long long frobenius = *std::max_element(least.begin(), least.end()) - m;
    return frobenius + 1;
}

long long absolute_conductor(const AffineSemigroup& s) {
    if (s.generators.empty())
        throw std::invalid_argument("conductor: semigroup has no generators");
    long long g = 0;
    for (const auto& v : s.generators) g = std::gcd(g, v[0]);
    return g * numerical_conductor(AffineSemigroup(
                   1, [&] {
                       std::vector<ExponentVec> gg;
                       for (const auto& v : s.generators) gg.push_back({v[0] / g});
                       return gg;
                   }()));
}

NormalizationResult normalization_generators(const AffineSemigroup& s, const DegreeBox& box) {
    if (box.dim() != s.ambient_dim)
        throw std::invalid_argument("normalization: box dimension mismatch");
    if (s.generators.empty()) return NormalizationResult{{}, true};

    if (s.ambient_dim == 1) {
        long long g = 0;
        for (const auto& v : s.generators) g = std::gcd(g, v[0]);
        NormalizationResult r;
        r.complete = g <= box.bound[0];
        if (r.complete) r.generators.push_back({g});
        return r;
    }

    SaturationTester tester(s);
    std::vector<ExponentVec> points;
    std::vector<char> in_sat(box_cell_count(box.bound), 0);
    for_each_point(box.bound, [&](const ExponentVec& p) {
        if (is_zero(p)) return;
        if (tester.contains(p)) {
            in_sat[box_index(box.bound, p)] = 1;
            points.push_back(p);
        }
    });

    // Atoms: saturation points that are not sums of two nonzero ones.
    // Both summands of any decomposition stay inside the box.
    std::vector<ExponentVec> atoms;
    for (const auto& v : points) {
        bool atom = true;
        for (const auto& a : points) {
            ExponentVec b = sub(v, a);
            if (!is_nonnegative(b) || is_zero(b)) continue;
            if (in_sat[box_index(box.bound, b)]) { atom = false; break; }
        }
        if (atom) atoms.push_back(v);
    }
    std::sort(atoms.begin(), atoms.end(), lex_less);

    ExponentVec width(s.ambient_dim, 1);
    for (const auto& g : s.generators)
        for (size_t i = 0; i < width.size(); ++i) width[i] = std::max(width[i], g[i]);
    bool complete = true;
    for (const auto& a : atoms)
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > box.bound[i] - width[i]) complete = false;
    return NormalizationResult{std::move(atoms), complete};
}

}  // namespace strictclose
