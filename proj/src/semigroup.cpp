#include "strictclose/semigroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "strictclose/normalization.hpp"

namespace strictclose {

AffineSemigroup::AffineSemigroup(size_t dim, std::vector<ExponentVec> gens)
    : ambient_dim(dim), generators(std::move(gens)) {
    if (ambient_dim == 0) throw std::invalid_argument("semigroup: ambient dimension must be positive");
    for (const auto& g : generators) {
        if (g.size() != ambient_dim)
            throw std::invalid_argument("semigroup: generator length does not match ambient dimension");
        if (!is_nonnegative(g))
            throw std::invalid_argument("semigroup: generators must be nonnegative");
        if (is_zero(g))
            throw std::invalid_argument("semigroup: generators must be nonzero");
    }
    std::sort(generators.begin(), generators.end(), lex_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
}

MembershipTable::MembershipTable(const AffineSemigroup& s, ExponentVec bound) : bound_(std::move(bound)) {
    if (bound_.size() != s.ambient_dim)
        throw std::invalid_argument("membership table: bound length does not match ambient dimension");
    in_.assign(box_cell_count(bound_), 0);
    in_[0] = 1;
    ExponentVec q(s.ambient_dim);
    for_each_point(bound_, [&](const ExponentVec& p) {
        if (in_[box_index(bound_, p)]) return;
        for (const auto& g : s.generators) {
            bool ok = true;
            for (size_t i = 0; i < q.size(); ++i) {
                q[i] = p[i] - g[i];
                if (q[i] < 0) { ok = false; break; }
            }
            if (ok && in_[box_index(bound_, q)]) {
                in_[box_index(bound_, p)] = 1;
                return;
            }
        }
    });
}

bool MembershipTable::at(const ExponentVec& v) const {
    if (v.size() != bound_.size())
        throw std::invalid_argument("membership table: query length mismatch");
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (v[i] > bound_[i]) throw std::logic_error("membership table: query outside the table box");
    }
    return in_[box_index(bound_, v)] != 0;
}

bool contains(const AffineSemigroup& s, const ExponentVec& v) {
    if (v.size() != s.ambient_dim)
        throw std::invalid_argument("contains: vector length does not match ambient dimension");
    if (!is_nonnegative(v)) return false;
    return MembershipTable(s, v).at(v);
}

AffineSemigroup minimize_generators(const AffineSemigroup& s) {
    // g is redundant exactly when g = g' + s' with g' a generator and
    // s' a nonzero semigroup element.
    std::vector<ExponentVec> kept;
    for (const auto& g : s.generators) {
        bool redundant = false;
        for (const auto& gp : s.generators) {
            ExponentVec rest = sub(g, gp);
            if (!is_nonnegative(rest) || is_zero(rest)) continue;
            if (contains(s, rest)) { redundant = true; break; }
        }
        if (!redundant) kept.push_back(g);
    }
    return AffineSemigroup(s.ambient_dim, std::move(kept));
}

ModuleGenerators module_generators_over(const MonomialAlgebra& rsub, const MonomialAlgebra& tsup,
                                        const DegreeBox& box) {
    const auto& sr = rsub.semigroup;
    const auto& st = tsup.semigroup;
    if (sr.ambient_dim != st.ambient_dim)
        throw std::invalid_argument("module generators: ambient dimensions differ");
    if (box.dim() != st.ambient_dim)
        throw std::invalid_argument("module generators: box dimension mismatch");
    for (const auto& g : sr.generators)
        if (!contains(st, g))
            throw std::invalid_argument("module generators: base ring is not contained in the extension");

    MembershipTable t_table(st, box.bound);
    std::vector<ExponentVec> out;
    for_each_point(box.bound, [&](const ExponentVec& m) {
        if (is_zero(m) || !t_table.at(m)) return;
        for (const auto& g : sr.generators) {
            ExponentVec q = sub(m, g);
            if (is_nonnegative(q) && t_table.at(q)) return;
        }
        out.push_back(m);
    });
    std::sort(out.begin(), out.end(), lex_less);

    bool complete;
    if (sr.generators.empty()) {
        // Over the ground field the extension is module-finite only when trivial.
        complete = st.generators.empty();
    } else if (st.ambient_dim == 1) {
        // Exact: every module generator m satisfies m < min(S_R gens) + C,
        // where C is the absolute conductor of S_T (m - g >= C and
        // divisible by gcd(S_T) forces m - g into S_T).
        long long min_r = sr.generators.empty() ? 0 : sr.generators.front()[0];
        for (const auto& g : sr.generators) min_r = std::min(min_r, g[0]);
        complete = box.bound[0] + 1 >= min_r + absolute_conductor(st);
    } else {
        ExponentVec width(st.ambient_dim, 1);
        for (const auto& g : sr.generators)
            for (size_t i = 0; i < width.size(); ++i) width[i] = std::max(width[i], g[i]);
        for (const auto& g : st.generators)
            for (size_t i = 0; i < width.size(); ++i) width[i] = std::max(width[i], g[i]);
        complete = true;
        for (const auto& m : out)
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] > box.bound[i] - width[i]) complete = false;
    }
    return ModuleGenerators{std::move(out), complete};
}

}  // namespace strictclose
