#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strictclose/strict_closure.hpp"
#include "strictclose/weakly_arf.hpp"

using namespace strictclose;

namespace {

MonomialAlgebra alg(size_t d, std::vector<ExponentVec> gens) {
    return MonomialAlgebra(AffineSemigroup(d, std::move(gens)));
}

const MonomialAlgebra kR1 = alg(2, {{2, 0}, {1, 1}, {0, 2}, {3, 0}, {0, 3}});
const MonomialAlgebra kR2 = alg(2, {{2, 0}, {2, 1}, {0, 2}, {3, 0}, {0, 3}});

}  // namespace

TEST_CASE("the remark pair: R2 has a witness, R1 does not") {
    auto w = monomial_weak_arf(kR2, DegreeBox({6, 6}));
    REQUIRE(w.has_value());
    CHECK(w->a == ExponentVec{2, 0});
    CHECK(w->b == ExponentVec{3, 0});
    CHECK(w->c == ExponentVec{2, 1});
    CHECK(verify_witness(kR2, *w));

    CHECK_FALSE(monomial_weak_arf(kR1, DegreeBox({6, 6})).has_value());
}

TEST_CASE("the polynomial ring has no witness") {
    CHECK_FALSE(monomial_weak_arf(alg(2, {{1, 0}, {0, 1}}), DegreeBox({5, 5})).has_value());
}

TEST_CASE("returned witnesses survive independent re-verification") {
    for (auto r : {kR2, alg(2, {{2, 0}, {3, 1}, {0, 2}}), alg(1, {{3}, {5}})}) {
        ExponentVec bound(r.dim(), 8);
        auto w = monomial_weak_arf(r, DegreeBox(bound));
        if (w) CHECK(verify_witness(r, *w));
    }
}

TEST_CASE("numerical weak arf on <2,5> and <3,5>") {
    auto ok = numerical_weak_arf(AffineSemigroup(1, {{2}, {5}}));
    CHECK(ok.weakly_arf);
    CHECK(ok.conductor == 4);

    auto bad = numerical_weak_arf(AffineSemigroup(1, {{3}, {5}}));
    CHECK_FALSE(bad.weakly_arf);
    CHECK(bad.conductor == 8);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == std::array<long long, 3>{3, 5, 5});
    // 3, 5, 5 really is a violation: 5-3 and 5-3 are integral, 7 is a gap.
    CHECK_FALSE(contains(AffineSemigroup(1, {{3}, {5}}), {7}));
}

TEST_CASE("numerical weak arf trivia") {
    CHECK(numerical_weak_arf(AffineSemigroup(1, {{1}})).weakly_arf);
    CHECK(numerical_weak_arf(AffineSemigroup(1, {})).weakly_arf);
    // Rescaling by the gcd does not change the answer; witnesses scale.
    auto scaled = numerical_weak_arf(AffineSemigroup(1, {{6}, {10}}));
    CHECK_FALSE(scaled.weakly_arf);
    CHECK(*scaled.witness == std::array<long long, 3>{6, 10, 10});
    CHECK_THROWS_AS(numerical_weak_arf(AffineSemigroup(2, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("numerical decision agrees with the box search in dimension one") {
    for (std::vector<ExponentVec> gens :
         {std::vector<ExponentVec>{{2}, {5}}, {{3}, {5}}, {{3}, {4}}, {{4}, {5}, {6}},
          {{2}, {3}}, {{5}, {7}, {9}}, {{4}, {6}, {9}}}) {
        AffineSemigroup s(1, gens);
        auto certified = numerical_weak_arf(s);
        long long c = std::max<long long>(1, 3 * certified.conductor);
        auto searched = monomial_weak_arf(MonomialAlgebra(s), DegreeBox({c}));
        CHECK(certified.weakly_arf == !searched.has_value());
    }
}

TEST_CASE("conductor criterion holds for t^3, t^4, t^5") {
    auto res = conductor_criterion(alg(1, {{3}, {4}, {5}}), DegreeBox({10}));
    CHECK(res.verdict == Verdict::holds);
}

TEST_CASE("conductor criterion fails for the running example") {
    auto res = conductor_criterion(alg(2, {{5, 0}, {1, 4}, {0, 5}}), DegreeBox({20, 20}));
    REQUIRE(res.verdict == Verdict::fails);
    REQUIRE(res.failure.has_value());
    auto [g, u] = *res.failure;
    // Any reported pair must actually violate the criterion.
    CHECK_FALSE(contains(AffineSemigroup(2, {{5, 0}, {1, 4}, {0, 5}}), add(g, u)));
}

TEST_CASE("conductor criterion on an integrally closed ring is vacuous") {
    auto res = conductor_criterion(alg(2, {{1, 0}, {0, 1}}), DegreeBox({6, 6}));
    CHECK(res.verdict == Verdict::holds);
}

TEST_CASE("conductor criterion certifies no witness") {
    std::vector<MonomialAlgebra> cases = {alg(1, {{3}, {4}, {5}}), alg(1, {{4}, {5}, {6}, {7}}),
                                          alg(2, {{1, 0}, {0, 1}})};
    for (const auto& r : cases) {
        ExponentVec bound(r.dim(), 12);
        auto res = conductor_criterion(r, DegreeBox(bound));
        if (res.verdict == Verdict::holds)
            CHECK_FALSE(monomial_weak_arf(r, DegreeBox(bound)).has_value());
    }
}

TEST_CASE("strictly closed rings have no monomial witness") {
    std::vector<MonomialAlgebra> cases = {kR1, alg(2, {{3, 0}, {1, 2}, {0, 3}}),
                                          alg(2, {{1, 0}, {0, 1}})};
    for (const auto& r : cases) {
        REQUIRE(is_strictly_closed(r, DegreeBox({12, 12})) == Verdict::holds);
        CHECK_FALSE(monomial_weak_arf(r, DegreeBox({8, 8})).has_value());
    }
}
