#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "strictclose/io.hpp"

using namespace strictclose;

namespace {

std::string example_file() {
    return "ambient 2\n"
           "generators\n"
           "5 0\n"
           "1 4\n"
           "0 5\n"
           "end\n";
}

bool message_mentions_line(const std::exception& e, int line) {
    return std::string(e.what()).find("line " + std::to_string(line)) != std::string::npos;
}

}  // namespace

TEST_CASE("parse the running example") {
    auto a = parse_algebra(example_file());
    CHECK(a.dim() == 2);
    CHECK(a.gens() == std::vector<ExponentVec>{{0, 5}, {1, 4}, {5, 0}});
}

TEST_CASE("comments and blank lines are ignored") {
    auto a = parse_algebra(
        "# the running example\n"
        "ambient 1   # one variable\n"
        "\n"
        "generators\n"
        "3\n"
        "  5  \n"
        "end\n");
    CHECK(a.gens() == std::vector<ExponentVec>{{3}, {5}});
}

TEST_CASE("parsing minimizes generators") {
    auto a = parse_algebra("ambient 2\ngenerators\n1 0\n0 1\n1 1\nend\n");
    CHECK(a.gens() == std::vector<ExponentVec>{{0, 1}, {1, 0}});
}

TEST_CASE("an empty generator section is the ground field") {
    auto a = parse_algebra("ambient 2\ngenerators\nend\n");
    CHECK(a.gens().empty());
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_algebra("ambient 2\ngenerators\n5 -1\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(message_mentions_line(e, 3));
    }
    try {
        parse_algebra("ambient 2\ngenerators\n5 0 0\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(message_mentions_line(e, 3));
    }
    CHECK_THROWS_AS(parse_algebra("ambient 0\ngenerators\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("generators\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("ambient 2\ngenerators\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("ambient 2\ngenerators\nx y\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("ambient 2\ngenerators\nend\nextra\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("ambient 2\ngenerators\n0 0\nend\n"), ParseError);
}

TEST_CASE("vector lists keep redundant rows") {
    auto v = parse_vector_list("ambient 2\ngenerators\n1 0\n0 1\n1 1\nend\n");
    CHECK(v.rows == std::vector<ExponentVec>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("parse a complex") {
    auto cx = parse_complex("vertices 3\nfacets\n1 2\n2 3\nend\n");
    CHECK(cx.n_vertices == 3);
    CHECK(cx.facets == std::vector<std::set<int>>{{1, 2}, {2, 3}});

    auto points = parse_complex("vertices 3\nfacets\n1\n2\n3\nend\n");
    CHECK(points.facets.size() == 3);
}

TEST_CASE("complex validation errors") {
    CHECK_THROWS_AS(parse_complex("vertices 3\nfacets\n1 2\n1\nend\n"), std::invalid_argument);
    try {
        parse_complex("vertices 3\nfacets\n1 4\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(message_mentions_line(e, 3));
    }
    CHECK_THROWS_AS(parse_complex("vertices 3\nfacets\n1 1\nend\n"), ParseError);
}

TEST_CASE("print then parse round-trips") {
    auto a = parse_algebra(example_file());
    CHECK(parse_algebra(print_algebra(a)) == a);

    // Randomized round-trip across dimensions 1..3.
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        size_t d = 1 + rng() % 3;
        std::vector<ExponentVec> gens;
        size_t count = 1 + rng() % 4;
        for (size_t i = 0; i < count; ++i) {
            ExponentVec g(d);
            bool zero = true;
            for (auto& x : g) {
                x = rng() % 7;
                if (x) zero = false;
            }
            if (zero) g[0] = 1;
            gens.push_back(std::move(g));
        }
        MonomialAlgebra a2(minimize_generators(AffineSemigroup(d, gens)));
        CHECK(parse_algebra(print_algebra(a2)) == a2);
    }
}
