#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "strictclose/cli.hpp"

using namespace strictclose;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/strictclose_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kExampleAlg = temp_file("ex26.alg",
                                          "ambient 2\ngenerators\n5 0\n1 4\n0 5\nend\n");
const std::string kR1Alg = temp_file("r1.alg",
                                     "ambient 2\ngenerators\n2 0\n1 1\n0 2\n3 0\n0 3\nend\n");
const std::string kR2Alg = temp_file("r2.alg",
                                     "ambient 2\ngenerators\n2 0\n2 1\n0 2\n3 0\n0 3\nend\n");
const std::string kPath3Cx = temp_file("path3.cx", "vertices 3\nfacets\n1 2\n2 3\nend\n");

}  // namespace

TEST_CASE("closure reproduces the worked example") {
    auto res = run({"closure", kExampleAlg, "--box", "24,24"});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "0 5\n"
          "1 4\n"
          "4 11\n"
          "5 0\n"
          "8 7\n"
          "9 6\n"
          "complete: yes\n");
}

TEST_CASE("closure accepts an explicit extension") {
    auto rbar = temp_file("rbar.alg",
                          "ambient 2\ngenerators\n5 0\n4 1\n3 2\n2 3\n1 4\n0 5\nend\n");
    auto tmid = temp_file("tmid.alg",
                          "ambient 2\ngenerators\n5 0\n13 7\n9 6\n4 11\n1 4\n0 5\nend\n");
    auto direct = run({"closure", kExampleAlg, "--in", rbar, "--box", "24,24"});
    auto via_t = run({"closure", tmid, "--in", rbar, "--box", "24,24"});
    CHECK(direct.code == 0);
    CHECK(direct.out == via_t.out);
}

TEST_CASE("normalize lists the saturation generators") {
    auto res = run({"normalize", kExampleAlg, "--box", "20,20"});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "0 5\n"
          "1 4\n"
          "2 3\n"
          "3 2\n"
          "4 1\n"
          "5 0\n"
          "complete: yes\n");
}

TEST_CASE("check-closed on both remark rings") {
    auto closed = run({"check-closed", kR1Alg, "--box", "12,12"});
    CHECK(closed.code == 0);
    CHECK(closed.out == "strictly closed\ncomplete: yes\n");

    auto open = run({"check-closed", kExampleAlg, "--box", "24,24"});
    CHECK(open.code == 1);
    CHECK(open.out == "not strictly closed\nwitness: (4,11)\ncomplete: yes\n");
}

TEST_CASE("check-weak-arf prints the remark witness") {
    auto res = run({"check-weak-arf", kR2Alg, "--box", "6,6"});
    CHECK(res.code == 1);
    CHECK(res.out == "witness: (2,0) (3,0) (2,1)\n");

    auto none = run({"check-weak-arf", kR1Alg, "--box", "6,6"});
    CHECK(none.code == 0);
    CHECK(none.out.find("no witness in box") == 0);
}

TEST_CASE("check-weak-arf uses the certified path in dimension one") {
    auto two_five = temp_file("n25.alg", "ambient 1\ngenerators\n2\n5\nend\n");
    auto res = run({"check-weak-arf", two_five});
    CHECK(res.code == 0);
    CHECK(res.out == "weakly arf\n");

    auto three_five = temp_file("n35.alg", "ambient 1\ngenerators\n3\n5\nend\n");
    res = run({"check-weak-arf", three_five});
    CHECK(res.code == 1);
    CHECK(res.out == "witness: (3) (5) (5)\n");
}

TEST_CASE("check-criterion") {
    auto v = temp_file("v41.alg", "ambient 2\ngenerators\n4 1\nend\n");
    auto res = run({"check-criterion", kExampleAlg, "--adjoin", v});
    CHECK(res.code == 1);
    CHECK(res.out == "criterion fails: (4,1) (4,1)\n");

    auto units = temp_file("units.alg", "ambient 2\ngenerators\n1 0\n0 1\nend\n");
    res = run({"check-criterion", kR1Alg, "--adjoin", units});
    CHECK(res.code == 0);
    CHECK(res.out == "criterion holds\n");
}

TEST_CASE("conductor criterion command") {
    auto cusp = temp_file("t345.alg", "ambient 1\ngenerators\n3\n4\n5\nend\n");
    auto res = run({"conductor", cusp, "--box", "10"});
    CHECK(res.code == 0);
    CHECK(res.out == "conductor criterion holds\n");

    res = run({"conductor", kExampleAlg, "--box", "20,20"});
    CHECK(res.code == 1);
    CHECK(res.out == "conductor criterion fails: (0,5) (3,2)\n");
}

TEST_CASE("sr-check") {
    auto res = run({"sr-check", kPath3Cx});
    CHECK(res.code == 0);
    CHECK(res.out == "strictly closed\n");
}

TEST_CASE("rees emits a parseable algebra file") {
    auto ideal = temp_file("ideal.alg", "ambient 2\ngenerators\n3 0\n1 4\n0 5\nend\n");
    auto res = run({"rees", ideal});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "ambient 3\n"
          "generators\n"
          "0 1 0\n"
          "0 5 1\n"
          "1 0 0\n"
          "1 4 1\n"
          "3 0 1\n"
          "end\n");
}

TEST_CASE("build emits the remark ring") {
    auto ground = temp_file("ground.alg", "ambient 2\ngenerators\nend\n");
    auto units = temp_file("units2.alg", "ambient 2\ngenerators\n1 0\n0 1\nend\n");
    auto res = run({"build", ground, "--adjoin", units});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "ambient 2\n"
          "generators\n"
          "0 2\n"
          "0 3\n"
          "1 1\n"
          "2 0\n"
          "3 0\n"
          "end\n");
}

TEST_CASE("identical inputs give byte-identical reports") {
    auto a = run({"closure", kExampleAlg, "--box", "24,24"});
    auto b = run({"closure", kExampleAlg, "--box", "24,24"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("an undersized box reports indeterminate with exit 2") {
    auto res = run({"normalize", kExampleAlg, "--box", "3,3"});
    CHECK(res.code == 2);
    CHECK(res.out == "2 3\n3 2\ncomplete: no\n");

    auto closure = run({"closure", kExampleAlg, "--box", "3,3"});
    CHECK(closure.code == 2);
    CHECK(closure.out.find("complete: no") != std::string::npos);
}

TEST_CASE("help exits 0") {
    auto res = run({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("normalize") != std::string::npos);
}

TEST_CASE("usage and parse failures exit 3") {
    CHECK(run({"frobnicate", kExampleAlg}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"closure", "/tmp/strictclose_test_missing.alg"}).code == 3);
    auto bad = temp_file("bad.alg", "ambient 2\ngenerators\n5 -1\nend\n");
    auto res = run({"closure", bad});
    CHECK(res.code == 3);
    CHECK(res.err.find("line 3") != std::string::npos);
    CHECK(run({"closure", kExampleAlg, "--box", "24"}).code == 3);
    CHECK(run({"closure", kExampleAlg, "--box", "a,b"}).code == 3);
}

TEST_CASE("the installed binary honors the exit-code contract") {
    std::string cli = STRICTCLOSE_CLI_PATH;
    auto status_of = [&](const std::string& cmdline) {
        std::string full = cli + " " + cmdline + " >/dev/null 2>&1";
        int raw = std::system(full.c_str());
        REQUIRE(raw != -1);
        return WEXITSTATUS(raw);
    };
    CHECK(status_of("check-closed " + kR1Alg + " --box 12,12") == 0);
    CHECK(status_of("check-weak-arf " + kR2Alg + " --box 6,6") == 1);
    CHECK(status_of("sr-check " + kPath3Cx) == 0);
    CHECK(status_of("nonsense") == 3);
}
