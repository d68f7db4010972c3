#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "bqc/invariant.hpp"
#include "bqc/registry.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

// stdout only unless with_err
Run run(const std::string& args, bool with_err = false, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string("\"") + BQC_CLI + "\" " + args + (with_err ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(BQC_FIXTURES) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify") {
    CHECK(run("verify --algebra trivial:3").code == 0);
    Run r = run("verify --algebra dihedral:3 --xset family --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(run("verify --algebra nonsense:1").code == 4);
}

TEST_CASE("type") {
    Run r = run("type --biquandle dihedral:3 --xset self");
    CHECK(r.code == 0);
    CHECK(r.out.find("type X = 2") != std::string::npos);
    CHECK(r.out.find("type X_Y = 2") != std::string::npos);
}

TEST_CASE("colorings") {
    Run r = run("colorings --diagram " + fixture("circle.json") + " --algebra trivial:3 --count-only");
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    Run l = run("colorings --diagram " + fixture("theta.json") + " --algebra dihedral:3 --limit 2");
    CHECK(l.code == 0);
    CHECK(l.out.find("colorings") != std::string::npos);
    Run b = run("colorings --diagram " + fixture("5_2.json") + " --algebra alexander:sl2z6-det-example --count-only", true,
                "BQC_NODE_BUDGET=100");
    CHECK(b.code == 3);
    CHECK(b.out.find("budget") != std::string::npos);
}

TEST_CASE("invariant text and json") {
    const std::string args = "invariant --diagram " + fixture("5_2.json") + " --algebra alexander:sl2z2-det --cocycle phi-det";
    Run r = run(args);
    CHECK(r.code == 0);
    bqc::AlgebraEntry A = bqc::make_algebra("alexander:sl2z2-det");
    CHECK(r.out == bqc::phi_invariant(bqc::Diagram::load(fixture("5_2.json")), *bqc::make_cocycle("phi-det", A)).text());
    Run j1 = run(args + " --json --jobs 2"), j2 = run(args + " --json --jobs 2");
    CHECK(j1.code == 0);
    // timing is reported but the rest is byte identical
    auto a = nlohmann::json::parse(j1.out), b = nlohmann::json::parse(j2.out);
    CHECK(a == b);
    CHECK(j1.out == j2.out);
    CHECK(run(args + " --check-cycles").code == 0);
}

TEST_CASE("mirror-check") {
    CHECK(run("mirror-check --diagram " + fixture("circle.json") + " --algebra alexander:z3sq-cyclic6 --cocycle phi-det").code == 0);
    CHECK(run("mirror-check --diagram " + fixture("5_2.json") + " --algebra alexander:z3sq-cyclic6 --cocycle phi-det --json").code == 0);
}

TEST_CASE("homology and boundary") {
    Run h = run("homology --algebra trivial:2 --degree 1");
    CHECK(h.code == 0);
    CHECK(h.out == "H_1 = Z/2\n");
    Run big = run("homology --algebra alexander:sl2z6-det-example --degree 2", true);
    CHECK(big.code == 3);
    CHECK(big.out.find("generators") != std::string::npos);
    Run capped = run("homology --algebra dihedral:3 --degree 2", true, "BQC_GENERATOR_CAP=10");
    CHECK(capped.code == 3);
    Run b = run("boundary --algebra trivial:3 --gen \"0;1,2\"");
    CHECK(b.code == 0);
    CHECK(b.out.find("<0><1>") != std::string::npos);
    CHECK(run("boundary --algebra points:2 --gen \"0;0,1\"").code == 4);
}

TEST_CASE("cocycle subcommands") {
    CHECK(run("make-cocycle alexander --kind 1 --algebra alexander:z3sq-cyclic6").code == 0);
    CHECK(run("make-cocycle alexander --kind 2p --algebra alexander:z7-units").code == 0);
    CHECK(run("make-cocycle alexander --kind 2 --algebra alexander:z3sq-cyclic6").code == 4);
    CHECK(run("make-cocycle alexander --kind 2 --algebra alexander:z7-units").code == 4);
    CHECK(run("verify-cocycle --algebra alexander:sl2z2-det --cocycle phi-det").code == 0);
    Run s = run("verify-cocycle --algebra alexander:z3sq-cyclic6 --cocycle phi-det --force-sampled --samples 5000");
    CHECK(s.code == 0);
    CHECK(s.out.find("sampled") != std::string::npos);
    CHECK(run("lift-cocycle --example sign2").code == 0);
    CHECK(run("lift-cocycle --example sign3").code == 0);
}

TEST_CASE("lift-cocycle from a file") {
    const std::string path = "cli_test_cocycle.json";
    nlohmann::json j;
    j["biquandle"] = "dihedral:3";
    j["arity"] = 2;
    j["modulus"] = 3;
    j["table"] = std::vector<int>{0, 1, 2, 2, 0, 1, 1, 1, 0};
    std::ofstream(path) << j.dump();
    CHECK(run("lift-cocycle --input " + path).code == 2);
    j["table"] = std::vector<int>{0, 0, 0};
    std::ofstream(path) << j.dump();
    CHECK(run("lift-cocycle --input " + path).code == 4);
    std::remove(path.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 1);
    CHECK(run("invariant --diagram /no/such/file --algebra trivial:2 --cocycle zero").code == 1);
    std::ofstream("cli_bad_diagram.json") << "{\"regions\": []}";
    CHECK(run("colorings --diagram cli_bad_diagram.json --algebra trivial:2").code == 4);
    std::remove("cli_bad_diagram.json");
}

}  // TEST_SUITE
