#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "bqc/coloring.hpp"
#include "bqc/registry.hpp"

using namespace bqc;

using testing_support::brute_force;

namespace {

std::string fixture(const std::string& name) { return std::string(BQC_FIXTURES) + "/" + name; }

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("circle") {
    Diagram C = Diagram::load(fixture("circle.json"));
    CHECK(count_colorings(C, *make_algebra("trivial:3").mcb) == 3);
    CHECK(count_colorings(C, *make_algebra("dihedral:3").mcb) == 6);
    CHECK(count_colorings(C, *make_algebra("alexander:sl2z6-det-example").mcb) == 5184);
    auto all = enumerate_colorings(C, *make_algebra("dihedral:3").mcb);
    CHECK(all.size() == 6);
}

TEST_CASE("theta with the trivial MCB") {
    Diagram T = Diagram::load(fixture("theta.json"));
    CHECK(count_colorings(T, *make_algebra("trivial:1").mcb) == 1);
}

TEST_CASE("search agrees with brute force on small carriers") {
    for (auto dname : {"circle.json", "theta.json", "theta_kink.json"}) {
        Diagram D = Diagram::load(fixture(dname));
        for (auto aname : {"trivial:2", "trivial:4", "points:2", "points:3", "conj:z4", "dihedral:2", "dihedral:3",
                           "conj:sl2z2"}) {
            AlgebraEntry A = make_algebra(aname);
            CHECK_MESSAGE(count_colorings(D, *A.mcb) == brute_force(D, *A.mcb, nullptr), dname << " " << aname);
            for (auto yname : {"index", "self"}) {
                XSet Y = make_xset(yname, A);
                if (Y.points() > 4) continue;
                CHECK_MESSAGE(count_colorings(D, *A.mcb, &Y) == brute_force(D, *A.mcb, &Y),
                              dname << " " << aname << " " << yname);
            }
        }
    }
    Diagram F = Diagram::load(fixture("5_2.json"));
    for (auto aname : {"trivial:2", "points:3", "dihedral:2"}) {
        AlgebraEntry A = make_algebra(aname);
        CHECK_MESSAGE(count_colorings(F, *A.mcb) == brute_force(F, *A.mcb, nullptr), aname);
    }
}

TEST_CASE("family X-set brute force on the kink") {
    Diagram D = Diagram::load(fixture("theta_kink.json"));
    AlgebraEntry A = make_algebra("dihedral:3");
    XSet Y = make_xset("family", A);
    CHECK(count_colorings(D, *A.mcb, &Y) == brute_force(D, *A.mcb, &Y));
}

TEST_CASE("enumeration output is valid and distinct") {
    Diagram D = Diagram::load(fixture("5_2.json"));
    AlgebraEntry A = make_algebra("alexander:sl2z2-det");
    XSet Y = make_xset("family", A);
    auto all = enumerate_colorings(D, *A.mcb, &Y);
    CHECK((long long)all.size() == count_colorings(D, *A.mcb, &Y));
    std::set<std::vector<int>> seen;
    for (auto& c : all) {
        CHECK(verify_coloring(D, *A.mcb, &Y, c).ok);
        std::vector<int> key = c.arcs;
        key.insert(key.end(), c.regions.begin(), c.regions.end());
        seen.insert(key);
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("perturbed colorings are rejected with a witness") {
    Diagram D = Diagram::load(fixture("5_2.json"));
    AlgebraEntry A = make_algebra("alexander:sl2z2-det");
    auto all = enumerate_colorings(D, *A.mcb);
    REQUIRE(all.size() > 3);
    int tried = 0;
    for (size_t k = 0; k < all.size(); k += all.size() / 3) {
        for (size_t i = 0; i < D.arcs.size(); ++i) {
            Coloring c = all[k];
            c.arcs[i] = (c.arcs[i] + 1) % A.mcb->size();
            ColoringCheck r = verify_coloring(D, *A.mcb, nullptr, c);
            CHECK_FALSE(r.ok);
            const bool named = r.witness.rfind("crossing", 0) == 0 || r.witness.rfind("vertex", 0) == 0;
            CHECK_MESSAGE(named, r.witness);
            ++tried;
        }
    }
    CHECK(tried > 0);
    Coloring constant{std::vector<int>(1, 2), {}};
    CHECK(verify_coloring(Diagram::load(fixture("circle.json")), *A.mcb, nullptr, constant).ok);
}

TEST_CASE("worker count does not change results") {
    Diagram D = Diagram::load(fixture("5_2_r1r2.json"));
    AlgebraEntry A = make_algebra("alexander:sl2z2-det");
    const long long one = count_colorings(D, *A.mcb);
    for (int jobs : {2, 3, 5}) {
        SearchOptions o;
        o.jobs = jobs;
        CHECK(count_colorings(D, *A.mcb, nullptr, o) == one);
    }
    // the count is an invariant of the diagram
    CHECK(count_colorings(Diagram::load(fixture("5_2.json")), *A.mcb) == one);
}

TEST_CASE("node budget") {
    Diagram D = Diagram::load(fixture("5_2.json"));
    AlgebraEntry A = make_algebra("alexander:sl2z6-det-example");
    SearchOptions o;
    o.node_budget = 1000;
    CHECK_THROWS_AS(count_colorings(D, *A.mcb, nullptr, o), BudgetExceeded);
}

TEST_CASE("a Reidemeister I loop is solved, not branched over") {
    AlgebraEntry A = make_algebra("alexander:sl2z6-det-example");
    ColoringSearch plain(Diagram::load(fixture("5_2.json")), *A.mcb);
    ColoringSearch variant(Diagram::load(fixture("5_2_r1r2.json")), *A.mcb);
    const auto& steps = variant.plan();
    CHECK(std::any_of(steps.begin(), steps.end(), [](const PlanStep& s) {
        return s.op == PlanStep::KinkUnder || s.op == PlanStep::KinkOver;
    }));
    CHECK(variant.plan_cost() <= plain.plan_cost());
    // the kink step must not lose or invent colorings
    for (auto alg : {"dihedral:3", "conj:sl2z2", "alexander:sl2z2-det"}) {
        AlgebraEntry B = make_algebra(alg);
        Diagram K = Diagram::load(fixture("theta_kink.json"));
        ColoringSearch S(K, *B.mcb);
        CHECK(S.count() == brute_force(K, *B.mcb, nullptr));
    }
}

}  // TEST_SUITE
