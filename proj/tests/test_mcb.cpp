#include "doctest.h"

#include "bqc/mcb.hpp"
#include "bqc/registry.hpp"

using namespace bqc;

TEST_SUITE("mcb") {

TEST_CASE("one trivial group") {
    Mcb M = Mcb::dense({FinGroup::trivial()}, {0}, {0});
    CHECK(M.verify().ok());
    CHECK(M.verify_biquandle_form().ok());
    CHECK(M.size() == 1);
}

TEST_CASE("a corrupted under table is caught with a witness") {
    AlgebraEntry A = make_algebra("dihedral:3");
    const Mcb& M = *A.mcb;
    const int n = M.size();
    CHECK(n == 6);
    CHECK(M.verify().ok());
    std::vector<FinGroup> groups;
    for (int l = 0; l < M.num_groups(); ++l) groups.push_back(M.group(l));
    std::vector<int> u(size_t(n) * n), o(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            u[a * n + b] = M.under(a, b);
            o[a * n + b] = M.over(a, b);
        }
    Mcb same = Mcb::dense(groups, u, o);
    CHECK(same.verify().ok());
    // swap two different values inside one row so the table stays well formed
    int j = 1;
    while (u[2 * n + j] == u[2 * n]) ++j;
    std::swap(u[2 * n], u[2 * n + j]);
    Mcb bad = Mcb::dense(groups, u, o);
    AxiomReport r = bad.verify();
    REQUIRE_FALSE(r.ok());
    CHECK(r.first_failure()->witness.size() >= 2);
}

TEST_CASE("associated MCB of a G-family follows the product rule") {
    for (std::string name : {"alexander:sl2z2-det", "alexander:z3sq-cyclic6", "alexander:z7-units", "dihedral:5"}) {
        AlgebraEntry A = make_algebra(name);
        const Mcb& M = *A.mcb;
        const GFamily* F = M.family();
        REQUIRE(F);
        const int ng = F->G.size();
        CHECK(M.size() == F->nx * ng);
        CHECK(M.num_groups() == F->nx);
        for (int a = 0; a < M.size(); ++a)
            for (int b = 0; b < M.size(); ++b) {
                const int x = a / ng, g = a % ng, y = b / ng, h = b % ng;
                // (x,g) u (y,h) = (x u^h y, h^-1 g h), (x,g) o (y,h) = (x o^h y, g)
                CHECK(M.under(a, b) == F->u(h, x, y) * ng + F->G.conj(h, g));
                CHECK(M.over(a, b) == F->o(h, x, y) * ng + g);
            }
        CHECK(M.verify().ok());
        CHECK(M.verify_biquandle_form().ok());
        CHECK(XSet::family_under(A.mcb).verify().ok());
    }
}

TEST_CASE("one point X with G = Z_2") {
    GFamily F = make_alexander_gfamily(FinGroup::cyclic(2), GroupHom{{0, 0}}, ZnModule{1, 1}, {{0}, {0}});
    McbPtr M = assoc_mcb_from_gfamily(F);
    CHECK(M->size() == 2);
    CHECK(M->num_groups() == 1);
    CHECK(M->verify().ok());
}

TEST_CASE("Z_2 family of the dihedral biquandle on Z_3") {
    McbPtr M = assoc_mcb_from_gfamily(make_zn_family(FinBiquandle::dihedral(3)));
    CHECK(M->size() == 6);
    CHECK(M->verify().ok());
}

TEST_CASE("factored and dense backings agree") {
    AlgebraEntry A = make_algebra("alexander:sl2z2-det");
    McbPtr F = assoc_mcb_from_gfamily(*A.mcb->family(), false);
    Mcb D = F->densified();
    REQUIRE(F->factored());
    for (int a = 0; a < F->size(); ++a)
        for (int b = 0; b < F->size(); ++b) {
            CHECK(F->under(a, b) == D.under(a, b));
            CHECK(F->over(a, b) == D.over(a, b));
            CHECK(F->under_inv(F->under(a, b), b) == a);
            CHECK(F->over_inv(F->over(a, b), b) == a);
        }
    CHECK(F->verify().ok());
}

TEST_CASE("cross-group products are structural errors") {
    AlgebraEntry A = make_algebra("points:2");
    CHECK(A.mcb->num_groups() == 2);
    CHECK_THROWS_AS(A.mcb->product(0, 1), StructuralError);
}

TEST_CASE("standard X-sets") {
    for (std::string name : {"dihedral:3", "conj:sl2z3", "trivial:3", "points:3"}) {
        AlgebraEntry A = make_algebra(name);
        CHECK(A.mcb->verify().ok());
        for (std::string y : {"trivial", "self", "index"}) {
            XSet Y = make_xset(y, A);
            CHECK_MESSAGE(Y.verify().ok(), name << " " << y);
        }
    }
    AlgebraEntry A = make_algebra("dihedral:3");
    std::vector<int> act(size_t(2) * A.mcb->size(), 0);
    act[0] = 1;  // moves a point under one element but not under the rest
    act[size_t(A.mcb->size())] = 1;
    XSet bad = XSet::table(A.mcb, 2, act);
    CHECK_FALSE(bad.verify().ok());
}

TEST_CASE("parallel X-set") {
    FinBiquandle D = FinBiquandle::dihedral(3);
    ParallelXSet P = xset_from_parallel(D, BqXSet::self_under(D));
    CHECK(P.period == 2);
    CHECK(P.mcb->size() == 6);
    CHECK(P.mcb->verify().ok());
    CHECK(P.xset.verify().ok());
    const int ng = P.mcb->ng();
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) {
            CHECK(P.xset.act(y, x * ng + 0) == y);
            CHECK(P.xset.act(y, x * ng + 1) == D.under(y, x));
        }
}

TEST_CASE("every built-in small algebra verifies") {
    for (std::string name : {"trivial:3", "points:2", "conj:z4", "conj:sl2z2", "conj:sl2z3", "dihedral:3", "dihedral:4",
                             "alexander:sl2z2-det", "alexander:z3sq-cyclic6", "alexander:z7-units"}) {
        AlgebraEntry A = make_algebra(name);
        CHECK_MESSAGE(A.mcb->verify().ok(), name);
    }
    CHECK_THROWS_AS(make_algebra("nope:3"), StructuralError);
}

}  // TEST_SUITE
