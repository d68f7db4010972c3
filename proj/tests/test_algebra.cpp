#include <numeric>

#include "doctest.h"

#include "bqc/biquandle.hpp"
#include "bqc/group.hpp"
#include "bqc/registry.hpp"

using namespace bqc;

namespace {

// a under*^[n] b straight from the recursion, with no tables
int slow_parallel(const FinBiquandle& X, int a, int b, int n, bool under) {
    int cur = a, bb = b;
    for (int i = 0; i < n; ++i) {
        cur = under ? X.under(cur, bb) : X.over(cur, bb);
        bb = X.under(bb, bb);
    }
    return cur;
}

int order_mod(int t, int n) {
    int k = 1, v = t % n;
    while (v != 1) v = v * t % n, ++k;
    return k;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("SL(2,Z_6) has 144 elements by an independent filter") {
    int count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 6; ++d)
                    if (((a * d - b * c) % 6 + 6) % 6 == 1) ++count;
    CHECK(count == 144);
    MatrixGroup G = special_linear2(6);
    CHECK(G.group.size() == 144);
    CHECK(G.group.verify().ok());
    for (auto& m : G.mats) CHECK(mod(m[0] * m[3] - m[1] * m[2], 6) == 1);
}

TEST_CASE("group tables") {
    CHECK(FinGroup::cyclic(5).verify().ok());
    CHECK(FinGroup::trivial().size() == 1);
    std::vector<int> bad = FinGroup::cyclic(3).table();
    std::swap(bad[0], bad[1]);
    CHECK_THROWS_AS(FinGroup(3, bad), StructuralError);
    MatrixGroup G = special_linear2(2);
    CHECK(G.group.size() == 6);
    int central = 0;
    for (int g = 0; g < 6; ++g) central += G.group.is_central(g);
    CHECK(central == 1);
}

TEST_CASE("trivial and dihedral biquandles pass") {
    CHECK(FinBiquandle::trivial(3).verify().ok());
    FinBiquandle D = FinBiquandle::dihedral(3);
    CHECK(D.verify().ok());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(D.under(x, y) == ((2 * y - x) % 3 + 3) % 3);
            CHECK(D.over(x, y) == x);
        }
}

TEST_CASE("broken column bijectivity is reported") {
    FinBiquandle D = FinBiquandle::dihedral(3);
    auto u = D.under_table();
    u[0 * 3 + 1] = u[1 * 3 + 1];
    FinBiquandle B(3, u, D.over_table());
    AxiomReport r = B.verify();
    REQUIRE_FALSE(r.ok());
    bool b2 = false;
    for (auto& c : r.checks)
        if (!c.passed && c.name.rfind("B2", 0) == 0) {
            b2 = true;
            CHECK_FALSE(c.witness.empty());
        }
    CHECK(b2);
}

TEST_CASE("parallel operations") {
    FinBiquandle D = FinBiquandle::dihedral(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(parallel_op(D, a, b, 0, Side::Under) == a);
    CHECK(parallel_op(D, 0, 1, 2, Side::Under) == 0);
    for (int x = 0; x < 3; ++x) CHECK(parallel_op(D, x, x, 1, Side::Under) == parallel_op(D, x, x, 1, Side::Over));

    for (auto X : {FinBiquandle::dihedral(5), FinBiquandle::alexander(5, 2, 3), FinBiquandle::dihedral(6)}) {
        const int n = X.size();
        const long long t = biquandle_type(X);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int k = 0; k <= 3; ++k) {
                    CHECK(parallel_op(X, a, b, k, Side::Under) == slow_parallel(X, a, b, k, true));
                    CHECK(parallel_op(X, a, b, k, Side::Over) == slow_parallel(X, a, b, k, false));
                }
        // the recursion with negative exponents as well
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (long long i = -2 * t; i <= 2 * t; ++i)
                    for (long long j = -2 * t; j <= 2 * t; ++j)
                        for (Side s : {Side::Under, Side::Over})
                            CHECK(parallel_op(X, a, b, i + j, s) ==
                                  parallel_op(X, parallel_op(X, a, b, i, s), parallel_op(X, b, b, i, Side::Under), j, s));
        for (int b = 0; b < n; ++b)
            for (long long k = -t; k <= t; ++k) {
                std::vector<int> seen(n, 0);
                for (int a = 0; a < n; ++a) seen[parallel_op(X, a, b, k, Side::Under)]++;
                CHECK(std::count(seen.begin(), seen.end(), 1) == n);
            }
    }
}

TEST_CASE("types") {
    CHECK(biquandle_type(FinBiquandle::trivial(4)) == 1);
    CHECK(biquandle_type(FinBiquandle::dihedral(3)) == 2);
    // x u y = t x + (s - t) y has n-fold operations t^n x + (s^n - t^n) y and s^n x
    for (int t = 1; t < 5; ++t)
        for (int s = 1; s < 5; ++s) {
            const int want = std::lcm(order_mod(t, 5), order_mod(s, 5));
            CHECK(biquandle_type(FinBiquandle::alexander(5, t, s)) == want);
        }
    // the type divides every fixing exponent
    FinBiquandle X = FinBiquandle::alexander(7, 3, 2);
    const long long t = biquandle_type(X);
    for (int n = 1; n <= 4 * t; ++n) {
        bool fixes = true;
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                fixes = fixes && slow_parallel(X, a, b, n, true) == a && slow_parallel(X, a, b, n, false) == a;
        CHECK(fixes == (n % t == 0));
    }

    FinBiquandle D = FinBiquandle::dihedral(3);
    CHECK(type_with_xset(D, BqXSet::trivial(D)) == biquandle_type(D));
    CHECK(type_with_xset(D, BqXSet::self_under(D)) == 2);
    FinBiquandle T = FinBiquandle::trivial(3);
    CHECK(type_with_xset(T, BqXSet::trivial(T)) == 1);
    CHECK(BqXSet::self_under(D).verify(D).ok());
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) CHECK(parallel_act(D, BqXSet::self_under(D), y, x, 0) == y);
}

TEST_CASE("Z_n families from a biquandle") {
    GFamily F = make_zn_family(FinBiquandle::trivial(3));
    CHECK(F.G.size() == 1);
    FinBiquandle D = FinBiquandle::dihedral(3);
    GFamily Z = make_zn_family(D);
    CHECK(Z.G.size() == 2);
    CHECK(Z.verify().ok());
    // the element 1 of Z_2 carries the original tables
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(Z.u(1, x, y) == D.under(x, y));
            CHECK(Z.o(1, x, y) == D.over(x, y));
        }
}

TEST_CASE("Alexander families") {
    // Z_2 acting on Z_3 by negation, trivial phi
    FinGroup G = FinGroup::cyclic(2);
    GroupHom triv{{0, 0}};
    ZnModule M{3, 1};
    GFamily F = make_alexander_gfamily(G, triv, M, {{1}, {2}});
    CHECK(F.verify().ok());
    for (int g = 0; g < 2; ++g)
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                const int s = g ? -1 : 1;
                CHECK(F.u(g, x, y) == mod(s * x + y * (1 - s), 3));
                CHECK(F.o(g, x, y) == x);
            }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(F.u(G.identity(), x, y) == x);

    // the same family from the group-valued construction
    std::vector<std::vector<int>> act = {{0, 1, 2}, {0, 2, 1}};
    GFamily H = make_generalized_alexander_gfamily(FinGroup::cyclic(3), G, triv, act);
    CHECK(H.verify().ok());
    for (int x = 0; x < 3; ++x) CHECK(H.u(1, x, x) == H.o(1, x, x));

    // single-element X
    CHECK(make_alexander_gfamily(FinGroup::cyclic(4), GroupHom{{0, 0, 0, 0}}, ZnModule{1, 1}, {{0}, {0}, {0}, {0}})
              .verify()
              .ok());

    GFamily bad = F;
    bad.U[5] = (bad.U[5] + 1) % 3;
    AxiomReport r = bad.verify();
    REQUIRE_FALSE(r.ok());
    CHECK_FALSE(r.first_failure()->witness.empty());

    // phi must land in the center
    MatrixGroup S = special_linear2(3);
    GroupHom notcentral{std::vector<int>(S.group.size(), 0)};
    for (int g = 0; g < S.group.size(); ++g) notcentral.image[g] = g;
    CHECK_THROWS_AS(make_alexander_gfamily(S.group, notcentral, ZnModule{3, 2}, S.mats), AxiomFailure);
}

TEST_CASE("the worked example family") {
    AlgebraEntry A = make_algebra("alexander:sl2z6-det-example");
    const GFamily* F = A.mcb->family();
    REQUIRE(F);
    CHECK(F->nx == 36);
    CHECK(F->G.size() == 144);
    CHECK(A.mcb->size() == 5184);
    MatrixGroup S = special_linear2(6);
    GroupHom phi = example_phi(S);
    CHECK(phi.verify(S.group, S.group).ok());
    CHECK(phi.central_image(S.group));
    // phi(g) = (-1)^((a+b+c+1)(b+c+d+1)) I
    const int I = S.find({1, 0, 0, 1}), minus = S.find({5, 0, 0, 5});
    for (int g = 0; g < 144; ++g) {
        auto& m = S.mats[g];
        const int e = ((m[0] + m[1] + m[2] + 1) * (m[1] + m[2] + m[3] + 1)) % 2;
        CHECK(phi.image[g] == (e ? minus : I));
    }
    for (int x = 0; x < 36; ++x)
        for (int y = 0; y < 36; ++y) CHECK(F->u(S.group.identity(), x, y) == x);
}

}  // TEST_SUITE
