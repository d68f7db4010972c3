#include "doctest.h"
#include "small_algebras.hpp"

#include "bqc/homology.hpp"
#include "bqc/linalg.hpp"
#include "bqc/registry.hpp"

using namespace bqc;
using testing_support::small_instances;

namespace {

AbelianGroup Zmod(std::initializer_list<int> t, long long rank = 0) {
    AbelianGroup g;
    g.free_rank = rank;
    for (int v : t) g.torsion.push_back(v);
    return g;
}

int orbit_count(const XSet& Y) {
    std::vector<int> parent(Y.points());
    for (int i = 0; i < Y.points(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int y = 0; y < Y.points(); ++y)
        for (int x = 0; x < Y.mcb().size(); ++x) parent[find(y)] = find(Y.act(y, x));
    int k = 0;
    for (int i = 0; i < Y.points(); ++i) k += find(i) == i;
    return k;
}

long long count_divisible(const std::vector<BigInt>& t, long long p) {
    long long k = 0;
    for (auto& v : t) k += (v % p == 0);
    return k;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("smith normal form") {
    // [[2,4],[6,8]] has invariant factors 2, 4
    SmithResult s = smith({{{0, 2}, {1, 6}}, {{0, 4}, {1, 8}}}, 2);
    CHECK(s.rank == 2);
    CHECK(s.torsion == std::vector<BigInt>{2, 4});
    SmithResult z = smith({{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}}, 2);
    CHECK(z.rank == 1);
    CHECK(z.torsion.empty());
    // diag(4, 6) becomes diag(2, 12)
    SmithResult d = smith({{{0, 4}}, {{1, 6}}}, 2);
    CHECK(d.torsion == std::vector<BigInt>{2, 12});
    CHECK(rank_mod_p({{{0, 2}, {1, 6}}, {{0, 4}, {1, 8}}}, 2, 2) == 0);
    CHECK(rank_mod_p({{{0, 2}, {1, 6}}, {{0, 4}, {1, 8}}}, 2, 3) == 2);
}

TEST_CASE("H_0 counts orbits of Y") {
    for (auto& inst : small_instances()) {
        QuotientComplex Q(inst.mcb, inst.xset);
        AbelianGroup h = Q.homology(0);
        CHECK_MESSAGE(h.free_rank == orbit_count(inst.xset), inst.label);
        CHECK(h.torsion.empty());
    }
}

TEST_CASE("H_1 of a single group is its abelianization") {
    auto h1 = [](const std::string& name) {
        AlgebraEntry A = make_algebra(name);
        QuotientComplex Q(A.mcb, XSet::trivial(A.mcb));
        return Q.homology(1);
    };
    CHECK(h1("trivial:2") == Zmod({2}));
    CHECK(h1("trivial:6") == Zmod({6}));
    CHECK(h1("conj:z4") == Zmod({4}));
    CHECK(h1("conj:sl2z2") == Zmod({2}));
    CHECK(h1("conj:sl2z3") == Zmod({3}));
    CHECK(h1("points:3") == Zmod({}));
    CHECK(h1("trivial:1").str() == "0");
}

TEST_CASE("two computation paths agree") {
    for (auto& inst : small_instances()) {
        QuotientComplex Q(inst.mcb, inst.xset);
        for (int n = 0; n <= 2; ++n) {
            AbelianGroup h = Q.homology(n);
            CHECK_MESSAGE(h.free_rank == homology_rank_direct(*inst.mcb, inst.xset, n, 0), inst.label << " H_" << n);
            AbelianGroup lower = n > 0 ? Q.homology(n - 1) : AbelianGroup{};
            for (long long p : {2, 3}) {
                // universal coefficients over a field
                const long long dim = h.free_rank + count_divisible(h.torsion, p) + count_divisible(lower.torsion, p);
                CHECK_MESSAGE(dim == homology_rank_direct(*inst.mcb, inst.xset, n, p),
                              inst.label << " H_" << n << " mod " << p);
                AbelianGroup hm = Q.homology_mod(n, p);
                CHECK(hm.free_rank == 0);
                CHECK((long long)hm.torsion.size() == dim);
            }
        }
    }
}

TEST_CASE("quotient bookkeeping") {
    AlgebraEntry A = make_algebra("dihedral:3");
    XSet Y = make_xset("family", A);
    QuotientComplex Q(A.mcb, Y);
    for (int n = 0; n <= 3; ++n) {
        long long degenerate = 0;
        Lattice L;
        GenIndex idx;
        for_each_generator(*A.mcb, Y, n, [&](const PrismGen& g) { idx.id(g); });
        for_each_degenerate(*A.mcb, Y, n, [&](const Chain& c) { L.insert(idx.vector_of(c)); });
        degenerate = L.rank();
        CHECK(Q.generators(n) == count_generators(*A.mcb, Y, n));
        CHECK(Q.dim(n) == Q.generators(n) - degenerate);
    }
    // boundary of a basis element, pushed to the quotient, matches the stored column
    for (int i = 0; i < Q.dim(2); ++i) {
        Chain bd = boundary(*A.mcb, Y, Q.basis_gen(2, i));
        CHECK(Q.coords(1, bd) == Q.boundary_matrix(2)[i]);
    }
    // degenerate chains have zero coordinates
    for_each_degenerate(*A.mcb, Y, 2, [&](const Chain& c) { CHECK(Q.coords(2, c).empty()); });
}

TEST_CASE("caps") {
    AlgebraEntry A = make_algebra("alexander:sl2z6-det-example");
    QuotientComplex Q(A.mcb, XSet::trivial(A.mcb));
    CHECK_THROWS_AS(Q.homology(2), BudgetExceeded);
    AlgebraEntry T = make_algebra("trivial:2");
    QuotientComplex S(T.mcb, XSet::trivial(T.mcb));
    CHECK_THROWS_AS(S.homology(4), BudgetExceeded);
}

}  // TEST_SUITE
