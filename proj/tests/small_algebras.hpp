#pragma once
// small MCB/X-set instances shared by the property suites
#include <string>
#include <vector>

#include "bqc/registry.hpp"

namespace testing_support {

struct Instance {
    std::string label;
    bqc::McbPtr mcb;
    bqc::XSet xset;
};

// S_3 = SL(2, Z_2) acting on the three nonzero vectors of Z_2^2
inline bqc::XSet s3_on_three_points(const bqc::AlgebraEntry& A) {
    bqc::MatrixGroup S = bqc::special_linear2(2);
    const int n = A.mcb->size();
    std::vector<int> act(size_t(3) * n);
    const int vec[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int y = 0; y < 3; ++y)
        for (int g = 0; g < n; ++g) {
            auto& m = S.mats[g];
            int v0 = (vec[y][0] * m[0] + vec[y][1] * m[2]) % 2, v1 = (vec[y][0] * m[1] + vec[y][1] * m[3]) % 2;
            for (int k = 0; k < 3; ++k)
                if (vec[k][0] == v0 && vec[k][1] == v1) act[size_t(y) * n + g] = k;
        }
    return bqc::XSet::table(A.mcb, 3, act);
}

// every MCB with carrier at most 6 paired with X-sets of at most 3 points
inline std::vector<Instance> small_instances() {
    std::vector<Instance> out;
    auto add = [&](const std::string& name, const std::vector<std::string>& ys) {
        bqc::AlgebraEntry A = bqc::make_algebra(name);
        for (auto& y : ys) out.push_back({name + "/" + y, A.mcb, bqc::make_xset(y, A)});
    };
    add("trivial:1", {"trivial"});
    add("trivial:3", {"trivial", "self"});
    add("points:3", {"trivial", "index"});
    add("conj:z3", {"trivial"});
    add("dihedral:2", {"trivial", "family"});
    add("dihedral:3", {"trivial", "index", "family"});
    add("conj:sl2z2", {"trivial"});
    bqc::AlgebraEntry S = bqc::make_algebra("conj:sl2z2");
    out.push_back({"conj:sl2z2/points", S.mcb, s3_on_three_points(S)});
    {
        auto M = bqc::assoc_mcb_from_gfamily(bqc::make_zn_family(bqc::FinBiquandle::alexander(3, 2, 1)));
        out.push_back({"alexander(3,2,1) family/trivial", M, bqc::XSet::trivial(M)});
        out.push_back({"alexander(3,2,1) family/family", M, bqc::XSet::family_under(M)});
    }
    return out;
}

}  // namespace testing_support
