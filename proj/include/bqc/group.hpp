#pragma once
#include <string>
#include <vector>

#include "bqc/error.hpp"

namespace bqc {

class FinGroup {
public:
    FinGroup() = default;
    // mul is a row-major n*n table; identity and inverses are located in it
    FinGroup(int n, std::vector<int> mul);

    static FinGroup trivial();
    static FinGroup cyclic(int n);

    int size() const { return n_; }
    int op(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return e_; }
    // h^-1 g h
    int conj(int h, int g) const { return op(op(inv_[h], g), h); }
    bool is_central(int a) const;
    const std::vector<int>& table() const { return mul_; }

    AxiomReport verify() const;

private:
    int n_ = 0;
    int e_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

// SL(2, Z_n) and friends: the group together with the integer matrices it is built from
struct MatrixGroup {
    FinGroup group;
    int modulus = 0;
    int dim = 0;
    std::vector<std::vector<int>> mats;  // row-major dim*dim

    int find(const std::vector<int>& m) const;
};

MatrixGroup special_linear2(int n);
// the cyclic subgroup of Z_n^x generated by g, as 1x1 matrices
MatrixGroup unit_subgroup(int n, int g);
// the cyclic subgroup of GL(dim, Z_n) generated by the row-major matrix g; mats[k] = g^k
MatrixGroup cyclic_matrix_group(int n, int dim, const std::vector<int>& g);

struct GroupHom {
    std::vector<int> image;
    AxiomReport verify(const FinGroup& src, const FinGroup& dst) const;
    bool central_image(const FinGroup& dst) const;
};

// homomorphism into the additive group Z_m (m = 0 means Z)
struct CyclicHom {
    int modulus = 0;
    std::vector<long long> image;
    AxiomReport verify(const FinGroup& src) const;
};

// the module Z_n^dim with elements packed as base-n integers
struct ZnModule {
    int n = 1;
    int dim = 0;

    int size() const;
    std::vector<int> coords(int x) const;
    int encode(const std::vector<int>& c) const;
    int add(int x, int y) const;
    int neg(int x) const;
    int sub(int x, int y) const { return add(x, neg(y)); }
    int scale(long long s, int x) const;
    // row vector times matrix
    int act(int x, const std::vector<int>& mat) const;
};

int mod(long long v, int m);

}  // namespace bqc
