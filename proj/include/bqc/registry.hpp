#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bqc/cocycle.hpp"
#include "bqc/mcb.hpp"

namespace bqc {

struct AlgebraEntry {
    std::string name;
    std::string description;
    McbPtr mcb;
    // defaults for Alexander cocycles when the algebra comes from an Alexander family
    std::optional<MultilinearForm> form2, form3;
    std::vector<long long> lambda;
    long long lambda_modulus = 0;
};

// trivial:N, points:N, conj:zN, conj:sl2zN, dihedral:N, alexander:sl2z6-det-example,
// alexander:sl2z2-det, alexander:z3sq-cyclic6, alexander:z7-units
AlgebraEntry make_algebra(const std::string& name);
std::vector<std::string> algebra_names();

// XSet by name: trivial, self, family, index
XSet make_xset(const std::string& name, const AlgebraEntry& A);

// phi-det (kind 1 with the default form), alexander-2, alexander-2p, zero:M
CochainPtr make_cocycle(const std::string& name, const AlgebraEntry& A);
std::vector<std::string> cocycle_names();

// SL(2, Z_n) pieces of the worked example
std::vector<long long> example_lambda(const struct MatrixGroup& G);
GroupHom example_phi(const struct MatrixGroup& G);

}  // namespace bqc
