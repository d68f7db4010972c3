#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bqc/chain.hpp"
#include "bqc/linalg.hpp"

namespace bqc {

// Z^free_rank + sum Z/t for t in torsion; with modulus m the group is sum Z/t and free_rank stays 0
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<BigInt> torsion;
    std::string str() const;
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

struct HomologyOptions {
    GeneratorCap cap;
    int max_degree = 3;
};

// C_n = P_n / D_n presented on the generators that are not pivots of D_n.
class QuotientComplex {
public:
    QuotientComplex(McbPtr M, const XSet& Y, HomologyOptions opt = {});

    // the quotient basis size in degree n
    int dim(int n);
    long long generators(int n);
    // coordinates of a chain of degree n in the quotient basis
    SparseVec coords(int n, const Chain& c);
    // columns: images of the quotient basis of degree n under the induced boundary
    const std::vector<SparseVec>& boundary_matrix(int n);
    const PrismGen& basis_gen(int n, int i);

    AbelianGroup homology(int n);
    AbelianGroup homology_mod(int n, long long m);

    // canonical representative of the class of a degree-2 cycle, modulo the image of the boundary
    SparseVec class_key(const Chain& cycle);
    bool is_cycle(int n, const Chain& c);

    const Mcb& mcb() const { return *m_; }
    const XSet& xset() const { return y_; }

private:
    struct Level {
        bool built = false;
        GenIndex idx;
        Lattice deg;
        std::vector<int> to_quot;  // generator id -> quotient coordinate or -1
        std::vector<int> from_quot;
        bool bd_built = false;
        std::vector<SparseVec> bd;
        bool smith_built = false;
        SmithResult sm;
    };
    Level& level(int n);
    const SmithResult& smith_of(int n);
    void check_degree(int n) const;

    McbPtr m_;
    XSet y_;
    HomologyOptions opt_;
    std::map<int, std::unique_ptr<Level>> levels_;
    std::unique_ptr<Lattice> image3_;
};

// Second, independent path: ranks of [boundary | degenerate] blocks straight on P_*, over Q (exact) or Z/p.
// Returns dim H_n(C; field) for p prime, or the Betti number when p == 0.
long long homology_rank_direct(const Mcb& M, const XSet& Y, int n, long long p, const HomologyOptions& opt = {});

}  // namespace bqc
