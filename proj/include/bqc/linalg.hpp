#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bqc/chain.hpp"

namespace bqc {

// sorted by index, no zero entries
using SparseVec = std::vector<std::pair<int, BigInt>>;

// v += k*w
void axpy(SparseVec& v, const BigInt& k, const SparseVec& w);
std::string to_string(const SparseVec& v);

// Numbers generators on first sight so chains become sparse integer vectors.
class GenIndex {
public:
    int id(const PrismGen& g);
    int find(const PrismGen& g) const;
    const PrismGen& gen(int i) const { return gens_[i]; }
    int size() const { return int(gens_.size()); }
    SparseVec vector_of(const Chain& c);

private:
    std::map<PrismGen, int> ids_;
    std::vector<PrismGen> gens_;
};

// A sublattice of Z^k kept in echelon form, with a canonical residue for every coset.
class Lattice {
public:
    void insert(SparseVec v);
    // the unique representative of v + L with every pivot entry in [0, pivot)
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return int(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    bool unit_pivots() const;

private:
    std::map<int, SparseVec> rows_;
};

struct SmithResult {
    long long rank = 0;
    // invariant factors larger than one, ascending, each dividing the next
    std::vector<BigInt> torsion;
};

// columns are sparse vectors with row indices below nrows
SmithResult smith(std::vector<SparseVec> cols, int nrows);
// rank over Z/p for prime p
long long rank_mod_p(const std::vector<SparseVec>& cols, int nrows, long long p);

}  // namespace bqc
