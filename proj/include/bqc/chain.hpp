#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bqc/mcb.hpp"

namespace bqc {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kMaxDegree = 8;

// <y><x11,...,x1m><...>...: blocks are stored back to back with their lengths
struct PrismGen {
    std::int32_t y = 0;
    std::uint8_t nblocks = 0;
    std::uint8_t deg = 0;
    std::array<std::uint8_t, kMaxDegree> len{};
    std::array<std::int32_t, kMaxDegree> e{};

    int degree() const { return deg; }
    int block_start(int i) const {
        int s = 0;
        for (int k = 0; k < i; ++k) s += len[k];
        return s;
    }
    // build from nested lists
    static PrismGen make(int y, const std::vector<std::vector<int>>& blocks);
    std::vector<std::vector<int>> blocks() const;
    void push_block(const int* xs, int m);

    friend bool operator==(const PrismGen& a, const PrismGen& b);
    friend bool operator<(const PrismGen& a, const PrismGen& b);
};

std::string to_string(const PrismGen& g);

class Chain {
public:
    Chain() = default;
    Chain(const PrismGen& g, BigInt c = 1) { add(g, std::move(c)); }

    void add(const PrismGen& g, const BigInt& c);
    void add(const Chain& other, const BigInt& scale = 1);
    Chain& operator+=(const Chain& o) {
        add(o);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        add(o, -1);
        return *this;
    }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<PrismGen, BigInt>& terms() const { return terms_; }
    BigInt coefficient(const PrismGen& g) const;
    friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }
    std::string str() const;

private:
    std::map<PrismGen, BigInt> terms_;
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);

// every term of the boundary of g, with its sign; terms are not merged
void boundary_terms(const Mcb& M, const XSet& Y, const PrismGen& g, const std::function<void(const PrismGen&, int)>& emit);
// the contribution of block i only, used to test that partial boundaries commute
void partial_boundary_terms(const Mcb& M, const XSet& Y, const PrismGen& g, int block,
                            const std::function<void(const PrismGen&, int)>& emit);

// throws StructuralError unless y is a point of Y, every element is in range and each block sits in one group
void check_generator(const Mcb& M, const XSet& Y, const PrismGen& g);
Chain boundary(const Mcb& M, const XSet& Y, const PrismGen& g);
Chain boundary(const Mcb& M, const XSet& Y, const Chain& c);

struct Shuffle {
    int s = 0, t = 0;
    std::vector<int> mu;  // mu[0..s-1], values in 1..s+t, strictly increasing
    // number of k with mu(k) <= j
    int floor_at(int j) const;
    int sign() const;
};

// all strictly increasing maps {1..s} -> {1..n}
std::vector<Shuffle> shuffles(int s, int n);

// <<a><b>> as single-block terms; a and b must lie in one group
Chain shuffle_chain(const Mcb& M, const std::vector<int>& a, const std::vector<int>& b, int y = 0);

struct GeneratorCap {
    long long max_generators = 200000;
};

// all generators of P_n
void for_each_generator(const Mcb& M, const XSet& Y, int n, const std::function<void(const PrismGen&)>& f,
                        const GeneratorCap& cap = {});
long long count_generators(const Mcb& M, const XSet& Y, int n);

// <y>..<a><b>.. - <y>..<<a><b>>..  for every adjacent same-group pair of blocks
void for_each_degenerate(const Mcb& M, const XSet& Y, int n, const std::function<void(const Chain&)>& f,
                         const GeneratorCap& cap = {});

// the degenerate element built from generator g by merging blocks i and i+1
Chain degenerate_from(const Mcb& M, const PrismGen& g, int i);

struct CheckResult {
    bool ok = true;
    std::string witness;
    long long checked = 0;
};

CheckResult verify_dd_zero(const Mcb& M, const XSet& Y, int n, const GeneratorCap& cap = {});
CheckResult verify_subcomplex(const Mcb& M, const XSet& Y, int n, const GeneratorCap& cap = {});

}  // namespace bqc
