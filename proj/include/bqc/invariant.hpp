#pragma once
#include <map>
#include <string>

#include "bqc/chain.hpp"
#include "bqc/cocycle.hpp"
#include "bqc/coloring.hpp"
#include "bqc/homology.hpp"

namespace bqc {

// y = 0 when the coloring carries no region colors
Chain local_weight(const Diagram& D, const Crossing& c, const Coloring& C);
Chain local_weight(const Diagram& D, const Vertex& v, const Coloring& C);
Chain cycle_of_coloring(const Diagram& D, const Coloring& C);

struct InvariantResult {
    std::map<long long, long long> counts;
    long long colorings = 0;
    long long modulus = 0;
    double seconds = 0;
    std::string algebra;
    // colorings whose weight sum had a nonzero boundary; always 0 for valid input
    long long non_cycles = 0;
    bool cycles_checked = false;

    std::string text() const;
    std::string json() const;
    InvariantResult negated() const;
    friend bool operator==(const InvariantResult& a, const InvariantResult& b) { return a.counts == b.counts; }
};

struct InvariantOptions {
    SearchOptions search;
    // evaluate the boundary of W for every coloring
    bool check_cycles = false;
};

// Y is the cocycle's X-set; the Mcb is the cocycle's algebra
InvariantResult phi_invariant(const Diagram& D, const Cochain& theta, const InvariantOptions& opt = {});

struct MirrorResult {
    bool ok = false;
    InvariantResult original, mirrored;
};
MirrorResult mirror_check(const Diagram& D, const Cochain& theta, const InvariantOptions& opt = {});

// classes of W(D;C) in H_2, keyed by their canonical coordinates
std::map<std::string, long long> homology_class_multiset(const Diagram& D, QuotientComplex& Q,
                                                         const SearchOptions& opt = {});

}  // namespace bqc
