#pragma once
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bqc/diagram.hpp"
#include "bqc/mcb.hpp"

namespace bqc {

struct Coloring {
    std::vector<int> arcs;
    // empty when no X-set is attached
    std::vector<int> regions;
};

struct SearchOptions {
    // candidate assignments tried at branch points before giving up
    long long node_budget = 40000000000LL;
    int jobs = 1;
};

struct SearchStats {
    long long nodes = 0;
    long long colorings = 0;
    std::string plan;
};

// One step of the propagation program. Branch steps try every value of a domain;
// the rest compute one arc from known ones or check a relation.
struct PlanStep {
    enum Op : std::uint8_t {
        Branch,       // dst over the whole carrier
        BranchGroup,  // dst over the group of arc s1
        Under,        // dst = s1 under* s2
        UnderInv,     // dst = the x with x under* s2 = s1
        Over,         // dst = s1 over* s2
        OverInv,      // dst = the x with x over* s2 = s1
        VertexC,      // dst = s1^-1 s2 over* s1, s1 and s2 in one group
        VertexB,      // dst = s1 (s2 overinv s1), the middle factor in the group of s1
        CheckUnder,   // s3 == s1 under* s2
        CheckOver,    // s3 == s1 over* s2
        CheckVertex,  // s3 == s1^-1 s2 over* s1 with the group condition
        KinkUnder,    // dst over the x with x under* s1 = s1 over* x, for a crossing whose right arcs coincide
        KinkOver,     // dst over the x with s1 under* x = x over* s1, same kind of crossing
    };
    Op op;
    int dst = -1, s1 = -1, s2 = -1, s3 = -1;
};

class ColoringSearch {
public:
    // Y may be null for plain X-colorings
    ColoringSearch(const Diagram& D, const Mcb& M, const XSet* Y = nullptr, SearchOptions opt = {});

    const std::vector<PlanStep>& plan() const { return plan_; }
    std::string describe_plan() const;
    // predicted branch nodes without pruning
    double plan_cost() const { return cost_; }

    // cb(worker, arcs, regions) for every coloring; with jobs > 1 workers call concurrently
    using Callback = std::function<void(int, const int*, const int*)>;
    SearchStats run(const Callback& cb);
    long long count();

    int workers() const { return opt_.jobs < 1 ? 1 : opt_.jobs; }

private:
    void build_plan();
    void build_regions();
    template <bool WithRegions>
    void worker(int w, const Callback& cb, std::atomic<long long>& nodes, std::atomic<long long>& found,
                std::atomic<bool>& abort);

    const Diagram& d_;
    const Mcb& m_;
    const XSet* y_;
    SearchOptions opt_;
    std::vector<PlanStep> plan_;
    double cost_ = 0;
    // solutions of lu under* lo = lo over* lu, listed by lo and by lu (offsets into a flat array)
    std::vector<int> kink_by_lo_off_, kink_by_lo_, kink_by_lu_off_, kink_by_lu_;
    void build_kink_tables();
    // region propagation: root region, then tree edges (region, parent region, arc, forward)
    int root_region_ = 0;
    struct RegionStep {
        int region, from, arc;
        bool forward;
    };
    std::vector<RegionStep> region_tree_;
    std::vector<int> region_checks_;  // arcs not on the tree
};

std::vector<Coloring> enumerate_colorings(const Diagram& D, const Mcb& M, const XSet* Y = nullptr,
                                          SearchOptions opt = {}, long long max_keep = 10000000);
long long count_colorings(const Diagram& D, const Mcb& M, const XSet* Y = nullptr, SearchOptions opt = {});

struct ColoringCheck {
    bool ok = true;
    std::string witness;
};
ColoringCheck verify_coloring(const Diagram& D, const Mcb& M, const XSet* Y, const Coloring& C);

}  // namespace bqc
