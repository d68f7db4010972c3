#include "bqc/invariant.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace bqc {

Chain local_weight(const Diagram& D, const Crossing& c, const Coloring& C) {
    const int y = C.regions.empty() ? 0 : C.regions[c.weight_region];
    (void)D;
    return Chain(PrismGen::make(y, {{C.arcs[c.left_under()]}, {C.arcs[c.left_over()]}}), c.sign);
}

Chain local_weight(const Diagram& D, const Vertex& v, const Coloring& C) {
    const int y = C.regions.empty() ? 0 : C.regions[v.weight_region];
    (void)D;
    return Chain(PrismGen::make(y, {{C.arcs[v.a], C.arcs[v.b]}}), v.kind == VertexKind::TwoInOneOut ? 1 : -1);
}

Chain cycle_of_coloring(const Diagram& D, const Coloring& C) {
    Chain W;
    for (auto& c : D.crossings) W += local_weight(D, c, C);
    for (auto& v : D.vertices) W += local_weight(D, v, C);
    return W;
}

std::string InvariantResult::text() const {
    std::ostringstream os;
    for (auto& [v, n] : counts) os << v << ": " << n << "\n";
    return os.str();
}

std::string InvariantResult::json() const {
    nlohmann::ordered_json j;
    j["algebra"] = algebra;
    j["modulus"] = modulus;
    j["colorings"] = colorings;
    auto arr = nlohmann::ordered_json::array();
    for (auto& [v, n] : counts) arr.push_back({{"value", v}, {"count", n}});
    j["multiset"] = arr;
    if (cycles_checked) j["non_cycles"] = non_cycles;
    return j.dump(2);
}

InvariantResult InvariantResult::negated() const {
    InvariantResult r = *this;
    r.counts.clear();
    for (auto& [v, n] : counts) r.counts[reduce_coeff(-v, modulus)] += n;
    return r;
}

namespace {

// the boundary of W collected as packed (y, x) degree-one terms; zero iff every key cancels
struct CycleChecker {
    const Mcb& M;
    const XSet& Y;
    std::vector<std::pair<std::uint64_t, int>> terms;

    void add(const PrismGen& g, int sign) {
        boundary_terms(M, Y, g, [&](const PrismGen& h, int s) {
            terms.emplace_back((std::uint64_t(std::uint32_t(h.y)) << 32) | std::uint32_t(h.e[0]), s * sign);
        });
    }
    bool zero() {
        std::sort(terms.begin(), terms.end());
        bool ok = true;
        for (size_t i = 0; i < terms.size() && ok;) {
            size_t j = i;
            long long s = 0;
            while (j < terms.size() && terms[j].first == terms[i].first) s += terms[j++].second;
            ok = s == 0;
            i = j;
        }
        terms.clear();
        return ok;
    }
};

}  // namespace

InvariantResult phi_invariant(const Diagram& D, const Cochain& theta, const InvariantOptions& opt) {
    if (theta.degree() != 2) throw StructuralError("the invariant needs a 2-cocycle");
    const auto t0 = std::chrono::steady_clock::now();
    const Mcb& M = theta.mcb();
    const XSet& Y = theta.xset();
    const bool trivialY = Y.kind() == XSet::Kind::Trivial;
    ColoringSearch S(D, M, trivialY ? nullptr : &Y, opt.search);
    const int W = S.workers();
    const long long m = theta.modulus();
    std::vector<std::map<long long, long long>> hist(W);
    std::vector<long long> bad(W, 0);
    std::vector<CycleChecker> checkers;
    for (int w = 0; w < W; ++w) checkers.push_back({M, Y, {}});

    // a fast path for Alexander cocycles avoids building generators
    const AlexanderPhi* alex = dynamic_cast<const AlexanderPhi*>(&theta);

    S.run([&](int w, const int* arcs, const int* regions) {
        long long acc = 0;
        for (auto& c : D.crossings) {
            const int y = regions ? regions[c.weight_region] : 0;
            const int a = arcs[c.left_under()], b = arcs[c.left_over()];
            long long v;
            if (alex) {
                v = alex->two_blocks(y, a, b);
            } else {
                PrismGen g;
                g.y = y;
                g.push_block(&a, 1);
                g.push_block(&b, 1);
                v = theta.value(g);
            }
            acc += c.sign * v;
        }
        for (auto& vx : D.vertices) {
            const int y = regions ? regions[vx.weight_region] : 0;
            const int ab[2] = {arcs[vx.a], arcs[vx.b]};
            long long v = 0;
            if (!alex) {
                PrismGen g;
                g.y = y;
                g.push_block(ab, 2);
                v = theta.value(g);
            }
            acc += (vx.kind == VertexKind::TwoInOneOut ? 1 : -1) * v;
        }
        hist[w][reduce_coeff(acc, m)]++;
        if (opt.check_cycles) {
            CycleChecker& ck = checkers[w];
            for (auto& c : D.crossings) {
                PrismGen g;
                g.y = regions ? regions[c.weight_region] : 0;
                int a = arcs[c.left_under()], b = arcs[c.left_over()];
                g.push_block(&a, 1);
                g.push_block(&b, 1);
                ck.add(g, c.sign);
            }
            for (auto& vx : D.vertices) {
                PrismGen g;
                g.y = regions ? regions[vx.weight_region] : 0;
                const int ab[2] = {arcs[vx.a], arcs[vx.b]};
                g.push_block(ab, 2);
                ck.add(g, vx.kind == VertexKind::TwoInOneOut ? 1 : -1);
            }
            if (!ck.zero()) bad[w]++;
        }
    });
    InvariantResult r;
    r.modulus = m;
    r.algebra = M.name;
    for (int w = 0; w < W; ++w) {
        for (auto& [v, n] : hist[w]) r.counts[v] += n;
        r.non_cycles += bad[w];
    }
    for (auto& [v, n] : r.counts) r.colorings += n;
    r.cycles_checked = opt.check_cycles;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

MirrorResult mirror_check(const Diagram& D, const Cochain& theta, const InvariantOptions& opt) {
    MirrorResult r;
    r.original = phi_invariant(D, theta, opt);
    Diagram Dm = D.mirror();
    r.mirrored = phi_invariant(Dm, theta, opt);
    r.ok = r.mirrored.counts == r.original.negated().counts;
    return r;
}

std::map<std::string, long long> homology_class_multiset(const Diagram& D, QuotientComplex& Q, const SearchOptions& opt) {
    std::map<std::string, long long> out;
    const XSet& Y = Q.xset();
    SearchOptions o = opt;
    o.jobs = 1;
    ColoringSearch S(D, Q.mcb(), Y.kind() == XSet::Kind::Trivial ? nullptr : &Y, o);
    Coloring C;
    S.run([&](int, const int* arcs, const int* regions) {
        C.arcs.assign(arcs, arcs + D.arcs.size());
        if (regions)
            C.regions.assign(regions, regions + D.regions.size());
        else
            C.regions.clear();
        Chain W = cycle_of_coloring(D, C);
        SparseVec key = Q.class_key(W);
        out[to_string(key)]++;
    });
    return out;
}

}  // namespace bqc
