#include "bqc/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace bqc {

namespace {

struct Eq {
    enum Kind { U, O, V } kind;
    // U: ru = lu under* lo, stored (lu, lo, ru); O: ro = lo over* lu, stored (lo, lu, ro); V: (a, b, c)
    int p, q, r;
    std::string site;
};

using Mask = std::uint64_t;

// a crossing whose two right arcs are one semi-arc, as left by a Reidemeister I loop
struct Kink {
    int lu, lo, r;
};

struct Planner {
    int A;
    std::vector<Eq> eqs;
    std::vector<Kink> kinks;  // their used flags follow the equations' in `used`
    std::vector<char> closed;
    bool invertible;
    double full, group;

    bool known(Mask m, int v) const { return (m >> v) & 1; }

    // apply every forced step; returns the new mask and appends steps when out is given
    Mask closure(Mask m, std::vector<char>& used, std::vector<PlanStep>* out) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < eqs.size(); ++i) {
                if (used[i]) continue;
                const Eq& e = eqs[i];
                const bool kp = known(m, e.p), kq = known(m, e.q), kr = known(m, e.r);
                PlanStep s{};
                if (kp && kq && kr) {
                    s.op = e.kind == Eq::U ? PlanStep::CheckUnder : e.kind == Eq::O ? PlanStep::CheckOver : PlanStep::CheckVertex;
                    s.s1 = e.p;
                    s.s2 = e.q;
                    s.s3 = e.r;
                } else if (kp && kq) {
                    s.op = e.kind == Eq::U ? PlanStep::Under : e.kind == Eq::O ? PlanStep::Over : PlanStep::VertexC;
                    s.dst = e.r;
                    s.s1 = e.p;
                    s.s2 = e.q;
                } else if (invertible && kr && kq && e.kind != Eq::V) {
                    s.op = e.kind == Eq::U ? PlanStep::UnderInv : PlanStep::OverInv;
                    s.dst = e.p;
                    s.s1 = e.r;
                    s.s2 = e.q;
                } else if (invertible && kp && kr && e.kind == Eq::V) {
                    s.op = PlanStep::VertexB;
                    s.dst = e.q;
                    s.s1 = e.p;
                    s.s2 = e.r;
                } else {
                    continue;
                }
                if (s.dst >= 0) m |= Mask(1) << s.dst;
                used[i] = 1;
                changed = true;
                if (out) out->push_back(s);
            }
            for (size_t k = 0; k < kinks.size(); ++k) {
                const size_t slot = eqs.size() + k;
                const Kink& q = kinks[k];
                if (used[slot] || known(m, q.r) || known(m, q.lu) == known(m, q.lo)) continue;
                PlanStep s{};
                if (known(m, q.lo)) {
                    s.op = PlanStep::KinkUnder;
                    s.dst = q.lu;
                    s.s1 = q.lo;
                } else {
                    s.op = PlanStep::KinkOver;
                    s.dst = q.lo;
                    s.s1 = q.lu;
                }
                m |= Mask(1) << s.dst;
                used[slot] = 1;
                changed = true;
                if (out) out->push_back(s);
            }
        }
        return m;
    }

    struct Choice {
        int var;
        int ref;  // >= 0 for a group branch
        double dom;
    };

    std::vector<Choice> choices(Mask m, const std::vector<char>& used) const {
        std::vector<Choice> out;
        for (int v = 0; v < A; ++v) {
            if (known(m, v)) continue;
            int ref = -1;
            for (size_t i = 0; i < eqs.size() && ref < 0; ++i) {
                const Eq& e = eqs[i];
                if (used[i] || e.kind != Eq::V) continue;
                if (e.p == v && known(m, e.q)) ref = e.q;
                if (e.q == v && known(m, e.p)) ref = e.p;
            }
            if (ref >= 0 && group < full) out.push_back({v, ref, group});
            else out.push_back({v, -1, full});
        }
        return out;
    }

    std::unordered_map<Mask, std::pair<double, int>> memo;
    long long expansions = 0;
    static constexpr long long kMaxExpansions = 200000;

    // cheapest total number of branch nodes from this state
    double best(Mask m, const std::vector<char>& used) {
        Mask all = A == 64 ? ~Mask(0) : ((Mask(1) << A) - 1);
        if (m == all) return 0;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second.first;
        if (++expansions > kMaxExpansions) return INFINITY;
        double bestc = INFINITY;
        int bi = -1;
        auto ch = choices(m, used);
        for (int i = 0; i < (int)ch.size(); ++i) {
            std::vector<char> u2 = used;
            Mask m2 = closure(m | (Mask(1) << ch[i].var), u2, nullptr);
            double c = ch[i].dom * (1 + best(m2, u2));
            if (c < bestc) {
                bestc = c;
                bi = i;
            }
        }
        memo[m] = {bestc, bi};
        return bestc;
    }

    // fall back: pick the branch that forces the most arcs, then the smaller domain
    int greedy(Mask m, const std::vector<char>& used, const std::vector<Choice>& ch) const {
        int bi = 0, bestk = -1;
        double bd = INFINITY;
        for (int i = 0; i < (int)ch.size(); ++i) {
            std::vector<char> u2 = used;
            Mask m2 = closure(m | (Mask(1) << ch[i].var), u2, nullptr);
            int k = __builtin_popcountll(m2);
            if (k > bestk || (k == bestk && ch[i].dom < bd)) {
                bestk = k;
                bd = ch[i].dom;
                bi = i;
            }
        }
        return bi;
    }
};

}  // namespace

ColoringSearch::ColoringSearch(const Diagram& D, const Mcb& M, const XSet* Y, SearchOptions opt)
    : d_(D), m_(M), y_(Y), opt_(opt) {
    D.validate();
    if (Y && &Y->mcb() != &M && Y->mcb().size() != M.size())
        throw StructuralError("the X-set is attached to a different algebra");
    build_plan();
    if (y_) build_regions();
}

void ColoringSearch::build_plan() {
    const int A = int(d_.arcs.size());
    if (A > 64) throw BudgetExceeded("diagrams with more than 64 semi-arcs are not supported by the planner");
    Planner P;
    P.A = A;
    P.invertible = m_.invertible();
    P.full = m_.size();
    int gmax = 0;
    for (int l = 0; l < m_.num_groups(); ++l) gmax = std::max(gmax, m_.group_size(l));
    P.group = gmax;
    for (auto& c : d_.crossings) {
        P.eqs.push_back({Eq::U, c.left_under(), c.left_over(), c.right_under(), c.id});
        P.eqs.push_back({Eq::O, c.left_over(), c.left_under(), c.right_over(), c.id});
    }
    for (auto& v : d_.vertices) P.eqs.push_back({Eq::V, v.a, v.b, v.c, v.id});
    for (auto& c : d_.crossings)
        if (c.right_under() == c.right_over()) P.kinks.push_back({c.left_under(), c.left_over(), c.right_under()});

    std::vector<char> used(P.eqs.size() + P.kinks.size(), 0);
    Mask m = P.closure(0, used, &plan_);
    P.best(m, used);
    cost_ = 0;
    double width = 1;
    while (true) {
        Mask all = A == 64 ? ~Mask(0) : ((Mask(1) << A) - 1);
        if (m == all) break;
        auto ch = P.choices(m, used);
        int bi;
        auto it = P.memo.find(m);
        if (it != P.memo.end() && it->second.second >= 0 && std::isfinite(it->second.first))
            bi = it->second.second;
        else
            bi = P.greedy(m, used, ch);
        const auto& c = ch[bi];
        PlanStep s{};
        s.op = c.ref >= 0 ? PlanStep::BranchGroup : PlanStep::Branch;
        s.dst = c.var;
        s.s1 = c.ref;
        plan_.push_back(s);
        width *= c.dom;
        cost_ += width;
        m = P.closure(m | (Mask(1) << c.var), used, &plan_);
    }
    for (auto& s : plan_)
        if (s.op == PlanStep::KinkUnder || s.op == PlanStep::KinkOver) {
            build_kink_tables();
            break;
        }
}

void ColoringSearch::build_kink_tables() {
    const int n = m_.size();
    std::vector<std::pair<int, int>> sol;  // (lu, lo)
    for (int lu = 0; lu < n; ++lu)
        for (int lo = 0; lo < n; ++lo)
            if (m_.under(lu, lo) == m_.over(lo, lu)) sol.push_back({lu, lo});
    auto index = [&](bool by_lo, std::vector<int>& off, std::vector<int>& val) {
        off.assign(n + 1, 0);
        for (auto [lu, lo] : sol) off[(by_lo ? lo : lu) + 1]++;
        for (int i = 0; i < n; ++i) off[i + 1] += off[i];
        val.assign(sol.size(), 0);
        std::vector<int> pos(off.begin(), off.end() - 1);
        for (auto [lu, lo] : sol) val[pos[by_lo ? lo : lu]++] = by_lo ? lu : lo;
    };
    index(true, kink_by_lo_off_, kink_by_lo_);
    index(false, kink_by_lu_off_, kink_by_lu_);
}

void ColoringSearch::build_regions() {
    const int R = int(d_.regions.size());
    std::vector<std::vector<std::pair<int, int>>> adj(R);  // (arc, other region)
    for (int a = 0; a < (int)d_.arcs.size(); ++a) {
        adj[d_.arcs[a].source].push_back({a, d_.arcs[a].target});
        adj[d_.arcs[a].target].push_back({a, d_.arcs[a].source});
    }
    std::vector<char> seen(R, 0), on_tree(d_.arcs.size(), 0);
    root_region_ = 0;
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
        int r = queue[h];
        for (auto [a, o] : adj[r]) {
            if (seen[o]) continue;
            seen[o] = 1;
            on_tree[a] = 1;
            region_tree_.push_back({o, r, a, d_.arcs[a].source == r});
            queue.push_back(o);
        }
    }
    for (int r = 0; r < R; ++r)
        if (!seen[r]) throw StructuralError("region " + d_.regions[r] + " is not reachable from the others");
    for (int a = 0; a < (int)d_.arcs.size(); ++a)
        if (!on_tree[a]) region_checks_.push_back(a);
}

std::string ColoringSearch::describe_plan() const {
    static const char* names[] = {"branch", "branch-group", "under", "under-inv", "over", "over-inv",
                                  "vertex-c", "vertex-b", "check-under", "check-over", "check-vertex",
                                  "kink-under", "kink-over"};
    std::ostringstream os;
    for (auto& s : plan_) {
        os << names[s.op];
        auto arc = [&](int i) { return i >= 0 ? d_.arcs[i].id : std::string("-"); };
        if (s.dst >= 0) os << " " << arc(s.dst) << " <-";
        for (int v : {s.s1, s.s2, s.s3})
            if (v >= 0) os << " " << arc(v);
        os << "\n";
    }
    return os.str();
}

template <bool WithRegions>
void ColoringSearch::worker(int w, const Callback& cb, std::atomic<long long>& nodes, std::atomic<long long>& found,
                            std::atomic<bool>& abort) {
    const int W = workers();
    const Mcb& M = m_;
    const PlanStep* plan = plan_.data();
    const int P = int(plan_.size());
    std::vector<int> col(d_.arcs.size(), 0), reg(WithRegions ? d_.regions.size() : 1, 0);
    long long local = 0, local_found = 0;
    const long long budget = opt_.node_budget;
    constexpr long long kFlush = 1 << 20;

    auto leaf = [&]() {
        if constexpr (WithRegions) {
            const XSet& Y = *y_;
            for (int y0 = 0; y0 < Y.points(); ++y0) {
                reg[root_region_] = y0;
                for (auto& t : region_tree_)
                    reg[t.region] = t.forward ? Y.act(reg[t.from], col[t.arc]) : Y.act_inv(reg[t.from], col[t.arc]);
                bool ok = true;
                for (int a : region_checks_)
                    if (Y.act(reg[d_.arcs[a].source], col[a]) != reg[d_.arcs[a].target]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    ++local_found;
                    cb(w, col.data(), reg.data());
                }
            }
        } else {
            ++local_found;
            cb(w, col.data(), nullptr);
        }
    };

    bool first = true;
    auto exec = [&](auto&& self, int pc) -> void {
        int* c = col.data();
        for (; pc < P; ++pc) {
            const PlanStep& s = plan[pc];
            switch (s.op) {
                case PlanStep::Branch:
                case PlanStep::BranchGroup: {
                    int lo = 0, hi = M.size();
                    if (s.op == PlanStep::BranchGroup) {
                        int l = M.label(c[s.s1]);
                        lo = M.start(l);
                        hi = lo + M.group_size(l);
                    }
                    const bool split = first;
                    first = false;
                    for (int v = lo; v < hi; ++v) {
                        if (split && W > 1 && (v - lo) % W != w) continue;
                        if (++local >= kFlush) {
                            long long tot = nodes.fetch_add(local) + local;
                            local = 0;
                            if (tot > budget) abort = true;
                            if (abort) return;
                        }
                        c[s.dst] = v;
                        self(self, pc + 1);
                        if (abort.load(std::memory_order_relaxed)) return;
                    }
                    return;
                }
                case PlanStep::Under: c[s.dst] = M.under(c[s.s1], c[s.s2]); break;
                case PlanStep::UnderInv: c[s.dst] = M.under_inv(c[s.s1], c[s.s2]); break;
                case PlanStep::Over: c[s.dst] = M.over(c[s.s1], c[s.s2]); break;
                case PlanStep::OverInv: c[s.dst] = M.over_inv(c[s.s1], c[s.s2]); break;
                case PlanStep::VertexC: {
                    const int a = c[s.s1], b = c[s.s2];
                    if (M.label(a) != M.label(b)) return;
                    c[s.dst] = M.over(M.mul(M.inv(a), b), a);
                    break;
                }
                case PlanStep::VertexB: {
                    const int a = c[s.s1];
                    const int dd = M.over_inv(c[s.s2], a);
                    if (M.label(dd) != M.label(a)) return;
                    c[s.dst] = M.mul(a, dd);
                    break;
                }
                case PlanStep::KinkUnder:
                case PlanStep::KinkOver: {
                    const bool by_lo = s.op == PlanStep::KinkUnder;
                    const auto& off = by_lo ? kink_by_lo_off_ : kink_by_lu_off_;
                    const auto& val = by_lo ? kink_by_lo_ : kink_by_lu_;
                    const int key = c[s.s1];
                    for (int i = off[key]; i < off[key + 1]; ++i) {
                        c[s.dst] = val[i];
                        self(self, pc + 1);
                        if (abort.load(std::memory_order_relaxed)) return;
                    }
                    return;
                }
                case PlanStep::CheckUnder:
                    if (c[s.s3] != M.under(c[s.s1], c[s.s2])) return;
                    break;
                case PlanStep::CheckOver:
                    if (c[s.s3] != M.over(c[s.s1], c[s.s2])) return;
                    break;
                case PlanStep::CheckVertex: {
                    const int a = c[s.s1], b = c[s.s2];
                    if (M.label(a) != M.label(b)) return;
                    if (c[s.s3] != M.over(M.mul(M.inv(a), b), a)) return;
                    break;
                }
            }
        }
        // with no branch at all only worker 0 reports
        if (first && w != 0) return;
        leaf();
    };
    exec(exec, 0);
    nodes.fetch_add(local);
    found.fetch_add(local_found);
}

SearchStats ColoringSearch::run(const Callback& cb) {
    std::atomic<long long> nodes{0}, found{0};
    std::atomic<bool> abort{false};
    const int W = workers();
    auto go = [&](int w) {
        if (y_)
            worker<true>(w, cb, nodes, found, abort);
        else
            worker<false>(w, cb, nodes, found, abort);
    };
    if (W == 1) {
        go(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < W; ++w) th.emplace_back(go, w);
        for (auto& t : th) t.join();
    }
    if (abort)
        throw BudgetExceeded("coloring search exceeded the node budget of " + std::to_string(opt_.node_budget) +
                             " (predicted " + std::to_string((long long)cost_) + " branch nodes)");
    SearchStats st;
    st.nodes = nodes;
    st.colorings = found;
    st.plan = describe_plan();
    return st;
}

long long ColoringSearch::count() {
    return run([](int, const int*, const int*) {}).colorings;
}

std::vector<Coloring> enumerate_colorings(const Diagram& D, const Mcb& M, const XSet* Y, SearchOptions opt,
                                          long long max_keep) {
    opt.jobs = 1;
    ColoringSearch S(D, M, Y, opt);
    std::vector<Coloring> out;
    S.run([&](int, const int* arcs, const int* regions) {
        if ((long long)out.size() >= max_keep)
            throw BudgetExceeded("more than " + std::to_string(max_keep) + " colorings to keep in memory");
        Coloring c;
        c.arcs.assign(arcs, arcs + D.arcs.size());
        if (regions) c.regions.assign(regions, regions + D.regions.size());
        out.push_back(std::move(c));
    });
    return out;
}

long long count_colorings(const Diagram& D, const Mcb& M, const XSet* Y, SearchOptions opt) {
    ColoringSearch S(D, M, Y, opt);
    return S.count();
}

ColoringCheck verify_coloring(const Diagram& D, const Mcb& M, const XSet* Y, const Coloring& C) {
    ColoringCheck r;
    if (C.arcs.size() != D.arcs.size()) throw StructuralError("coloring has the wrong number of arc colors");
    if (Y && C.regions.size() != D.regions.size()) throw StructuralError("coloring has the wrong number of region colors");
    for (int x : C.arcs)
        if (x < 0 || x >= M.size()) throw StructuralError("arc color out of range");
    auto fail = [&](const std::string& w) {
        r.ok = false;
        r.witness = w;
        return r;
    };
    for (auto& c : D.crossings) {
        int lu = C.arcs[c.left_under()], lo = C.arcs[c.left_over()];
        if (C.arcs[c.right_under()] != M.under(lu, lo)) return fail("crossing " + c.id + " (under strand)");
        if (C.arcs[c.right_over()] != M.over(lo, lu)) return fail("crossing " + c.id + " (over strand)");
    }
    for (auto& v : D.vertices) {
        int a = C.arcs[v.a], b = C.arcs[v.b];
        if (M.label(a) != M.label(b)) return fail("vertex " + v.id + " (legs a and b in different groups)");
        if (C.arcs[v.c] != M.over(M.mul(M.inv(a), b), a)) return fail("vertex " + v.id);
    }
    if (Y) {
        for (int y : C.regions)
            if (y < 0 || y >= Y->points()) throw StructuralError("region color out of range");
        for (auto& s : D.arcs) {
            int a = D.arc_index(s.id);
            if (Y->act(C.regions[s.source], C.arcs[a]) != C.regions[s.target]) return fail("semi-arc " + s.id + " (regions)");
        }
    }
    return r;
}

}  // namespace bqc
