// One line per acceptance criterion. Exit status is the number of failed lines.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "small_algebras.hpp"

#include "bqc/cocycle.hpp"
#include "bqc/homology.hpp"
#include "bqc/invariant.hpp"
#include "bqc/registry.hpp"

using namespace bqc;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << id << " " << what << std::endl;
    if (!ok) ++failures;
}

std::string fixture(const std::string& name) { return std::string(BQC_FIXTURES) + "/" + name; }

std::string show(const std::map<long long, long long>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [v, n] : m) {
        os << (first ? "" : ", ") << v << ": " << n;
        first = false;
    }
    return os.str() + "}";
}

double since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

int main() {
    const std::map<long long, long long> published = {{0, 2987712}, {2, 157248}, {4, 157248}};
    const std::map<long long, long long> published_mirror = {{0, 2987712}, {4, 157248}, {2, 157248}};

    AlgebraEntry A = make_algebra("alexander:sl2z6-det-example");
    CochainPtr phi = make_cocycle("phi-det", A);
    Diagram D52 = Diagram::load(fixture("5_2.json"));

    // criterion 1: a plain run, timed, single worker
    InvariantResult flag = phi_invariant(D52, *phi);
    std::cout << "  5_2 with Phi_det: " << show(flag.counts) << " over " << flag.colorings << " colorings in "
              << flag.seconds << " s" << std::endl;
    report("1a", flag.colorings == 3302208, "5_2 coloring count is 3302208 (got " + std::to_string(flag.colorings) + ")");
    report("1b", flag.counts == published, "5_2 multiset equals {0: 2987712, 2: 157248, 4: 157248} (got " + show(flag.counts) + ")");
    report("1c", flag.seconds <= 600, "flagship run within 10 minutes single-threaded (" + std::to_string(flag.seconds) + " s)");

    // criterion 2, with cycle checks on every coloring
    InvariantOptions checked;
    checked.check_cycles = true;
    InvariantResult var = phi_invariant(Diagram::load(fixture("5_2_r1r2.json")), *phi, checked);
    std::cout << "  R1/R2 variant: " << show(var.counts) << " over " << var.colorings << " colorings" << std::endl;
    report("2a", var.counts == flag.counts, "R1/R2 variant multiset equals the 5_2 multiset");
    report("2b", var.counts == published, "R1/R2 variant multiset equals the published multiset");

    // criterion 3
    InvariantResult mir = phi_invariant(D52.mirror(), *phi, checked);
    std::cout << "  mirror of 5_2: " << show(mir.counts) << std::endl;
    report("3a", mir.counts == flag.negated().counts, "mirror of 5_2 gives the negated multiset");
    report("3b", mir.counts == published_mirror, "mirror multiset equals {0: 2987712, 4: 157248, 2: 157248}");
    report("3c", mirror_check(Diagram::load(fixture("circle.json")), *phi).ok, "mirror check on the circle");

    // criterion 4
    {
        bool ok = true;
        std::string bad;
        VerifyOptions vo;
        for (auto name : {"dihedral:3", "dihedral:4", "dihedral:5", "alexander:sl2z2-det", "alexander:z3sq-cyclic6",
                          "alexander:z7-units", "alexander:sl2z6-det-example"}) {
            AlgebraEntry E = make_algebra(name);
            const bool fam = E.mcb->family()->verify().ok();
            AxiomReport r = E.mcb->verify(vo);
            if (!fam || !r.ok()) ok = false, bad += std::string(" ") + name;
            std::cout << "  " << name << ": family axioms exhaustive, MCB axioms " << (r.sampled ? "sampled" : "exhaustive")
                      << (r.ok() ? " ok" : " FAILED") << std::endl;
        }
        report("4a", ok, "associated MCBs of all built-in families satisfy the axioms" + bad);
    }
    {
        bool dd = true, sub = true;
        int count = 0;
        for (auto& inst : testing_support::small_instances())
            for (int n = 2; n <= 4; ++n) {
                GeneratorCap cap{2000000};
                dd = dd && verify_dd_zero(*inst.mcb, inst.xset, n, cap).ok;
                sub = sub && verify_subcomplex(*inst.mcb, inst.xset, n, cap).ok;
                ++count;
            }
        report("4b", dd, "boundary squares to zero, degrees 2-4, " + std::to_string(count) + " (MCB, Y, degree) cases");
        report("4c", sub, "degenerate chains form a subcomplex, degrees 2-4, " + std::to_string(count) + " cases");
    }
    {
        bool ok = flag.colorings > 0 && var.non_cycles == 0 && mir.non_cycles == 0;
        long long checked_colorings = var.colorings + mir.colorings;
        InvariantResult c52 = phi_invariant(D52, *phi, checked);
        ok = ok && c52.non_cycles == 0;
        checked_colorings += c52.colorings;
        for (auto d : {"theta.json", "theta_kink.json", "circle.json"}) {
            InvariantResult r = phi_invariant(Diagram::load(fixture(d)), *phi, checked);
            ok = ok && r.non_cycles == 0;
            checked_colorings += r.colorings;
        }
        AlgebraEntry S = make_algebra("dihedral:3");
        XSet Y = make_xset("family", S);
        for (auto d : {"5_2.json", "5_2_r1r2.json", "theta.json", "theta_kink.json", "circle.json"}) {
            Diagram D = Diagram::load(fixture(d));
            for (auto& C : enumerate_colorings(D, *S.mcb, &Y)) {
                ok = ok && boundary(*S.mcb, Y, cycle_of_coloring(D, C)).is_zero();
                ++checked_colorings;
            }
        }
        report("4d", ok, "W(D;C) is a 2-cycle for every coloring of every fixture (" + std::to_string(checked_colorings) +
                             " colorings)");
    }
    {
        bool ok = true;
        std::string detail;
        auto check = [&](const Cochain& c, const std::string& label, const CocycleCheckOptions& o) {
            CocycleReport r = verify_mcb_cocycle(c, o);
            std::cout << "  " << label << ": " << r.summary() << std::endl;
            if (!r.ok) ok = false, detail += " " + label;
            return r;
        };
        for (auto [alg, co] : std::vector<std::pair<std::string, std::string>>{{"alexander:sl2z2-det", "phi-det"},
                                                                               {"alexander:z3sq-cyclic6", "phi-det"},
                                                                               {"alexander:sl2z2-det", "alexander-2"},
                                                                               {"alexander:sl2z2-det", "alexander-2p"},
                                                                               {"alexander:z7-units", "alexander-2p"}}) {
            AlgebraEntry E = make_algebra(alg);
            CocycleReport r = check(*make_cocycle(co, E), alg + " " + co, {});
            if (r.sampled) ok = false, detail += " (sampled on a small carrier)";
        }
        auto shift2 = [](const FinBiquandle& X) {
            BqXSet Y;
            Y.points = 2;
            Y.act.resize(size_t(2) * X.size());
            for (int y = 0; y < 2; ++y)
                for (int x = 0; x < X.size(); ++x) Y.act[size_t(y) * X.size() + x] = 1 - y;
            return Y;
        };
        FinBiquandle X2 = FinBiquandle::trivial(2), X3 = FinBiquandle::trivial(3);
        auto L2 = LiftedCocycle::make(BQCocycle::from_function(X2, shift2(X2), 2, 0, [](int y, const int* x) -> long long {
            return (y ? -1 : 1) * (x[0] - x[1]);
        }));
        auto L3 = LiftedCocycle::make(BQCocycle::from_function(X3, shift2(X3), 3, 0, [](int y, const int* x) -> long long {
            auto g = [](long long a, long long b) { return a * (b - a); };
            return (y ? -1 : 1) * (g(x[0], x[1]) - g(x[0], x[2]) + g(x[1], x[2]));
        }));
        check(*L2, "lifted degree 2", {});
        check(*L3, "lifted degree 3", {});
        CocycleCheckOptions big;
        big.samples = 1000000;
        CocycleReport r = check(*phi, "Phi_det on the 5184-element MCB", big);
        if (!r.sampled || r.checked_boundary < 1000000) ok = false, detail += " (flagship sample too small)";
        report("4e", ok, "lifted and Alexander cocycles verified: exhaustive on small carriers, 10^6 samples on the flagship" + detail);
    }

    // criterion 5
    {
        bool ok = true;
        int cases = 0;
        for (auto d : {"circle.json", "theta.json", "theta_kink.json"})
            for (auto alg : {"trivial:1", "trivial:2", "trivial:3", "trivial:4", "points:2", "points:3", "points:4",
                             "conj:z4", "dihedral:2"}) {
                AlgebraEntry E = make_algebra(alg);
                Diagram D = Diagram::load(fixture(d));
                ok = ok && count_colorings(D, *E.mcb) == testing_support::brute_force(D, *E.mcb, nullptr);
                for (auto y : {"index", "self"}) {
                    XSet Y = make_xset(y, E);
                    if (Y.points() > 4) continue;
                    ok = ok && count_colorings(D, *E.mcb, &Y) == testing_support::brute_force(D, *E.mcb, &Y);
                }
                ++cases;
            }
        report("5a", ok, "search equals brute force on diagrams with <= 6 semi-arcs and carriers <= 4 (" +
                             std::to_string(cases) + " pairs)");
    }
    {
        bool ok = true;
        int cases = 0;
        for (auto& inst : testing_support::small_instances()) {
            if (inst.label.rfind("trivial", 0) != 0 && inst.label.rfind("dihedral", 0) != 0) continue;
            QuotientComplex Q(inst.mcb, inst.xset);
            for (int n = 0; n <= 2; ++n) {
                AbelianGroup h = Q.homology(n);
                ok = ok && h.free_rank == homology_rank_direct(*inst.mcb, inst.xset, n, 0);
                AbelianGroup lower = n > 0 ? Q.homology(n - 1) : AbelianGroup{};
                for (long long p : {2, 3}) {
                    long long dim = h.free_rank;
                    for (auto& t : h.torsion) dim += (t % p == 0);
                    for (auto& t : lower.torsion) dim += (t % p == 0);
                    ok = ok && dim == homology_rank_direct(*inst.mcb, inst.xset, n, p);
                }
                std::cout << "  H_" << n << " " << inst.label << " = " << h.str() << std::endl;
                ++cases;
            }
        }
        report("5b", ok, "homology by quotient presentation agrees with direct rank computation (" +
                             std::to_string(cases) + " cases, trivial and dihedral MCBs)");
    }
    {
        int count = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c)
                    for (int d = 0; d < 6; ++d) count += (((a * d - b * c) % 6 + 6) % 6 == 1);
        report("5c", count == 144 && special_linear2(6).group.size() == 144, "|SL(2,Z_6)| = 144 by exhaustive filter");
    }

    // criterion 6 is a documentation statement; homology is only checked through 4b, 4c and 5b
    report("6", true, "homology acceptance is property-based (4b, 4c, 5b); no published homology tables exist");

    std::cout << (failures ? std::to_string(failures) + " criterion line(s) failed" : std::string("all criteria passed"))
              << std::endl;
    return failures ? 1 : 0;
}
