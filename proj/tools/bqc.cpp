#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bqc/homology.hpp"
#include "bqc/invariant.hpp"
#include "bqc/registry.hpp"

using namespace bqc;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kAxiom = 2, kBudget = 3, kStructural = 4 };

long long env_or(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw StructuralError(std::string("environment variable ") + name + " is not an integer");
    }
}

FinBiquandle make_biquandle(const std::string& name) {
    auto parts = std::vector<std::string>{};
    std::stringstream ss(name);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    auto num = [&](size_t i) {
        if (i >= parts.size()) throw StructuralError("biquandle '" + name + "' is missing a parameter");
        return std::stoi(parts[i]);
    };
    if (parts[0] == "trivial") return FinBiquandle::trivial(num(1));
    if (parts[0] == "dihedral") return FinBiquandle::dihedral(num(1));
    if (parts[0] == "alexander") return FinBiquandle::alexander(num(1), num(2), num(3));
    throw StructuralError("unknown biquandle '" + name + "' (trivial:N, dihedral:N, alexander:N:t:s)");
}

BqXSet make_bq_xset(const std::string& name, const FinBiquandle& X) {
    if (name.empty() || name == "trivial") return BqXSet::trivial(X);
    if (name == "self") return BqXSet::self_under(X);
    if (name.rfind("shift:", 0) == 0) {
        // Z_k with y * x = y + 1
        int k = std::stoi(name.substr(6));
        BqXSet Y;
        Y.points = k;
        Y.act.resize(size_t(k) * X.size());
        for (int y = 0; y < k; ++y)
            for (int x = 0; x < X.size(); ++x) Y.act[size_t(y) * X.size() + x] = (y + 1) % k;
        return Y;
    }
    throw StructuralError("unknown X-set '" + name + "' (trivial, self, shift:K)");
}

BQCocycle bq_cocycle_from_json(const json& j) {
    FinBiquandle X;
    const auto& b = j.at("biquandle");
    if (b.is_string())
        X = make_biquandle(b.get<std::string>());
    else
        X = FinBiquandle(b.at("size").get<int>(), b.at("under").get<std::vector<int>>(), b.at("over").get<std::vector<int>>());
    BqXSet Y;
    if (!j.contains("xset") || j["xset"].is_string())
        Y = make_bq_xset(j.value("xset", std::string("trivial")), X);
    else {
        Y.points = j["xset"].at("points").get<int>();
        Y.act = j["xset"].at("act").get<std::vector<int>>();
    }
    BQCocycle th{j.at("arity").get<int>(), X, Y, j.value("modulus", 0LL), j.at("table").get<std::vector<long long>>()};
    size_t want = Y.points;
    for (int i = 0; i < th.arity; ++i) want *= X.size();
    if (th.table.size() != want) throw StructuralError("cocycle table needs " + std::to_string(want) + " entries");
    return th;
}

// built-in examples: trivial biquandle on {0,1,..}, Y = Z_2 shifted by every arc, sign-twisted coboundaries
BQCocycle bq_example(const std::string& name) {
    if (name == "sign2" || name == "sign3") {
        const int arity = name == "sign2" ? 2 : 3;
        FinBiquandle X = FinBiquandle::trivial(arity == 2 ? 2 : 3);
        BqXSet Y = make_bq_xset("shift:2", X);
        return BQCocycle::from_function(X, Y, arity, 0, [arity](int y, const int* x) -> long long {
            const long long s = y ? -1 : 1;
            if (arity == 2) return s * (x[0] - x[1]);
            auto g = [](long long a, long long b) { return a * (b - a); };
            return s * (g(x[0], x[1]) - g(x[0], x[2]) + g(x[1], x[2]));
        });
    }
    throw StructuralError("unknown example '" + name + "' (sign2, sign3)");
}

PrismGen parse_gen(const std::string& s) {
    // "y;a,b;c" -> <y><a,b><c>
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ';');) parts.push_back(p);
    if (parts.empty()) throw StructuralError("empty generator");
    std::vector<std::vector<int>> blocks;
    for (size_t i = 1; i < parts.size(); ++i) {
        std::vector<int> b;
        std::stringstream bs(parts[i]);
        for (std::string e; std::getline(bs, e, ',');) b.push_back(std::stoi(e));
        blocks.push_back(b);
    }
    return PrismGen::make(std::stoi(parts[0]), blocks);
}

void print_report(const AxiomReport& r, bool as_json) {
    if (as_json) {
        json j;
        j["ok"] = r.ok();
        j["sampled"] = r.sampled;
        j["samples"] = r.samples;
        auto arr = json::array();
        for (auto& c : r.checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}, {"detail", c.detail}});
        j["checks"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.summary() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colorings, cocycles and homology for multiple conjugation biquandles"};
    app.require_subcommand(1);

    std::string algebra, xset, diagram, cocycle, biquandle, example, input, out, kind = "1", gen;
    int jobs = 1, degree = 2;
    long long modulus = 0, samples = 1000000, budget = 0, cap = 0;
    bool as_json = false, count_only = false, check_cycles = false, biquandle_form = false, force_sampled = false;
    long long limit = 20;

    auto* c_verify = app.add_subcommand("verify", "check the axioms of a built-in algebra");
    c_verify->add_option("--algebra", algebra)->required();
    c_verify->add_option("--xset", xset);
    c_verify->add_option("--samples", samples);
    c_verify->add_flag("--biquandle-form", biquandle_form, "use the biquandle form of the axioms");
    c_verify->add_flag("--json", as_json);

    auto* c_type = app.add_subcommand("type", "type of a biquandle, alone and with an X-set");
    c_type->add_option("--biquandle", biquandle)->required();
    c_type->add_option("--xset", xset);

    auto* c_col = app.add_subcommand("colorings", "enumerate or count colorings");
    c_col->add_option("--diagram", diagram)->required()->check(CLI::ExistingFile);
    c_col->add_option("--algebra", algebra)->required();
    c_col->add_option("--xset", xset);
    c_col->add_flag("--count-only", count_only);
    c_col->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_col->add_option("--limit", limit, "colorings to print");
    c_col->add_option("--budget", budget, "node budget");
    c_col->add_flag("--json", as_json);

    auto* c_inv = app.add_subcommand("invariant", "the cocycle invariant of a diagram");
    c_inv->add_option("--diagram", diagram)->required()->check(CLI::ExistingFile);
    c_inv->add_option("--algebra", algebra)->required();
    c_inv->add_option("--cocycle", cocycle)->required();
    c_inv->add_option("--xset", xset, "accepted for symmetry; the cocycle fixes its own X-set");
    c_inv->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_inv->add_option("--budget", budget);
    c_inv->add_flag("--check-cycles", check_cycles, "verify that every W(D;C) is a cycle");
    c_inv->add_flag("--json", as_json);

    auto* c_hom = app.add_subcommand("homology", "homology of the quotient complex");
    c_hom->add_option("--algebra", algebra)->required();
    c_hom->add_option("--xset", xset);
    c_hom->add_option("--degree", degree)->required();
    c_hom->add_option("--mod", modulus);
    c_hom->add_option("--cap", cap, "generator cap");

    auto* c_bd = app.add_subcommand("boundary", "boundary of one generator, written y;a,b;c");
    c_bd->add_option("--algebra", algebra)->required();
    c_bd->add_option("--xset", xset);
    c_bd->add_option("--gen", gen)->required();

    auto* c_lift = app.add_subcommand("lift-cocycle", "lift a biquandle cocycle to X x Z_type");
    c_lift->add_option("--example", example, "sign2 or sign3");
    c_lift->add_option("--input", input, "JSON cocycle table")->check(CLI::ExistingFile);
    c_lift->add_option("--out", out, "write the lifted table as JSON");

    auto* c_make = app.add_subcommand("make-cocycle", "build and check an Alexander cocycle");
    std::string family = "alexander";
    c_make->add_option("family", family)->check(CLI::IsMember({"alexander"}));
    c_make->add_option("--kind", kind)->check(CLI::IsMember({"1", "2", "2p"}));
    c_make->add_option("--algebra", algebra)->required();
    c_make->add_option("--samples", samples);
    c_make->add_option("--out", out);

    auto* c_vc = app.add_subcommand("verify-cocycle", "check that a cochain is a cocycle");
    c_vc->add_option("--algebra", algebra)->required();
    c_vc->add_option("--cocycle", cocycle)->required();
    c_vc->add_option("--samples", samples);
    c_vc->add_flag("--force-sampled", force_sampled);

    auto* c_mir = app.add_subcommand("mirror-check", "compare the invariant of the mirror with the negation");
    c_mir->add_option("--diagram", diagram)->required()->check(CLI::ExistingFile);
    c_mir->add_option("--algebra", algebra)->required();
    c_mir->add_option("--cocycle", cocycle)->required();
    c_mir->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_mir->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        SearchOptions so;
        so.jobs = jobs;
        so.node_budget = budget > 0 ? budget : env_or("BQC_NODE_BUDGET", so.node_budget);
        HomologyOptions ho;
        ho.cap.max_generators = cap > 0 ? cap : env_or("BQC_GENERATOR_CAP", ho.cap.max_generators);

        if (*c_verify) {
            AlgebraEntry A = make_algebra(algebra);
            VerifyOptions vo;
            vo.samples = samples;
            AxiomReport r = biquandle_form ? A.mcb->verify_biquandle_form(vo) : A.mcb->verify(vo);
            if (!xset.empty()) {
                AxiomReport ry = make_xset(xset, A).verify(vo);
                for (auto& c : ry.checks) r.checks.push_back(c);
                r.sampled = r.sampled || ry.sampled;
            }
            print_report(r, as_json);
            return r.ok() ? kOk : kAxiom;
        }
        if (*c_type) {
            FinBiquandle X = make_biquandle(biquandle);
            AxiomReport r = X.verify();
            if (!r.ok()) {
                std::cerr << r.summary() << "\n";
                return kAxiom;
            }
            std::cout << "type X = " << biquandle_type(X) << "\n";
            BqXSet Y = make_bq_xset(xset, X);
            std::cout << "type X_Y = " << type_with_xset(X, Y) << "\n";
            return kOk;
        }
        if (*c_col) {
            AlgebraEntry A = make_algebra(algebra);
            Diagram D = Diagram::load(diagram);
            XSet Y = make_xset(xset, A);
            const XSet* yp = xset.empty() ? nullptr : &Y;
            if (count_only) {
                long long n = count_colorings(D, *A.mcb, yp, so);
                if (as_json)
                    std::cout << json{{"diagram", D.name}, {"algebra", algebra}, {"colorings", n}}.dump(2) << "\n";
                else
                    std::cout << n << "\n";
                return kOk;
            }
            so.jobs = 1;
            ColoringSearch S(D, *A.mcb, yp, so);
            json arr = json::array();
            long long shown = 0;
            SearchStats st = S.run([&](int, const int* arcs, const int* regions) {
                if (shown >= limit) return;
                ++shown;
                json c;
                for (size_t i = 0; i < D.arcs.size(); ++i) c["arcs"][D.arcs[i].id] = arcs[i];
                if (regions)
                    for (size_t i = 0; i < D.regions.size(); ++i) c["regions"][D.regions[i]] = regions[i];
                arr.push_back(c);
            });
            if (as_json) {
                std::cout << json{{"colorings", st.colorings}, {"shown", arr}}.dump(2) << "\n";
            } else {
                for (auto& c : arr) std::cout << c.dump() << "\n";
                std::cout << st.colorings << " colorings\n";
            }
            return kOk;
        }
        if (*c_inv || *c_mir) {
            AlgebraEntry A = make_algebra(algebra);
            Diagram D = Diagram::load(diagram);
            CochainPtr th = make_cocycle(cocycle, A);
            InvariantOptions io;
            io.search = so;
            io.check_cycles = check_cycles;
            if (*c_inv) {
                InvariantResult r = phi_invariant(D, *th, io);
                if (as_json)
                    std::cout << r.json() << "\n";
                else
                    std::cout << r.text();
                if (check_cycles && r.non_cycles) {
                    std::cerr << r.non_cycles << " weight sums are not cycles\n";
                    return kAxiom;
                }
                return kOk;
            }
            MirrorResult m = mirror_check(D, *th, io);
            if (as_json) {
                std::cout << json{{"ok", m.ok}, {"original", json::parse(m.original.json())},
                                  {"mirror", json::parse(m.mirrored.json())}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "diagram:\n" << m.original.text() << "mirror:\n" << m.mirrored.text()
                          << (m.ok ? "mirror multiset is the negation\n" : "mirror multiset is NOT the negation\n");
            }
            return m.ok ? kOk : kAxiom;
        }
        if (*c_hom) {
            AlgebraEntry A = make_algebra(algebra);
            XSet Y = make_xset(xset, A);
            for (int k = degree - 1; k <= degree + 1; ++k) {
                if (k < 0) continue;
                long long n = count_generators(*A.mcb, Y, k);
                if (n > ho.cap.max_generators)
                    throw BudgetExceeded("degree " + std::to_string(k) + " has " + std::to_string(n) +
                                         " generators, above the cap of " + std::to_string(ho.cap.max_generators) +
                                         "; homology is out of range for this algebra");
            }
            QuotientComplex Q(A.mcb, Y, ho);
            AbelianGroup h = modulus > 0 ? Q.homology_mod(degree, modulus) : Q.homology(degree);
            std::cout << "H_" << degree << (modulus > 0 ? "(Z/" + std::to_string(modulus) + ")" : "") << " = " << h.str()
                      << "\n";
            return kOk;
        }
        if (*c_bd) {
            AlgebraEntry A = make_algebra(algebra);
            XSet Y = make_xset(xset, A);
            PrismGen g = parse_gen(gen);
            check_generator(*A.mcb, Y, g);
            std::cout << boundary(*A.mcb, Y, g).str() << "\n";
            return kOk;
        }
        if (*c_lift) {
            if (example.empty() == input.empty()) throw StructuralError("give exactly one of --example and --input");
            BQCocycle th;
            if (!example.empty()) {
                th = bq_example(example);
            } else {
                std::ifstream f(input);
                th = bq_cocycle_from_json(json::parse(f));
            }
            auto L = LiftedCocycle::make(th);
            std::cout << "type X_Y = " << L->period() << ", lifted algebra has " << L->mcb().size() << " elements\n";
            CocycleReport rep = verify_mcb_cocycle(*L);
            std::cout << rep.summary() << "\n";
            if (!out.empty()) {
                json j;
                j["degree"] = L->degree();
                j["modulus"] = L->modulus();
                auto arr = json::array();
                for_each_generator(L->mcb(), L->xset(), L->degree(), [&](const PrismGen& g) {
                    long long v = L->value(g);
                    if (v) arr.push_back({{"gen", to_string(g)}, {"value", v}});
                }, GeneratorCap{ho.cap.max_generators});
                j["nonzero"] = arr;
                std::ofstream(out) << j.dump(1) << "\n";
            }
            return rep.ok ? kOk : kAxiom;
        }
        if (*c_make || *c_vc) {
            AlgebraEntry A = make_algebra(algebra);
            CochainPtr th;
            if (*c_make)
                th = make_cocycle(kind == "1" ? "phi-det" : kind == "2" ? "alexander-2" : "alexander-2p", A);
            else
                th = make_cocycle(cocycle, A);
            CocycleCheckOptions co;
            co.samples = samples;
            co.force_sampled = force_sampled;
            CocycleReport rep = verify_mcb_cocycle(*th, co);
            std::cout << th->name << " on " << algebra << ": " << rep.summary() << "\n";
            if (*c_make && !out.empty()) {
                json j;
                j["algebra"] = algebra;
                j["kind"] = kind;
                j["modulus"] = th->modulus();
                j["check"] = rep.summary();
                std::ofstream(out) << j.dump(2) << "\n";
            }
            return rep.ok ? kOk : kAxiom;
        }
    } catch (const AxiomFailure& e) {
        std::cerr << "axiom failure: " << e.what() << "\n";
        return kAxiom;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kStructural;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kStructural;
    } catch (const std::invalid_argument& e) {
        std::cerr << "structural error: bad number: " << e.what() << "\n";
        return kStructural;
    }
    return kUsage;
}
