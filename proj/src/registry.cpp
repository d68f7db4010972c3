#include "bqc/registry.hpp"

#include <stdexcept>

#include "bqc/group.hpp"

namespace bqc {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw StructuralError("bad " + what + " '" + s + "'");
    }
}

// a group with trivial operations; abelian groups only
McbPtr trivial_ops(std::vector<FinGroup> groups) {
    int n = 0;
    for (auto& g : groups) n += g.size();
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = a;
    return std::make_shared<const Mcb>(Mcb::dense(std::move(groups), t, t));
}

// a under* b = b^-1 a b, a over* b = a
McbPtr conjugation(const FinGroup& G) {
    const int n = G.size();
    std::vector<int> u(size_t(n) * n), o(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            u[size_t(a) * n + b] = G.conj(b, a);
            o[size_t(a) * n + b] = a;
        }
    return std::make_shared<const Mcb>(Mcb::dense({G}, u, o));
}

GroupHom trivial_hom(const FinGroup& G) {
    GroupHom h;
    h.image.assign(G.size(), G.identity());
    return h;
}

AlgebraEntry alexander_entry(const std::string& name, const MatrixGroup& MG, const GroupHom& phi) {
    ZnModule X{MG.modulus, MG.dim};
    GFamily F = make_alexander_gfamily(MG.group, phi, X, MG.mats);
    F.name = name;
    AlgebraEntry e;
    e.name = name;
    e.mcb = assoc_mcb_from_gfamily(F, false);
    return e;
}

}  // namespace

std::vector<long long> example_lambda(const MatrixGroup& G) {
    std::vector<long long> lam(G.mats.size());
    for (size_t i = 0; i < G.mats.size(); ++i) {
        const auto& m = G.mats[i];
        long long a = m[0], b = m[1], c = m[2], d = m[3];
        lam[i] = mod(2 * (a + d) * (b - c) * (1 - b * c), G.modulus);
    }
    return lam;
}

GroupHom example_phi(const MatrixGroup& G) {
    GroupHom h;
    for (const auto& m : G.mats) {
        long long a = m[0], b = m[1], c = m[2], d = m[3];
        const int e = ((a + b + c + 1) * (b + c + d + 1)) % 2 ? mod(-1, G.modulus) : 1 % G.modulus;
        int k = G.find({e, 0, 0, e});
        if (k < 0) throw StructuralError("scalar matrix missing from the group");
        h.image.push_back(k);
    }
    return h;
}

std::vector<std::string> algebra_names() {
    return {"trivial:N", "points:N", "conj:zN", "conj:sl2zN", "dihedral:N", "alexander:sl2z6-det-example",
            "alexander:sl2z2-det", "alexander:z3sq-cyclic6", "alexander:z7-units"};
}

AlgebraEntry make_algebra(const std::string& name) {
    auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    AlgebraEntry e;
    e.name = name;
    if (head == "trivial") {
        e.mcb = trivial_ops({FinGroup::cyclic(parse_int(arg, "group order"))});
        e.description = "Z_N with trivial operations";
    } else if (head == "points") {
        int n = parse_int(arg, "number of groups");
        e.mcb = trivial_ops(std::vector<FinGroup>(n, FinGroup::trivial()));
        e.description = "N trivial groups with trivial operations";
    } else if (head == "conj" && arg.rfind("sl2z", 0) == 0) {
        e.mcb = conjugation(special_linear2(parse_int(arg.substr(4), "modulus")).group);
        e.description = "SL(2, Z_n) with conjugation";
    } else if (head == "conj" && arg.rfind("z", 0) == 0) {
        e.mcb = conjugation(FinGroup::cyclic(parse_int(arg.substr(1), "group order")));
        e.description = "Z_n with conjugation";
    } else if (head == "dihedral") {
        FinBiquandle X = FinBiquandle::dihedral(parse_int(arg, "modulus"));
        e.mcb = assoc_mcb_from_gfamily(make_zn_family(X));
        e.description = "dihedral biquandle with its parallel operations";
    } else if (name == "alexander:sl2z6-det-example") {
        MatrixGroup G = special_linear2(6);
        e = alexander_entry(name, G, example_phi(G));
        e.form2 = MultilinearForm::determinant(6);
        e.lambda = example_lambda(G);
        e.lambda_modulus = 6;
        e.description = "X = Z_6^2, G = SL(2, Z_6), phi = +-I, lambda = 2(a+d)(b-c)(1-bc), f = det";
    } else if (name == "alexander:sl2z2-det") {
        MatrixGroup G = special_linear2(2);
        e = alexander_entry(name, G, trivial_hom(G.group));
        e.form2 = MultilinearForm::determinant(2);
        // the sign character: odd elements are the involutions
        e.lambda.resize(G.mats.size());
        for (int g = 0; g < G.group.size(); ++g)
            e.lambda[g] = (g != G.group.identity() && G.group.op(g, g) == G.group.identity()) ? 1 : 0;
        e.lambda_modulus = 2;
        e.form3 = MultilinearForm::gl2f2_invariant();
        e.description = "X = Z_2^2, G = SL(2, Z_2), trivial phi, lambda = sign, f = det or the invariant trilinear form";
    } else if (name == "alexander:z3sq-cyclic6") {
        // generated by -[[1,1],[0,1]], so lambda(g^k) = k mod 3 is a homomorphism
        MatrixGroup G = cyclic_matrix_group(3, 2, {-1, -1, 0, -1});
        e = alexander_entry(name, G, trivial_hom(G.group));
        e.form2 = MultilinearForm::determinant(3);
        e.lambda.resize(G.mats.size());
        for (size_t k = 0; k < G.mats.size(); ++k) e.lambda[k] = long(k) % 3;
        e.lambda_modulus = 3;
        e.description = "X = Z_3^2, G = <-[[1,1],[0,1]]> of order 6, trivial phi, lambda(g^k) = k mod 3, f = det";
    } else if (name == "alexander:z7-units") {
        MatrixGroup G = unit_subgroup(7, 2);
        e = alexander_entry(name, G, trivial_hom(G.group));
        e.form3 = MultilinearForm::product(7, 3, 1, 7);
        // every homomorphism G -> Z_7 is zero, so only the kind without lambda is offered
        e.description = "X = Z_7, G = {1, 2, 4}, trivial phi, f = xyz; alexander-2p only";
    } else {
        throw StructuralError("unknown algebra '" + name + "'");
    }
    e.name = name;
    auto named = std::make_shared<Mcb>(*e.mcb);
    named->name = name;
    e.mcb = named;
    return e;
}

XSet make_xset(const std::string& name, const AlgebraEntry& A) {
    if (name.empty() || name == "trivial") return XSet::trivial(A.mcb);
    if (name == "self") return XSet::self_under(A.mcb);
    if (name == "family") return XSet::family_under(A.mcb);
    if (name == "index") return XSet::index_set(A.mcb);
    throw StructuralError("unknown X-set '" + name + "' (trivial, self, family, index)");
}

std::vector<std::string> cocycle_names() { return {"phi-det", "alexander-2", "alexander-2p", "zero:M"}; }

CochainPtr make_cocycle(const std::string& name, const AlgebraEntry& A) {
    if (name.rfind("zero", 0) == 0) {
        long long m = 0;
        if (name.size() > 5 && name[4] == ':') m = parse_int(name.substr(5), "modulus");
        auto z = std::make_shared<FnCochain>(A.mcb, XSet::trivial(A.mcb), 2, m, [](const PrismGen&) { return 0LL; });
        z->name = name;
        return z;
    }
    if (name == "phi-det" || name == "alexander-1") {
        if (!A.form2) throw StructuralError("algebra " + A.name + " has no bilinear form for " + name);
        auto p = AlexanderPhi::make(AlexanderKind::One, A.mcb, *A.form2, A.lambda);
        p->name = name;
        return p;
    }
    if (name == "alexander-2" || name == "alexander-2p") {
        if (!A.form3) throw StructuralError("algebra " + A.name + " has no trilinear form for " + name);
        if (name == "alexander-2" && A.lambda.empty()) throw StructuralError("algebra " + A.name + " has no lambda for " + name);
        auto p = AlexanderPhi::make(name == "alexander-2" ? AlexanderKind::Two : AlexanderKind::TwoPrime, A.mcb,
                                    *A.form3, A.lambda);
        p->name = name;
        return p;
    }
    throw StructuralError("unknown cocycle '" + name + "'");
}

}  // namespace bqc
