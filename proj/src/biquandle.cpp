#include "bqc/biquandle.hpp"

#include <numeric>

namespace bqc {

namespace {

bool column_inverse(const std::vector<int>& t, int n, std::vector<int>& inv) {
    inv.assign(size_t(n) * n, -1);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            int c = t[a * n + b];
            if (inv[c * n + b] >= 0) return false;
            inv[c * n + b] = a;
        }
    return true;
}

}  // namespace

FinBiquandle::FinBiquandle(int n, std::vector<int> under, std::vector<int> over)
    : n_(n), u_(std::move(under)), o_(std::move(over)) {
    if (n <= 0) throw StructuralError("biquandle needs at least one element");
    if ((long long)u_.size() != (long long)n * n || (long long)o_.size() != (long long)n * n)
        throw StructuralError("biquandle tables must be n*n");
    for (int v : u_)
        if (v < 0 || v >= n) throw StructuralError("under table entry out of range");
    for (int v : o_)
        if (v < 0 || v >= n) throw StructuralError("over table entry out of range");
    std::vector<int> ui, oi;
    if (column_inverse(u_, n, ui) && column_inverse(o_, n, oi)) {
        std::vector<int> di(n, -1);
        bool ok = true;
        for (int z = 0; z < n && ok; ++z) {
            int b = this->under(z, z);
            if (di[b] >= 0) ok = false;
            di[b] = z;
        }
        if (ok) {
            ui_ = std::move(ui);
            oi_ = std::move(oi);
            di_ = std::move(di);
        }
    }
}

FinBiquandle FinBiquandle::trivial(int n) {
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = a;
    return FinBiquandle(n, t, t);
}

FinBiquandle FinBiquandle::dihedral(int n) {
    std::vector<int> u(size_t(n) * n), o(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            u[a * n + b] = mod(2LL * b - a, n);
            o[a * n + b] = a;
        }
    return FinBiquandle(n, u, o);
}

FinBiquandle FinBiquandle::alexander(int n, int t, int s) {
    std::vector<int> u(size_t(n) * n), o(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            u[a * n + b] = mod((long long)t * a + (long long)(s - t) * b, n);
            o[a * n + b] = mod((long long)s * a, n);
        }
    return FinBiquandle(n, u, o);
}

AxiomReport FinBiquandle::verify() const {
    AxiomReport r;
    const int n = n_;
    auto& b1 = r.add("B1 x under* x = x over* x");
    for (int x = 0; x < n; ++x)
        if (under(x, x) != over(x, x)) {
            b1.passed = false;
            b1.witness = {x};
            break;
        }
    auto& b2u = r.add("B2 under* a bijective");
    auto& b2o = r.add("B2 over* a bijective");
    for (int pass = 0; pass < 2; ++pass) {
        auto& c = pass ? b2o : b2u;
        for (int a = 0; a < n && c.passed; ++a) {
            std::vector<char> seen(n, 0);
            for (int x = 0; x < n; ++x) {
                int v = pass ? over(x, a) : under(x, a);
                if (seen[v]) {
                    c.passed = false;
                    c.witness = {a, x};
                    break;
                }
                seen[v] = 1;
            }
        }
    }
    auto& b2s = r.add("B2 S(x,y) = (y over* x, x under* y) bijective");
    {
        std::vector<char> seen(size_t(n) * n, 0);
        for (int x = 0; x < n && b2s.passed; ++x)
            for (int y = 0; y < n; ++y) {
                size_t k = size_t(over(y, x)) * n + under(x, y);
                if (seen[k]) {
                    b2s.passed = false;
                    b2s.witness = {x, y};
                    break;
                }
                seen[k] = 1;
            }
    }
    auto& e1 = r.add("B3 (x u y) u (z u y) = (x u z) u (y o z)");
    auto& e2 = r.add("B3 (x u y) o (z u y) = (x o z) u (y o z)");
    auto& e3 = r.add("B3 (x o y) o (z o y) = (x o z) o (y u z)");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int zuy = under(z, y), yoz = over(y, z), zoy = over(z, y), yuz = under(y, z);
                if (e1.passed && under(under(x, y), zuy) != under(under(x, z), yoz)) {
                    e1.passed = false;
                    e1.witness = {x, y, z};
                }
                if (e2.passed && over(under(x, y), zuy) != under(over(x, z), yoz)) {
                    e2.passed = false;
                    e2.witness = {x, y, z};
                }
                if (e3.passed && over(over(x, y), zoy) != over(over(x, z), yuz)) {
                    e3.passed = false;
                    e3.witness = {x, y, z};
                }
            }
    return r;
}

int parallel_op(const FinBiquandle& X, int a, int b, long long n, Side side) {
    int cur = a, bb = b;
    if (n >= 0) {
        for (long long i = 0; i < n; ++i) {
            cur = side == Side::Under ? X.under(cur, bb) : X.over(cur, bb);
            bb = X.under(bb, bb);
        }
        return cur;
    }
    if (!X.bijective()) throw AxiomFailure("negative parallel operation needs a certified biquandle");
    for (long long i = 0; i < -n; ++i) {
        bb = X.diag_inv(bb);
        cur = side == Side::Under ? X.under_inv(cur, bb) : X.over_inv(cur, bb);
    }
    return cur;
}

BqXSet BqXSet::trivial(const FinBiquandle& X) {
    BqXSet y;
    y.points = 1;
    y.act.assign(X.size(), 0);
    return y;
}

BqXSet BqXSet::self_under(const FinBiquandle& X) {
    BqXSet y;
    y.points = X.size();
    y.act = X.under_table();
    return y;
}

AxiomReport BqXSet::verify(const FinBiquandle& X) const {
    AxiomReport r;
    const int n = X.size();
    if ((long long)act.size() != (long long)points * n) throw StructuralError("X-set table must be |Y|*|X|");
    for (int v : act)
        if (v < 0 || v >= points) throw StructuralError("X-set table entry out of range");
    auto& bij = r.add("y -> y*a bijective");
    for (int a = 0; a < n && bij.passed; ++a) {
        std::vector<char> seen(points, 0);
        for (int y = 0; y < points; ++y) {
            int v = act[y * n + a];
            if (seen[v]) {
                bij.passed = false;
                bij.witness = {y, a};
                break;
            }
            seen[v] = 1;
        }
    }
    auto& ex = r.add("(y*a)*(b over* a) = (y*b)*(a under* b)");
    for (int y = 0; y < points && ex.passed; ++y)
        for (int a = 0; a < n && ex.passed; ++a)
            for (int b = 0; b < n; ++b)
                if (act[act[y * n + a] * n + X.over(b, a)] != act[act[y * n + b] * n + X.under(a, b)]) {
                    ex.passed = false;
                    ex.witness = {y, a, b};
                    break;
                }
    return r;
}

int parallel_act(const FinBiquandle& X, const BqXSet& Y, int y, int x, long long n) {
    const int nx = X.size();
    int cur = y, xx = x;
    if (n >= 0) {
        for (long long i = 0; i < n; ++i) {
            cur = Y.act[cur * nx + xx];
            xx = X.under(xx, xx);
        }
        return cur;
    }
    if (!X.bijective()) throw AxiomFailure("negative parallel action needs a certified biquandle");
    for (long long i = 0; i < -n; ++i) {
        xx = X.diag_inv(xx);
        int prev = -1;
        for (int z = 0; z < Y.points; ++z)
            if (Y.act[z * nx + xx] == cur) {
                prev = z;
                break;
            }
        if (prev < 0) throw AxiomFailure("X-set action is not bijective");
        cur = prev;
    }
    return cur;
}

namespace {

long long scan_type(const FinBiquandle& X, const BqXSet* Y, long long cap) {
    const int n = X.size();
    const int ny = Y ? Y->points : 0;
    std::vector<int> pu(size_t(n) * n), po(size_t(n) * n), py(size_t(n) * ny), bb(n);
    for (int b = 0; b < n; ++b) {
        bb[b] = b;
        for (int a = 0; a < n; ++a) pu[b * n + a] = po[b * n + a] = a;
        for (int y = 0; y < ny; ++y) py[b * ny + y] = y;
    }
    for (long long step = 1; step <= cap; ++step) {
        bool fixed = true;
        for (int b = 0; b < n; ++b) {
            int c = bb[b];
            for (int a = 0; a < n; ++a) {
                int& u = pu[b * n + a];
                int& o = po[b * n + a];
                u = X.under(u, c);
                o = X.over(o, c);
                fixed = fixed && u == a && o == a;
            }
            for (int y = 0; y < ny; ++y) {
                int& v = py[b * ny + y];
                v = Y->act[v * n + c];
                fixed = fixed && v == y;
            }
            bb[b] = X.under(c, c);
        }
        if (fixed) return step;
    }
    throw BudgetExceeded("type search exceeded " + std::to_string(cap) + " steps");
}

}  // namespace

long long biquandle_type(const FinBiquandle& X, long long cap) { return scan_type(X, nullptr, cap); }

long long type_with_xset(const FinBiquandle& X, const BqXSet& Y, long long cap) { return scan_type(X, &Y, cap); }

AxiomReport GFamily::verify() const {
    AxiomReport r;
    const int n = nx, ng = G.size();
    if ((long long)U.size() != (long long)ng * n * n || (long long)O.size() != (long long)ng * n * n)
        throw StructuralError("family tables must be |G|*|X|*|X|");
    auto& e1 = r.add("(x u^g y) u^h (z o^g y) = (x u^h z) u^(h^-1gh) (y u^h z)");
    auto& e2 = r.add("(x o^g y) u^h (z o^g y) = (x u^h z) o^(h^-1gh) (y u^h z)");
    auto& e3 = r.add("(x o^g y) o^h (z o^g y) = (x o^h z) o^(h^-1gh) (y u^h z)");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            int k = G.conj(h, g);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    int xug = u(g, x, y), xog = o(g, x, y);
                    for (int z = 0; z < n; ++z) {
                        int zog = o(g, z, y), yuh = u(h, y, z);
                        if (e1.passed && u(h, xug, zog) != u(k, u(h, x, z), yuh)) {
                            e1.passed = false;
                            e1.witness = {x, y, z, g, h};
                        }
                        if (e2.passed && u(h, xog, zog) != o(k, u(h, x, z), yuh)) {
                            e2.passed = false;
                            e2.witness = {x, y, z, g, h};
                        }
                        if (e3.passed && o(h, xog, zog) != o(k, o(h, x, z), yuh)) {
                            e3.passed = false;
                            e3.witness = {x, y, z, g, h};
                        }
                    }
                }
        }
    auto& pu = r.add("x u^(gh) y = (x u^g y) u^h (y u^g y)");
    auto& po = r.add("x o^(gh) y = (x o^g y) o^h (y o^g y)");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            int gh = G.op(g, h);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (pu.passed && u(gh, x, y) != u(h, u(g, x, y), u(g, y, y))) {
                        pu.passed = false;
                        pu.witness = {x, y, g, h};
                    }
                    if (po.passed && o(gh, x, y) != o(h, o(g, x, y), o(g, y, y))) {
                        po.passed = false;
                        po.witness = {x, y, g, h};
                    }
                }
        }
    auto& id = r.add("x u^e y = x = x o^e y");
    const int e = G.identity();
    for (int x = 0; x < n && id.passed; ++x)
        for (int y = 0; y < n; ++y)
            if (u(e, x, y) != x || o(e, x, y) != x) {
                id.passed = false;
                id.witness = {x, y};
                break;
            }
    auto& dg = r.add("x u^g x = x o^g x");
    for (int g = 0; g < ng && dg.passed; ++g)
        for (int x = 0; x < n; ++x)
            if (u(g, x, x) != o(g, x, x)) {
                dg.passed = false;
                dg.witness = {x, g};
                break;
            }
    return r;
}

namespace {

void check_family_size(long long ng, long long nx) {
    if (ng * nx * nx > family_entry_cap)
        throw BudgetExceeded("family would need " + std::to_string(ng * nx * nx) + " table entries");
}

void require_phi(const FinGroup& G, const GroupHom& phi) {
    auto rep = phi.verify(G, G);
    if (!rep.ok()) throw AxiomFailure("phi is not a homomorphism:\n" + rep.summary());
    if (!phi.central_image(G)) throw AxiomFailure("phi does not map into the center");
}

}  // namespace

GFamily make_alexander_gfamily(const FinGroup& G, const GroupHom& phi, const ZnModule& M,
                               const std::vector<std::vector<int>>& mats) {
    const int ng = G.size(), nx = M.size();
    check_family_size(ng, nx);
    require_phi(G, phi);
    if ((int)mats.size() != ng) throw StructuralError("one matrix per group element is required");
    for (auto& m : mats)
        if ((int)m.size() != M.dim * M.dim) throw StructuralError("action matrix has wrong shape");
    AlexanderData ad{M, {}, phi.image};
    ad.action.assign(ng, std::vector<int>(nx));
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x) ad.action[g][x] = M.act(x, mats[g]);
    // right action: x^(gh) = (x^g)^h, and the identity acts trivially
    for (int x = 0; x < nx; ++x)
        if (ad.action[G.identity()][x] != x) throw AxiomFailure("identity does not act trivially");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int x = 0; x < nx; ++x)
                if (ad.action[G.op(g, h)][x] != ad.action[h][ad.action[g][x]])
                    throw AxiomFailure("matrices do not define a right action of G");
    GFamily F;
    F.nx = nx;
    F.G = G;
    F.U.resize(size_t(ng) * nx * nx);
    F.O.resize(size_t(ng) * nx * nx);
    for (int g = 0; g < ng; ++g) {
        const auto& ag = ad.action[g];
        const auto& ap = ad.action[phi.image[g]];
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y) {
                size_t k = (size_t(g) * nx + x) * nx + y;
                F.U[k] = M.add(ag[x], M.sub(ap[y], ag[y]));
                F.O[k] = ap[x];
            }
    }
    F.alexander = std::move(ad);
    F.name = "alexander";
    return F;
}

GFamily make_generalized_alexander_gfamily(const FinGroup& X, const FinGroup& G, const GroupHom& phi,
                                           const std::vector<std::vector<int>>& act) {
    const int ng = G.size(), nx = X.size();
    check_family_size(ng, nx);
    require_phi(G, phi);
    if ((int)act.size() != ng) throw StructuralError("one automorphism per group element is required");
    for (int g = 0; g < ng; ++g) {
        if ((int)act[g].size() != nx) throw StructuralError("automorphism table has wrong length");
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < nx; ++b)
                if (act[g][X.op(a, b)] != X.op(act[g][a], act[g][b]))
                    throw AxiomFailure("G does not act by automorphisms");
    }
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int x = 0; x < nx; ++x)
                if (act[G.op(g, h)][x] != act[h][act[g][x]]) throw AxiomFailure("not a right action");
    GFamily F;
    F.nx = nx;
    F.G = G;
    F.U.resize(size_t(ng) * nx * nx);
    F.O.resize(size_t(ng) * nx * nx);
    for (int g = 0; g < ng; ++g) {
        const auto& ag = act[g];
        const auto& ap = act[phi.image[g]];
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y) {
                size_t k = (size_t(g) * nx + x) * nx + y;
                F.U[k] = X.op(ag[X.op(x, X.inv(y))], ap[y]);
                F.O[k] = ap[x];
            }
    }
    F.name = "generalized-alexander";
    return F;
}

GFamily make_zn_family(const FinBiquandle& X, long long period, long long cap) {
    const long long type = biquandle_type(X, cap);
    const long long t = period ? period : type;
    if (t % type) throw AxiomFailure("period must be a multiple of the type");
    const int nx = X.size();
    check_family_size(t, nx);
    GFamily F;
    F.nx = nx;
    F.G = FinGroup::cyclic(int(t));
    F.U.resize(size_t(t) * nx * nx);
    F.O.resize(size_t(t) * nx * nx);
    for (int y = 0; y < nx; ++y)
        for (int x = 0; x < nx; ++x) {
            int cu = x, co = x, bb = y;
            for (int g = 0; g < t; ++g) {
                size_t k = (size_t(g) * nx + x) * nx + y;
                F.U[k] = cu;
                F.O[k] = co;
                cu = X.under(cu, bb);
                co = X.over(co, bb);
                bb = X.under(bb, bb);
            }
        }
    F.name = "parallel";
    return F;
}

}  // namespace bqc
