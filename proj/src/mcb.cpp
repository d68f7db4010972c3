#include "bqc/mcb.hpp"

#include <algorithm>

namespace bqc {

namespace {

bool column_inverse(const std::vector<int>& t, int n, std::vector<int>& inv) {
    inv.assign(size_t(n) * n, -1);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            int c = t[size_t(a) * n + b];
            if (inv[size_t(c) * n + b] >= 0) return false;
            inv[size_t(c) * n + b] = a;
        }
    return true;
}

}  // namespace

Mcb Mcb::dense(std::vector<FinGroup> groups, std::vector<int> under, std::vector<int> over) {
    Mcb m;
    if (groups.empty()) throw StructuralError("an MCB needs at least one group");
    int n = 0;
    for (auto& g : groups) {
        m.start_.push_back(n);
        m.gsize_.push_back(g.size());
        m.ident_.push_back(g.identity());
        for (int i = 0; i < g.size(); ++i) m.label_.push_back(int(m.start_.size()) - 1);
        n += g.size();
    }
    m.n_ = n;
    if ((long long)under.size() != (long long)n * n || (long long)over.size() != (long long)n * n)
        throw StructuralError("MCB tables must be |X|*|X| over the disjoint union");
    for (int v : under)
        if (v < 0 || v >= n) throw StructuralError("under table entry out of range");
    for (int v : over)
        if (v < 0 || v >= n) throw StructuralError("over table entry out of range");
    m.groups_ = std::move(groups);
    m.u_ = std::move(under);
    m.o_ = std::move(over);
    m.finish_inverses();
    return m;
}

void Mcb::finish_inverses() {
    if (factored_) return;
    std::vector<int> ui, oi;
    invertible_ = column_inverse(u_, n_, ui) && column_inverse(o_, n_, oi);
    if (invertible_) {
        ui_ = std::move(ui);
        oi_ = std::move(oi);
    }
}

Mcb Mcb::associated(std::shared_ptr<const GFamily> F) {
    Mcb m;
    m.factored_ = true;
    m.fam_ = F;
    m.nx_ = F->nx;
    m.ng_ = F->G.size();
    const int nx = m.nx_, ng = m.ng_;
    m.n_ = nx * ng;
    m.fx_.resize(m.n_);
    m.fg_.resize(m.n_);
    for (int x = 0; x < nx; ++x) {
        m.start_.push_back(x * ng);
        m.gsize_.push_back(ng);
        m.ident_.push_back(F->G.identity());
        for (int g = 0; g < ng; ++g) {
            m.fx_[x * ng + g] = x;
            m.fg_[x * ng + g] = g;
            m.label_.push_back(x);
        }
    }
    m.conj_.resize(size_t(ng) * ng);
    m.conj_inv_.resize(size_t(ng) * ng);
    for (int h = 0; h < ng; ++h)
        for (int g = 0; g < ng; ++g) {
            int c = F->G.conj(h, g);
            m.conj_[h * ng + g] = c;
            m.conj_inv_[h * ng + c] = g;
        }
    m.fui_.assign(size_t(ng) * nx * nx, -1);
    m.foi_.assign(size_t(ng) * nx * nx, -1);
    bool ok = true;
    for (int h = 0; h < ng && ok; ++h)
        for (int y = 0; y < nx && ok; ++y)
            for (int x = 0; x < nx; ++x) {
                size_t ku = (size_t(h) * nx + F->u(h, x, y)) * nx + y;
                size_t ko = (size_t(h) * nx + F->o(h, x, y)) * nx + y;
                if (m.fui_[ku] >= 0 || m.foi_[ko] >= 0) {
                    ok = false;
                    break;
                }
                m.fui_[ku] = x;
                m.foi_[ko] = x;
            }
    m.invertible_ = ok;
    m.name = F->name;
    return m;
}

Mcb Mcb::densified(long long entry_cap) const {
    if (!factored_) return *this;
    if ((long long)n_ * n_ > entry_cap)
        throw BudgetExceeded("dense tables would need " + std::to_string((long long)n_ * n_) + " entries");
    std::vector<FinGroup> groups(num_groups(), fam_->G);
    std::vector<int> u(size_t(n_) * n_), o(size_t(n_) * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            u[size_t(a) * n_ + b] = under(a, b);
            o[size_t(a) * n_ + b] = over(a, b);
        }
    Mcb d = dense(std::move(groups), std::move(u), std::move(o));
    d.fam_ = fam_;
    d.nx_ = nx_;
    d.ng_ = ng_;
    d.fx_ = fx_;
    d.fg_ = fg_;
    d.name = name;
    return d;
}

int Mcb::product(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw StructuralError("element index out of range");
    if (label_[a] != label_[b])
        throw StructuralError("product of elements from different groups: " + std::to_string(a) + "," +
                              std::to_string(b));
    return mul(a, b);
}

AxiomReport Mcb::verify(const VerifyOptions& opt) const { return verify_impl(false, opt); }
AxiomReport Mcb::verify_biquandle_form(const VerifyOptions& opt) const { return verify_impl(true, opt); }

AxiomReport Mcb::verify_impl(bool bq, const VerifyOptions& opt) const {
    AxiomReport r;
    const int n = n_;
    long long pair_count = 0;
    for (int l = 0; l < num_groups(); ++l) pair_count += (long long)gsize_[l] * gsize_[l];
    const bool sample = (long long)n * n * n > opt.exhaustive_cap || (long long)n * pair_count > opt.exhaustive_cap;
    std::mt19937_64 rng(opt.seed);
    auto rnd = [&](int k) { return int(rng() % (unsigned long long)k); };
    if (sample) {
        r.sampled = true;
        r.samples = opt.samples;
    }
    auto fail = [](AxiomCheck& c, std::vector<int> w) {
        if (c.passed) {
            c.passed = false;
            c.witness = std::move(w);
        }
    };

    if (bq) {
        auto& b1 = r.add("B1 x under* x = x over* x");
        for (int x = 0; x < n; ++x)
            if (under(x, x) != over(x, x)) fail(b1, {x});
        auto& b2 = r.add("B2 columns and S bijective");
        if (sample && (long long)n * n > opt.exhaustive_cap) {
            // bijectivity of columns follows from the inverse tables when they exist
            if (!invertible_) fail(b2, {});
        } else {
            for (int b = 0; b < n && b2.passed; ++b) {
                std::vector<char> su(n, 0), so(n, 0);
                for (int a = 0; a < n; ++a) {
                    int x = under(a, b), y = over(a, b);
                    if (su[x] || so[y]) {
                        fail(b2, {a, b});
                        break;
                    }
                    su[x] = so[y] = 1;
                }
            }
            std::vector<char> seen(size_t(n) * n, 0);
            for (int x = 0; x < n && b2.passed; ++x)
                for (int y = 0; y < n; ++y) {
                    size_t k = size_t(over(y, x)) * n + under(x, y);
                    if (seen[k]) {
                        fail(b2, {x, y});
                        break;
                    }
                    seen[k] = 1;
                }
        }
    }

    auto& e1 = r.add("(x u y) u (z u y) = (x u z) u (y o z)");
    auto& e2 = r.add("(x u y) o (z u y) = (x o z) u (y o z)");
    auto& e3 = r.add("(x o y) o (z o y) = (x o z) o (y u z)");
    auto triple = [&](int x, int y, int z) {
        int zuy = under(z, y), yoz = over(y, z), zoy = over(z, y), yuz = under(y, z);
        if (under(under(x, y), zuy) != under(under(x, z), yoz)) fail(e1, {x, y, z});
        if (over(under(x, y), zuy) != under(over(x, z), yoz)) fail(e2, {x, y, z});
        if (over(over(x, y), zoy) != over(over(x, z), yuz)) fail(e3, {x, y, z});
    };
    if (sample) {
        for (long long s = 0; s < opt.samples; ++s) triple(rnd(n), rnd(n), rnd(n));
    } else {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) triple(x, y, z);
    }

    auto& hu = r.add("under* x is a homomorphism G_a -> G_(a u x)");
    auto& ho = r.add("over* x is a homomorphism G_a -> G_(a o x)");
    auto& du = r.add("x u ab = (x u a) u (b o a)");
    auto& dov = r.add("x o ab = (x o a) o (b o a)");
    auto& tw = r.add("a^-1 b o a = b a^-1 u a");
    auto pairx = [&](int x, int a, int b) {
        int ab = mul(a, b);
        int au = under(a, x), bu = under(b, x), ao = over(a, x), bo = over(b, x);
        if (label_[au] != label_[bu] || under(ab, x) != mul(au, bu)) fail(hu, {a, b, x});
        if (label_[ao] != label_[bo] || over(ab, x) != mul(ao, bo)) fail(ho, {a, b, x});
        int boa = over(b, a);
        if (under(x, ab) != under(under(x, a), boa)) fail(du, {x, a, b});
        if (over(x, ab) != over(over(x, a), boa)) fail(dov, {x, a, b});
    };
    auto pair = [&](int a, int b) {
        int ai = inv(a);
        if (over(mul(ai, b), a) != under(mul(b, ai), a)) fail(tw, {a, b});
    };
    if (sample) {
        for (long long s = 0; s < opt.samples; ++s) {
            int a = rnd(n);
            int l = label_[a];
            int b = start_[l] + rnd(gsize_[l]);
            pairx(rnd(n), a, b);
            pair(a, b);
        }
    } else {
        for (int l = 0; l < num_groups(); ++l)
            for (int i = 0; i < gsize_[l]; ++i)
                for (int j = 0; j < gsize_[l]; ++j) {
                    int a = start_[l] + i, b = start_[l] + j;
                    pair(a, b);
                    for (int x = 0; x < n; ++x) pairx(x, a, b);
                }
    }
    auto& ei = r.add("x u e = x = x o e");
    for (int l = 0; l < num_groups(); ++l) {
        int e = identity(l);
        for (int x = 0; x < n; ++x)
            if (under(x, e) != x || over(x, e) != x) fail(ei, {x, e});
    }
    return r;
}

XSet XSet::trivial(McbPtr M) {
    XSet y;
    y.kind_ = Kind::Trivial;
    y.points_ = 1;
    y.m_ = std::move(M);
    y.name = "trivial";
    return y;
}

XSet XSet::table(McbPtr M, int points, std::vector<int> act) {
    if (points <= 0) throw StructuralError("an X-set needs at least one point");
    if ((long long)act.size() != (long long)points * M->size()) throw StructuralError("X-set table must be |Y|*|X|");
    for (int v : act)
        if (v < 0 || v >= points) throw StructuralError("X-set table entry out of range");
    XSet y;
    y.kind_ = Kind::Table;
    y.points_ = points;
    y.m_ = std::move(M);
    y.act_ = std::move(act);
    const int n = y.m_->size();
    y.inv_.assign(y.act_.size(), -1);
    for (int x = 0; x < n; ++x)
        for (int p = 0; p < points; ++p) y.inv_[size_t(y.act_[size_t(p) * n + x]) * n + x] = p;
    y.name = "table";
    return y;
}

XSet XSet::self_under(McbPtr M) {
    XSet y;
    y.kind_ = Kind::SelfUnder;
    y.points_ = M->size();
    y.m_ = std::move(M);
    y.name = "self";
    return y;
}

XSet XSet::index_set(McbPtr M) {
    const int n = M->size(), k = M->num_groups();
    std::vector<int> act(size_t(k) * n);
    for (int l = 0; l < k; ++l)
        for (int x = 0; x < n; ++x) {
            int img = M->under(M->identity(l), x);
            act[size_t(l) * n + x] = M->label(img);
        }
    XSet y = table(std::move(M), k, std::move(act));
    y.name = "index-set";
    return y;
}

XSet XSet::family_under(McbPtr M) {
    if (!M->family()) throw StructuralError("family action needs a carrier of the form X x G");
    XSet y;
    y.kind_ = Kind::FamilyUnder;
    y.points_ = M->nx();
    y.m_ = std::move(M);
    y.name = "family";
    return y;
}

int XSet::act_inv(int y, int x) const {
    switch (kind_) {
        case Kind::Trivial: return 0;
        case Kind::Table: {
            int v = inv_[size_t(y) * m_->size() + x];
            if (v < 0) throw AxiomFailure("X-set action is not bijective");
            return v;
        }
        case Kind::SelfUnder:
            if (!m_->invertible()) throw AxiomFailure("under* columns are not bijective");
            return m_->under_inv(y, x);
        default: {
            const GFamily& F = *m_->family();
            int g = m_->fg(x), xx = m_->fx(x);
            for (int z = 0; z < F.nx; ++z)
                if (F.u(g, z, xx) == y) return z;
            throw AxiomFailure("family action is not bijective");
        }
    }
}

AxiomReport XSet::verify(const VerifyOptions& opt) const {
    AxiomReport r;
    const Mcb& M = *m_;
    const int n = M.size(), ny = points_;
    auto fail = [](AxiomCheck& c, std::vector<int> w) {
        if (c.passed) {
            c.passed = false;
            c.witness = std::move(w);
        }
    };
    long long pair_count = 0;
    for (int l = 0; l < M.num_groups(); ++l) pair_count += (long long)M.group_size(l) * M.group_size(l);
    const bool sample = (long long)ny * n * n > opt.exhaustive_cap || (long long)ny * pair_count > opt.exhaustive_cap;
    if (sample) {
        r.sampled = true;
        r.samples = opt.samples;
    }
    std::mt19937_64 rng(opt.seed);
    auto rnd = [&](int k) { return int(rng() % (unsigned long long)k); };
    auto& id = r.add("y*e = y");
    for (int y = 0; y < ny; ++y)
        for (int l = 0; l < M.num_groups(); ++l)
            if (act(y, M.identity(l)) != y) fail(id, {y, l});
    auto& pr = r.add("y*(ab) = (y*a)*(b o a)");
    auto& ex = r.add("(y*a)*(b o a) = (y*b)*(a u b)");
    auto one_pair = [&](int y, int a, int b) {
        if (act(y, M.mul(a, b)) != act(act(y, a), M.over(b, a))) fail(pr, {y, a, b});
    };
    auto one_any = [&](int y, int a, int b) {
        if (act(act(y, a), M.over(b, a)) != act(act(y, b), M.under(a, b))) fail(ex, {y, a, b});
    };
    if (sample) {
        for (long long s = 0; s < opt.samples; ++s) {
            int y = rnd(ny), a = rnd(n);
            int l = M.label(a);
            one_pair(y, a, M.start(l) + rnd(M.group_size(l)));
            one_any(y, a, rnd(n));
        }
    } else {
        for (int y = 0; y < ny; ++y) {
            for (int l = 0; l < M.num_groups(); ++l)
                for (int i = 0; i < M.group_size(l); ++i)
                    for (int j = 0; j < M.group_size(l); ++j) one_pair(y, M.start(l) + i, M.start(l) + j);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) one_any(y, a, b);
        }
    }
    return r;
}

McbPtr assoc_mcb_from_gfamily(const GFamily& F, bool dense_if_small) {
    auto fam = std::make_shared<const GFamily>(F);
    Mcb m = Mcb::associated(fam);
    if (dense_if_small && (long long)m.size() * m.size() <= 1000000) return std::make_shared<const Mcb>(m.densified());
    return std::make_shared<const Mcb>(std::move(m));
}

ParallelXSet xset_from_parallel(const FinBiquandle& X, const BqXSet& Y) {
    const long long t = type_with_xset(X, Y);
    GFamily F = make_zn_family(X, t);
    McbPtr M = assoc_mcb_from_gfamily(F);
    const int nx = X.size(), n = M->size();
    std::vector<int> act(size_t(Y.points) * n);
    for (int y = 0; y < Y.points; ++y)
        for (int x = 0; x < nx; ++x) {
            int cur = y, xx = x;
            for (long long k = 0; k < t; ++k) {
                act[size_t(y) * n + x * t + k] = cur;
                cur = Y.act[cur * nx + xx];
                xx = X.under(xx, xx);
            }
        }
    XSet xs = XSet::table(M, Y.points, std::move(act));
    xs.name = "parallel";
    return {M, std::move(xs), t};
}

}  // namespace bqc
