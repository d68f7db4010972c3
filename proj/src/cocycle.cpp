#include "bqc/cocycle.hpp"

#include <random>
#include <sstream>

namespace bqc {

void TableCochain::set(const PrismGen& g, long long v) {
    if (g.deg != degree_) throw StructuralError("cochain entry " + to_string(g) + " has the wrong degree");
    v = reduce_coeff(v, modulus_);
    if (v == 0 && !strict_)
        t_.erase(g);
    else
        t_[g] = v;
}

long long TableCochain::value(const PrismGen& g) const {
    auto it = t_.find(g);
    if (it != t_.end()) return it->second;
    if (strict_) throw StructuralError("cochain has no value at " + to_string(g));
    return 0;
}

long long evaluate_cochain(const Cochain& f, const Chain& c) {
    const long long m = f.modulus();
    long long acc = 0;
    for (auto& [g, k] : c.terms()) {
        if (g.deg != f.degree()) throw StructuralError("chain term " + to_string(g) + " has the wrong degree");
        long long kk = m ? (long long)(((k % m) + m) % m) : k.convert_to<long long>();
        long long v = f.value(g);
        acc = reduce_coeff(acc + (m ? (long long)((__int128)kk * v % m) : kk * v), m);
    }
    return acc;
}

std::string CocycleReport::summary() const {
    std::ostringstream os;
    os << (ok ? "cocycle" : "not a cocycle") << " (" << (sampled ? "sampled" : "exhaustive") << ": "
       << checked_degenerate << " degenerate elements, " << checked_boundary << " boundaries)";
    if (!ok) os << "; witness " << witness;
    return os.str();
}

namespace {

struct Sampler {
    const Mcb& M;
    const XSet& Y;
    std::mt19937_64 rng;

    int uniform(int n) { return int(std::uniform_int_distribution<int>(0, n - 1)(rng)); }

    PrismGen generator(int k, bool need_two_blocks) {
        for (;;) {
            PrismGen g;
            g.y = uniform(Y.points());
            int len = 0;
            std::vector<int> lens;
            for (int i = 0; i < k; ++i) {
                ++len;
                if (i + 1 == k || uniform(2)) {
                    lens.push_back(len);
                    len = 0;
                }
            }
            if (need_two_blocks && lens.size() < 2) continue;
            for (int L : lens) {
                int buf[kMaxDegree];
                buf[0] = uniform(M.size());
                int l = M.label(buf[0]);
                for (int j = 1; j < L; ++j) buf[j] = M.start(l) + uniform(M.group_size(l));
                g.push_block(buf, L);
            }
            return g;
        }
    }

    Chain degenerate(int n) {
        PrismGen g = generator(n, true);
        int i = uniform(g.nblocks - 1);
        int p = g.block_start(i), q = p + g.len[i];
        int l = M.label(g.e[p]);
        for (int j = 0; j < g.len[i + 1]; ++j) g.e[q + j] = M.start(l) + uniform(M.group_size(l));
        return degenerate_from(M, g, i);
    }
};

}  // namespace

CocycleReport verify_mcb_cocycle(const Cochain& f, const CocycleCheckOptions& opt) {
    CocycleReport r;
    const Mcb& M = f.mcb();
    const XSet& Y = f.xset();
    const int n = f.degree();
    const long long m = f.modulus();
    auto bd_value = [&](const PrismGen& g) {
        long long acc = 0;
        boundary_terms(M, Y, g, [&](const PrismGen& h, int s) { acc = reduce_coeff(acc + s * f.value(h), m); });
        return acc;
    };
    const long long count = count_generators(M, Y, n + 1);
    if (!opt.force_sampled && count <= opt.exhaustive_cap) {
        GeneratorCap cap{opt.exhaustive_cap};
        for_each_degenerate(
            M, Y, n,
            [&](const Chain& d) {
                if (!r.ok) return;
                r.checked_degenerate++;
                if (evaluate_cochain(f, d) != 0) {
                    r.ok = false;
                    r.witness = "nonzero on degenerate " + d.str();
                }
            },
            cap);
        if (!r.ok) return r;
        for_each_generator(
            M, Y, n + 1,
            [&](const PrismGen& g) {
                if (!r.ok) return;
                r.checked_boundary++;
                if (bd_value(g) != 0) {
                    r.ok = false;
                    r.witness = "nonzero on the boundary of " + to_string(g);
                }
            },
            cap);
        return r;
    }
    r.sampled = true;
    Sampler S{M, Y, std::mt19937_64(opt.seed)};
    if (n >= 2)
        for (long long s = 0; s < opt.samples && r.ok; ++s) {
            Chain d = S.degenerate(n);
            r.checked_degenerate++;
            if (evaluate_cochain(f, d) != 0) {
                r.ok = false;
                r.witness = "nonzero on degenerate " + d.str();
            }
        }
    for (long long s = 0; s < opt.samples && r.ok; ++s) {
        PrismGen g = S.generator(n + 1, false);
        r.checked_boundary++;
        if (bd_value(g) != 0) {
            r.ok = false;
            r.witness = "nonzero on the boundary of " + to_string(g);
        }
    }
    return r;
}

long long BQCocycle::at(int y, const int* xs) const {
    size_t idx = y;
    for (int i = 0; i < arity; ++i) idx = idx * X.size() + xs[i];
    return table[idx];
}

BQCocycle BQCocycle::from_function(const FinBiquandle& X, const BqXSet& Y, int arity, long long modulus,
                                   const std::function<long long(int, const int*)>& f) {
    if (arity < 2 || arity > 3) throw StructuralError("biquandle cocycles of arity 2 or 3 only");
    BQCocycle th{arity, X, Y, modulus, {}};
    const int nx = X.size();
    size_t total = Y.points;
    for (int i = 0; i < arity; ++i) total *= nx;
    th.table.resize(total);
    int xs[3];
    for (size_t idx = 0; idx < total; ++idx) {
        size_t r = idx;
        for (int i = arity - 1; i >= 0; --i) {
            xs[i] = int(r % nx);
            r /= nx;
        }
        th.table[idx] = reduce_coeff(f(int(r), xs), modulus);
    }
    return th;
}

CocycleReport verify_bq_cocycle(const BQCocycle& th) {
    CocycleReport r;
    const FinBiquandle& X = th.X;
    const int nx = X.size(), n = th.arity;
    if (th.table.size() == 0) throw StructuralError("empty cocycle table");
    auto tuple_str = [&](int y, const int* xs, int k) {
        std::ostringstream os;
        os << "(y=" << y;
        for (int i = 0; i < k; ++i) os << ", x" << i + 1 << "=" << xs[i];
        os << ")";
        return os.str();
    };
    // degeneracy
    {
        int xs[4] = {0, 0, 0, 0};
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= nx;
        for (int y = 0; y < th.Y.points && r.ok; ++y)
            for (long long c = 0; c < total && r.ok; ++c) {
                long long q = c;
                for (int i = n - 1; i >= 0; --i) {
                    xs[i] = int(q % nx);
                    q /= nx;
                }
                bool deg = false;
                for (int i = 0; i + 1 < n; ++i) deg |= xs[i] == xs[i + 1];
                if (!deg) continue;
                r.checked_degenerate++;
                if (th.at(y, xs) != 0) {
                    r.ok = false;
                    r.witness = "nonzero at degenerate " + tuple_str(y, xs, n);
                }
            }
    }
    if (!r.ok) return r;
    // the coboundary over all (y, x1..x_{n+1})
    int xs[4], ys[4];
    long long total = 1;
    for (int i = 0; i <= n; ++i) total *= nx;
    for (int y = 0; y < th.Y.points && r.ok; ++y)
        for (long long c = 0; c < total && r.ok; ++c) {
            long long q = c;
            for (int i = n; i >= 0; --i) {
                xs[i] = int(q % nx);
                q /= nx;
            }
            long long acc = 0;
            for (int i = 0; i <= n; ++i) {
                const int s = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1) with i from 0
                int k = 0;
                for (int j = 0; j <= n; ++j)
                    if (j != i) ys[k++] = xs[j];
                acc += s * th.at(y, ys);
                k = 0;
                for (int j = 0; j <= n; ++j) {
                    if (j < i) ys[k++] = X.under(xs[j], xs[i]);
                    if (j > i) ys[k++] = X.over(xs[j], xs[i]);
                }
                acc -= s * th.at(th.Y(y, xs[i], nx), ys);
            }
            r.checked_boundary++;
            if (reduce_coeff(acc, th.modulus) != 0) {
                r.ok = false;
                r.witness = "coboundary nonzero at " + tuple_str(y, xs, n + 1);
            }
        }
    return r;
}

std::shared_ptr<LiftedCocycle> LiftedCocycle::make(const BQCocycle& th, long long type_cap) {
    CocycleReport rep = verify_bq_cocycle(th);
    if (!rep.ok) throw AxiomFailure("the biquandle cochain is not a cocycle: " + rep.witness);
    const long long t = type_with_xset(th.X, th.Y, type_cap);
    ParallelXSet P = xset_from_parallel(th.X, th.Y);
    std::shared_ptr<LiftedCocycle> L(new LiftedCocycle(P.mcb, P.xset, th.arity, th.modulus));
    L->th_ = th;
    L->t_ = t;
    L->nx_ = th.X.size();
    L->ny_ = th.Y.points;
    const int nx = L->nx_, ny = L->ny_;
    L->pu_.resize(size_t(t) * nx * nx);
    L->po_.resize(size_t(t) * nx * nx);
    L->pact_.resize(size_t(t) * ny * nx);
    for (long long k = 0; k < t; ++k) {
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < nx; ++b) {
                L->pu_[(size_t(k) * nx + a) * nx + b] = parallel_op(th.X, a, b, k, Side::Under);
                L->po_[(size_t(k) * nx + a) * nx + b] = parallel_op(th.X, a, b, k, Side::Over);
            }
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) L->pact_[(size_t(k) * ny + y) * nx + x] = parallel_act(th.X, th.Y, y, x, k);
    }
    L->name = "lift";

    // the hypothesis sums, one per slot
    const int n = th.arity;
    int xs[3];
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= nx;
    for (int y = 0; y < ny; ++y)
        for (long long c = 0; c < total; ++c) {
            long long q = c;
            for (int i = n - 1; i >= 0; --i) {
                xs[i] = int(q % nx);
                q /= nx;
            }
            for (int slot = 0; slot < n; ++slot) {
                long long acc = 0;
                for (long long i = 0; i < t; ++i) {
                    int ys[3];
                    const int z = xs[slot];
                    for (int j = 0; j < n; ++j)
                        ys[j] = slot == 0 ? L->po(i, xs[j], z) : L->pu(i, xs[j], z);
                    acc += th.at(L->pact(i, y, z), ys);
                }
                if (reduce_coeff(acc, th.modulus) != 0) {
                    std::ostringstream os;
                    os << "hypothesis sum for slot " << slot + 1 << " is nonzero at (y=" << y;
                    for (int j = 0; j < n; ++j) os << ", x" << j + 1 << "=" << xs[j];
                    os << ")";
                    throw AxiomFailure(os.str());
                }
            }
        }
    return L;
}

long long LiftedCocycle::sum_at(int y, const std::vector<int>& xs, const std::vector<long long>& reps) const {
    const int n = th_.arity;
    if ((int)xs.size() != n || (int)reps.size() != n) throw StructuralError("wrong number of arguments for the lift");
    long long acc = 0;
    int v[3];
    for (long long i = 0; i < reps[0]; ++i) {
        const int x1 = xs[0];
        const int y1 = pact(i, y, x1);
        int s1[3];
        for (int k = 0; k < n; ++k) s1[k] = po(i, xs[k], x1);
        for (long long j = 0; j < reps[1]; ++j) {
            const int z = s1[1];
            const int y2 = pact(j, y1, z);
            int s2[3];
            for (int k = 0; k < n; ++k) s2[k] = pu(j, s1[k], z);
            if (n == 2) {
                v[0] = s2[0];
                v[1] = s2[1];
                acc = reduce_coeff(acc + th_.at(y2, v), modulus_);
                continue;
            }
            for (long long k3 = 0; k3 < reps[2]; ++k3) {
                const int w = s2[2];
                const int y3 = pact(k3, y2, w);
                for (int k = 0; k < 3; ++k) v[k] = pu(k3, s2[k], w);
                acc = reduce_coeff(acc + th_.at(y3, v), modulus_);
            }
        }
    }
    return acc;
}

long long LiftedCocycle::value(const PrismGen& g) const {
    if (g.deg != degree_) throw StructuralError("generator of the wrong degree for the lift");
    if (g.nblocks != degree_) return 0;
    std::vector<int> xs(degree_);
    std::vector<long long> reps(degree_);
    for (int i = 0; i < degree_; ++i) {
        xs[i] = m_->fx(g.e[i]);
        reps[i] = m_->fg(g.e[i]);
    }
    return sum_at(g.y, xs, reps);
}

long long MultilinearForm::operator()(const int* xs) const {
    const int d = module.dim;
    long long acc = 0;
    // expand every argument in coordinates; arity is at most 3 and dim small
    std::vector<std::vector<int>> c(arity);
    for (int i = 0; i < arity; ++i) c[i] = module.coords(xs[i]);
    size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= d;
    for (size_t idx = 0; idx < total; ++idx) {
        if (coef[idx] == 0) continue;
        size_t r = idx;
        long long term = coef[idx];
        for (int i = arity - 1; i >= 0; --i) {
            term = term * c[i][r % d];
            if (modulus) term %= modulus;
            r /= d;
        }
        acc += term;
        if (modulus) acc %= modulus;
    }
    return reduce_coeff(acc, modulus);
}

MultilinearForm MultilinearForm::determinant(int n) {
    MultilinearForm f;
    f.arity = 2;
    f.module = ZnModule{n, 2};
    f.modulus = n;
    f.coef = {0, 1, n - 1, 0};
    return f;
}

MultilinearForm MultilinearForm::product(int n, int arity, long long c, long long modulus) {
    MultilinearForm f;
    f.arity = arity;
    f.module = ZnModule{n, 1};
    f.modulus = modulus;
    f.coef = {reduce_coeff(c, modulus)};
    return f;
}

MultilinearForm MultilinearForm::gl2f2_invariant() {
    MultilinearForm f;
    f.arity = 3;
    f.module = ZnModule{2, 2};
    f.modulus = 2;
    f.coef = {0, 1, 1, 1, 1, 1, 1, 0};
    return f;
}

XSet alexander_xset(McbPtr M, AlexanderKind kind) {
    switch (kind) {
        case AlexanderKind::One: return XSet::trivial(M);
        case AlexanderKind::Two: return XSet::self_under(M);
        default: return XSet::family_under(M);
    }
}

std::shared_ptr<AlexanderPhi> AlexanderPhi::make(AlexanderKind kind, McbPtr M, const MultilinearForm& f,
                                                 std::vector<long long> lambda, bool unchecked) {
    const GFamily* F = M->family();
    if (!F || !F->alexander) throw StructuralError("Alexander cocycles need an algebra built from an Alexander family");
    const AlexanderData& A = *F->alexander;
    if (f.module.n != A.module.n || f.module.dim != A.module.dim)
        throw StructuralError("the multilinear form lives on a different module");
    const int want = kind == AlexanderKind::One ? 2 : 3;
    if (f.arity != want)
        throw StructuralError("this kind needs a form with " + std::to_string(want) + " arguments");
    if (f.modulus <= 0) throw StructuralError("Alexander cocycles take values in Z_m with m > 0");
    const FinGroup& G = F->G;
    const int ng = G.size(), nx = F->nx;
    if (kind != AlexanderKind::TwoPrime && (int)lambda.size() != ng)
        throw StructuralError("lambda needs one value per group element");
    for (auto& v : lambda) v = reduce_coeff(v, f.modulus);

    if (!unchecked) {
        for (size_t i = 0; i < f.coef.size(); ++i)
            if (reduce_coeff(f.coef[i] * f.module.n, f.modulus) != 0)
                throw AxiomFailure("the form is not well defined on Z_" + std::to_string(f.module.n) + " (basis tuple " +
                                   std::to_string(i) + ")");
        if (kind != AlexanderKind::TwoPrime)
            for (int a = 0; a < ng; ++a)
                for (int b = 0; b < ng; ++b)
                    if (reduce_coeff(lambda[G.op(a, b)] - lambda[a] - lambda[b], f.modulus) != 0)
                        throw AxiomFailure("lambda is not a homomorphism at (" + std::to_string(a) + ", " +
                                           std::to_string(b) + ")");
        // G-invariance, exhaustive when affordable and on basis tuples otherwise (enough by multilinearity)
        long long tuples = 1;
        for (int i = 0; i < f.arity; ++i) tuples *= nx;
        const bool exhaustive = tuples * ng <= 50000000;
        std::vector<int> basis;
        for (int i = 0; i < f.module.dim; ++i) {
            std::vector<int> c(f.module.dim, 0);
            c[i] = 1;
            basis.push_back(f.module.encode(c));
        }
        const int span = exhaustive ? nx : f.module.dim;
        long long cnt = 1;
        for (int i = 0; i < f.arity; ++i) cnt *= span;
        int xs[3], gx[3];
        for (long long c = 0; c < cnt; ++c) {
            long long q = c;
            for (int i = f.arity - 1; i >= 0; --i) {
                int k = int(q % span);
                q /= span;
                xs[i] = exhaustive ? k : basis[k];
            }
            const long long base = f(xs);
            for (int g = 0; g < ng; ++g) {
                for (int i = 0; i < f.arity; ++i) gx[i] = A.action[g][xs[i]];
                if (f(gx) != base) throw AxiomFailure("the form is not G-invariant at group element " + std::to_string(g));
            }
        }
    }

    std::shared_ptr<AlexanderPhi> P(new AlexanderPhi(M, alexander_xset(M, kind), f.modulus));
    P->kind_ = kind;
    P->f_ = f;
    P->lambda_ = std::move(lambda);
    P->fam_ = F;
    P->right_.resize(size_t(ng) * nx);
    P->left_.resize(size_t(ng) * nx);
    for (int g = 0; g < ng; ++g) {
        const int pg = A.phi[g];
        const int gi = G.inv(g), pgi = G.inv(pg);
        for (int x = 0; x < nx; ++x) {
            P->right_[size_t(g) * nx + x] = A.module.sub(x, A.action[gi][A.action[pg][x]]);
            P->left_[size_t(g) * nx + x] = A.module.sub(x, A.action[g][A.action[pgi][x]]);
        }
    }
    // tabulate the form when it is small, it sits in the innermost loop of invariant runs
    long long cells = 1;
    for (int i = 0; i < f.arity; ++i) cells *= nx;
    if (cells <= 20000000) {
        P->ftab_.resize(cells);
        int xs[3];
        for (long long c = 0; c < cells; ++c) {
            long long q = c;
            for (int i = f.arity - 1; i >= 0; --i) {
                xs[i] = int(q % nx);
                q /= nx;
            }
            P->ftab_[c] = int(f(xs));
        }
    }
    P->name = kind == AlexanderKind::One ? "alexander-1" : kind == AlexanderKind::Two ? "alexander-2" : "alexander-2p";
    return P;
}

long long AlexanderPhi::two_blocks(int y, int a, int b) const {
    const Mcb& M = *m_;
    const ZnModule& X = fam_->alexander->module;
    const int nx = fam_->nx;
    const int x1 = M.fx(a), g1 = M.fg(a), x2 = M.fx(b), g2 = M.fg(b);
    int args[3];
    if (kind_ == AlexanderKind::One) {
        args[0] = X.sub(x1, x2);
        args[1] = right_[size_t(g2) * nx + x2];
        return reduce_coeff((__int128)lambda_[g1] * form(args) % modulus_, modulus_);
    }
    int x;
    long long lv = 1;
    if (kind_ == AlexanderKind::Two) {
        x = M.fx(y);
        lv = lambda_[M.fg(y)];
    } else {
        x = y;
    }
    args[0] = left_[size_t(g1) * nx + X.sub(x, x1)];
    args[1] = X.sub(x1, x2);
    args[2] = right_[size_t(g2) * nx + x2];
    return reduce_coeff((__int128)lv * form(args) % modulus_, modulus_);
}

long long AlexanderPhi::form(const int* xs) const {
    if (ftab_.empty()) return f_(xs);
    size_t idx = 0;
    for (int i = 0; i < f_.arity; ++i) idx = idx * fam_->nx + xs[i];
    return ftab_[idx];
}

long long AlexanderPhi::value(const PrismGen& g) const {
    if (g.deg != 2) throw StructuralError("Alexander cocycles have degree 2");
    if (g.nblocks == 1) return 0;
    return two_blocks(g.y, g.e[0], g.e[1]);
}

}  // namespace bqc
