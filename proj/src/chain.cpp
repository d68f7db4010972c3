#include "bqc/chain.hpp"

#include <cmath>
#include <sstream>

#include "bqc/linalg.hpp"

namespace bqc {

PrismGen PrismGen::make(int y, const std::vector<std::vector<int>>& blocks) {
    PrismGen g;
    g.y = y;
    for (auto& b : blocks) {
        if (b.empty()) throw StructuralError("empty block in a prismatic generator");
        g.push_block(b.data(), int(b.size()));
    }
    return g;
}

void PrismGen::push_block(const int* xs, int m) {
    if (deg + m > kMaxDegree) throw BudgetExceeded("prismatic generator degree above " + std::to_string(kMaxDegree));
    len[nblocks++] = std::uint8_t(m);
    for (int i = 0; i < m; ++i) e[deg++] = xs[i];
}

std::vector<std::vector<int>> PrismGen::blocks() const {
    std::vector<std::vector<int>> out;
    int p = 0;
    for (int i = 0; i < nblocks; ++i) {
        out.emplace_back(e.begin() + p, e.begin() + p + len[i]);
        p += len[i];
    }
    return out;
}

bool operator==(const PrismGen& a, const PrismGen& b) {
    if (a.y != b.y || a.deg != b.deg || a.nblocks != b.nblocks) return false;
    for (int i = 0; i < a.nblocks; ++i)
        if (a.len[i] != b.len[i]) return false;
    for (int i = 0; i < a.deg; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

// y first, then block by block (elements are numbered group after group, so this also orders by label)
bool operator<(const PrismGen& a, const PrismGen& b) {
    if (a.y != b.y) return a.y < b.y;
    int pa = 0, pb = 0;
    for (int i = 0; i < a.nblocks && i < b.nblocks; ++i) {
        int la = a.len[i], lb = b.len[i];
        for (int k = 0; k < la && k < lb; ++k)
            if (a.e[pa + k] != b.e[pb + k]) return a.e[pa + k] < b.e[pb + k];
        if (la != lb) return la < lb;
        pa += la;
        pb += lb;
    }
    return a.nblocks < b.nblocks;
}

std::string to_string(const PrismGen& g) {
    std::ostringstream os;
    os << "<" << g.y << ">";
    for (auto& b : g.blocks()) {
        os << "<";
        for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
        os << ">";
    }
    return os.str();
}

void Chain::add(const PrismGen& g, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Chain::add(const Chain& other, const BigInt& scale) {
    for (auto& [g, c] : other.terms_) add(g, c * scale);
}

BigInt Chain::coefficient(const PrismGen& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string Chain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, c] : terms_) {
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        BigInt a = abs(c);
        if (a != 1) os << a;
        os << to_string(g);
        first = false;
    }
    return os.str();
}

Chain operator+(Chain a, const Chain& b) {
    a += b;
    return a;
}

Chain operator-(Chain a, const Chain& b) {
    a -= b;
    return a;
}

namespace {

void block_boundary(const Mcb& M, const XSet& Y, const PrismGen& g, int i,
                    const std::function<void(const PrismGen&, int)>& emit) {
    const int p = g.block_start(i);
    const int m = g.len[i];
    const int s0 = (p % 2) ? -1 : 1;
    const int x1 = g.e[p];
    {
        PrismGen h;
        h.y = Y.act(g.y, x1);
        int buf[kMaxDegree];
        for (int k = 0; k < g.nblocks; ++k) {
            int q = g.block_start(k);
            if (k < i) {
                for (int j = 0; j < g.len[k]; ++j) buf[j] = M.under(g.e[q + j], x1);
                h.push_block(buf, g.len[k]);
            } else if (k > i) {
                for (int j = 0; j < g.len[k]; ++j) buf[j] = M.over(g.e[q + j], x1);
                h.push_block(buf, g.len[k]);
            } else if (m > 1) {
                int x1i = M.inv(x1);
                for (int j = 1; j < m; ++j) buf[j - 1] = M.over(M.mul(x1i, g.e[q + j]), x1);
                h.push_block(buf, m - 1);
            }
        }
        emit(h, s0);
    }
    for (int j = 0; j < m; ++j) {
        PrismGen h;
        h.y = g.y;
        int buf[kMaxDegree];
        for (int k = 0; k < g.nblocks; ++k) {
            int q = g.block_start(k);
            if (k != i) {
                h.push_block(&g.e[q], g.len[k]);
            } else if (m > 1) {
                int c = 0;
                for (int jj = 0; jj < m; ++jj)
                    if (jj != j) buf[c++] = g.e[q + jj];
                h.push_block(buf, m - 1);
            }
        }
        // (-1)^(j+1) with j counted from 1
        emit(h, ((j + 1) % 2) ? -s0 : s0);
    }
}

}  // namespace

void boundary_terms(const Mcb& M, const XSet& Y, const PrismGen& g, const std::function<void(const PrismGen&, int)>& emit) {
    for (int i = 0; i < g.nblocks; ++i) block_boundary(M, Y, g, i, emit);
}

void partial_boundary_terms(const Mcb& M, const XSet& Y, const PrismGen& g, int block,
                            const std::function<void(const PrismGen&, int)>& emit) {
    if (block < 0 || block >= g.nblocks) throw StructuralError("block index out of range");
    block_boundary(M, Y, g, block, emit);
}

void check_generator(const Mcb& M, const XSet& Y, const PrismGen& g) {
    if (g.y < 0 || g.y >= Y.points()) throw StructuralError("X-set point " + std::to_string(g.y) + " out of range");
    int p = 0;
    for (int i = 0; i < g.nblocks; ++i) {
        for (int k = p; k < p + g.len[i]; ++k) {
            if (g.e[k] < 0 || g.e[k] >= M.size())
                throw StructuralError("element " + std::to_string(g.e[k]) + " out of range");
            if (M.label(g.e[k]) != M.label(g.e[p]))
                throw StructuralError("block " + std::to_string(i + 1) + " mixes elements of different groups");
        }
        p += g.len[i];
    }
}

Chain boundary(const Mcb& M, const XSet& Y, const PrismGen& g) {
    Chain c;
    boundary_terms(M, Y, g, [&](const PrismGen& h, int s) { c.add(h, s); });
    return c;
}

Chain boundary(const Mcb& M, const XSet& Y, const Chain& c) {
    Chain out;
    for (auto& [g, k] : c.terms()) boundary_terms(M, Y, g, [&](const PrismGen& h, int s) { out.add(h, k * s); });
    return out;
}

int Shuffle::floor_at(int j) const {
    int c = 0;
    for (int v : mu)
        if (v <= j) ++c;
    return c;
}

int Shuffle::sign() const {
    long long s = 0;
    for (int k = 0; k < (int)mu.size(); ++k) s += mu[k] - (k + 1);
    return (s % 2) ? -1 : 1;
}

std::vector<Shuffle> shuffles(int s, int n) {
    std::vector<Shuffle> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == s) {
            out.push_back({s, n - s, cur});
            return;
        }
        for (int v = from; v <= n - (s - (int)cur.size()) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

namespace {

void check_same_group(const Mcb& M, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) throw StructuralError("shuffle blocks must be nonempty");
    int l = M.label(a[0]);
    for (int x : a)
        if (M.label(x) != l) throw StructuralError("shuffle block mixes groups");
    for (int x : b)
        if (M.label(x) != l) throw StructuralError("shuffle blocks lie in different groups");
}

// the single blocks of <<a><b>> with their signs
void shuffle_blocks(const Mcb& M, const int* a, int s, const int* b, int t,
                    const std::function<void(const int*, int)>& emit) {
    const int n = s + t;
    const int e = M.identity(M.label(a[0]));
    for (auto& mu : shuffles(s, n)) {
        int buf[kMaxDegree];
        for (int j = 1; j <= n; ++j) {
            int i = mu.floor_at(j);
            int A = i == 0 ? e : a[i - 1];
            int B = (j - i) == 0 ? e : b[j - i - 1];
            buf[j - 1] = M.mul(A, B);
        }
        emit(buf, mu.sign());
    }
}

}  // namespace

Chain shuffle_chain(const Mcb& M, const std::vector<int>& a, const std::vector<int>& b, int y) {
    check_same_group(M, a, b);
    Chain c;
    shuffle_blocks(M, a.data(), int(a.size()), b.data(), int(b.size()), [&](const int* buf, int sg) {
        PrismGen g;
        g.y = y;
        g.push_block(buf, int(a.size() + b.size()));
        c.add(g, sg);
    });
    return c;
}

long long count_generators(const Mcb& M, const XSet& Y, int n) {
    if (n == 0) return Y.points();
    // S[m] = sum over groups of |G|^m; P[n] = sum over compositions of prod S
    std::vector<long double> S(n + 1, 0), P(n + 1, 0);
    for (int m = 1; m <= n; ++m)
        for (int l = 0; l < M.num_groups(); ++l) S[m] += std::pow((long double)M.group_size(l), m);
    P[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= k; ++m) P[k] += S[m] * P[k - m];
    long double total = P[n] * Y.points();
    return total > 9e18L ? (long long)9e18 : (long long)total;
}

void for_each_generator(const Mcb& M, const XSet& Y, int n, const std::function<void(const PrismGen&)>& f,
                        const GeneratorCap& cap) {
    if (n < 0) return;
    if (n > kMaxDegree) throw BudgetExceeded("degree above " + std::to_string(kMaxDegree));
    long long cnt = count_generators(M, Y, n);
    if (cnt > cap.max_generators)
        throw BudgetExceeded("degree " + std::to_string(n) + " has " + std::to_string(cnt) +
                             " generators, above the cap of " + std::to_string(cap.max_generators));
    PrismGen g;
    // recursive fill: remaining degree, then choose block length, group, elements
    std::function<void(int)> fill_block;
    std::function<void(int)> next_block = [&](int rem) {
        if (rem == 0) {
            f(g);
            return;
        }
        for (int m = 1; m <= rem; ++m) {
            for (int l = 0; l < M.num_groups(); ++l) {
                int start = g.deg;
                g.len[g.nblocks++] = std::uint8_t(m);
                std::function<void(int)> elems = [&](int k) {
                    if (k == m) {
                        g.deg = std::uint8_t(start + m);
                        next_block(rem - m);
                        g.deg = std::uint8_t(start);
                        return;
                    }
                    for (int i = 0; i < M.group_size(l); ++i) {
                        g.e[start + k] = M.start(l) + i;
                        elems(k + 1);
                    }
                };
                elems(0);
                g.nblocks--;
            }
        }
    };
    for (int y = 0; y < Y.points(); ++y) {
        g = PrismGen{};
        g.y = y;
        next_block(n);
    }
}

Chain degenerate_from(const Mcb& M, const PrismGen& g, int i) {
    if (i < 0 || i + 1 >= g.nblocks) throw StructuralError("no adjacent block pair at this index");
    const int p = g.block_start(i), q = p + g.len[i];
    const int s = g.len[i], t = g.len[i + 1];
    const int l = M.label(g.e[p]);
    if (M.label(g.e[q]) != l) throw StructuralError("adjacent blocks lie in different groups");
    Chain c(g, 1);
    shuffle_blocks(M, &g.e[p], s, &g.e[q], t, [&](const int* buf, int sg) {
        PrismGen h;
        h.y = g.y;
        for (int k = 0; k < g.nblocks; ++k) {
            if (k == i) {
                h.push_block(buf, s + t);
            } else if (k != i + 1) {
                h.push_block(&g.e[g.block_start(k)], g.len[k]);
            }
        }
        c.add(h, -sg);
    });
    return c;
}

void for_each_degenerate(const Mcb& M, const XSet& Y, int n, const std::function<void(const Chain&)>& f,
                         const GeneratorCap& cap) {
    if (n <= 1) return;
    for_each_generator(
        M, Y, n,
        [&](const PrismGen& g) {
            for (int i = 0; i + 1 < g.nblocks; ++i) {
                int p = g.block_start(i), q = p + g.len[i];
                if (M.label(g.e[p]) == M.label(g.e[q])) f(degenerate_from(M, g, i));
            }
        },
        cap);
}

CheckResult verify_dd_zero(const Mcb& M, const XSet& Y, int n, const GeneratorCap& cap) {
    CheckResult r;
    for_each_generator(
        M, Y, n,
        [&](const PrismGen& g) {
            if (!r.ok) return;
            r.checked++;
            Chain dd = boundary(M, Y, boundary(M, Y, g));
            if (!dd.is_zero()) {
                r.ok = false;
                r.witness = to_string(g) + " -> " + dd.str();
            }
        },
        cap);
    return r;
}

CheckResult verify_subcomplex(const Mcb& M, const XSet& Y, int n, const GeneratorCap& cap) {
    CheckResult r;
    GenIndex idx;
    Lattice L;
    if (n - 1 >= 2)
        for_each_degenerate(M, Y, n - 1, [&](const Chain& d) { L.insert(idx.vector_of(d)); }, cap);
    for_each_degenerate(
        M, Y, n,
        [&](const Chain& d) {
            if (!r.ok) return;
            r.checked++;
            Chain bd = boundary(M, Y, d);
            if (bd.is_zero()) return;
            if (!L.contains(idx.vector_of(bd))) {
                r.ok = false;
                r.witness = d.str() + " has boundary " + bd.str();
            }
        },
        cap);
    return r;
}

}  // namespace bqc
