#include "bqc/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace bqc {

namespace {

BigInt floordiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

// g = s*a + t*b with g = gcd(a, b) > 0
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
    BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        BigInt s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    s = s0;
    t = t0;
}

SparseVec lincomb(const BigInt& a, const SparseVec& v, const BigInt& b, const SparseVec& w) {
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            BigInt x = a * v[i].second;
            if (x != 0) out.emplace_back(v[i].first, std::move(x));
            ++i;
        } else if (i == v.size() || w[j].first < v[i].first) {
            BigInt x = b * w[j].second;
            if (x != 0) out.emplace_back(w[j].first, std::move(x));
            ++j;
        } else {
            BigInt x = a * v[i].second + b * w[j].second;
            if (x != 0) out.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

const BigInt* entry(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& p, int k) { return p.first < k; });
    return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

}  // namespace

void axpy(SparseVec& v, const BigInt& k, const SparseVec& w) {
    if (k == 0 || w.empty()) return;
    v = lincomb(1, v, k, w);
}

std::string to_string(const SparseVec& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].first << ":" << v[i].second;
    os << "}";
    return os.str();
}

int GenIndex::id(const PrismGen& g) {
    auto [it, fresh] = ids_.emplace(g, int(gens_.size()));
    if (fresh) gens_.push_back(g);
    return it->second;
}

int GenIndex::find(const PrismGen& g) const {
    auto it = ids_.find(g);
    return it == ids_.end() ? -1 : it->second;
}

SparseVec GenIndex::vector_of(const Chain& c) {
    SparseVec v;
    v.reserve(c.size());
    for (auto& [g, k] : c.terms()) v.emplace_back(id(g), k);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

void Lattice::insert(SparseVec v) {
    while (!v.empty()) {
        const int p = v.front().first;
        auto it = rows_.find(p);
        if (it == rows_.end()) {
            if (v.front().second < 0)
                for (auto& e : v) e.second = -e.second;
            rows_.emplace(p, std::move(v));
            return;
        }
        SparseVec& b = it->second;
        const BigInt a = v.front().second, c = b.front().second;
        if (a % c == 0) {
            v = lincomb(1, v, -(a / c), b);
            continue;
        }
        BigInt g, s, t;
        ext_gcd(c, a, g, s, t);
        SparseVec nb = lincomb(s, b, t, v);
        SparseVec rest = lincomb(c / g, v, -(a / g), b);
        b = std::move(nb);
        v = std::move(rest);
    }
}

SparseVec Lattice::reduce(SparseVec v) const {
    // rows only touch indices at or after their pivot, so one increasing sweep suffices
    size_t pos = 0;
    while (pos < v.size()) {
        const int idx = v[pos].first;
        auto it = rows_.find(idx);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        const BigInt q = floordiv(v[pos].second, it->second.front().second);
        if (q != 0) {
            v = lincomb(1, v, -q, it->second);
            pos = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, int k) { return e.first < k; }) - v.begin();
            if (pos < v.size() && v[pos].first == idx) ++pos;
        } else {
            ++pos;
        }
    }
    return v;
}

bool Lattice::unit_pivots() const {
    for (auto& [p, r] : rows_)
        if (r.front().second != 1) return false;
    return true;
}

namespace {

// repeatedly eliminate a +-1 entry together with its row and column
long long eliminate_units(std::vector<SparseVec>& cols, std::vector<char>& alive) {
    long long rank = 0;
    std::unordered_map<int, std::vector<int>> occ;
    for (int c = 0; c < (int)cols.size(); ++c)
        for (auto& e : cols[c]) occ[e.first].push_back(c);
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<int> order;
        for (int c = 0; c < (int)cols.size(); ++c)
            if (alive[c] && !cols[c].empty()) order.push_back(c);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
        for (int c : order) {
            if (!alive[c] || cols[c].empty()) continue;
            int best = -1;
            size_t best_occ = 0;
            for (auto& e : cols[c]) {
                if (e.second != 1 && e.second != -1) continue;
                size_t o = occ[e.first].size();
                if (best < 0 || o < best_occ) {
                    best = e.first;
                    best_occ = o;
                }
            }
            if (best < 0) continue;
            const BigInt u = *entry(cols[c], best);
            const SparseVec piv = cols[c];
            auto others = occ[best];
            std::sort(others.begin(), others.end());
            others.erase(std::unique(others.begin(), others.end()), others.end());
            for (int c2 : others) {
                if (c2 == c || !alive[c2]) continue;
                const BigInt* a = entry(cols[c2], best);
                if (!a) continue;
                cols[c2] = lincomb(1, cols[c2], -(*a) * u, piv);
                for (auto& e : piv) occ[e.first].push_back(c2);
            }
            alive[c] = 0;
            occ.erase(best);
            ++rank;
            progress = true;
        }
    }
    return rank;
}

}  // namespace

SmithResult smith(std::vector<SparseVec> cols, int nrows) {
    (void)nrows;
    SmithResult res;
    std::vector<char> alive(cols.size(), 1);
    res.rank = eliminate_units(cols, alive);

    // dense remainder
    std::map<int, int> rowmap;
    std::vector<int> keep;
    for (int c = 0; c < (int)cols.size(); ++c) {
        if (!alive[c] || cols[c].empty()) continue;
        keep.push_back(c);
        for (auto& e : cols[c]) rowmap.emplace(e.first, 0);
    }
    int R = 0;
    for (auto& [r, i] : rowmap) i = R++;
    const int C = int(keep.size());
    std::vector<std::vector<BigInt>> A(R, std::vector<BigInt>(C, 0));
    for (int j = 0; j < C; ++j)
        for (auto& e : cols[keep[j]]) A[rowmap[e.first]][j] = e.second;

    std::vector<BigInt> diag;
    const int T = std::min(R, C);
    for (int t = 0; t < T; ++t) {
        // smallest nonzero entry of the trailing block
        auto find_min = [&](int& pi, int& pj) {
            pi = pj = -1;
            BigInt best = 0;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < best)) {
                        best = abs(A[i][j]);
                        pi = i;
                        pj = j;
                    }
        };
        int pi, pj;
        find_min(pi, pj);
        if (pi < 0) break;
        for (;;) {
            std::swap(A[t], A[pi]);
            for (int i = 0; i < R; ++i) std::swap(A[i][t], A[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (A[i][t] == 0) continue;
                BigInt q = floordiv(A[i][t], A[t][t]);
                for (int j = t; j < C; ++j)
                    if (A[t][j] != 0) A[i][j] -= q * A[t][j];
                if (A[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                if (A[t][j] == 0) continue;
                BigInt q = floordiv(A[t][j], A[t][t]);
                for (int i = t; i < R; ++i)
                    if (A[i][t] != 0) A[i][j] -= q * A[i][t];
                if (A[t][j] != 0) clean = false;
            }
            if (clean) {
                // the pivot must divide the rest of the block
                int bad = -1;
                for (int i = t + 1; i < R && bad < 0; ++i)
                    for (int j = t + 1; j < C; ++j)
                        if (A[i][j] % A[t][t] != 0) {
                            bad = i;
                            break;
                        }
                if (bad < 0) break;
                for (int j = t; j < C; ++j) A[t][j] += A[bad][j];
                pi = t;
                pj = t;
                continue;
            }
            // pick the smallest entry in row t or column t and go again
            pi = t;
            pj = t;
            BigInt best = abs(A[t][t]);
            for (int i = t + 1; i < R; ++i)
                if (A[i][t] != 0 && abs(A[i][t]) < best) {
                    best = abs(A[i][t]);
                    pi = i;
                    pj = t;
                }
            for (int j = t + 1; j < C; ++j)
                if (A[t][j] != 0 && abs(A[t][j]) < best) {
                    best = abs(A[t][j]);
                    pi = t;
                    pj = j;
                }
        }
        diag.push_back(abs(A[t][t]));
    }
    res.rank += (long long)diag.size();
    std::sort(diag.begin(), diag.end());
    for (auto& d : diag)
        if (d > 1) res.torsion.push_back(d);
    return res;
}

long long rank_mod_p(const std::vector<SparseVec>& cols, int nrows, long long p) {
    (void)nrows;
    std::map<int, std::vector<std::pair<int, long long>>> piv;
    auto md = [p](long long x) { return ((x % p) + p) % p; };
    auto inv = [&](long long a) {
        long long r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = (__int128)r * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        return r;
    };
    long long rank = 0;
    for (auto& col : cols) {
        std::map<int, long long> v;
        for (auto& [i, x] : col) {
            long long r = md((long long)(x % p));
            if (r) v[i] = r;
        }
        while (!v.empty()) {
            auto [lead, a] = *v.begin();
            auto it = piv.find(lead);
            if (it == piv.end()) {
                long long ai = inv(a);
                std::vector<std::pair<int, long long>> row;
                for (auto& [i, x] : v) row.emplace_back(i, (__int128)x * ai % p);
                piv.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            for (auto& [i, x] : it->second) {
                long long& y = v[i];
                y = md(y - (__int128)a * x % p);
                if (y == 0) v.erase(i);
            }
        }
    }
    return rank;
}

}  // namespace bqc
