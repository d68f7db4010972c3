#include "bqc/group.hpp"

#include <algorithm>
#include <sstream>

namespace bqc {

int mod(long long v, int m) {
    long long r = v % m;
    return int(r < 0 ? r + m : r);
}

std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (auto& c : checks) {
        os << (c.passed ? "pass " : "FAIL ") << c.name;
        if (!c.passed) {
            os << " witness=(";
            for (size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
            os << ")";
            if (!c.detail.empty()) os << " " << c.detail;
        }
        os << "\n";
    }
    if (sampled) os << "(sampled: " << samples << " random instances per schema)\n";
    return os.str();
}

FinGroup::FinGroup(int n, std::vector<int> mul) : n_(n), mul_(std::move(mul)) {
    if (n <= 0 || (long long)mul_.size() != (long long)n * n)
        throw StructuralError("group table must be n*n with n > 0");
    for (int v : mul_)
        if (v < 0 || v >= n) throw StructuralError("group table entry out of range");
    e_ = -1;
    for (int a = 0; a < n && e_ < 0; ++a) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = op(a, x) == x && op(x, a) == x;
        if (ok) e_ = a;
    }
    if (e_ < 0) throw StructuralError("group table has no identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (op(a, b) == e_ && op(b, a) == e_) {
                inv_[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (inv_[a] < 0) throw StructuralError("group element without inverse");
}

FinGroup FinGroup::trivial() { return FinGroup(1, {0}); }

FinGroup FinGroup::cyclic(int n) {
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return FinGroup(n, std::move(t));
}

bool FinGroup::is_central(int a) const {
    for (int x = 0; x < n_; ++x)
        if (op(a, x) != op(x, a)) return false;
    return true;
}

AxiomReport FinGroup::verify() const {
    AxiomReport r;
    auto& as = r.add("associativity");
    for (int a = 0; a < n_ && as.passed; ++a)
        for (int b = 0; b < n_ && as.passed; ++b)
            for (int c = 0; c < n_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) {
                    as.passed = false;
                    as.witness = {a, b, c};
                    break;
                }
    auto& id = r.add("identity");
    for (int a = 0; a < n_; ++a)
        if (op(e_, a) != a || op(a, e_) != a) {
            id.passed = false;
            id.witness = {a};
            break;
        }
    auto& iv = r.add("inverse");
    for (int a = 0; a < n_; ++a)
        if (op(a, inv_[a]) != e_ || op(inv_[a], a) != e_) {
            iv.passed = false;
            iv.witness = {a};
            break;
        }
    return r;
}

int MatrixGroup::find(const std::vector<int>& m) const {
    for (size_t i = 0; i < mats.size(); ++i)
        if (mats[i] == m) return int(i);
    return -1;
}

static std::vector<int> matmul(const std::vector<int>& p, const std::vector<int>& q, int d, int n) {
    std::vector<int> r(d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            long long s = 0;
            for (int k = 0; k < d; ++k) s += (long long)p[i * d + k] * q[k * d + j];
            r[i * d + j] = mod(s, n);
        }
    return r;
}

static MatrixGroup close_table(std::vector<std::vector<int>> mats, int d, int n) {
    MatrixGroup g;
    g.modulus = n;
    g.dim = d;
    g.mats = std::move(mats);
    int sz = int(g.mats.size());
    // index lookup through packed keys; matrices are small
    auto key = [&](const std::vector<int>& m) {
        long long k = 0;
        for (int v : m) k = k * n + v;
        return k;
    };
    std::vector<std::pair<long long, int>> keys;
    for (int i = 0; i < sz; ++i) keys.push_back({key(g.mats[i]), i});
    std::sort(keys.begin(), keys.end());
    std::vector<int> t(sz * sz);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            long long k = key(matmul(g.mats[i], g.mats[j], d, n));
            auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(k, -1));
            if (it == keys.end() || it->first != k) throw StructuralError("matrix set not closed under product");
            t[i * sz + j] = it->second;
        }
    g.group = FinGroup(sz, std::move(t));
    return g;
}

MatrixGroup special_linear2(int n) {
    std::vector<std::vector<int>> mats;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (mod((long long)a * d - (long long)b * c, n) == 1 % n) mats.push_back({a, b, c, d});
    return close_table(std::move(mats), 2, n);
}

MatrixGroup unit_subgroup(int n, int g) { return cyclic_matrix_group(n, 1, {g}); }

MatrixGroup cyclic_matrix_group(int n, int dim, const std::vector<int>& g) {
    std::vector<int> id(size_t(dim) * dim, 0), x;
    for (int i = 0; i < dim; ++i) id[size_t(i) * dim + i] = 1 % n;
    std::vector<int> gen(g.size());
    for (size_t i = 0; i < g.size(); ++i) gen[i] = mod(g[i], n);
    std::vector<std::vector<int>> mats;
    x = id;
    do {
        mats.push_back(x);
        x = matmul(x, gen, dim, n);
        if (mats.size() > 100000) throw StructuralError("generator is not invertible");
    } while (x != id);
    return close_table(std::move(mats), dim, n);
}

AxiomReport GroupHom::verify(const FinGroup& src, const FinGroup& dst) const {
    AxiomReport r;
    auto& c = r.add("homomorphism");
    if ((int)image.size() != src.size()) throw StructuralError("homomorphism table has wrong length");
    for (int v : image)
        if (v < 0 || v >= dst.size()) throw StructuralError("homomorphism image out of range");
    for (int a = 0; a < src.size() && c.passed; ++a)
        for (int b = 0; b < src.size(); ++b)
            if (image[src.op(a, b)] != dst.op(image[a], image[b])) {
                c.passed = false;
                c.witness = {a, b};
                break;
            }
    return r;
}

bool GroupHom::central_image(const FinGroup& dst) const {
    for (int v : image)
        if (!dst.is_central(v)) return false;
    return true;
}

AxiomReport CyclicHom::verify(const FinGroup& src) const {
    AxiomReport r;
    auto& c = r.add("homomorphism");
    if ((int)image.size() != src.size()) throw StructuralError("homomorphism table has wrong length");
    auto red = [&](long long v) { return modulus ? (long long)mod(v, modulus) : v; };
    for (int a = 0; a < src.size() && c.passed; ++a)
        for (int b = 0; b < src.size(); ++b)
            if (red(image[src.op(a, b)]) != red(image[a] + image[b])) {
                c.passed = false;
                c.witness = {a, b};
                break;
            }
    return r;
}

int ZnModule::size() const {
    int s = 1;
    for (int i = 0; i < dim; ++i) s *= n;
    return s;
}

std::vector<int> ZnModule::coords(int x) const {
    std::vector<int> c(dim);
    for (int i = dim - 1; i >= 0; --i) {
        c[i] = x % n;
        x /= n;
    }
    return c;
}

int ZnModule::encode(const std::vector<int>& c) const {
    int x = 0;
    for (int i = 0; i < dim; ++i) x = x * n + mod(c[i], n);
    return x;
}

int ZnModule::add(int x, int y) const {
    auto a = coords(x), b = coords(y);
    for (int i = 0; i < dim; ++i) a[i] += b[i];
    return encode(a);
}

int ZnModule::neg(int x) const {
    auto a = coords(x);
    for (auto& v : a) v = -v;
    return encode(a);
}

int ZnModule::scale(long long s, int x) const {
    auto a = coords(x);
    std::vector<int> r(dim);
    for (int i = 0; i < dim; ++i) r[i] = mod(s * a[i], n);
    return encode(r);
}

int ZnModule::act(int x, const std::vector<int>& mat) const {
    auto a = coords(x);
    std::vector<int> r(dim);
    for (int j = 0; j < dim; ++j) {
        long long s = 0;
        for (int i = 0; i < dim; ++i) s += (long long)a[i] * mat[i * dim + j];
        r[j] = mod(s, n);
    }
    return encode(r);
}

}  // namespace bqc
