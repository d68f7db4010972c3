#include "bqc/homology.hpp"

#include <algorithm>
#include <sstream>

namespace bqc {

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool any = false;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        any = true;
    }
    for (auto& t : torsion) {
        os << (any ? " + " : "") << "Z/" << t;
        any = true;
    }
    return any ? os.str() : "0";
}

namespace {

std::vector<PrismGen> ordered_generators(const Mcb& M, const XSet& Y, int n, const GeneratorCap& cap) {
    std::vector<PrismGen> gens;
    for_each_generator(M, Y, n, [&](const PrismGen& g) { gens.push_back(g); }, cap);
    // generators with more blocks first, so a degenerate element leads with its split generator
    std::sort(gens.begin(), gens.end(), [](const PrismGen& a, const PrismGen& b) {
        if (a.nblocks != b.nblocks) return a.nblocks > b.nblocks;
        return a < b;
    });
    return gens;
}

SparseVec known_vector(const GenIndex& idx, const Chain& c) {
    SparseVec v;
    v.reserve(c.size());
    for (auto& [g, k] : c.terms()) {
        int i = idx.find(g);
        if (i < 0) throw StructuralError("chain term " + to_string(g) + " is not a generator of this complex");
        v.emplace_back(i, k);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

}  // namespace

QuotientComplex::QuotientComplex(McbPtr M, const XSet& Y, HomologyOptions opt) : m_(std::move(M)), y_(Y), opt_(opt) {}

void QuotientComplex::check_degree(int n) const {
    if (n < 0) throw StructuralError("negative degree");
    if (n > opt_.max_degree + 1)
        throw BudgetExceeded("degree " + std::to_string(n) + " is above the homology degree cap " +
                             std::to_string(opt_.max_degree) + " (one extra degree is needed for the boundary)");
}

QuotientComplex::Level& QuotientComplex::level(int n) {
    check_degree(n);
    auto& slot = levels_[n];
    if (!slot) slot = std::make_unique<Level>();
    Level& L = *slot;
    if (L.built) return L;
    for (auto& g : ordered_generators(*m_, y_, n, opt_.cap)) L.idx.id(g);
    for_each_degenerate(*m_, y_, n, [&](const Chain& d) { L.deg.insert(known_vector(L.idx, d)); }, opt_.cap);
    if (!L.deg.unit_pivots())
        throw StructuralError("the degenerate span in degree " + std::to_string(n) +
                              " has a non-unit pivot; the quotient basis would not be free");
    L.to_quot.assign(L.idx.size(), -1);
    const auto& rows = L.deg.rows();
    for (int i = 0; i < L.idx.size(); ++i)
        if (!rows.count(i)) {
            L.to_quot[i] = int(L.from_quot.size());
            L.from_quot.push_back(i);
        }
    L.built = true;
    return L;
}

int QuotientComplex::dim(int n) { return int(level(n).from_quot.size()); }

long long QuotientComplex::generators(int n) { return level(n).idx.size(); }

const PrismGen& QuotientComplex::basis_gen(int n, int i) {
    Level& L = level(n);
    return L.idx.gen(L.from_quot.at(i));
}

SparseVec QuotientComplex::coords(int n, const Chain& c) {
    Level& L = level(n);
    SparseVec v = L.deg.reduce(known_vector(L.idx, c));
    for (auto& e : v) {
        int q = L.to_quot[e.first];
        if (q < 0) throw StructuralError("reduction left a pivot entry");
        e.first = q;
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

const std::vector<SparseVec>& QuotientComplex::boundary_matrix(int n) {
    Level& L = level(n);
    if (L.bd_built) return L.bd;
    L.bd.assign(L.from_quot.size(), SparseVec{});
    if (n >= 1) {
        level(n - 1);
        for (size_t i = 0; i < L.from_quot.size(); ++i)
            L.bd[i] = coords(n - 1, boundary(*m_, y_, L.idx.gen(L.from_quot[i])));
    }
    L.bd_built = true;
    return L.bd;
}

const SmithResult& QuotientComplex::smith_of(int n) {
    Level& L = level(n);
    if (!L.smith_built) {
        int rows = n >= 1 ? dim(n - 1) : 0;
        L.sm = smith(boundary_matrix(n), rows);
        L.smith_built = true;
    }
    return L.sm;
}

AbelianGroup QuotientComplex::homology(int n) {
    if (n > opt_.max_degree) check_degree(n + 1);
    AbelianGroup h;
    long long rn = n >= 1 ? smith_of(n).rank : 0;
    const SmithResult& up = smith_of(n + 1);
    h.free_rank = dim(n) - rn - up.rank;
    h.torsion = up.torsion;
    return h;
}

AbelianGroup QuotientComplex::homology_mod(int n, long long m) {
    if (m < 2) throw StructuralError("coefficient modulus must be at least 2");
    // universal coefficients: H_n(C;Z/m) = H_n(C) (x) Z/m + Tor(H_{n-1}(C), Z/m)
    AbelianGroup hz = homology(n);
    AbelianGroup out;
    const BigInt M = m;
    for (long long i = 0; i < hz.free_rank; ++i) out.torsion.push_back(M);
    for (auto& t : hz.torsion) {
        BigInt g = gcd(t, M);
        if (g > 1) out.torsion.push_back(g);
    }
    if (n >= 1)
        for (auto& t : smith_of(n).torsion) {
            BigInt g = gcd(t, M);
            if (g > 1) out.torsion.push_back(g);
        }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

bool QuotientComplex::is_cycle(int n, const Chain& c) {
    if (n == 0) return true;
    return coords(n - 1, boundary(*m_, y_, c)).empty();
}

SparseVec QuotientComplex::class_key(const Chain& cycle) {
    if (!image3_) {
        auto L = std::make_unique<Lattice>();
        for (auto& col : boundary_matrix(3)) L->insert(col);
        image3_ = std::move(L);
    }
    return image3_->reduce(coords(2, cycle));
}

long long homology_rank_direct(const Mcb& M, const XSet& Y, int n, long long p, const HomologyOptions& opt) {
    if (n < 0) throw StructuralError("negative degree");
    if (n > opt.max_degree) throw BudgetExceeded("degree above the homology degree cap");
    struct Deg {
        GenIndex idx;
        std::vector<SparseVec> deg;
    };
    std::map<int, Deg> lv;
    for (int k = std::max(0, n - 1); k <= n + 1; ++k) {
        Deg& d = lv[k];
        for_each_generator(M, Y, k, [&](const PrismGen& g) { d.idx.id(g); }, opt.cap);
        for_each_degenerate(M, Y, k, [&](const Chain& c) { d.deg.push_back(known_vector(d.idx, c)); }, opt.cap);
    }
    auto rank = [&](const std::vector<SparseVec>& cols, int rows) -> long long {
        return p == 0 ? smith(cols, rows).rank : rank_mod_p(cols, rows, p);
    };
    // rank of the induced boundary out of degree k: rank[d(P_k) | D_{k-1}] - rank D_{k-1}
    auto induced = [&](int k) -> long long {
        if (k == 0) return 0;
        Deg& lo = lv[k - 1];
        std::vector<SparseVec> cols = lo.deg;
        for (int i = 0; i < lv[k].idx.size(); ++i) cols.push_back(known_vector(lo.idx, boundary(M, Y, lv[k].idx.gen(i))));
        return rank(cols, lo.idx.size()) - rank(lo.deg, lo.idx.size());
    };
    long long dimc = lv[n].idx.size() - rank(lv[n].deg, lv[n].idx.size());
    return dimc - induced(n) - induced(n + 1);
}

}  // namespace bqc
