#pragma once
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bqc/biquandle.hpp"
#include "bqc/chain.hpp"
#include "bqc/mcb.hpp"

namespace bqc {

// canonical residue in Z_m, or v itself when m == 0 (integer coefficients)
inline long long reduce_coeff(long long v, long long m) {
    if (m == 0) return v;
    v %= m;
    return v < 0 ? v + m : v;
}

// A cochain on P_n(X)_Y with values in Z_m (m = 0 means Z).
class Cochain {
public:
    Cochain(McbPtr M, XSet Y, int degree, long long modulus) : m_(std::move(M)), y_(std::move(Y)), degree_(degree), modulus_(modulus) {}
    virtual ~Cochain() = default;

    virtual long long value(const PrismGen& g) const = 0;

    int degree() const { return degree_; }
    long long modulus() const { return modulus_; }
    const Mcb& mcb() const { return *m_; }
    McbPtr mcb_ptr() const { return m_; }
    const XSet& xset() const { return y_; }
    std::string name;

protected:
    McbPtr m_;
    XSet y_;
    int degree_;
    long long modulus_;
};

using CochainPtr = std::shared_ptr<const Cochain>;

class TableCochain : public Cochain {
public:
    // strict tables throw on generators they do not list; otherwise missing entries read as 0
    TableCochain(McbPtr M, XSet Y, int degree, long long modulus, bool strict = false)
        : Cochain(std::move(M), std::move(Y), degree, modulus), strict_(strict) {}
    void set(const PrismGen& g, long long v);
    long long value(const PrismGen& g) const override;
    const std::map<PrismGen, long long>& entries() const { return t_; }

private:
    bool strict_;
    std::map<PrismGen, long long> t_;
};

class FnCochain : public Cochain {
public:
    FnCochain(McbPtr M, XSet Y, int degree, long long modulus, std::function<long long(const PrismGen&)> f)
        : Cochain(std::move(M), std::move(Y), degree, modulus), f_(std::move(f)) {}
    long long value(const PrismGen& g) const override { return reduce_coeff(f_(g), modulus_); }

private:
    std::function<long long(const PrismGen&)> f_;
};

long long evaluate_cochain(const Cochain& f, const Chain& c);

struct CocycleReport {
    bool ok = true;
    bool sampled = false;
    long long checked_degenerate = 0, checked_boundary = 0;
    std::string witness;
    std::string summary() const;
};

struct CocycleCheckOptions {
    // exhaustive while the degree n+1 generator count stays below this
    long long exhaustive_cap = 20000000;
    long long samples = 1000000;
    std::uint64_t seed = 7;
    bool force_sampled = false;
};

// vanishing on D_n and on the image of the boundary out of degree n+1
CocycleReport verify_mcb_cocycle(const Cochain& f, const CocycleCheckOptions& opt = {});

// ---- biquandle cocycles and their lifts ----

struct BQCocycle {
    int arity = 2;
    FinBiquandle X;
    BqXSet Y;
    long long modulus = 0;
    // index ((y*|X| + x1)*|X| + x2)... ; size |Y| |X|^arity
    std::vector<long long> table;

    long long at(int y, const int* xs) const;
    static BQCocycle from_function(const FinBiquandle& X, const BqXSet& Y, int arity, long long modulus,
                                   const std::function<long long(int, const int*)>& f);
};

CocycleReport verify_bq_cocycle(const BQCocycle& th);

// The lifted cocycle on X x Z_t, t = type X_Y. The algebra and X-set are built here.
class LiftedCocycle : public Cochain {
public:
    // throws AxiomFailure when a hypothesis sum does not vanish
    static std::shared_ptr<LiftedCocycle> make(const BQCocycle& th, long long type_cap = 1000000);
    long long value(const PrismGen& g) const override;
    // the defining sum at explicit integer representatives i1, i2 (, i3) >= 0
    long long sum_at(int y, const std::vector<int>& xs, const std::vector<long long>& reps) const;
    long long period() const { return t_; }

private:
    LiftedCocycle(McbPtr M, XSet Y, int degree, long long modulus) : Cochain(std::move(M), std::move(Y), degree, modulus) {}
    BQCocycle th_;
    long long t_ = 1;
    int nx_ = 0, ny_ = 0;
    // parallel operation tables indexed by n in [0, t)
    std::vector<int> pu_, po_, pact_;
    int pu(long long n, int a, int b) const { return pu_[(size_t(n % t_) * nx_ + a) * nx_ + b]; }
    int po(long long n, int a, int b) const { return po_[(size_t(n % t_) * nx_ + a) * nx_ + b]; }
    int pact(long long n, int y, int x) const { return pact_[(size_t(n % t_) * ny_ + y) * nx_ + x]; }
};

// ---- Alexander family cocycles ----

// multilinear map (Z_n^dim)^arity -> Z_m given by its values on basis tuples
struct MultilinearForm {
    int arity = 2;
    ZnModule module;
    long long modulus = 0;
    std::vector<long long> coef;  // index over basis tuples, first slot most significant

    long long operator()(const int* xs) const;
    static MultilinearForm determinant(int n);
    // c * x1 x2 ... on Z_n
    static MultilinearForm product(int n, int arity, long long c, long long modulus);
    // the only nonzero GL(2, Z_2)-invariant trilinear form on Z_2^2: the sum of a_i b_j c_k over i, j, k not all equal
    static MultilinearForm gl2f2_invariant();
};

enum class AlexanderKind { One, Two, TwoPrime };

class AlexanderPhi : public Cochain {
public:
    // checks that f is well defined and G-invariant and that lambda is a homomorphism unless unchecked
    static std::shared_ptr<AlexanderPhi> make(AlexanderKind kind, McbPtr M, const MultilinearForm& f,
                                              std::vector<long long> lambda, bool unchecked = false);
    long long value(const PrismGen& g) const override;
    // the value on <y><a><b> for raw element indices; y ignored for kind one
    long long two_blocks(int y, int a, int b) const;
    AlexanderKind kind() const { return kind_; }

private:
    AlexanderPhi(McbPtr M, XSet Y, long long modulus) : Cochain(std::move(M), std::move(Y), 2, modulus) {}
    AlexanderKind kind_ = AlexanderKind::One;
    MultilinearForm f_;
    std::vector<long long> lambda_;
    const GFamily* fam_ = nullptr;
    // x (1 - phi(g) g^-1) and x (1 - phi(g)^-1 g) as tables over (g, x)
    std::vector<int> right_, left_;
    std::vector<int> ftab_;
    long long form(const int* xs) const;
};

XSet alexander_xset(McbPtr M, AlexanderKind kind);

}  // namespace bqc
