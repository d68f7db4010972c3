#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bqc/error.hpp"
#include "bqc/group.hpp"

namespace bqc {

enum class Side { Under, Over };

class FinBiquandle {
public:
    FinBiquandle() = default;
    // tables are row-major: under[a*n+b] = a under* b
    FinBiquandle(int n, std::vector<int> under, std::vector<int> over);

    static FinBiquandle trivial(int n);
    // x under* y = 2y - x, x over* y = x on Z_n
    static FinBiquandle dihedral(int n);
    // x under* y = t x + (s - t) y, x over* y = s x on Z_n
    static FinBiquandle alexander(int n, int t, int s);

    int size() const { return n_; }
    int under(int a, int b) const { return u_[a * n_ + b]; }
    int over(int a, int b) const { return o_[a * n_ + b]; }
    const std::vector<int>& under_table() const { return u_; }
    const std::vector<int>& over_table() const { return o_; }

    // B1, B2, B3 with witnesses; never throws on axiom failure
    AxiomReport verify() const;

    // the following need a certified biquandle
    int under_inv(int c, int b) const { return ui_[c * n_ + b]; }
    int over_inv(int c, int b) const { return oi_[c * n_ + b]; }
    // the unique z with z under* z = b
    int diag_inv(int b) const { return di_[b]; }
    bool bijective() const { return !ui_.empty(); }

private:
    int n_ = 0;
    std::vector<int> u_, o_;
    std::vector<int> ui_, oi_, di_;
};

int parallel_op(const FinBiquandle& X, int a, int b, long long n, Side side);

// an action Y x X -> Y of a plain biquandle, used for parallel X-sets and biquandle cocycles
struct BqXSet {
    int points = 1;
    std::vector<int> act;  // act[y*|X| + x]

    static BqXSet trivial(const FinBiquandle& X);
    static BqXSet self_under(const FinBiquandle& X);
    int operator()(int y, int x, int nx) const { return act[y * nx + x]; }
    AxiomReport verify(const FinBiquandle& X) const;
};

// y *^[n] x with y *^[i+j] x = (y *^[i] x) *^[j] (x under*^[i] x)
int parallel_act(const FinBiquandle& X, const BqXSet& Y, int y, int x, long long n);

long long biquandle_type(const FinBiquandle& X, long long cap = 1000000);
long long type_with_xset(const FinBiquandle& X, const BqXSet& Y, long long cap = 1000000);

// data kept by Alexander-type families so cocycle formulas can be evaluated directly
struct AlexanderData {
    ZnModule module;
    std::vector<std::vector<int>> action;  // action[g][x] = x g
    std::vector<int> phi;                  // phi(g) as an element of G
};

struct GFamily {
    int nx = 0;
    FinGroup G;
    std::vector<int> U, O;  // index (g*nx + x)*nx + y
    std::optional<AlexanderData> alexander;
    std::string name;

    int u(int g, int x, int y) const { return U[(size_t(g) * nx + x) * nx + y]; }
    int o(int g, int x, int y) const { return O[(size_t(g) * nx + x) * nx + y]; }

    AxiomReport verify() const;
};

// caps the number of table entries |G|*|X|^2 a family may allocate
inline long long family_entry_cap = 50000000;

GFamily make_alexander_gfamily(const FinGroup& G, const GroupHom& phi, const ZnModule& M,
                               const std::vector<std::vector<int>>& mats);
// X a group acted on by G through automorphisms act[g][x] = x^g
GFamily make_generalized_alexander_gfamily(const FinGroup& X, const FinGroup& G, const GroupHom& phi,
                                           const std::vector<std::vector<int>>& act);
// period 0 means type X; any multiple of type X also gives a family
GFamily make_zn_family(const FinBiquandle& X, long long period = 0, long long cap = 1000000);

}  // namespace bqc
