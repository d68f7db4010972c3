#pragma once
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bqc/biquandle.hpp"
#include "bqc/error.hpp"
#include "bqc/group.hpp"

namespace bqc {

struct VerifyOptions {
    // exhaustive scans are used while the dominant loop stays under this many instances
    long long exhaustive_cap = 300000000;
    // otherwise each schema is tested on this many random instances
    long long samples = 1000000;
    std::uint64_t seed = 12345;
};

// A disjoint union of finite groups with under/over operations.
// Two backings: dense tables over the whole carrier, or the factored form X x G of a G-family.
class Mcb {
public:
    static Mcb dense(std::vector<FinGroup> groups, std::vector<int> under, std::vector<int> over);
    static Mcb associated(std::shared_ptr<const GFamily> F);
    // materialize the tables of a factored carrier
    Mcb densified(long long entry_cap = 30000000) const;

    int size() const { return n_; }
    int num_groups() const { return int(start_.size()); }
    int label(int a) const { return label_[a]; }
    int start(int lam) const { return start_[lam]; }
    int group_size(int lam) const { return gsize_[lam]; }
    int identity(int lam) const { return start_[lam] + ident_[lam]; }
    const FinGroup& group(int lam) const { return factored_ ? fam_->G : groups_[lam]; }

    int mul(int a, int b) const {
        if (factored_) return a - fg_[a] + fam_->G.op(fg_[a], fg_[b]);
        int lam = label_[a];
        return start_[lam] + groups_[lam].op(a - start_[lam], b - start_[lam]);
    }
    int inv(int a) const {
        if (factored_) return a - fg_[a] + fam_->G.inv(fg_[a]);
        int lam = label_[a];
        return start_[lam] + groups_[lam].inv(a - start_[lam]);
    }
    // checked product; cross-group products are structural errors
    int product(int a, int b) const;

    int under(int a, int b) const {
        if (!factored_) return u_[size_t(a) * n_ + b];
        const int h = fg_[b];
        return fu(h, fx_[a], fx_[b]) * ng_ + conj_[h * ng_ + fg_[a]];
    }
    int over(int a, int b) const {
        if (!factored_) return o_[size_t(a) * n_ + b];
        return fo(fg_[b], fx_[a], fx_[b]) * ng_ + fg_[a];
    }
    // the x with x under* b = c (resp. over*); needs invertible()
    int under_inv(int c, int b) const {
        if (!factored_) return ui_[size_t(c) * n_ + b];
        const int h = fg_[b];
        return fui_[(size_t(h) * nx_ + fx_[c]) * nx_ + fx_[b]] * ng_ + conj_inv_[h * ng_ + fg_[c]];
    }
    int over_inv(int c, int b) const {
        if (!factored_) return oi_[size_t(c) * n_ + b];
        return foi_[(size_t(fg_[b]) * nx_ + fx_[c]) * nx_ + fx_[b]] * ng_ + fg_[c];
    }
    bool invertible() const { return invertible_; }

    bool factored() const { return factored_; }
    // non-null when the carrier is X x G laid out as x*|G| + g (dense or factored)
    const GFamily* family() const { return fam_.get(); }
    std::shared_ptr<const GFamily> family_ptr() const { return fam_; }
    int fx(int a) const { return fx_[a]; }
    int fg(int a) const { return fg_[a]; }
    int nx() const { return nx_; }
    int ng() const { return ng_; }

    // Definition with exchange identities and group compatibility only
    AxiomReport verify(const VerifyOptions& opt = {}) const;
    // biquandle axioms B1-B3 together with the group compatibility axioms
    AxiomReport verify_biquandle_form(const VerifyOptions& opt = {}) const;

    std::string name;

private:
    Mcb() = default;
    void finish_inverses();
    int fu(int h, int x, int y) const { return fam_->U[(size_t(h) * nx_ + x) * nx_ + y]; }
    int fo(int h, int x, int y) const { return fam_->O[(size_t(h) * nx_ + x) * nx_ + y]; }
    AxiomReport verify_impl(bool biquandle_form, const VerifyOptions& opt) const;

    int n_ = 0;
    bool factored_ = false;
    bool invertible_ = false;
    std::vector<int> label_, start_, gsize_, ident_;
    // dense backing
    std::vector<FinGroup> groups_;
    std::vector<int> u_, o_, ui_, oi_;
    // factored backing
    std::shared_ptr<const GFamily> fam_;
    int nx_ = 0, ng_ = 0;
    std::vector<int> fx_, fg_, conj_, conj_inv_, fui_, foi_;
};

using McbPtr = std::shared_ptr<const Mcb>;

// The spaces Y that color regions.
class XSet {
public:
    enum class Kind { Trivial, Table, SelfUnder, FamilyUnder };

    static XSet trivial(McbPtr M);
    static XSet table(McbPtr M, int points, std::vector<int> act);
    // Y = X acting by under*
    static XSet self_under(McbPtr M);
    // Y = the index set of the groups, e_lam under* x = e_mu
    static XSet index_set(McbPtr M);
    // Y = X of a G-family acting on X x G by y*(x,g) = y under*^g x
    static XSet family_under(McbPtr M);

    Kind kind() const { return kind_; }
    int points() const { return points_; }
    const Mcb& mcb() const { return *m_; }
    McbPtr mcb_ptr() const { return m_; }

    int act(int y, int x) const {
        switch (kind_) {
            case Kind::Trivial: return 0;
            case Kind::Table: return act_[size_t(y) * m_->size() + x];
            case Kind::SelfUnder: return m_->under(y, x);
            default: return m_->family()->u(m_->fg(x), y, m_->fx(x));
        }
    }
    // the z with z*x = y
    int act_inv(int y, int x) const;

    AxiomReport verify(const VerifyOptions& opt = {}) const;
    std::string name;

private:
    Kind kind_ = Kind::Trivial;
    int points_ = 1;
    McbPtr m_;
    std::vector<int> act_, inv_;
};

McbPtr assoc_mcb_from_gfamily(const GFamily& F, bool dense_if_small = true);

struct ParallelXSet {
    McbPtr mcb;
    XSet xset;
    long long period;
};

// X x Z_(type X_Y) with y*(x,n) = y *^[n] x
ParallelXSet xset_from_parallel(const FinBiquandle& X, const BqXSet& Y);

}  // namespace bqc
