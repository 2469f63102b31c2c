#pragma once

#include <map>
#include <string>
#include <vector>

#include "srhecke/coeffpoly.hpp"
#include "srhecke/combinat.hpp"

namespace srhecke {

/// Element of H_n(0) written over the basis of pibar_w.
class HeckeElt {
public:
    HeckeElt() = default;
    explicit HeckeElt(int n) : n_(n) {}

    static HeckeElt unit(int n);                 // pibar of the identity
    static HeckeElt pibar(const Permutation& w); // basis element
    static HeckeElt pibar_gen(int n, int i);     // pibar_i
    static HeckeElt pi_gen(int n, int i);        // pi_i = pibar_i + 1
    /// pi_w via a reduced word (well defined by the relations).
    static HeckeElt pi(const Permutation& w);
    /// pi_{w_0(alpha)} = sum of pibar_u over the parabolic subgroup S_{alpha^c}.
    static HeckeElt pi_longest_parabolic(const Composition& alpha);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, Int>& terms() const { return terms_; }

    void add_term(const Permutation& w, const Int& c);

    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator-(const HeckeElt& o) const;
    HeckeElt operator*(const HeckeElt& o) const;
    HeckeElt scaled(const Int& c) const;
    bool operator==(const HeckeElt& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

    /// Left multiplication by the generator pibar_i.
    HeckeElt gen_mult(int i) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Permutation, Int> terms_;
};

/// One generator's action on one basis element of a finite module.
struct ActionColumn {
    enum Kind { Zero, Negate, Move, General };
    Kind kind = Zero;
    int target = -1;              // Move only
    std::map<int, Int> combo;     // General only

    /// The column applied to a unit vector, as a sparse vector.
    std::map<int, Int> as_vector(int index) const;
};

/// Finite H_n(0)-module given by generator action tables over an indexed
/// basis. Columns of kind zero/negate/move are "monomial" and feed the
/// triangular characteristic; General columns are allowed but excluded there.
class ModuleRep {
public:
    ModuleRep() = default;
    ModuleRep(int n, std::vector<std::string> labels);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    void set_column(int i, int index, ActionColumn col);
    const ActionColumn& column(int i, int index) const;

    /// Generator pibar_i applied to a sparse vector.
    std::map<int, Int> apply(int i, const std::map<int, Int>& v) const;

    bool all_columns_monomial() const;

    /// Basis permutations when the basis is indexed by permutations
    /// (projective/cyclic modules); empty otherwise.
    const std::vector<Permutation>& perm_basis() const { return perm_basis_; }
    void set_perm_basis(std::vector<Permutation> b) {
        perm_basis_ = std::move(b);
    }

    std::string json() const;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<ActionColumn>> action_;  // [i-1][index]
    std::vector<Permutation> perm_basis_;
};

/// P_alpha: basis {pibar_w pi_{w_0(alpha^c)} : D(w) = D(alpha)}, action
/// computed inside H_n(0) and re-expressed over the basis.
ModuleRep projective_module(const Composition& alpha);

/// C_alpha: one-dimensional; pibar_i acts by -1 on descents of alpha, else 0.
ModuleRep simple_module(const Composition& alpha);

/// H_n(0) pi_{w_0(alpha^c)} with basis indexed by S^alpha.
ModuleRep cyclic_module(const WeakComposition& alpha);
ModuleRep cyclic_module(const Composition& alpha);

/// True iff the quadratic, commuting and braid relation families hold.
bool check_relations(const ModuleRep& rep);

/// Re-expresses x over the basis {pibar_w pi_{w_0(alpha^c)} : D(w)=D(alpha)}
/// by peeling maximal-length terms. Throws if x is outside the span.
std::map<Permutation, Int> express_in_projective_basis(const Composition& alpha,
                                                       const HeckeElt& x);

}  // namespace srhecke
