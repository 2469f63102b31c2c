#pragma once

#include <map>
#include <string>
#include <vector>

#include "srhecke/coeffpoly.hpp"
#include "srhecke/combinat.hpp"
#include "srhecke/polyring.hpp"

namespace srhecke {

/// Nonzero monomial y_M of F[B_n]: a multiset of pairwise-comparable subsets
/// of [n], kept sorted by (cardinality, bitmask). Repetitions, the empty set
/// and [n] are all allowed. The empty chain is the unit monomial.
class SRMonomial {
public:
    SRMonomial() = default;
    SRMonomial(int n, std::vector<Subset> chain);

    static SRMonomial unit(int n) { return SRMonomial(n, {}); }
    static SRMonomial from_multichain(const Multichain& m) {
        return SRMonomial(m.n(), m.sets());
    }

    int n() const { return n_; }
    int chain_length() const { return static_cast<int>(chain_.size()); }
    const std::vector<Subset>& chain() const { return chain_; }
    Multichain multichain() const { return Multichain(n_, chain_); }

    std::vector<int> rank_multiset() const;
    /// Multidegree as a monomial in t_0..t_n.
    ParamMonomial multidegree() const;

    /// Merge of the underlying multisets; false when an incomparable pair
    /// appears (the product is zero in the ring).
    static bool merge(const SRMonomial& a, const SRMonomial& b, SRMonomial* out);

    bool operator==(const SRMonomial& o) const {
        return n_ == o.n_ && chain_ == o.chain_;
    }
    /// Straightening order: rank multisets lexicographically, then the chains
    /// entrywise by bitmask.
    bool operator<(const SRMonomial& o) const;

    std::string str() const;

private:
    int n_ = 0;
    std::vector<Subset> chain_;
};

/// Element of F[B_n]: finite linear combination of chain monomials with
/// CoeffPoly coefficients. No zero coefficients stored.
class SRElement {
public:
    SRElement() = default;
    explicit SRElement(int n) : n_(n) {}

    static SRElement monomial(const SRMonomial& m, CoeffPoly c = CoeffPoly(1));
    static SRElement unit(int n) {
        return monomial(SRMonomial::unit(n));
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SRMonomial, CoeffPoly>& terms() const { return terms_; }

    void add_term(const SRMonomial& m, const CoeffPoly& c);

    SRElement operator+(const SRElement& o) const;
    SRElement operator-(const SRElement& o) const;
    SRElement operator-() const;
    SRElement operator*(const SRElement& o) const;
    SRElement scaled(const CoeffPoly& c) const;
    bool operator==(const SRElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const SRElement& o) const { return !(*this == o); }

    std::string str() const;
    std::string json() const;
    static SRElement from_json(const std::string& text);

private:
    int n_ = 0;
    std::map<SRMonomial, CoeffPoly> terms_;
};

/// theta_i = sum of y_A over |A| = i.
SRElement theta(int n, int i);

/// The S_n generator s_i applied by relabeling every subset entry.
SRMonomial sym_action(int i, const SRMonomial& m);
SRElement sym_action(int i, const SRElement& f);

/// The 0-Hecke generator: -y_M / 0 / s_i(y_M) by comparing p_i(M), p_{i+1}(M).
SRElement hecke_action(int i, const SRMonomial& m);
SRElement hecke_action(int i, const SRElement& f);

/// Y_w = prod over descents i of w of y_{ {w(1),...,w(i)} }.
SRMonomial descent_monomial(const Permutation& w);

/// f = sum_w c_w(Theta) Y_w; theta exponents are returned in variables
/// th0..thn. Inverse of expand_descent_basis.
std::map<Permutation, CoeffPoly> straighten(const SRElement& f);
SRElement expand_descent_basis(int n,
                               const std::map<Permutation, CoeffPoly>& coeffs);

/// Rank selection: kills monomials using a rank outside D(alpha) union {n}.
SRElement rank_selection(const SRElement& f, const Composition& alpha);

/// Transfer map tau: y_M -> prod_i prod_{j in A_i} x_j (not a ring map).
XPoly transfer(const SRElement& f);

}  // namespace srhecke
