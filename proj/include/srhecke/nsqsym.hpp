#pragma once

#include <map>
#include <string>

#include "srhecke/coeffpoly.hpp"
#include "srhecke/combinat.hpp"

namespace srhecke {

/// Quasisymmetric function over CoeffPoly coefficients, stored on either the
/// monomial (M) or fundamental (F) basis.
class QSymElt {
public:
    enum Basis { M, F };

    explicit QSymElt(Basis b = F) : basis_(b) {}

    static QSymElt basis_elt(Basis b, const Composition& alpha,
                             CoeffPoly c = CoeffPoly(1));

    Basis basis() const { return basis_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Composition, CoeffPoly>& terms() const { return terms_; }

    void add_term(const Composition& alpha, const CoeffPoly& c);

    QSymElt operator+(const QSymElt& o) const;
    QSymElt operator-(const QSymElt& o) const;
    QSymElt scaled(const CoeffPoly& c) const;
    bool operator==(const QSymElt& o) const;
    bool operator!=(const QSymElt& o) const { return !(*this == o); }

    /// Basis changes: F_a = sum over finer b of M_b, and the signed inverse.
    QSymElt to_m() const;
    QSymElt to_f() const;

    QSymElt substituted(const std::map<std::string, CoeffPoly>& subst) const;
    /// Drops terms whose coefficient degree (in the filter variables) exceeds
    /// the cap, coefficientwise.
    QSymElt truncated(int total_cap, const std::set<std::string>& filter) const;

    std::string str() const;  // "coeff * F[2,1] + ..."

private:
    Basis basis_;
    std::map<Composition, CoeffPoly> terms_;
};

/// Noncommutative symmetric function on the complete (h) or ribbon (s) basis.
class NSymElt {
public:
    enum Basis { h, s };

    explicit NSymElt(Basis b = s) : basis_(b) {}

    static NSymElt basis_elt(Basis b, const Composition& alpha,
                             CoeffPoly c = CoeffPoly(1));

    Basis basis() const { return basis_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Composition, CoeffPoly>& terms() const { return terms_; }

    void add_term(const Composition& alpha, const CoeffPoly& c);

    NSymElt operator+(const NSymElt& o) const;
    NSymElt operator-(const NSymElt& o) const;
    /// Product via s_a s_b = s_{ab} + s_{a|>b} after conversion to s.
    NSymElt operator*(const NSymElt& o) const;
    NSymElt scaled(const CoeffPoly& c) const;
    bool operator==(const NSymElt& o) const;
    bool operator!=(const NSymElt& o) const { return !(*this == o); }

    NSymElt to_h() const;
    NSymElt to_s() const;

    NSymElt substituted(const std::map<std::string, CoeffPoly>& subst) const;

    std::string str() const;  // "coeff * s[2,1] + ..."

private:
    Basis basis_;
    std::map<Composition, CoeffPoly> terms_;
};

/// s_alpha s_beta as the two-term ribbon rule.
NSymElt ribbon_product(const Composition& alpha, const Composition& beta);

/// <M_a, h_b> = <F_a, s_b> = delta, extended bilinearly.
CoeffPoly pairing(const QSymElt& x, const NSymElt& y);

/// <s_a, s_b> = (-1)^{|a|+l(a)} delta_{a, b^c}, extended bilinearly.
CoeffPoly bz_inner(const NSymElt& x, const NSymElt& y);

/// Modified: sum over beta refining alpha of t^{D(beta)} s_beta.
/// Unmodified: t^{D(alpha) minus D(beta)} weights instead.
NSymElt hall_littlewood(const Composition& alpha, bool modified);

/// Substitution maps for the named specializations.
std::map<std::string, CoeffPoly> subst_t_power(int n);        // t_i -> t^i
std::map<std::string, CoeffPoly> subst_qt(const Composition& alpha);
std::map<std::string, CoeffPoly> subst_lnt(const Composition& alpha);
std::map<std::string, CoeffPoly> subst_periodic(int n, int imax);  // t|n

/// Expands both sides of the product formula for H_alpha H_beta; true iff
/// equal. On failure *witness names the first differing ribbon coefficient.
bool hl_product_formula_check(const Composition& alpha, const Composition& beta,
                              std::string* witness = nullptr);

/// ps_{q;ell}(F_alpha): exact polynomial by enumerating bounded weakly
/// decreasing sequences with strict drops at D(alpha).
CoeffPoly principal_specialization_finite(const Composition& alpha, int ell,
                                          const std::string& qvar = "q");

/// ps_{q;infinity}(F_alpha) = q^{maj} / ((1-q)...(1-q^n)) as a series
/// truncated at q-degree qcap.
CoeffPoly principal_specialization_infinite(const Composition& alpha, int qcap,
                                            const std::string& qvar = "q");

}  // namespace srhecke
