#pragma once

#include <string>
#include <vector>

#include "srhecke/hecke0.hpp"
#include "srhecke/nsqsym.hpp"
#include "srhecke/srring.hpp"

namespace srhecke {

/// Verifier outcome; witness names the first differing coefficient.
struct Report {
    std::string identity;
    std::map<std::string, long> params;
    bool pass = true;
    std::string witness;
    long millis = 0;

    std::string json() const;
};

/// Characteristic of a module whose generator columns are all zero/negate/move
/// and whose moves strictly increase the level: sum over basis elements of
/// q^{level} F_{S}, S = the set of negating generators.
QSymElt triangular_ch(const ModuleRep& rep, const std::vector<long>& level,
                      const std::string& qvar = "q");

/// The homogeneous component of F[B_n] spanned by multichains M with
/// alpha(M) = alpha, as an explicit module; levels are inv(sigma(M)).
struct ComponentModule {
    ModuleRep rep;
    std::vector<long> levels;
    std::vector<Multichain> basis;
};
ComponentModule srring_component_module(const WeakComposition& alpha);

/// Explicit formula: sum over w in S^alpha of q^{inv w} t^{D(alpha)}
/// F_{D(w^{-1})}, with t^{D(alpha)} over the descent multiset.
QSymElt component_char(const WeakComposition& alpha);

/// Action of pibar_i on the quotient basis {Y_w : w in S^alpha}, computed in
/// the ring and reduced modulo positive-degree theta coefficients.
std::map<Permutation, Int> quotient_gen_action(int i, const Permutation& w);

/// Builds the quotient module on {Y_w : w in S^alpha}, verifies Q_beta
/// isomorphic to P_beta summand by summand (throws on failure), and returns
/// the sum over beta refining alpha of t^{D(beta)} s_beta.
NSymElt nc_char_quotient(const Composition& alpha);

/// The three expressions for the multigraded quasisymmetric characteristic of
/// F[B_n], each truncated to total t-degree K (chain length).
QSymElt theorem2_lhs(int n, int K);
QSymElt theorem2_mid(int n, int K);
QSymElt theorem2_rhs(int n, int K);

/// The scalar by which pi_{w_0(alpha^c)} acts on the simple C_beta (0 or 1),
/// computed from reduced words; the multiplicity of P_beta in the cyclic
/// module for alpha.
Int idempotent_multiplicity(const std::set<int>& descents_alpha, int n,
                            const Composition& beta);

/// ch_t(F[B_n*]): component-by-component from idempotent multiplicities
/// (direct), and the closed form with the geometric denominator; both
/// truncated to total t-degree K.
NSymElt star_nc_char_direct(int n, int K);
NSymElt star_nc_char_formula(int n, int K);

/// Ch_{q,t}(F[B_n*]): direct from triangular_ch of each component, and the
/// closed form; truncated to total t-degree K.
QSymElt star_qs_char_direct(int n, int K);
QSymElt star_qs_char_formula(int n, int K);

/// First differing coefficient between two values, or "" when equal.
std::string diff_witness(const CoeffPoly& l, const CoeffPoly& r);
std::string diff_witness(const QSymElt& l, const QSymElt& r);
std::string diff_witness(const NSymElt& l, const NSymElt& r);

Report garsia_gessel_check(int n, int L);
Report garsia_gessel_second_check(int n, int L);
Report macmahon_carlitz_check(int n, int K);
Report abr_check(int n, int lcap);
Report abr_intermediate_check(int n, int lcap);
Report box_check(int n, int k);

/// BZ specialization of the verified quotient characteristic against the
/// t^{maj} form.
Report bz_specialization_check(const Composition& alpha);
/// (q,t) specialization of the 1^n characteristic against the
/// c(alpha,beta)/c(alpha',reversed beta) formula.
Report qt_specialization_check(const Composition& alpha);

}  // namespace srhecke
