#include "srhecke/chars.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace srhecke {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

}  // namespace

std::string diff_witness(const CoeffPoly& l, const CoeffPoly& r) {
    CoeffPoly diff = l - r;
    if (diff.is_zero()) return "";
    const auto& m = diff.terms().begin()->first;
    auto get = [&](const CoeffPoly& p) {
        auto it = p.terms().find(m);
        return it == p.terms().end() ? std::string("0") : it->second.get_str();
    };
    return "monomial " + param_monomial_str(m) + ": lhs=" + get(l) +
           " rhs=" + get(r);
}

std::string diff_witness(const QSymElt& l, const QSymElt& r) {
    QSymElt lf = l.to_f(), rf = r.to_f();
    QSymElt diff = lf - rf;
    if (diff.is_zero()) return "";
    const Composition& a = diff.terms().begin()->first;
    auto get = [&](const QSymElt& x) {
        auto it = x.terms().find(a);
        return it == x.terms().end() ? CoeffPoly() : it->second;
    };
    return "F[" + a.str() + "] " + diff_witness(get(lf), get(rf));
}

std::string diff_witness(const NSymElt& l, const NSymElt& r) {
    NSymElt ls = l.to_s(), rs = r.to_s();
    NSymElt diff = ls - rs;
    if (diff.is_zero()) return "";
    const Composition& a = diff.terms().begin()->first;
    auto get = [&](const NSymElt& x) {
        auto it = x.terms().find(a);
        return it == x.terms().end() ? CoeffPoly() : it->second;
    };
    return "s[" + a.str() + "] " + diff_witness(get(ls), get(rs));
}

namespace {

CoeffPoly t_multiset_monomial(const std::vector<int>& multiset) {
    CoeffPoly p(1);
    for (int d : multiset) p *= CoeffPoly::var("t" + std::to_string(d));
    return p;
}

CoeffPoly t_set_monomial(const std::set<int>& s) {
    CoeffPoly p(1);
    for (int d : s) p *= CoeffPoly::var("t" + std::to_string(d));
    return p;
}

std::set<std::string> t_vars(int lo, int hi) {
    std::set<std::string> v;
    for (int i = lo; i <= hi; ++i) v.insert("t" + std::to_string(i));
    return v;
}

/// Truncated Hilbert series of the theta subalgebra on ranks lo..hi:
/// prod 1/(1-t_i) expanded to total t-degree K.
CoeffPoly theta_hilbert(int lo, int hi, int K) {
    auto filt = t_vars(lo, hi);
    CoeffPoly acc(1);
    for (int i = lo; i <= hi; ++i) {
        CoeffPoly geo;
        for (int j = 0; j <= K; ++j)
            geo += CoeffPoly::var("t" + std::to_string(i), j);
        acc = (acc * geo).truncated(K, filt);
    }
    return acc;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::string Report::json() const {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    nlohmann::json j{{"identity", identity},
                     {"params", p},
                     {"status", pass ? "pass" : "fail"},
                     {"millis", millis}};
    if (!pass) {
        // split "<monomial>: lhs=<l> rhs=<r>" into the schema fields
        std::string mono = witness, l, r;
        auto lp = witness.rfind(": lhs=");
        auto rp = witness.rfind(" rhs=");
        if (lp != std::string::npos && rp != std::string::npos && rp > lp) {
            mono = witness.substr(0, lp);
            l = witness.substr(lp + 6, rp - lp - 6);
            r = witness.substr(rp + 5);
        }
        j["witness"] = {{"monomial", mono}, {"lhs", l}, {"rhs", r}};
    }
    return j.dump();
}

QSymElt triangular_ch(const ModuleRep& rep, const std::vector<long>& level,
                      const std::string& qvar) {
    if (static_cast<int>(level.size()) != rep.dim())
        throw std::invalid_argument("level table size mismatch");
    if (!rep.all_columns_monomial())
        throw std::invalid_argument("non-monomial generator column");
    int n = rep.n();
    for (int i = 1; i < n; ++i)
        for (int b = 0; b < rep.dim(); ++b) {
            const ActionColumn& col = rep.column(i, b);
            if (col.kind == ActionColumn::Move &&
                level.at(col.target) <= level.at(b))
                throw std::invalid_argument("move does not increase level");
        }
    QSymElt out(QSymElt::F);
    for (int b = 0; b < rep.dim(); ++b) {
        std::set<int> negs;
        for (int i = 1; i < n; ++i)
            if (rep.column(i, b).kind == ActionColumn::Negate) negs.insert(i);
        out.add_term(Composition::from_descents(n, negs),
                     CoeffPoly::var(qvar, static_cast<int>(level[b])));
    }
    return out;
}

ComponentModule srring_component_module(const WeakComposition& alpha) {
    int n = alpha.size();
    int k = alpha.length() - 1;
    ComponentModule cm;
    std::map<Multichain, int> index;
    for (const Multichain& m : all_multichains(n, k)) {
        if (encode_multichain(m).first == alpha) {
            index[m] = static_cast<int>(cm.basis.size());
            cm.basis.push_back(m);
        }
    }
    std::vector<std::string> labels;
    for (const Multichain& m : cm.basis) {
        labels.push_back(n <= 9 ? m.bar_form() : std::to_string(labels.size()));
        cm.levels.push_back(encode_multichain(m).second.inversions());
    }
    cm.rep = ModuleRep(n, labels);
    for (size_t b = 0; b < cm.basis.size(); ++b) {
        SRMonomial ym = SRMonomial::from_multichain(cm.basis[b]);
        for (int i = 1; i < n; ++i) {
            SRElement img = hecke_action(i, ym);
            ActionColumn col;
            if (img.is_zero()) {
                col.kind = ActionColumn::Zero;
            } else {
                const auto& [m2, c] = *img.terms().begin();
                Int cv = c.terms().begin()->second;
                if (m2 == ym && cv == -1) {
                    col.kind = ActionColumn::Negate;
                } else {
                    col.kind = ActionColumn::Move;
                    col.target = index.at(m2.multichain());
                }
            }
            cm.rep.set_column(i, static_cast<int>(b), col);
        }
    }
    return cm;
}

QSymElt component_char(const WeakComposition& alpha) {
    int n = alpha.size();
    CoeffPoly tmono = t_multiset_monomial(alpha.descent_multiset());
    QSymElt out(QSymElt::F);
    for (const Permutation& w : min_coset_reps_n(alpha)) {
        out.add_term(
            Composition::from_descents(n, w.inverse().descents()),
            tmono * CoeffPoly::var("q", static_cast<int>(w.inversions())));
    }
    return out;
}

std::map<Permutation, Int> quotient_gen_action(int i, const Permutation& w) {
    SRElement f = hecke_action(
        i, SRElement::monomial(descent_monomial(w)));
    std::map<Permutation, Int> out;
    for (const auto& [sigma, c] : straighten(f)) {
        // keep the theta-free part: the image modulo the positive-degree thetas
        auto it = c.terms().find(ParamMonomial{});
        if (it != c.terms().end()) out[sigma] = it->second;
    }
    return out;
}

NSymElt nc_char_quotient(const Composition& alpha) {
    int n = alpha.size();
    auto da = alpha.descents();
    NSymElt out(NSymElt::s);
    // subsets of D(alpha) index the summands Q_beta
    std::vector<int> dv(da.begin(), da.end());
    for (unsigned mask = 0; mask < (1u << dv.size()); ++mask) {
        std::set<int> db;
        for (size_t j = 0; j < dv.size(); ++j)
            if (mask & (1u << j)) db.insert(dv[j]);
        Composition beta = Composition::from_descents(n, db);
        ModuleRep pb = projective_module(beta);
        std::map<Permutation, int> pindex;
        for (size_t b = 0; b < pb.perm_basis().size(); ++b)
            pindex[pb.perm_basis()[b]] = static_cast<int>(b);
        for (const auto& [w, bidx] : pindex) {
            for (int i = 1; i < n; ++i) {
                std::map<Permutation, Int> qact = quotient_gen_action(i, w);
                std::map<int, Int> expect =
                    pb.column(i, bidx).as_vector(bidx);
                std::map<int, Int> got;
                for (const auto& [u, c] : qact) {
                    auto it = pindex.find(u);
                    if (it == pindex.end())
                        throw std::runtime_error(
                            "quotient action leaves the descent class");
                    got[it->second] = c;
                }
                if (got != expect)
                    throw std::runtime_error(
                        "quotient module is not equivariant with the "
                        "projective summand");
            }
        }
        out.add_term(beta, t_set_monomial(db));
    }
    return out;
}

QSymElt theorem2_lhs(int n, int K) {
    QSymElt out(QSymElt::F);
    for (int k = 0; k <= K; ++k)
        for (const WeakComposition& a : all_weak_compositions(n, k + 1))
            out = out + component_char(a);
    return out;
}

QSymElt theorem2_mid(int n, int K) {
    CoeffPoly hilb = theta_hilbert(0, n, K);
    auto filt = t_vars(0, n);
    QSymElt out(QSymElt::F);
    for (const Permutation& w : all_permutations(n)) {
        CoeffPoly c = CoeffPoly::var("q", static_cast<int>(w.inversions())) *
                      t_set_monomial(w.descents());
        out.add_term(Composition::from_descents(n, w.inverse().descents()),
                     (c * hilb).truncated(K, filt));
    }
    return out;
}

QSymElt theorem2_rhs(int n, int K) {
    QSymElt out(QSymElt::F);
    for (int k = 0; k <= K; ++k) {
        std::vector<int> letters(n, 1);
        while (true) {
            PWord p(letters, k);
            CoeffPoly c = CoeffPoly::var("q", static_cast<int>(p.inversions()));
            c *= t_multiset_monomial(p.pprime());
            out.add_term(Composition::from_descents(n, p.descents()), c);
            int j = n - 1;
            while (j >= 0 && letters[j] == k + 1) letters[j--] = 1;
            if (j < 0) break;
            ++letters[j];
        }
    }
    return out;
}

Int idempotent_multiplicity(const std::set<int>& descents_alpha, int n,
                            const Composition& beta) {
    auto db = beta.descents();
    Int total = 0;
    for (const Permutation& u :
         parabolic_subgroup(Composition::from_descents(n, descents_alpha))) {
        std::vector<int> word = u.reduced_word();
        bool zero = false;
        for (int i : word)
            if (!db.count(i)) {
                zero = true;
                break;
            }
        if (!zero) total += (word.size() % 2 == 0) ? 1 : -1;
    }
    return total;
}

namespace {
/// Weak compositions of n with k+1 parts and first part >= 1 (no empty set in
/// the corresponding multichains).
std::vector<WeakComposition> compositions_no_empty(int n, int k) {
    std::vector<WeakComposition> out;
    for (const WeakComposition& a : all_weak_compositions(n, k + 1))
        if (a.parts()[0] >= 1) out.push_back(a);
    return out;
}
}  // namespace

NSymElt star_nc_char_direct(int n, int K) {
    NSymElt out(NSymElt::s);
    for (int k = 0; k <= K; ++k) {
        for (const WeakComposition& a : compositions_no_empty(n, k)) {
            CoeffPoly tm = t_multiset_monomial(a.descent_multiset());
            for (const Composition& beta : all_compositions(n)) {
                Int m = idempotent_multiplicity(a.descent_set(), n, beta);
                if (m != 0) out.add_term(beta, tm * CoeffPoly(m));
            }
        }
    }
    return out;
}

NSymElt star_nc_char_formula(int n, int K) {
    CoeffPoly hilb = theta_hilbert(1, n, K);
    auto filt = t_vars(1, n);
    NSymElt out(NSymElt::s);
    for (const Composition& a : all_compositions(n))
        out.add_term(a,
                     (t_set_monomial(a.descents()) * hilb).truncated(K, filt));
    return out;
}

QSymElt star_qs_char_direct(int n, int K) {
    QSymElt out(QSymElt::F);
    for (int k = 0; k <= K; ++k) {
        for (const WeakComposition& a : compositions_no_empty(n, k)) {
            ComponentModule cm = srring_component_module(a);
            QSymElt ch = triangular_ch(cm.rep, cm.levels);
            out = out + ch.scaled(t_multiset_monomial(a.descent_multiset()));
        }
    }
    return out;
}

QSymElt star_qs_char_formula(int n, int K) {
    CoeffPoly hilb = theta_hilbert(1, n, K);
    auto filt = t_vars(1, n);
    QSymElt out(QSymElt::F);
    for (const Permutation& w : all_permutations(n)) {
        CoeffPoly c = CoeffPoly::var("q", static_cast<int>(w.inversions())) *
                      t_set_monomial(w.descents());
        out.add_term(Composition::from_descents(n, w.inverse().descents()),
                     (c * hilb).truncated(K, filt));
    }
    return out;
}

namespace {
/// Enumerates the bipartite partitions B(ell, k) and feeds each (lambda, mu)
/// to the visitor.
void for_each_bipartite(int n, int ell, int k,
                        const std::function<void(const std::vector<int>&,
                                                 const std::vector<int>&)>& f) {
    std::vector<int> lam(n), mu(n);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            f(lam, mu);
            return;
        }
        int lhi = j == 0 ? ell : lam[j - 1];
        for (int lv = lhi; lv >= 0; --lv) {
            lam[j] = lv;
            int mhi = (j > 0 && lam[j - 1] == lv) ? mu[j - 1] : k;
            for (int mv = 0; mv <= mhi; ++mv) {
                mu[j] = mv;
                rec(j + 1);
            }
        }
    };
    rec(0);
}

long vec_inversions(const std::vector<int>& v) {
    long inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv;
}

long vec_coinversions(const std::vector<int>& v) {
    long inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j]) ++inv;
    return inv;
}

int vec_sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}
}  // namespace

Report garsia_gessel_check(int n, int L) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "garsia-gessel";
    rep.params = {{"n", n}, {"lmax", L}};
    auto c1 = pochhammer_inverse_coeffs("q1", n, L);
    auto c2 = pochhammer_inverse_coeffs("q2", n, L);
    auto perms = all_permutations(n);
    for (int ell = 0; ell <= L && rep.pass; ++ell) {
        for (int k = 0; k <= L && rep.pass; ++k) {
            CoeffPoly lhs;
            for (const Permutation& w : perms) {
                Permutation wi = w.inverse();
                int d1 = wi.des(), d2 = w.des();
                if (d1 > ell || d2 > k) continue;
                CoeffPoly c =
                    CoeffPoly::var("q0", static_cast<int>(w.inversions())) *
                    CoeffPoly::var("q1", wi.maj()) *
                    CoeffPoly::var("q2", w.maj());
                lhs += c * c1[ell - d1] * c2[k - d2];
            }
            CoeffPoly rhs;
            for_each_bipartite(
                n, ell, k,
                [&](const std::vector<int>& lam, const std::vector<int>& mu) {
                    rhs += CoeffPoly::var(
                               "q0", static_cast<int>(vec_coinversions(mu))) *
                           CoeffPoly::var("q1", vec_sum(lam)) *
                           CoeffPoly::var("q2", vec_sum(mu));
                });
            if (lhs != rhs) {
                rep.pass = false;
                rep.witness = "u1^" + std::to_string(ell) + " u2^" +
                              std::to_string(k) + " " +
                              diff_witness(lhs, rhs);
            }
        }
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Report garsia_gessel_second_check(int n, int L) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "garsia-gessel-2";
    rep.params = {{"n", n}, {"lmax", L}};
    auto c1 = pochhammer_inverse_coeffs("q1", n, L);
    auto c2 = pochhammer_inverse_coeffs("q2", n, L);
    auto perms = all_permutations(n);
    for (int ell = 0; ell <= L && rep.pass; ++ell) {
        for (int k = 0; k <= L && rep.pass; ++k) {
            CoeffPoly lhs;
            for (const Permutation& w : perms) {
                Permutation wi = w.inverse();
                int d1 = wi.des(), d2 = w.des();
                if (d1 > ell || d2 > k) continue;
                lhs += CoeffPoly::var("q1", wi.maj()) *
                       CoeffPoly::var("q2", w.maj()) * c1[ell - d1] *
                       c2[k - d2];
            }
            // [z^n] of prod over 0<=i<=ell, 0<=j<=k of 1/(1 - z q1^i q2^j)
            std::vector<CoeffPoly> v(n + 1);
            v[0] = CoeffPoly(1);
            for (int i = 0; i <= ell; ++i) {
                for (int j = 0; j <= k; ++j) {
                    CoeffPoly term = CoeffPoly::var("q1", i) *
                                     CoeffPoly::var("q2", j);
                    for (int m = 1; m <= n; ++m) v[m] += v[m - 1] * term;
                }
            }
            if (lhs != v[n]) {
                rep.pass = false;
                rep.witness = "u1^" + std::to_string(ell) + " u2^" +
                              std::to_string(k) + " " + diff_witness(lhs, v[n]);
            }
        }
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Report macmahon_carlitz_check(int n, int K) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "macmahon-carlitz";
    rep.params = {{"n", n}, {"kmax", K}};
    auto c = pochhammer_inverse_coeffs("q", n, K);
    auto perms = all_permutations(n);
    for (int k = 0; k <= K && rep.pass; ++k) {
        CoeffPoly lhs;
        for (const Permutation& w : perms) {
            if (w.des() > k) continue;
            lhs += CoeffPoly::var("q", w.maj()) * c[k - w.des()];
        }
        CoeffPoly bracket;
        for (int j = 0; j <= k; ++j) bracket += CoeffPoly::var("q", j);
        CoeffPoly rhs(1);
        for (int i = 0; i < n; ++i) rhs *= bracket;
        if (lhs != rhs) {
            rep.pass = false;
            rep.witness =
                "u^" + std::to_string(k) + " " + diff_witness(lhs, rhs);
        }
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

namespace {
CoeffPoly qq_prefix(int i) {  // q_1 q_2 ... q_i
    CoeffPoly p(1);
    for (int j = 1; j <= i; ++j)
        p *= CoeffPoly::var("qq" + std::to_string(j));
    return p;
}

/// Right-hand side of the weak-partition identity: the descent-monomial
/// numerator over prod (1 - q_1...q_i), expanded to qq1-degree <= lcap.
CoeffPoly abr_rhs(int n, int lcap) {
    std::set<std::string> filt{"qq1"};
    CoeffPoly denom(1);
    for (int i = 1; i <= n; ++i) {
        CoeffPoly geo, pw(1), base = qq_prefix(i);
        for (int j = 0; j <= lcap; ++j) {
            geo += pw;
            pw = (pw * base).truncated(lcap, filt);
        }
        denom = (denom * geo).truncated(lcap, filt);
    }
    CoeffPoly num;
    for (const Permutation& w : all_permutations(n)) {
        CoeffPoly term(1);
        for (int i : w.descents()) term *= qq_prefix(i);
        num += term;
    }
    return (num * denom).truncated(lcap, filt);
}
}  // namespace

Report abr_check(int n, int lcap) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "abr";
    rep.params = {{"n", n}, {"lmax", lcap}};
    // weak partitions lambda with lambda_1 <= lcap
    CoeffPoly lhs;
    std::vector<int> lam(n);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            std::map<int, int> mult;
            for (int x : lam) mult[x] += 1;
            Int coef = factorial(n);
            for (const auto& [x, m] : mult) coef /= factorial(m);
            CoeffPoly term(coef);
            for (int i = 0; i < n; ++i)
                term *= CoeffPoly::var("qq" + std::to_string(i + 1), lam[i]);
            lhs += term;
            return;
        }
        int hi = j == 0 ? lcap : lam[j - 1];
        for (int v = hi; v >= 0; --v) {
            lam[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    CoeffPoly rhs = abr_rhs(n, lcap);
    if (lhs != rhs) {
        rep.pass = false;
        rep.witness = diff_witness(lhs, rhs);
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Report abr_intermediate_check(int n, int lcap) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "abr-intermediate";
    rep.params = {{"n", n}, {"lmax", lcap}};
    CoeffPoly lhs;
    for (int k = 0; k <= lcap; ++k) {
        for (const WeakComposition& a : all_weak_compositions(n, k + 1)) {
            if (a.parts()[0] < 1) continue;
            Int coef = factorial(n);
            for (int p : a.parts()) coef /= factorial(p);
            CoeffPoly term(coef);
            for (int d : a.descent_multiset()) term *= qq_prefix(d);
            lhs += term;
        }
    }
    std::set<std::string> filt{"qq1"};
    lhs = lhs.truncated(lcap, filt);
    CoeffPoly rhs = abr_rhs(n, lcap);
    if (lhs != rhs) {
        rep.pass = false;
        rep.witness = diff_witness(lhs, rhs);
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Report box_check(int n, int k) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "box";
    rep.params = {{"n", n}, {"kmax", k}};
    CoeffPoly bracket;
    for (int j = 0; j <= k; ++j) bracket += CoeffPoly::var("q", j);
    CoeffPoly lhs(1);
    for (int i = 0; i < n; ++i) lhs *= bracket;
    CoeffPoly rhs;
    std::vector<int> letters(n, 1);
    while (true) {
        PWord p(letters, k);
        int deg = 0;
        for (int x : p.pprime()) deg += x;
        rhs += CoeffPoly::var("q", deg);
        int j = n - 1;
        while (j >= 0 && letters[j] == k + 1) letters[j--] = 1;
        if (j < 0) break;
        ++letters[j];
    }
    if (lhs != rhs) {
        rep.pass = false;
        rep.witness = diff_witness(lhs, rhs);
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Report bz_specialization_check(const Composition& alpha) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "bz-specialization";
    rep.params = {{"n", alpha.size()}};
    int n = alpha.size();
    NSymElt lhs = nc_char_quotient(alpha).substituted(subst_t_power(n));
    NSymElt rhs(NSymElt::s);
    for (const Composition& beta : all_compositions(n))
        if (refines(beta, alpha))
            rhs.add_term(beta, CoeffPoly::var("t", beta.maj()));
    if (lhs != rhs) {
        rep.pass = false;
        rep.witness = "alpha=" + alpha.str() + " " + diff_witness(lhs, rhs);
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Report qt_specialization_check(const Composition& alpha) {
    auto start = Clock::now();
    Report rep;
    rep.identity = "qt-specialization";
    rep.params = {{"n", alpha.size()}};
    int n = alpha.size();
    Composition ones(std::vector<int>(n, 1));
    NSymElt lhs = hall_littlewood(ones, true).substituted(subst_qt(alpha));
    NSymElt rhs(NSymElt::s);
    Composition at = alpha.transpose();
    auto da = alpha.descents();
    auto dat = at.descents();
    for (const Composition& beta : all_compositions(n)) {
        int ct = 0, cq = 0;
        for (int i : beta.descents())
            if (da.count(i)) ct += i;
        for (int i : beta.reversed().descents())
            if (dat.count(i)) cq += i;
        rhs.add_term(beta, CoeffPoly::var("t", ct) * CoeffPoly::var("q", cq));
    }
    if (lhs != rhs) {
        rep.pass = false;
        rep.witness = "alpha=" + alpha.str() + " " + diff_witness(lhs, rhs);
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

}  // namespace srhecke
