#include "srhecke/suites.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "srhecke/polyring.hpp"

namespace srhecke {

namespace {

using Task = std::function<Report()>;
using Clock = std::chrono::steady_clock;

/// Wraps a witness-producing body with timing and exception capture.
Task make_task(std::string identity, std::map<std::string, long> params,
               std::function<std::string()> body) {
    return [identity = std::move(identity), params = std::move(params),
            body = std::move(body)]() {
        Report r;
        r.identity = identity;
        r.params = params;
        auto start = Clock::now();
        try {
            r.witness = body();
            r.pass = r.witness.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = std::string("exception: ") + e.what();
        }
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start)
                       .count();
        return r;
    };
}

/// Wraps an existing self-reporting verifier with exception capture.
Task wrap_report(std::function<Report()> f) {
    return [f = std::move(f)]() {
        try {
            return f();
        } catch (const std::exception& e) {
            Report r;
            r.identity = "exception";
            r.pass = false;
            r.witness = e.what();
            return r;
        }
    };
}

std::vector<Report> run_tasks(const std::vector<Task>& tasks, int workers) {
    std::vector<Report> out(tasks.size());
    if (workers <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1))
            out[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(workers, static_cast<int>(tasks.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

// ---- small exact linear algebra over the rationals ----

int matrix_rank(std::vector<std::vector<mpq_class>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

Int const_coeff(const CoeffPoly& c) {
    if (c.is_zero()) return 0;
    if (c.terms().size() != 1 || !c.terms().begin()->first.empty())
        throw std::runtime_error("non-constant coefficient");
    return c.terms().begin()->second;
}

CoeffPoly t_multiset_mono(const std::vector<int>& multiset) {
    CoeffPoly p(1);
    for (int d : multiset) p *= CoeffPoly::var("t" + std::to_string(d));
    return p;
}

// ---- generic three-family relation check on a monomial ----

template <class Elt>
std::string relation_witness(int np, const Elt& y, const std::string& label,
                             const std::function<Elt(int, const Elt&)>& op) {
    std::vector<Elt> im(np);
    for (int i = 1; i < np; ++i) im[i] = op(i, y);
    for (int i = 1; i < np; ++i)
        if (op(i, im[i]) != -im[i]) return label + " quadratic i=" + std::to_string(i);
    for (int i = 1; i < np; ++i)
        for (int j = i + 2; j < np; ++j)
            if (op(i, im[j]) != op(j, im[i]))
                return label + " commuting i=" + std::to_string(i) + " j=" +
                       std::to_string(j);
    for (int i = 1; i + 1 < np; ++i)
        if (op(i, op(i + 1, im[i])) != op(i + 1, op(i, im[i + 1])))
            return label + " braid i=" + std::to_string(i);
    return "";
}

void enum_exponents(int pos, int np, int left, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == np) {
        fn(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        enum_exponents(pos + 1, np, left - e, cur, fn);
    }
}

// ---- suite builders ----

std::vector<Task> build_relations(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    int kcap = std::min(cfg.kmax, 3);
    for (int np = 2; np <= cfg.n; ++np)
        for (int k = 0; k <= kcap; ++k)
            tasks.push_back(make_task(
                "hecke-ring-relations", {{"n", np}, {"k", k}}, [np, k]() {
                    std::function<SRElement(int, const SRElement&)> op =
                        [](int i, const SRElement& f) {
                            return hecke_action(i, f);
                        };
                    for (const Multichain& m : all_multichains(np, k)) {
                        SRElement y =
                            SRElement::monomial(SRMonomial::from_multichain(m));
                        std::string w = relation_witness<SRElement>(
                            np, y, "y_" + m.bar_form(), op);
                        if (!w.empty()) return w;
                    }
                    return std::string();
                }));
    int dcap = std::min(cfg.degmax, 5);
    for (int np = 2; np <= std::min(cfg.n, 4); ++np) {
        for (int variant = 0; variant < 2; ++variant) {
            std::string id = variant == 0 ? "demazure-relations"
                                          : "transferred-demazure-relations";
            tasks.push_back(make_task(
                id, {{"n", np}, {"degmax", dcap}}, [np, dcap, variant]() {
                    std::function<XPoly(int, const XPoly&)> op =
                        [variant](int i, const XPoly& f) {
                            return variant == 0 ? demazure(i, f)
                                                : transferred_demazure(i, f);
                        };
                    std::string bad;
                    std::vector<int> cur(np);
                    enum_exponents(0, np, dcap, cur,
                                   [&](const std::vector<int>& e) {
                                       if (!bad.empty()) return;
                                       XPoly y = XPoly::monomial(np, e);
                                       bad = relation_witness<XPoly>(
                                           np, y, y.str(), op);
                                   });
                    return bad;
                }));
        }
    }
    return tasks;
}

std::vector<Task> build_invariants(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    int kcap = std::min(cfg.kmax, 3);
    for (int np = 2; np <= std::min(cfg.n, 4); ++np)
        for (int k = 0; k <= kcap; ++k)
            tasks.push_back(make_task(
                "invariant-algebra", {{"n", np}, {"k", k}}, [np, k]() {
                    std::map<std::vector<int>, std::vector<Multichain>> comps;
                    for (const Multichain& m : all_multichains(np, k))
                        comps[m.rank_multiset()].push_back(m);
                    for (const auto& [ranks, basis] : comps) {
                        int B = static_cast<int>(basis.size());
                        std::map<Multichain, int> idx;
                        for (int b = 0; b < B; ++b) idx[basis[b]] = b;
                        std::ostringstream tag;
                        tag << "ranks";
                        for (int r : ranks) tag << " " << r;
                        // stacked pibar matrices and stacked (s_i - id)
                        std::vector<std::vector<mpq_class>> hk, sk;
                        auto blank = [&]() {
                            return std::vector<mpq_class>(B, 0);
                        };
                        for (int i = 1; i < np; ++i) {
                            std::vector<std::vector<mpq_class>> hi(B, blank()),
                                si(B, blank());
                            for (int b = 0; b < B; ++b) {
                                SRMonomial ym =
                                    SRMonomial::from_multichain(basis[b]);
                                SRElement img = hecke_action(i, ym);
                                for (const auto& [m2, c] : img.terms())
                                    hi[idx.at(m2.multichain())][b] +=
                                        mpq_class(const_coeff(c));
                                si[idx.at(sym_action(i, ym).multichain())][b] +=
                                    1;
                                si[b][b] -= 1;
                            }
                            for (auto& row : hi) hk.push_back(row);
                            for (auto& row : si) sk.push_back(row);
                        }
                        int hdim = B - matrix_rank(hk);
                        int sdim = B - matrix_rank(sk);
                        if (hdim != 1)
                            return tag.str() + ": hecke kernel dim " +
                                   std::to_string(hdim);
                        if (sdim != 1)
                            return tag.str() + ": fixed space dim " +
                                   std::to_string(sdim);
                        // the theta monomial spans both
                        SRElement tp = SRElement::unit(np);
                        for (int r : ranks) tp = tp * theta(np, r);
                        if (tp.is_zero())
                            return tag.str() + ": theta monomial vanished";
                        for (const auto& [m2, c] : tp.terms())
                            if (!idx.count(m2.multichain()))
                                return tag.str() + ": theta support escapes";
                        for (int i = 1; i < np; ++i) {
                            if (!hecke_action(i, tp).is_zero())
                                return tag.str() + ": theta not hecke-killed";
                            if (sym_action(i, tp) != tp)
                                return tag.str() + ": theta not s-fixed";
                        }
                    }
                    return std::string();
                }));
    return tasks;
}

std::vector<Task> build_theta_linearity(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    int kcap = std::min(cfg.kmax, 2);
    for (int np = 2; np <= std::min(cfg.n, 4); ++np)
        for (int k = 0; k <= kcap; ++k)
            tasks.push_back(make_task(
                "theta-linearity", {{"n", np}, {"k", k}}, [np, k]() {
                    for (const Multichain& m : all_multichains(np, k)) {
                        SRElement y =
                            SRElement::monomial(SRMonomial::from_multichain(m));
                        for (int r = 0; r <= np; ++r) {
                            SRElement th = theta(np, r);
                            for (int i = 1; i < np; ++i)
                                if (hecke_action(i, th * y) !=
                                    th * hecke_action(i, y))
                                    return "y_" + m.bar_form() +
                                           " r=" + std::to_string(r) +
                                           " i=" + std::to_string(i);
                        }
                    }
                    return std::string();
                }));
    return tasks;
}

std::string same_column(const ActionColumn& a, const ActionColumn& b,
                        const std::function<int(int)>& map_target) {
    if (a.kind != b.kind) return "kind mismatch";
    if (a.kind == ActionColumn::Move && map_target(a.target) != b.target)
        return "target mismatch";
    return "";
}

std::vector<Task> build_lemma_na(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    int kcap = std::min(cfg.kmax, 3);
    for (int np = 2; np <= cfg.n; ++np)
        for (int k = 0; k <= kcap; ++k)
            tasks.push_back(make_task(
                "cyclic-module-isomorphism", {{"n", np}, {"k", k}}, [np, k]() {
                    for (const WeakComposition& alpha :
                         all_weak_compositions(np, k + 1)) {
                        std::string tag = "alpha=" + alpha.str();
                        ComponentModule cm = srring_component_module(alpha);
                        ModuleRep cyc = cyclic_module(alpha);
                        if (!check_relations(cyc))
                            return tag + ": cyclic table breaks relations";
                        if (!check_relations(cm.rep))
                            return tag + ": ring table breaks relations";
                        std::map<Permutation, int> cidx;
                        for (size_t b = 0; b < cyc.perm_basis().size(); ++b)
                            cidx[cyc.perm_basis()[b]] = static_cast<int>(b);
                        if (cidx.size() != cm.basis.size())
                            return tag + ": dimension mismatch";
                        std::vector<int> to_cyc(cm.basis.size());
                        for (size_t b = 0; b < cm.basis.size(); ++b) {
                            auto [a2, sigma] = encode_multichain(cm.basis[b]);
                            auto it = cidx.find(sigma);
                            if (it == cidx.end())
                                return tag + ": sigma outside coset reps";
                            to_cyc[b] = it->second;
                        }
                        auto remap = [&](int t) { return to_cyc[t]; };
                        for (int i = 1; i < np; ++i)
                            for (size_t b = 0; b < cm.basis.size(); ++b) {
                                std::string w = same_column(
                                    cm.rep.column(i, static_cast<int>(b)),
                                    cyc.column(i, to_cyc[b]), remap);
                                if (!w.empty())
                                    return tag + " i=" + std::to_string(i) +
                                           " y_" + cm.basis[b].bar_form() +
                                           ": " + w;
                            }
                        // generator action agrees with multiplication in the
                        // algebra itself
                        Composition beta = Composition::from_descents(
                            np, alpha.descent_set());
                        HeckeElt e = HeckeElt::pi_longest_parabolic(
                            beta.complement());
                        for (size_t b = 0; b < cyc.perm_basis().size(); ++b) {
                            const Permutation& w = cyc.perm_basis()[b];
                            HeckeElt we = HeckeElt::pibar(w) * e;
                            for (int i = 1; i < np; ++i) {
                                HeckeElt lhs = we.gen_mult(i);
                                const ActionColumn& col =
                                    cyc.column(i, static_cast<int>(b));
                                HeckeElt rhs(np);
                                if (col.kind == ActionColumn::Negate)
                                    rhs = we.scaled(-1);
                                else if (col.kind == ActionColumn::Move)
                                    rhs = HeckeElt::pibar(
                                              cyc.perm_basis()[col.target]) *
                                          e;
                                else if (col.kind == ActionColumn::General)
                                    return tag + ": non-monomial column";
                                if (lhs != rhs)
                                    return tag + " i=" + std::to_string(i) +
                                           " w=" + w.str() +
                                           ": algebra action disagrees";
                            }
                        }
                        // graded characteristic of both presentations
                        std::vector<long> lev;
                        for (const Permutation& w : cyc.perm_basis())
                            lev.push_back(w.inversions());
                        QSymElt lhs = triangular_ch(cyc, lev);
                        QSymElt expect(QSymElt::F);
                        for (const Permutation& w : cyc.perm_basis())
                            expect.add_term(
                                Composition::from_descents(
                                    np, w.inverse().descents()),
                                CoeffPoly::var(
                                    "q", static_cast<int>(w.inversions())));
                        std::string w1 = diff_witness(lhs, expect);
                        if (!w1.empty()) return tag + " ch_q " + w1;
                        QSymElt ring_ch = triangular_ch(cm.rep, cm.levels)
                                              .scaled(t_multiset_mono(
                                                  alpha.descent_multiset()));
                        std::string w2 =
                            diff_witness(ring_ch, component_char(alpha));
                        if (!w2.empty()) return tag + " ch_qt " + w2;
                    }
                    return std::string();
                }));
    return tasks;
}

std::vector<Task> build_theorem1(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int np = 1; np <= cfg.n; ++np)
        for (const Composition& alpha : all_compositions(np)) {
            tasks.push_back(make_task(
                "quotient-characteristic",
                {{"n", np}, {"maj", alpha.maj()}, {"parts", alpha.length()}},
                [np, alpha]() {
                    long dim = 0;
                    auto da = alpha.descents();
                    for (const Permutation& w : all_permutations(np)) {
                        auto dw = w.descents();
                        if (std::includes(da.begin(), da.end(), dw.begin(),
                                          dw.end()))
                            ++dim;
                    }
                    long reps =
                        static_cast<long>(min_coset_reps(alpha).size());
                    if (dim != reps)
                        return "alpha=" + alpha.str() + ": descent classes " +
                               std::to_string(dim) + " vs coset reps " +
                               std::to_string(reps);
                    if (alpha.length() == np) {
                        long fact = 1;
                        for (int i = 2; i <= np; ++i) fact *= i;
                        if (reps != fact)
                            return "alpha=" + alpha.str() +
                                   ": regular representation dimension " +
                                   std::to_string(reps);
                    }
                    NSymElt nc = nc_char_quotient(alpha);
                    std::string w =
                        diff_witness(nc, hall_littlewood(alpha, true));
                    if (!w.empty()) return "alpha=" + alpha.str() + " " + w;
                    return std::string();
                }));
            tasks.push_back(wrap_report(
                [alpha]() { return bz_specialization_check(alpha); }));
            tasks.push_back(wrap_report(
                [alpha]() { return qt_specialization_check(alpha); }));
        }
    return tasks;
}

std::vector<Task> build_theorem2(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int np = 1; np <= cfg.n; ++np) {
        int K = cfg.kmax;
        tasks.push_back(make_task("graded-char-components-vs-closed-form",
                                  {{"n", np}, {"K", K}}, [np, K]() {
                                      return diff_witness(theorem2_lhs(np, K),
                                                          theorem2_mid(np, K));
                                  }));
        tasks.push_back(make_task("graded-char-closed-form-vs-words",
                                  {{"n", np}, {"K", K}}, [np, K]() {
                                      return diff_witness(theorem2_mid(np, K),
                                                          theorem2_rhs(np, K));
                                  }));
    }
    return tasks;
}

std::vector<Task> build_bz_inner(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    int cap = std::min(cfg.n, 5);
    for (int p = 1; p <= cap; ++p)
        for (int q = 1; q <= cap; ++q)
            tasks.push_back(make_task(
                "hall-littlewood-semi-self-duality", {{"p", p}, {"q", q}},
                [p, q]() {
                    for (const Composition& a : all_compositions(p))
                        for (const Composition& b : all_compositions(q)) {
                            CoeffPoly got =
                                bz_inner(hall_littlewood(a, false),
                                         hall_littlewood(b, false));
                            CoeffPoly want;
                            if (a == b.complement()) {
                                Int sign =
                                    (p + a.length()) % 2 == 0 ? 1 : -1;
                                want = CoeffPoly(sign);
                            }
                            if (got != want)
                                return "alpha=" + a.str() +
                                       " beta=" + b.str() + " " +
                                       diff_witness(got, want);
                        }
                    return std::string();
                }));
    return tasks;
}

std::vector<Task> build_product_formula(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int p = 1; p < cfg.degmax; ++p)
        for (int q = 1; p + q <= cfg.degmax; ++q)
            tasks.push_back(make_task(
                "hall-littlewood-product", {{"p", p}, {"q", q}}, [p, q]() {
                    for (const Composition& a : all_compositions(p))
                        for (const Composition& b : all_compositions(q)) {
                            std::string w;
                            if (!hl_product_formula_check(a, b, &w))
                                return "alpha=" + a.str() +
                                       " beta=" + b.str() + " " + w;
                        }
                    return std::string();
                }));
    int bcap = std::min(cfg.lmax, 3);
    for (int np = 1; np <= std::min(cfg.n, 4); ++np)
        tasks.push_back(make_task(
            "hall-littlewood-periodic", {{"n", np}, {"bmax", bcap}},
            [np, bcap]() {
                for (const Composition& a : all_compositions(np))
                    for (int q = 1; q <= bcap; ++q)
                        for (const Composition& b : all_compositions(q)) {
                            auto sub = subst_periodic(np, np + q);
                            NSymElt lhs = (hall_littlewood(a, false) *
                                           hall_littlewood(b, false))
                                              .substituted(sub);
                            NSymElt rhs =
                                hall_littlewood(a.concat(b), false)
                                    .substituted(sub);
                            std::string w = diff_witness(lhs, rhs);
                            if (!w.empty())
                                return "alpha=" + a.str() +
                                       " beta=" + b.str() + " " + w;
                        }
                return std::string();
            }));
    return tasks;
}

std::vector<Task> build_garsia_gessel(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int np = 1; np <= cfg.n; ++np) {
        int L = cfg.lmax;
        tasks.push_back(
            wrap_report([np, L]() { return garsia_gessel_check(np, L); }));
        tasks.push_back(wrap_report(
            [np, L]() { return garsia_gessel_second_check(np, L); }));
    }
    return tasks;
}

std::vector<Task> build_macmahon_carlitz(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int np = 1; np <= std::min(cfg.n, 6); ++np) {
        int K = cfg.kmax;
        tasks.push_back(
            wrap_report([np, K]() { return macmahon_carlitz_check(np, K); }));
        tasks.push_back(make_task("eulerian-specialization",
                                  {{"n", np}, {"K", K}}, [np, K]() {
                                      for (int k = 0; k <= K; ++k) {
                                          Int lhs = 0;
                                          for (const Permutation& w :
                                               all_permutations(np)) {
                                              int d = w.des();
                                              if (d > k) continue;
                                              // #multisets of size k-d from
                                              // n+1 values
                                              Int c = 1;
                                              for (int j = 1; j <= k - d; ++j)
                                                  c = c * (np + j) / j;
                                              lhs += c;
                                          }
                                          Int rhs = 1;
                                          for (int j = 0; j < np; ++j)
                                              rhs *= (k + 1);
                                          if (lhs != rhs)
                                              return "k=" + std::to_string(k) +
                                                     ": lhs=" + lhs.get_str() +
                                                     " rhs=" + rhs.get_str();
                                      }
                                      return std::string();
                                  }));
    }
    return tasks;
}

std::vector<Task> build_abr(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int np = 1; np <= std::min(cfg.n, 5); ++np)
        tasks.push_back(wrap_report(
            [np, L = cfg.lmax]() { return abr_check(np, L); }));
    for (int np = 1; np <= std::min(cfg.n, 4); ++np)
        tasks.push_back(wrap_report(
            [np, L = cfg.lmax]() { return abr_intermediate_check(np, L); }));
    return tasks;
}

std::vector<Task> build_box(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    for (int np = 1; np <= cfg.n; ++np)
        tasks.push_back(
            wrap_report([np, k = cfg.kmax]() { return box_check(np, k); }));
    return tasks;
}

std::vector<Task> build_transfer_counterexample(const SuiteConfig&) {
    std::vector<Task> tasks;
    tasks.push_back(make_task("transfer-not-equivariant", {{"n", 2}}, []() {
        // y squared for the singleton {1} in two variables
        SRMonomial y1(2, {Subset(1), Subset(1)});
        SRElement f = SRElement::monomial(y1);
        XPoly ring_side = transfer(hecke_action(1, f));
        XPoly poly_side = demazure(1, transfer(f));
        if (ring_side == poly_side)
            return std::string(
                "transfer unexpectedly intertwines the two actions");
        XPoly expect_ring = XPoly::monomial(2, {0, 2});
        if (ring_side != expect_ring)
            return "ring action image " + ring_side.str();
        XPoly expect_poly =
            XPoly::monomial(2, {0, 2}) + XPoly::monomial(2, {1, 1});
        if (poly_side != expect_poly)
            return "operator image " + poly_side.str();
        if (transferred_demazure(1, transfer(f)) != ring_side)
            return std::string("leading-term operator disagrees with ring");
        return std::string();
    }));
    return tasks;
}

std::vector<Task> build_specializations(const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    tasks.push_back(make_task("lnt-specialization-P211", {{"n", 4}}, []() {
        Composition alpha({2, 1, 1});
        NSymElt got = hall_littlewood(Composition({1, 1, 1, 1}), true)
                          .substituted(subst_lnt(alpha));
        NSymElt want(NSymElt::s);
        auto add = [&](std::vector<int> parts, const char* coeff) {
            want.add_term(Composition(std::move(parts)),
                          CoeffPoly::parse(coeff));
        };
        add({4}, "1");
        add({3, 1}, "y_011");
        add({2, 2}, "y_01");
        add({2, 1, 1}, "y_01*y_011");
        add({1, 3}, "y_0");
        add({1, 2, 1}, "y_0*y_011");
        add({1, 1, 2}, "y_0*y_01");
        add({1, 1, 1, 1}, "y_0*y_01*y_011");
        return diff_witness(got, want);
    }));
    int cap = std::min(cfg.n, 5);
    tasks.push_back(make_task("hall-littlewood-at-zero-and-one",
                              {{"nmax", cap}}, [cap]() {
        for (int np = 1; np <= cap; ++np)
            for (const Composition& a : all_compositions(np)) {
                std::map<std::string, CoeffPoly> zero, one;
                for (int i = 1; i < np; ++i) {
                    zero["t" + std::to_string(i)] = CoeffPoly();
                    one["t" + std::to_string(i)] = CoeffPoly(1);
                }
                NSymElt H = hall_littlewood(a, false);
                std::string w1 = diff_witness(
                    H.substituted(zero), NSymElt::basis_elt(NSymElt::s, a));
                if (!w1.empty()) return "alpha=" + a.str() + " t=0 " + w1;
                std::string w2 = diff_witness(
                    H.substituted(one), NSymElt::basis_elt(NSymElt::h, a));
                if (!w2.empty()) return "alpha=" + a.str() + " t=1 " + w2;
            }
        return std::string();
    }));
    tasks.push_back(make_task("t-power-major-index", {{"nmax", cap}},
                              [cap]() {
        for (int np = 1; np <= cap; ++np)
            for (const Composition& a : all_compositions(np)) {
                NSymElt got = hall_littlewood(a, true)
                                  .substituted(subst_t_power(np));
                NSymElt want(NSymElt::s);
                for (const Composition& b : all_compositions(np))
                    if (refines(b, a))
                        want.add_term(b, CoeffPoly::var("t", b.maj()));
                std::string w = diff_witness(got, want);
                if (!w.empty()) return "alpha=" + a.str() + " " + w;
            }
        return std::string();
    }));
    tasks.push_back(make_task("substitution-respects-products",
                              {{"seed", static_cast<long>(cfg.seed)}},
                              [seed = cfg.seed]() {
        std::mt19937 rng(seed);
        auto rand_comp = [&](int size) {
            std::vector<int> parts;
            while (size > 0) {
                int p = 1 + static_cast<int>(rng() % size);
                parts.push_back(p);
                size -= p;
            }
            return Composition(parts);
        };
        for (int trial = 0; trial < 12; ++trial) {
            Composition a = rand_comp(1 + rng() % 4);
            Composition b = rand_comp(1 + rng() % 4);
            std::map<std::string, CoeffPoly> sub;
            int top = a.size() + b.size();
            for (int i = 1; i < top; ++i) {
                CoeffPoly v(static_cast<long>(rng() % 3));
                v += CoeffPoly::var("q", 1 + rng() % 2);
                sub["t" + std::to_string(i)] = v;
            }
            NSymElt ha = hall_littlewood(a, false);
            NSymElt hb = hall_littlewood(b, false);
            NSymElt lhs = (ha * hb).substituted(sub);
            NSymElt rhs = ha.substituted(sub) * hb.substituted(sub);
            std::string w = diff_witness(lhs, rhs);
            if (!w.empty())
                return "trial " + std::to_string(trial) + " " + w;
        }
        return std::string();
    }));
    return tasks;
}

struct Caps {
    int max_n;
    int max_kmax = 8;
    int max_degmax = 10;
    int max_lmax = 6;
};

const std::map<std::string, Caps>& caps_table() {
    static const std::map<std::string, Caps> table{
        {"relations", {5}},
        {"invariants", {5}},
        {"theta-linearity", {5}},
        {"lemma-Na", {5}},
        {"theorem-1", {5}},
        {"theorem-2", {5, 6}},
        {"bz-inner", {6}},
        {"product-formula", {6, 8, 7}},
        {"garsia-gessel", {5, 8, 10, 4}},
        {"macmahon-carlitz", {7}},
        {"abr", {6, 8, 10, 5}},
        {"box", {7}},
        {"transfer-counterexample", {16}},
        {"specializations", {5}},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"relations",        "invariants",
            "theta-linearity",  "lemma-Na",
            "theorem-1",        "theorem-2",
            "bz-inner",         "product-formula",
            "garsia-gessel",    "macmahon-carlitz",
            "abr",              "box",
            "transfer-counterexample", "specializations"};
}

std::optional<std::string> validate_suite(const std::string& name,
                                          const SuiteConfig& cfg) {
    auto it = caps_table().find(name);
    if (it == caps_table().end()) return "unknown suite: " + name;
    const Caps& c = it->second;
    if (cfg.n < 1) return std::string("n out of range: n must be at least 1");
    if (cfg.kmax < 0 || cfg.degmax < 1 || cfg.lmax < 0)
        return std::string("caps must be positive");
    if (cfg.workers < 1 || cfg.workers > 64)
        return std::string("workers must be between 1 and 64");
    auto refuse = [&](const char* flag, int val, int cap) {
        return "--" + std::string(flag) + "=" + std::to_string(val) +
               " exceeds the memory budget for suite " + name + " (max " +
               std::to_string(cap) +
               "): the search space grows too fast past that point";
    };
    if (cfg.n > c.max_n) return refuse("n", cfg.n, c.max_n);
    if (cfg.kmax > c.max_kmax) return refuse("kmax", cfg.kmax, c.max_kmax);
    if (cfg.degmax > c.max_degmax)
        return refuse("degmax", cfg.degmax, c.max_degmax);
    if (cfg.lmax > c.max_lmax) return refuse("lmax", cfg.lmax, c.max_lmax);
    return std::nullopt;
}

std::vector<Report> run_suite(const std::string& name,
                              const SuiteConfig& cfg) {
    std::vector<Task> tasks;
    if (name == "relations")
        tasks = build_relations(cfg);
    else if (name == "invariants")
        tasks = build_invariants(cfg);
    else if (name == "theta-linearity")
        tasks = build_theta_linearity(cfg);
    else if (name == "lemma-Na")
        tasks = build_lemma_na(cfg);
    else if (name == "theorem-1")
        tasks = build_theorem1(cfg);
    else if (name == "theorem-2")
        tasks = build_theorem2(cfg);
    else if (name == "bz-inner")
        tasks = build_bz_inner(cfg);
    else if (name == "product-formula")
        tasks = build_product_formula(cfg);
    else if (name == "garsia-gessel")
        tasks = build_garsia_gessel(cfg);
    else if (name == "macmahon-carlitz")
        tasks = build_macmahon_carlitz(cfg);
    else if (name == "abr")
        tasks = build_abr(cfg);
    else if (name == "box")
        tasks = build_box(cfg);
    else if (name == "transfer-counterexample")
        tasks = build_transfer_counterexample(cfg);
    else if (name == "specializations")
        tasks = build_specializations(cfg);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return run_tasks(tasks, cfg.workers);
}

}  // namespace srhecke
