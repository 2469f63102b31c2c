// Acceptance gate: one line per criterion, exit 0 iff everything passes.
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "srhecke/polyring.hpp"
#include "srhecke/suites.hpp"

using namespace srhecke;

namespace {

bool g_all = true;

void criterion(int num, const std::string& name,
               const std::function<std::string()>& body) {
    std::string witness;
    try {
        witness = body();
    } catch (const std::exception& e) {
        witness = std::string("exception: ") + e.what();
    }
    bool ok = witness.empty();
    g_all = g_all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << name;
    if (!ok) std::cout << " [" << witness << "]";
    std::cout << std::endl;
}

std::string suite_witness(const std::string& name, SuiteConfig cfg) {
    cfg.workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    for (const Report& r : run_suite(name, cfg))
        if (!r.pass) return name + "/" + r.identity + ": " + r.witness;
    return "";
}

std::string frozen_examples() {
    // action values on the worked chain monomial
    SRElement y = SRElement::monomial(
        SRMonomial::from_multichain(Multichain::parse_bar_form("1|34||2|", 4)));
    SRElement y2 = SRElement::monomial(
        SRMonomial::from_multichain(Multichain::parse_bar_form("2|34||1|", 4)));
    if (hecke_action(1, y) != y2) return "action of generator 1";
    if (hecke_action(2, y) != -y) return "action of generator 2";
    if (!hecke_action(3, y).is_zero()) return "action of generator 3";
    // transferred operator on the matching x-monomial
    XPoly x = XPoly::monomial(4, {4, 1, 3, 3});
    if (transfer(y) != x) return "transfer image";
    if (transferred_demazure(1, x) != XPoly::monomial(4, {1, 4, 3, 3}))
        return "transferred operator 1";
    if (transferred_demazure(2, x) != -x) return "transferred operator 2";
    if (!transferred_demazure(3, x).is_zero()) return "transferred operator 3";
    // bar-form encoding of {2} <= {2} <= {1,2,4} <= [4]
    Multichain m(4, {0b0010, 0b0010, 0b1011, 0b1111});
    if (m.bar_form() != "2||14|3|") return "bar form";
    auto [alpha, sigma] = encode_multichain(m);
    if (sigma != Permutation::parse("2 1 4 3")) return "encoded permutation";
    // word statistics example
    Multichain m2 = Multichain::parse_bar_form("3|14||2|5", 5);
    PWord p = pword(m2);
    if (p.letters() != std::vector<int>{2, 4, 1, 2, 5}) return "p-word";
    if (p.pprime() != std::vector<int>{1, 3, 3, 4}) return "p-prime";
    if (PWord({2, 5, 1, 2, 4}, 4).descents() != std::set<int>{2})
        return "word descents";
    // complement and transpose
    Composition a = Composition::parse("2,3,1,1");
    if (a.complement() != Composition::parse("1,2,1,3")) return "complement";
    if (a.transpose() != Composition::parse("3,1,2,1")) return "transpose";
    // the P_211 specialization
    NSymElt got = hall_littlewood(Composition::parse("1,1,1,1"), true)
                      .substituted(subst_lnt(Composition::parse("2,1,1")));
    NSymElt want(NSymElt::s);
    auto add = [&](const char* parts, const char* coeff) {
        want.add_term(Composition::parse(parts), CoeffPoly::parse(coeff));
    };
    add("4", "1");
    add("3,1", "y_011");
    add("2,2", "y_01");
    add("2,1,1", "y_01*y_011");
    add("1,3", "y_0");
    add("1,2,1", "y_0*y_011");
    add("1,1,2", "y_0*y_01");
    add("1,1,1,1", "y_0*y_01*y_011");
    return diff_witness(got, want);
}

}  // namespace

int main() {
    criterion(1, "frozen worked examples are bit-exact", frozen_examples);

    criterion(2, "operator relations on all short chain monomials", [] {
        SuiteConfig cfg;
        cfg.n = 4;
        cfg.kmax = 3;
        return suite_witness("relations", cfg);
    });

    criterion(3, "invariant algebra and theta-linearity", [] {
        SuiteConfig cfg;
        cfg.n = 4;
        cfg.kmax = 3;
        std::string w = suite_witness("invariants", cfg);
        if (!w.empty()) return w;
        return suite_witness("theta-linearity", cfg);
    });

    criterion(4, "ring components match the cyclic modules", [] {
        SuiteConfig cfg;
        cfg.n = 4;
        cfg.kmax = 3;
        return suite_witness("lemma-Na", cfg);
    });

    criterion(5, "quotient characteristic and its specializations", [] {
        SuiteConfig cfg;
        cfg.n = 5;
        return suite_witness("theorem-1", cfg);
    });

    criterion(6, "graded characteristic three ways", [] {
        SuiteConfig cfg;
        cfg.n = 4;
        cfg.kmax = 4;
        return suite_witness("theorem-2", cfg);
    });

    criterion(7, "counting corollaries", [] {
        SuiteConfig gg;
        gg.n = 4;
        gg.lmax = 3;
        std::string w = suite_witness("garsia-gessel", gg);
        if (!w.empty()) return w;
        SuiteConfig mc;
        mc.n = 6;
        mc.kmax = 6;
        w = suite_witness("macmahon-carlitz", mc);
        if (!w.empty()) return w;
        SuiteConfig ab;
        ab.n = 5;
        ab.lmax = 4;
        w = suite_witness("abr", ab);
        if (!w.empty()) return w;
        SuiteConfig bx;
        bx.n = 5;
        bx.kmax = 4;
        return suite_witness("box", bx);
    });

    criterion(8, "ribbon Hall-Littlewood propositions", [] {
        SuiteConfig bz;
        bz.n = 5;
        std::string w = suite_witness("bz-inner", bz);
        if (!w.empty()) return w;
        SuiteConfig pf;
        pf.n = 4;
        pf.degmax = 6;
        pf.lmax = 3;
        return suite_witness("product-formula", pf);
    });

    criterion(9, "regular representation of the full quotient", [] {
        for (int n = 1; n <= 5; ++n) {
            Composition fine(std::vector<int>(n, 1));
            long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            if (static_cast<long>(min_coset_reps(fine).size()) != fact)
                return "dimension at n=" + std::to_string(n);
            NSymElt nc = nc_char_quotient(fine);
            NSymElt want(NSymElt::s);
            for (const Composition& b : all_compositions(n)) {
                CoeffPoly tm(1);
                for (int d : b.descents())
                    tm *= CoeffPoly::var("t" + std::to_string(d));
                want.add_term(b, tm);
            }
            std::string w = diff_witness(nc, want);
            if (!w.empty()) return "n=" + std::to_string(n) + " " + w;
        }
        return std::string();
    });

    criterion(10, "transfer map is not equivariant", [] {
        SuiteConfig cfg;
        return suite_witness("transfer-counterexample", cfg);
    });

    return g_all ? 0 : 1;
}
