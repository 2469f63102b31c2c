#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srhecke/srring.hpp"

using namespace srhecke;

namespace {
SRElement ymono(const std::string& bar, int n) {
    return SRElement::monomial(
        SRMonomial::from_multichain(Multichain::parse_bar_form(bar, n)));
}
}  // namespace

TEST_CASE("monomial multiplication merges chains") {
    SRMonomial a(4, {0b0001});            // y_{1}
    SRMonomial b(4, {0b0011, 0b0111});    // y_{12}y_{123}
    SRMonomial out;
    CHECK(SRMonomial::merge(a, b, &out));
    CHECK(out == SRMonomial(4, {0b0001, 0b0011, 0b0111}));
    SRMonomial c(4, {0b1000});  // y_{4}, incomparable with y_{1}
    CHECK(!SRMonomial::merge(a, c, &out));
    CHECK(SRElement::monomial(a) * SRElement::monomial(c) == SRElement(4));
    CHECK_THROWS(SRMonomial(4, {0b0001, 0b1000}));
}

TEST_CASE("ring axioms on small elements") {
    SRElement f = ymono("1|2|3", 3) + ymono("12|3", 3).scaled(CoeffPoly(2));
    SRElement g = ymono("2|13", 3) - SRElement::unit(3);
    SRElement h = theta(3, 1);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * SRElement::unit(3) == f);
}

TEST_CASE("action values from the worked example") {
    SRElement y = ymono("1|34||2|", 4);
    CHECK(hecke_action(1, y) == ymono("2|34||1|", 4));
    CHECK(hecke_action(2, y) == -y);
    CHECK(hecke_action(3, y) == SRElement(4));
    CHECK(sym_action(1, y.terms().begin()->first) ==
          SRMonomial::from_multichain(
              Multichain::parse_bar_form("2|34||1|", 4)));
}

TEST_CASE("squared singleton example") {
    SRMonomial y1(2, {0b01, 0b01});
    SRElement f = SRElement::monomial(y1);
    CHECK(hecke_action(1, f) ==
          SRElement::monomial(SRMonomial(2, {0b10, 0b10})));
}

TEST_CASE("theta elements are invariant") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r <= n; ++r) {
            SRElement th = theta(n, r);
            for (int i = 1; i < n; ++i) {
                CHECK(sym_action(i, th) == th);
                CHECK(hecke_action(i, th).is_zero());
            }
        }
}

TEST_CASE("straighten and expand are inverse") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (const Multichain& m : all_multichains(n, k)) {
                SRElement f =
                    SRElement::monomial(SRMonomial::from_multichain(m));
                auto coeffs = straighten(f);
                CHECK(expand_descent_basis(n, coeffs) == f);
            }
}

TEST_CASE("straighten on a generic combination") {
    SRElement f = ymono("1|3|2|", 3).scaled(CoeffPoly::var("q")) +
                  ymono("13|2||", 3) - theta(3, 2) * ymono("2|13", 3);
    auto coeffs = straighten(f);
    CHECK(expand_descent_basis(3, coeffs) == f);
    // every coefficient is a polynomial in the th variables only
    for (const auto& [w, c] : coeffs)
        for (const auto& [mono, v] : c.terms())
            for (const auto& [name, e] : mono)
                CHECK((name.substr(0, 2) == "th" || name == "q"));
}

TEST_CASE("descent monomials") {
    Permutation w = Permutation::parse("3 1 4 2");
    // descents at 1 and 3: y_{3} y_{134}
    CHECK(descent_monomial(w) == SRMonomial(4, {0b0100, 0b1101}));
    CHECK(descent_monomial(Permutation::identity(3)) == SRMonomial::unit(3));
}

TEST_CASE("rank selection") {
    SRElement f = ymono("1|2|3|", 3) + ymono("12|3||", 3);
    // keep ranks in D(2,1) union {3} = {2,3}
    SRElement kept = rank_selection(f, Composition::parse("2,1"));
    CHECK(kept == ymono("12|3||", 3));
    CHECK(rank_selection(f, Composition::parse("1,1,1")) == f);
}

TEST_CASE("transfer map") {
    SRElement f = ymono("1|34||2|", 4);
    // exponents count how many chain entries contain each point
    XPoly x = transfer(f);
    CHECK(x == XPoly::monomial(4, {4, 1, 3, 3}));
    CHECK_THROWS(transfer(ymono("1|23", 3).scaled(CoeffPoly::var("q"))));
}

TEST_CASE("json round trip") {
    SRElement f = ymono("1|3|2|", 3).scaled(CoeffPoly::var("q")) +
                  theta(3, 1).scaled(CoeffPoly::parse("t1 - 2"));
    CHECK(SRElement::from_json(f.json()) == f);
}

TEST_CASE("multidegree tracks ranks") {
    SRMonomial m(4, {0b0001, 0b0011, 0b0011});
    ParamMonomial d = m.multidegree();
    CHECK(d == ParamMonomial{{"t1", 1}, {"t2", 2}});
}
