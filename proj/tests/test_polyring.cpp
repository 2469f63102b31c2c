#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srhecke/polyring.hpp"

using namespace srhecke;

TEST_CASE("arithmetic and symmetric swap") {
    XPoly f = XPoly::monomial(3, {2, 0, 1}) + XPoly::monomial(3, {0, 1, 0});
    CHECK(f.s_action(1) ==
          XPoly::monomial(3, {0, 2, 1}) + XPoly::monomial(3, {1, 0, 0}));
    CHECK(f.s_action(1).s_action(1) == f);
    XPoly g = XPoly::variable(3, 1) - XPoly::variable(3, 2);
    CHECK(g * g == XPoly::monomial(3, {2, 0, 0}) -
                       XPoly::monomial(3, {1, 1, 0}, 2) +
                       XPoly::monomial(3, {0, 2, 0}));
}

TEST_CASE("demazure operator small values") {
    // on x_1^2 in two variables: x_1x_2 + x_2^2
    XPoly f = XPoly::monomial(2, {2, 0});
    CHECK(demazure(1, f) ==
          XPoly::monomial(2, {1, 1}) + XPoly::monomial(2, {0, 2}));
    // symmetric input is killed
    XPoly sym = XPoly::monomial(2, {1, 1});
    CHECK(demazure(1, sym).is_zero());
    // x_1^2 + x_2^2 is symmetric, so the two images cancel
    CHECK(demazure(1, XPoly::monomial(2, {0, 2})) == -demazure(1, f));
}

TEST_CASE("demazure agrees with divided difference form") {
    for (int n = 2; n <= 3; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                std::vector<int> e(n, 0);
                e[0] = a;
                e[1] = b;
                XPoly f = XPoly::monomial(n, e);
                for (int i = 1; i < n; ++i)
                    CHECK(demazure(i, f) == demazure_fraction_form(i, f));
            }
}

TEST_CASE("demazure relations") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                XPoly f = XPoly::monomial(3, {a, b, c});
                for (int i = 1; i < 3; ++i) {
                    XPoly once = demazure(i, f);
                    CHECK(demazure(i, once) == -once);
                }
                CHECK(demazure(1, demazure(2, demazure(1, f))) ==
                      demazure(2, demazure(1, demazure(2, f))));
            }
}

TEST_CASE("transferred operator example") {
    XPoly f = XPoly::monomial(4, {4, 1, 3, 3});
    CHECK(transferred_demazure(1, f) == XPoly::monomial(4, {1, 4, 3, 3}));
    CHECK(transferred_demazure(2, f) == -f);
    CHECK(transferred_demazure(3, f).is_zero());
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(3, 1) == XPoly::variable(3, 1) +
                                            XPoly::variable(3, 2) +
                                            XPoly::variable(3, 3));
    CHECK(elementary_symmetric(3, 3) == XPoly::monomial(3, {1, 1, 1}));
    // symmetric under every swap, killed by every demazure
    for (int i = 1; i < 3; ++i)
        for (int r = 1; r <= 3; ++r) {
            XPoly e = elementary_symmetric(3, r);
            CHECK(e.s_action(i) == e);
            CHECK(demazure(i, e).is_zero());
        }
}
