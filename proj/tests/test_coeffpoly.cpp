#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srhecke/coeffpoly.hpp"

using namespace srhecke;

TEST_CASE("arithmetic and parsing") {
    CoeffPoly q = CoeffPoly::var("q");
    CoeffPoly t1 = CoeffPoly::var("t1");
    CoeffPoly p = (q + t1) * (q - t1);
    CHECK(p == q * q - t1 * t1);
    CHECK(CoeffPoly::parse(p.str()) == p);
    CHECK(CoeffPoly::parse("0") == CoeffPoly());
    CHECK(CoeffPoly::parse("3*q^2*t1 - t1") ==
          CoeffPoly(3) * q * q * t1 - t1);
    CHECK(CoeffPoly::parse("y_01*y_011") ==
          CoeffPoly::var("y_01") * CoeffPoly::var("y_011"));
    CHECK_THROWS(CoeffPoly::parse("x17"));
    CHECK_THROWS(CoeffPoly::var("bogus"));
}

TEST_CASE("substitution is a ring map") {
    CoeffPoly q = CoeffPoly::var("q");
    CoeffPoly t2 = CoeffPoly::var("t2");
    std::map<std::string, CoeffPoly> sub{{"t2", q * q + CoeffPoly(1)}};
    CoeffPoly a = t2 * t2 + q;
    CoeffPoly b = t2 - q;
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
    CHECK(a.substitute({}) == a);
}

TEST_CASE("degrees, truncation and evaluation") {
    CoeffPoly q = CoeffPoly::var("q");
    CoeffPoly u = CoeffPoly::var("u");
    CoeffPoly p = q * q * u + u * u + CoeffPoly(5);
    CHECK(p.degree_in("q") == 2);
    CHECK(p.degree_in("u") == 2);
    CHECK(p.truncated(1, {"u"}) == q * q * u + CoeffPoly(5));
    CHECK(p.truncated(2, {}) == u * u + CoeffPoly(5));
    CHECK(p.evaluate_int({{"q", 2}, {"u", 3}}) == 12 + 9 + 5);
    CHECK(p.evaluate_int({}) == 7);
}

TEST_CASE("truncated series geometric inverse") {
    DegreeCaps caps;
    caps.total_cap = 8;
    CoeffPoly v = CoeffPoly::var("u") * CoeffPoly::var("q");
    TruncatedSeries geo = TruncatedSeries::geometric(v, caps);
    TruncatedSeries one(CoeffPoly(1), caps);
    TruncatedSeries lhs =
        TruncatedSeries(CoeffPoly(1) - v, caps) * geo;
    CHECK(lhs == one);
    CHECK_THROWS(TruncatedSeries::geometric(CoeffPoly(1), caps));
}

TEST_CASE("pochhammer inverse coefficients") {
    // 1/(u;q)_n: c_l = h_l(1, q, ..., q^n)
    auto c = pochhammer_inverse_coeffs("q", 2, 4);
    CHECK(c.size() == 5);
    CHECK(c[0] == CoeffPoly(1));
    // h_1(1,q,q^2) = 1 + q + q^2
    CoeffPoly q = CoeffPoly::var("q");
    CHECK(c[1] == CoeffPoly(1) + q + q * q);
    // multiply back: (1-u)(1-qu)(1-q^2u) * sum c_l u^l = 1 up to u^4
    DegreeCaps caps;
    caps.var_caps["u"] = 4;
    CoeffPoly u = CoeffPoly::var("u");
    CoeffPoly series;
    for (int l = 0; l <= 4; ++l) {
        CoeffPoly ul(1);
        for (int j = 0; j < l; ++j) ul *= u;
        series += c[l] * ul;
    }
    CoeffPoly prod(1);
    for (int i = 0; i <= 2; ++i)
        prod *= CoeffPoly(1) - CoeffPoly::var("q", i) * u;
    TruncatedSeries lhs(prod, caps);
    CHECK((lhs * TruncatedSeries(series, caps)).poly() == CoeffPoly(1));
}
