#pragma once

#include <map>
#include <string>
#include <vector>

#include "srhecke/coeffpoly.hpp"

namespace srhecke {

/// Exact polynomial in x_1..x_n with integer coefficients; terms keyed by
/// exponent vector of length n.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(int n) : n_(n) {}

    static XPoly monomial(int n, std::vector<int> exps, Int c = Int(1));
    static XPoly variable(int n, int i);  // x_i
    static XPoly constant(int n, Int c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    void add_term(const std::vector<int>& e, const Int& c);

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator-() const;
    XPoly operator*(const XPoly& o) const;
    bool operator==(const XPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    /// Swap of the variables x_i, x_{i+1}.
    XPoly s_action(int i) const;

    std::string str() const;  // "x1^4*x2*x3^3*x4^3" style

private:
    int n_ = 0;
    std::map<std::vector<int>, Int> terms_;
};

/// Demazure operator on F[x_1..x_n], in its constructive monomialwise form.
XPoly demazure(int i, const XPoly& f);

/// The leading-term-only variant; equals the transfer of the Stanley-Reisner
/// action on transfer images.
XPoly transferred_demazure(int i, const XPoly& f);

/// The divided-difference form (x_{i+1} f - x_{i+1} s_i f) / (x_i - x_{i+1}),
/// by exact polynomial division. Cross-check for demazure.
XPoly demazure_fraction_form(int i, const XPoly& f);

/// e_i(x_1..x_n).
XPoly elementary_symmetric(int n, int i);

}  // namespace srhecke
