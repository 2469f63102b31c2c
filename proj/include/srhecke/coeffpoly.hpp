#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace srhecke {

using Int = mpz_class;

/// Exponent map of a single monomial in named parameters; only positive
/// exponents are stored.
using ParamMonomial = std::map<std::string, int>;

bool valid_param_name(const std::string& name);

/// Sparse multivariate polynomial over arbitrary-precision integers in named
/// parameters (q, u, t0..tn, q0,q1,q2, u1,u2, z, th0..thn, y_<binaryword>, t).
class CoeffPoly {
public:
    CoeffPoly() = default;
    explicit CoeffPoly(Int c);
    explicit CoeffPoly(long c);

    static CoeffPoly var(const std::string& name, int exp = 1);
    /// Inverse of str().
    static CoeffPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<ParamMonomial, Int>& terms() const { return terms_; }

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly operator+(const CoeffPoly& o) const;
    CoeffPoly operator-(const CoeffPoly& o) const;
    CoeffPoly operator-() const;
    CoeffPoly operator*(const CoeffPoly& o) const;
    CoeffPoly& operator*=(const CoeffPoly& o);
    bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

    void add_term(const ParamMonomial& m, const Int& c);

    /// Coefficientwise substitution parameter -> polynomial. Parameters not
    /// named in subst are left alone. Throws on malformed parameter names.
    CoeffPoly substitute(const std::map<std::string, CoeffPoly>& subst) const;

    int degree_in(const std::string& name) const;

    /// Total degree of a monomial counting only the given variables
    /// (all variables when filter is empty).
    static int monomial_degree(const ParamMonomial& m,
                               const std::set<std::string>& filter);

    /// Drops every term whose filtered total degree exceeds cap.
    CoeffPoly truncated(int total_cap, const std::set<std::string>& filter) const;

    /// Evaluate at an all-integer point; parameters not listed default to 1.
    Int evaluate_int(const std::map<std::string, Int>& point) const;

    std::string str() const;

private:
    std::map<ParamMonomial, Int> terms_;
};

inline CoeffPoly operator*(const Int& c, const CoeffPoly& p) {
    return CoeffPoly(c) * p;
}

std::string param_monomial_str(const ParamMonomial& m);

/// Per-variable and/or filtered-total degree caps for series arithmetic.
struct DegreeCaps {
    std::map<std::string, int> var_caps;
    int total_cap = -1;                  // -1 = no total cap
    std::set<std::string> total_vars;    // empty = all variables count

    bool admits(const ParamMonomial& m) const;
};

/// A polynomial together with the caps it is truncated to. Arithmetic stays
/// closed under the caps; 1/(1-v) is expanded geometrically up to the cap.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(CoeffPoly p, DegreeCaps caps);

    const CoeffPoly& poly() const { return poly_; }
    const DegreeCaps& caps() const { return caps_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const {
        return poly_ == o.poly_;
    }

    /// 1/(1-v) expanded under the caps; v must have no constant term.
    static TruncatedSeries geometric(const CoeffPoly& v, const DegreeCaps& caps);

private:
    CoeffPoly poly_;
    DegreeCaps caps_;
};

/// Coefficients c_0..c_lmax of 1/(u;q)_n = prod_{0<=i<=n} 1/(1-q^i u) as a
/// series in u: each c_l is the exact polynomial h_l(1,q,...,q^n).
std::vector<CoeffPoly> pochhammer_inverse_coeffs(const std::string& qvar,
                                                 int n, int lmax);

}  // namespace srhecke
