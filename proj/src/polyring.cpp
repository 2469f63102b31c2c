#include "srhecke/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace srhecke {

XPoly XPoly::monomial(int n, std::vector<int> exps, Int c) {
    if (static_cast<int>(exps.size()) != n)
        throw std::invalid_argument("exponent vector length mismatch");
    XPoly p(n);
    p.add_term(exps, c);
    return p;
}

XPoly XPoly::variable(int n, int i) {
    std::vector<int> e(n, 0);
    e.at(i - 1) = 1;
    return monomial(n, e);
}

XPoly XPoly::constant(int n, Int c) {
    return monomial(n, std::vector<int>(n, 0), std::move(c));
}

void XPoly::add_term(const std::vector<int>& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (n_ != o.n_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("variable count mismatch");
    XPoly r(n_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e = e1;
            for (int i = 0; i < n_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

XPoly XPoly::s_action(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("generator index");
    XPoly r(n_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        std::swap(e2[i - 1], e2[i]);
        r.add_term(e2, c);
    }
    return r;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!any) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

XPoly demazure(int i, const XPoly& f) {
    if (i < 1 || i >= f.n()) throw std::out_of_range("generator index");
    XPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        int a = e[i - 1], b = e[i];
        if (a == b) continue;
        std::vector<int> m = e;
        if (a > b) {
            for (int j = a - 1; j >= b; --j) {
                m[i - 1] = j;
                m[i] = a + b - j;
                r.add_term(m, c);
            }
        } else {
            for (int j = a; j <= b - 1; ++j) {
                m[i - 1] = j;
                m[i] = a + b - j;
                r.add_term(m, -c);
            }
        }
    }
    return r;
}

XPoly transferred_demazure(int i, const XPoly& f) {
    if (i < 1 || i >= f.n()) throw std::out_of_range("generator index");
    XPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        int a = e[i - 1], b = e[i];
        if (a == b) continue;
        std::vector<int> m = e;
        if (a > b) {
            m[i - 1] = b;
            m[i] = a;
            r.add_term(m, c);
        } else {
            r.add_term(m, -c);
        }
    }
    return r;
}

XPoly demazure_fraction_form(int i, const XPoly& f) {
    if (i < 1 || i >= f.n()) throw std::out_of_range("generator index");
    int n = f.n();
    XPoly xi1 = XPoly::variable(n, i + 1);
    XPoly num = xi1 * f - xi1 * f.s_action(i);
    // exact division by (x_i - x_{i+1}): eliminate the leading term in x_i
    XPoly q(n);
    while (!num.is_zero()) {
        // term with maximal x_i exponent (ties broken by map order)
        auto lead = num.terms().begin();
        for (auto it = num.terms().begin(); it != num.terms().end(); ++it)
            if (it->first[i - 1] > lead->first[i - 1]) lead = it;
        std::vector<int> e = lead->first;
        Int c = lead->second;
        if (e[i - 1] == 0)
            throw std::runtime_error("division by (x_i - x_{i+1}) is not exact");
        e[i - 1] -= 1;
        q.add_term(e, c);
        XPoly divisor = XPoly::variable(n, i) - xi1;
        num = num - XPoly::monomial(n, e, c) * divisor;
    }
    return q;
}

XPoly elementary_symmetric(int n, int i) {
    if (i < 0 || i > n) throw std::out_of_range("e_i index");
    XPoly r(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != i) continue;
        std::vector<int> e(n, 0);
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) e[j] = 1;
        r.add_term(e, 1);
    }
    return r;
}

}  // namespace srhecke
