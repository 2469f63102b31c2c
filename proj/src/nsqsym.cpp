#include "srhecke/nsqsym.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace srhecke {

namespace {
std::vector<std::set<int>> all_subsets(const std::set<int>& s) {
    std::vector<int> v(s.begin(), s.end());
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
        std::set<int> sub;
        for (size_t i = 0; i < v.size(); ++i)
            if (mask & (1u << i)) sub.insert(v[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

std::vector<std::set<int>> all_supersets(const std::set<int>& s, int n) {
    std::vector<int> rest;
    for (int i = 1; i < n; ++i)
        if (!s.count(i)) rest.push_back(i);
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
        std::set<int> sup = s;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1u << i)) sup.insert(rest[i]);
        out.push_back(std::move(sup));
    }
    return out;
}

CoeffPoly t_monomial(const std::set<int>& s) {
    CoeffPoly p(1);
    for (int i : s) p *= CoeffPoly::var("t" + std::to_string(i));
    return p;
}

std::string basis_term_str(const char* tag, const Composition& alpha,
                           const CoeffPoly& c) {
    std::string head =
        std::string(tag) + "[" + alpha.str() + "]";
    if (c.terms().size() == 1) {
        const auto& [m, v] = *c.terms().begin();
        if (m.empty() && v == 1) return head;
        return c.str() + "*" + head;
    }
    return "(" + c.str() + ")*" + head;
}
}  // namespace

QSymElt QSymElt::basis_elt(Basis b, const Composition& alpha, CoeffPoly c) {
    QSymElt e(b);
    e.add_term(alpha, c);
    return e;
}

void QSymElt::add_term(const Composition& alpha, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSymElt QSymElt::operator+(const QSymElt& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("basis mismatch in QSym addition");
    QSymElt r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

QSymElt QSymElt::operator-(const QSymElt& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("basis mismatch in QSym subtraction");
    QSymElt r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

QSymElt QSymElt::scaled(const CoeffPoly& c) const {
    QSymElt r(basis_);
    for (const auto& [a, c0] : terms_) r.add_term(a, c0 * c);
    return r;
}

bool QSymElt::operator==(const QSymElt& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return to_f().terms_ == o.to_f().terms_;
}

QSymElt QSymElt::to_m() const {
    if (basis_ == M) return *this;
    QSymElt r(M);
    for (const auto& [a, c] : terms_)
        for (const auto& sup : all_supersets(a.descents(), a.size()))
            r.add_term(Composition::from_descents(a.size(), sup), c);
    return r;
}

QSymElt QSymElt::to_f() const {
    if (basis_ == F) return *this;
    QSymElt r(F);
    for (const auto& [a, c] : terms_) {
        auto d = a.descents();
        for (const auto& sup : all_supersets(d, a.size())) {
            Int sign = ((sup.size() - d.size()) % 2 == 0) ? 1 : -1;
            r.add_term(Composition::from_descents(a.size(), sup),
                       sign * c);
        }
    }
    return r;
}

QSymElt QSymElt::substituted(
    const std::map<std::string, CoeffPoly>& subst) const {
    QSymElt r(basis_);
    for (const auto& [a, c] : terms_) r.add_term(a, c.substitute(subst));
    return r;
}

QSymElt QSymElt::truncated(int total_cap,
                           const std::set<std::string>& filter) const {
    QSymElt r(basis_);
    for (const auto& [a, c] : terms_)
        r.add_term(a, c.truncated(total_cap, filter));
    return r;
}

std::string QSymElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* tag = basis_ == F ? "F" : "M";
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << basis_term_str(tag, a, c);
    }
    return os.str();
}

NSymElt NSymElt::basis_elt(Basis b, const Composition& alpha, CoeffPoly c) {
    NSymElt e(b);
    e.add_term(alpha, c);
    return e;
}

void NSymElt::add_term(const Composition& alpha, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NSymElt NSymElt::operator+(const NSymElt& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("basis mismatch in NSym addition");
    NSymElt r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

NSymElt NSymElt::operator-(const NSymElt& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("basis mismatch in NSym subtraction");
    NSymElt r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

NSymElt NSymElt::operator*(const NSymElt& o) const {
    NSymElt a = to_s(), b = o.to_s();
    NSymElt r(s);
    for (const auto& [x, cx] : a.terms()) {
        for (const auto& [y, cy] : b.terms()) {
            CoeffPoly c = cx * cy;
            if (x.length() == 0) {
                r.add_term(y, c);
            } else if (y.length() == 0) {
                r.add_term(x, c);
            } else {
                r.add_term(x.concat(y), c);
                r.add_term(x.near_concat(y), c);
            }
        }
    }
    return r;
}

NSymElt NSymElt::scaled(const CoeffPoly& c) const {
    NSymElt r(basis_);
    for (const auto& [a, c0] : terms_) r.add_term(a, c0 * c);
    return r;
}

bool NSymElt::operator==(const NSymElt& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return to_s().terms_ == o.to_s().terms_;
}

NSymElt NSymElt::to_h() const {
    if (basis_ == h) return *this;
    NSymElt r(h);
    for (const auto& [a, c] : terms_) {
        auto d = a.descents();
        for (const auto& sub : all_subsets(d)) {
            Int sign = ((d.size() - sub.size()) % 2 == 0) ? 1 : -1;
            r.add_term(Composition::from_descents(a.size(), sub), sign * c);
        }
    }
    return r;
}

NSymElt NSymElt::to_s() const {
    if (basis_ == s) return *this;
    NSymElt r(s);
    for (const auto& [a, c] : terms_)
        for (const auto& sub : all_subsets(a.descents()))
            r.add_term(Composition::from_descents(a.size(), sub), c);
    return r;
}

NSymElt NSymElt::substituted(
    const std::map<std::string, CoeffPoly>& subst) const {
    NSymElt r(basis_);
    for (const auto& [a, c] : terms_) r.add_term(a, c.substitute(subst));
    return r;
}

std::string NSymElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* tag = basis_ == s ? "s" : "h";
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << basis_term_str(tag, a, c);
    }
    return os.str();
}

NSymElt ribbon_product(const Composition& alpha, const Composition& beta) {
    if (alpha.length() == 0 || beta.length() == 0)
        throw std::invalid_argument("ribbon product needs nonempty factors");
    NSymElt r(NSymElt::s);
    r.add_term(alpha.concat(beta), CoeffPoly(1));
    r.add_term(alpha.near_concat(beta), CoeffPoly(1));
    return r;
}

CoeffPoly pairing(const QSymElt& x, const NSymElt& y) {
    QSymElt xf = x.to_f();
    NSymElt ys = y.to_s();
    CoeffPoly total;
    for (const auto& [a, c] : xf.terms()) {
        auto it = ys.terms().find(a);
        if (it != ys.terms().end()) total += c * it->second;
    }
    return total;
}

CoeffPoly bz_inner(const NSymElt& x, const NSymElt& y) {
    NSymElt xs = x.to_s(), ys = y.to_s();
    CoeffPoly total;
    for (const auto& [a, c] : xs.terms()) {
        auto it = ys.terms().find(a.complement());
        if (it == ys.terms().end()) continue;
        Int sign = ((a.size() + a.length()) % 2 == 0) ? 1 : -1;
        total += sign * (c * it->second);
    }
    return total;
}

NSymElt hall_littlewood(const Composition& alpha, bool modified) {
    NSymElt r(NSymElt::s);
    auto d = alpha.descents();
    for (const auto& sub : all_subsets(d)) {
        CoeffPoly w;
        if (modified) {
            w = t_monomial(sub);
        } else {
            std::set<int> diff;
            for (int i : d)
                if (!sub.count(i)) diff.insert(i);
            w = t_monomial(diff);
        }
        r.add_term(Composition::from_descents(alpha.size(), sub), w);
    }
    return r;
}

std::map<std::string, CoeffPoly> subst_t_power(int n) {
    std::map<std::string, CoeffPoly> m;
    for (int i = 1; i <= n; ++i)
        m["t" + std::to_string(i)] = CoeffPoly::var("t", i);
    return m;
}

std::map<std::string, CoeffPoly> subst_qt(const Composition& alpha) {
    int n = alpha.size();
    auto d = alpha.descents();
    std::map<std::string, CoeffPoly> m;
    for (int i = 1; i < n; ++i) {
        m["t" + std::to_string(i)] = d.count(i)
                                         ? CoeffPoly::var("t", i)
                                         : CoeffPoly::var("q", n - i);
    }
    return m;
}

std::map<std::string, CoeffPoly> subst_lnt(const Composition& alpha) {
    int n = alpha.size();
    auto d = alpha.descents();
    std::map<std::string, CoeffPoly> m;
    std::string prefix;
    for (int i = 1; i < n; ++i) {
        prefix += d.count(i) ? '1' : '0';
        m["t" + std::to_string(i)] = CoeffPoly::var("y_" + prefix);
    }
    return m;
}

std::map<std::string, CoeffPoly> subst_periodic(int n, int imax) {
    std::map<std::string, CoeffPoly> m;
    for (int i = 1; i <= imax; ++i) {
        int j = i % n;
        m["t" + std::to_string(i)] =
            j == 0 ? CoeffPoly(1) : CoeffPoly::var("t" + std::to_string(j));
    }
    return m;
}

bool hl_product_formula_check(const Composition& alpha, const Composition& beta,
                              std::string* witness) {
    NSymElt lhs = hall_littlewood(alpha, false) * hall_littlewood(beta, false);
    NSymElt rhs(NSymElt::s);
    int na = alpha.size();
    auto db = beta.descents();
    for (const auto& dg : all_subsets(db)) {
        Composition gamma = Composition::from_descents(beta.size(), dg);
        CoeffPoly factor(1);
        for (int i : db) {
            if (!dg.count(i))
                factor *= CoeffPoly::var("t" + std::to_string(i)) -
                          CoeffPoly::var("t" + std::to_string(na + i));
        }
        NSymElt term = hall_littlewood(alpha.concat(gamma), false);
        CoeffPoly one_minus =
            CoeffPoly(1) - CoeffPoly::var("t" + std::to_string(na));
        term = term + hall_littlewood(alpha.near_concat(gamma), false)
                          .scaled(one_minus);
        rhs = rhs + term.scaled(factor);
    }
    if (lhs == rhs) return true;
    if (witness) {
        NSymElt diff = lhs - rhs;
        const auto& [a, c] = *diff.terms().begin();
        auto lit = lhs.terms().find(a);
        auto rit = rhs.terms().find(a);
        *witness = "s[" + a.str() + "]: lhs=" +
                   (lit == lhs.terms().end() ? "0" : lit->second.str()) +
                   " rhs=" +
                   (rit == rhs.terms().end() ? "0" : rit->second.str());
    }
    return false;
}

CoeffPoly principal_specialization_finite(const Composition& alpha, int ell,
                                          const std::string& qvar) {
    if (ell < 0) throw std::invalid_argument("negative bound");
    int n = alpha.size();
    auto d = alpha.descents();
    CoeffPoly total;
    std::vector<int> seq(n + 1, 0);
    // seq[j] = i_j; i_0 sentinel = ell (upper bound for i_1)
    seq[0] = ell;
    std::function<void(int, int)> rec = [&](int j, int partial) {
        if (j > n) {
            total += CoeffPoly::var(qvar, partial);
            return;
        }
        int hi = seq[j - 1];
        if (j > 1 && d.count(j - 1)) hi -= 1;  // strict drop after position j-1
        for (int v = 1; v <= hi; ++v) {
            seq[j] = v;
            rec(j + 1, partial + v - 1);
        }
    };
    if (n == 0) return CoeffPoly(1);
    rec(1, 0);
    return total;
}

CoeffPoly principal_specialization_infinite(const Composition& alpha, int qcap,
                                            const std::string& qvar) {
    int n = alpha.size();
    // q^{maj} * prod_{1<=i<=n} (1 + q^i + q^{2i} + ...) truncated
    std::set<std::string> filt{qvar};
    CoeffPoly acc = CoeffPoly::var(qvar, alpha.maj());
    for (int i = 1; i <= n; ++i) {
        CoeffPoly geo;
        for (int j = 0; i * j <= qcap; ++j) geo += CoeffPoly::var(qvar, i * j);
        acc = (acc * geo).truncated(qcap, filt);
    }
    return acc;
}

}  // namespace srhecke
