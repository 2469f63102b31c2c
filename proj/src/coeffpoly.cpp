#include "srhecke/coeffpoly.hpp"

#include <cctype>
#include <sstream>

namespace srhecke {

bool valid_param_name(const std::string& name) {
    if (name.empty()) return false;
    if (name == "q" || name == "u" || name == "z" || name == "t") return true;
    if (name == "u1" || name == "u2") return true;
    if (name == "q0" || name == "q1" || name == "q2") return true;
    // t<i>, th<i>, qq<i> (the ABR parameters q_1..q_n)
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (name.size() > 1 && name[0] == 't' && all_digits(name.substr(1)))
        return true;
    if (name.size() > 2 && name.compare(0, 2, "th") == 0 &&
        all_digits(name.substr(2)))
        return true;
    if (name.size() > 2 && name.compare(0, 2, "qq") == 0 &&
        all_digits(name.substr(2)))
        return true;
    // LNT parameters keyed by binary words: y_0, y_01, ...
    if (name.size() > 2 && name.compare(0, 2, "y_") == 0) {
        for (size_t i = 2; i < name.size(); ++i)
            if (name[i] != '0' && name[i] != '1') return false;
        return true;
    }
    return false;
}

CoeffPoly::CoeffPoly(Int c) {
    if (c != 0) terms_[{}] = std::move(c);
}

CoeffPoly::CoeffPoly(long c) {
    if (c != 0) terms_[{}] = Int(c);
}

CoeffPoly CoeffPoly::var(const std::string& name, int exp) {
    if (!valid_param_name(name))
        throw std::invalid_argument("unknown parameter name: " + name);
    CoeffPoly p;
    if (exp == 0) return CoeffPoly(1);
    if (exp < 0) throw std::invalid_argument("negative exponent");
    p.terms_[{{name, exp}}] = 1;
    return p;
}

CoeffPoly CoeffPoly::parse(const std::string& text) {
    CoeffPoly out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected sign in polynomial text");
        }
        first = false;
        Int coeff = 1;
        ParamMonomial mono;
        bool saw_factor = false;
        while (true) {
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
                coeff *= Int(text.substr(i, j - i));
                i = j;
            } else if (i < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[i])))) {
                size_t j = i;
                while (j < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[j])) ||
                        text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                if (!valid_param_name(name))
                    throw std::invalid_argument("unknown parameter name: " + name);
                i = j;
                int exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    size_t k = i;
                    while (k < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[k])))
                        ++k;
                    if (k == i) throw std::invalid_argument("missing exponent");
                    exp = std::stoi(text.substr(i, k - i));
                    i = k;
                }
                mono[name] += exp;
            } else {
                throw std::invalid_argument("bad factor in polynomial text");
            }
            saw_factor = true;
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("empty term");
        out.add_term(mono, sign * coeff);
        skip_ws();
    }
    return out;
}

void CoeffPoly::add_term(const ParamMonomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
    CoeffPoly r = *this;
    r += o;
    return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
    CoeffPoly r = *this;
    r -= o;
    return r;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
    CoeffPoly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            ParamMonomial m = m1;
            for (const auto& [v, e] : m2) m[v] += e;
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) {
    *this = *this * o;
    return *this;
}

CoeffPoly CoeffPoly::substitute(
    const std::map<std::string, CoeffPoly>& subst) const {
    for (const auto& [name, _] : subst)
        if (!valid_param_name(name))
            throw std::invalid_argument("unknown parameter name: " + name);
    CoeffPoly r;
    for (const auto& [m, c] : terms_) {
        CoeffPoly term(c);
        for (const auto& [v, e] : m) {
            auto it = subst.find(v);
            if (it == subst.end()) {
                term *= CoeffPoly::var(v, e);
            } else {
                for (int j = 0; j < e; ++j) term *= it->second;
            }
        }
        r += term;
    }
    return r;
}

int CoeffPoly::degree_in(const std::string& name) const {
    int d = 0;
    for (const auto& [m, _] : terms_) {
        auto it = m.find(name);
        if (it != m.end() && it->second > d) d = it->second;
    }
    return d;
}

int CoeffPoly::monomial_degree(const ParamMonomial& m,
                               const std::set<std::string>& filter) {
    int d = 0;
    for (const auto& [v, e] : m)
        if (filter.empty() || filter.count(v)) d += e;
    return d;
}

CoeffPoly CoeffPoly::truncated(int total_cap,
                               const std::set<std::string>& filter) const {
    CoeffPoly r;
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m, filter) <= total_cap) r.terms_[m] = c;
    return r;
}

Int CoeffPoly::evaluate_int(const std::map<std::string, Int>& point) const {
    Int total = 0;
    for (const auto& [m, c] : terms_) {
        Int v = c;
        for (const auto& [name, e] : m) {
            auto it = point.find(name);
            Int base = (it == point.end()) ? Int(1) : it->second;
            for (int j = 0; j < e; ++j) v *= base;
        }
        total += v;
    }
    return total;
}

std::string param_monomial_str(const ParamMonomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) os << "*";
        first = false;
        os << v;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string CoeffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
        if (m.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << param_monomial_str(m);
        }
    }
    return os.str();
}

bool DegreeCaps::admits(const ParamMonomial& m) const {
    for (const auto& [v, e] : m) {
        auto it = var_caps.find(v);
        if (it != var_caps.end() && e > it->second) return false;
    }
    if (total_cap >= 0 &&
        CoeffPoly::monomial_degree(m, total_vars) > total_cap)
        return false;
    return true;
}

namespace {
CoeffPoly truncate_to(const CoeffPoly& p, const DegreeCaps& caps) {
    CoeffPoly r;
    for (const auto& [m, c] : p.terms())
        if (caps.admits(m)) r.add_term(m, c);
    return r;
}
}  // namespace

TruncatedSeries::TruncatedSeries(CoeffPoly p, DegreeCaps caps)
    : poly_(truncate_to(p, caps)), caps_(std::move(caps)) {}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    return TruncatedSeries(poly_ + o.poly_, caps_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return TruncatedSeries(poly_ - o.poly_, caps_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    return TruncatedSeries(poly_ * o.poly_, caps_);
}

TruncatedSeries TruncatedSeries::geometric(const CoeffPoly& v,
                                           const DegreeCaps& caps) {
    if (v.terms().count(ParamMonomial{}))
        throw std::invalid_argument("geometric expansion needs zero constant term");
    CoeffPoly sum(1);
    CoeffPoly pw(1);
    while (true) {
        pw = truncate_to(pw * v, caps);
        if (pw.is_zero()) break;
        sum += pw;
    }
    return TruncatedSeries(sum, caps);
}

std::vector<CoeffPoly> pochhammer_inverse_coeffs(const std::string& qvar,
                                                 int n, int lmax) {
    std::vector<CoeffPoly> c(lmax + 1);
    c[0] = CoeffPoly(1);
    for (int i = 0; i <= n; ++i) {
        // multiply by 1/(1-q^i u) = sum_j q^{ij} u^j
        std::vector<CoeffPoly> next(lmax + 1);
        for (int l = 0; l <= lmax; ++l) {
            for (int j = 0; j <= l; ++j) {
                if (c[l - j].is_zero()) continue;
                next[l] += c[l - j] * CoeffPoly::var(qvar, i * j);
            }
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace srhecke
