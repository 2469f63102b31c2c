#include "srhecke/srring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace srhecke {

namespace {
bool chain_sorted_ok(std::vector<Subset>& chain) {
    std::sort(chain.begin(), chain.end(), [](Subset a, Subset b) {
        return std::pair(popcount(a), a) < std::pair(popcount(b), b);
    });
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!subset_of(chain[i], chain[i + 1])) return false;
    return true;
}
}  // namespace

SRMonomial::SRMonomial(int n, std::vector<Subset> chain)
    : n_(n), chain_(std::move(chain)) {
    for (Subset s : chain_)
        if (!subset_of(s, full_set(n)))
            throw std::invalid_argument("set exceeds ambient [n]");
    if (!chain_sorted_ok(chain_))
        throw std::invalid_argument("incomparable pair in monomial chain");
}

std::vector<int> SRMonomial::rank_multiset() const {
    std::vector<int> r;
    for (Subset s : chain_) r.push_back(popcount(s));
    return r;
}

ParamMonomial SRMonomial::multidegree() const {
    ParamMonomial m;
    for (Subset s : chain_) m["t" + std::to_string(popcount(s))] += 1;
    return m;
}

bool SRMonomial::merge(const SRMonomial& a, const SRMonomial& b, SRMonomial* out) {
    std::vector<Subset> chain = a.chain_;
    chain.insert(chain.end(), b.chain_.begin(), b.chain_.end());
    if (!chain_sorted_ok(chain)) return false;
    out->n_ = a.n_;
    out->chain_ = std::move(chain);
    return true;
}

bool SRMonomial::operator<(const SRMonomial& o) const {
    auto ra = rank_multiset(), rb = o.rank_multiset();
    if (ra != rb) return ra < rb;
    return chain_ < o.chain_;
}

std::string SRMonomial::str() const {
    if (chain_.empty()) return "1";
    std::ostringstream os;
    os << "y[";
    for (size_t i = 0; i < chain_.size(); ++i) {
        if (i) os << " ";
        os << subset_str(chain_[i]);
    }
    os << "]";
    return os.str();
}

SRElement SRElement::monomial(const SRMonomial& m, CoeffPoly c) {
    SRElement e(m.n());
    e.add_term(m, c);
    return e;
}

void SRElement::add_term(const SRMonomial& m, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SRElement SRElement::operator+(const SRElement& o) const {
    SRElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SRElement SRElement::operator-(const SRElement& o) const {
    SRElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SRElement SRElement::operator-() const {
    SRElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

SRElement SRElement::operator*(const SRElement& o) const {
    if (n_ != o.n_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("ambient size mismatch");
    SRElement r(n_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            SRMonomial prod;
            if (SRMonomial::merge(m1, m2, &prod)) r.add_term(prod, c1 * c2);
        }
    }
    return r;
}

SRElement SRElement::scaled(const CoeffPoly& c) const {
    SRElement r(n_);
    for (const auto& [m, c0] : terms_) r.add_term(m, c0 * c);
    return r;
}

std::string SRElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
}

std::string SRElement::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json chain = nlohmann::json::array();
        for (Subset s : m.chain()) chain.push_back(subset_elements(s));
        arr.push_back({{"chain", chain}, {"coeff", c.str()}});
    }
    nlohmann::json j{{"n", n_}, {"terms", arr}};
    return j.dump();
}

SRElement SRElement::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    SRElement e(n);
    for (const auto& term : j.at("terms")) {
        std::vector<Subset> chain;
        for (const auto& set : term.at("chain")) {
            Subset s = 0;
            for (int el : set.get<std::vector<int>>()) {
                if (el < 1 || el > n)
                    throw std::invalid_argument("element outside [n]");
                s |= Subset(1) << (el - 1);
            }
            chain.push_back(s);
        }
        e.add_term(SRMonomial(n, chain),
                   CoeffPoly::parse(term.at("coeff").get<std::string>()));
    }
    return e;
}

SRElement theta(int n, int i) {
    if (i < 0 || i > n) throw std::out_of_range("theta index");
    SRElement r(n);
    for (Subset s = 0; s <= full_set(n); ++s) {
        if (popcount(s) != i) continue;
        r.add_term(SRMonomial(n, {s}), CoeffPoly(1));
        if (n == 0) break;
    }
    return r;
}

SRMonomial sym_action(int i, const SRMonomial& m) {
    if (i < 1 || i >= m.n()) throw std::out_of_range("generator index");
    Subset bi = Subset(1) << (i - 1), bj = Subset(1) << i;
    std::vector<Subset> chain;
    for (Subset s : m.chain()) {
        Subset t = s & ~(bi | bj);
        if (s & bi) t |= bj;
        if (s & bj) t |= bi;
        chain.push_back(t);
    }
    return SRMonomial(m.n(), chain);
}

SRElement sym_action(int i, const SRElement& f) {
    SRElement r(f.n());
    for (const auto& [m, c] : f.terms()) r.add_term(sym_action(i, m), c);
    return r;
}

namespace {
// p_i(M): first 1-based chain index containing i; chain_length+1 if none.
int first_occurrence(const SRMonomial& m, int i) {
    Subset bit = Subset(1) << (i - 1);
    for (int j = 0; j < m.chain_length(); ++j)
        if (m.chain()[j] & bit) return j + 1;
    return m.chain_length() + 1;
}
}  // namespace

SRElement hecke_action(int i, const SRMonomial& m) {
    if (i < 1 || i >= m.n()) throw std::out_of_range("generator index");
    int pi = first_occurrence(m, i);
    int pj = first_occurrence(m, i + 1);
    if (pi > pj) return SRElement::monomial(m, CoeffPoly(-1));
    if (pi == pj) return SRElement(m.n());
    return SRElement::monomial(sym_action(i, m));
}

SRElement hecke_action(int i, const SRElement& f) {
    SRElement r(f.n());
    for (const auto& [m, c] : f.terms()) r = r + hecke_action(i, m).scaled(c);
    return r;
}

SRMonomial descent_monomial(const Permutation& w) {
    std::vector<Subset> chain;
    Subset prefix = 0;
    int pos = 1;
    for (int d : w.descents()) {
        for (; pos <= d; ++pos) prefix |= Subset(1) << (w(pos) - 1);
        chain.push_back(prefix);
    }
    return SRMonomial(w.n(), chain);
}

namespace {
SRElement theta_power_times(int n, const std::vector<int>& exps,
                            const SRElement& base) {
    SRElement acc = base;
    for (int j = 0; j <= n; ++j)
        for (int rep = 0; rep < exps[j]; ++rep) acc = acc * theta(n, j);
    return acc;
}
}  // namespace

std::map<Permutation, CoeffPoly> straighten(const SRElement& f) {
    int n = f.n();
    std::map<Permutation, CoeffPoly> out;
    SRElement rest = f;
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms().begin();
        auto [alpha, sigma] = encode_multichain(m.multichain());
        auto dw = sigma.descents();
        std::vector<int> exps(n + 1, 0);
        for (int r : m.rank_multiset()) exps[r] += 1;
        for (int d : dw) {
            if (exps[d] == 0)
                throw std::runtime_error("straighten: descent rank missing");
            exps[d] -= 1;
        }
        CoeffPoly thmono(1);
        for (int j = 0; j <= n; ++j)
            if (exps[j] > 0)
                thmono *= CoeffPoly::var("th" + std::to_string(j), exps[j]);
        CoeffPoly coeff = c;
        auto it = out.find(sigma);
        if (it == out.end()) out.emplace(sigma, thmono * coeff);
        else it->second += thmono * coeff;

        SRElement peel = theta_power_times(
            n, exps, SRElement::monomial(descent_monomial(sigma)));
        SRMonomial prev_min = m;
        rest = rest - peel.scaled(coeff);
        if (!rest.is_zero() && !(prev_min < rest.terms().begin()->first))
            throw std::runtime_error("straighten: order failed to decrease");
    }
    return out;
}

SRElement expand_descent_basis(int n,
                               const std::map<Permutation, CoeffPoly>& coeffs) {
    SRElement out(n);
    for (const auto& [w, cpoly] : coeffs) {
        SRElement yw = SRElement::monomial(descent_monomial(w));
        for (const auto& [pm, c] : cpoly.terms()) {
            std::vector<int> exps(n + 1, 0);
            CoeffPoly restc(c);
            for (const auto& [name, e] : pm) {
                if (name.size() > 2 && name.compare(0, 2, "th") == 0) {
                    exps[std::stoi(name.substr(2))] += e;
                } else {
                    restc *= CoeffPoly::var(name, e);
                }
            }
            out = out + theta_power_times(n, exps, yw).scaled(restc);
        }
    }
    return out;
}

SRElement rank_selection(const SRElement& f, const Composition& alpha) {
    auto keep = alpha.descents();
    keep.insert(alpha.size());
    SRElement r(f.n());
    for (const auto& [m, c] : f.terms()) {
        bool ok = true;
        for (int rank : m.rank_multiset())
            if (!keep.count(rank)) {
                ok = false;
                break;
            }
        if (ok) r.add_term(m, c);
    }
    return r;
}

XPoly transfer(const SRElement& f) {
    int n = f.n();
    XPoly out(n);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(n, 0);
        for (Subset s : m.chain())
            for (int j : subset_elements(s)) e[j - 1] += 1;
        // only integer coefficients transfer; polynomial coefficients are not
        // meaningful on the x side
        Int ci = 0;
        if (!c.is_zero()) {
            if (c.terms().size() != 1 || !c.terms().begin()->first.empty())
                throw std::invalid_argument("transfer needs integer coefficients");
            ci = c.terms().begin()->second;
        }
        out.add_term(e, ci);
    }
    return out;
}

}  // namespace srhecke
