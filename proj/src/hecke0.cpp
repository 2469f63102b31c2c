#include "srhecke/hecke0.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace srhecke {

HeckeElt HeckeElt::unit(int n) { return pibar(Permutation::identity(n)); }

HeckeElt HeckeElt::pibar(const Permutation& w) {
    HeckeElt e(w.n());
    e.terms_[w] = 1;
    return e;
}

HeckeElt HeckeElt::pibar_gen(int n, int i) {
    return pibar(Permutation::identity(n).left_mult_s(i));
}

HeckeElt HeckeElt::pi_gen(int n, int i) {
    return pibar_gen(n, i) + unit(n);
}

HeckeElt HeckeElt::pi(const Permutation& w) {
    HeckeElt r = unit(w.n());
    for (int i : w.reduced_word()) r = r * pi_gen(w.n(), i);
    return r;
}

HeckeElt HeckeElt::pi_longest_parabolic(const Composition& alpha) {
    HeckeElt r(alpha.size());
    for (const Permutation& u : parabolic_subgroup(alpha.complement()))
        r.add_term(u, 1);
    return r;
}

void HeckeElt::add_term(const Permutation& w, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
    HeckeElt r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

HeckeElt HeckeElt::gen_mult(int i) const {
    HeckeElt r(n_);
    for (const auto& [w, c] : terms_) {
        if (w.inverse().descents().count(i)) {
            r.add_term(w, -c);
        } else {
            r.add_term(w.left_mult_s(i), c);
        }
    }
    return r;
}

HeckeElt HeckeElt::operator*(const HeckeElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
    HeckeElt out(n_);
    for (const auto& [w, c] : terms_) {
        std::vector<int> word = w.reduced_word();
        HeckeElt acc = o;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = acc.gen_mult(*it);
        for (const auto& [u, c2] : acc.terms_) out.add_term(u, c * c2);
    }
    return out;
}

HeckeElt HeckeElt::scaled(const Int& c) const {
    HeckeElt r(n_);
    if (c == 0) return r;
    for (const auto& [w, c0] : terms_) r.terms_[w] = c0 * c;
    return r;
}

std::string HeckeElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*pibar[" << w.str() << "]";
    }
    return os.str();
}

std::map<int, Int> ActionColumn::as_vector(int index) const {
    switch (kind) {
        case Zero:
            return {};
        case Negate:
            return {{index, Int(-1)}};
        case Move:
            return {{target, Int(1)}};
        case General:
            return combo;
    }
    return {};
}

ModuleRep::ModuleRep(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    int gens = n_ > 0 ? n_ - 1 : 0;
    action_.assign(gens, std::vector<ActionColumn>(labels_.size()));
}

void ModuleRep::set_column(int i, int index, ActionColumn col) {
    action_.at(i - 1).at(index) = std::move(col);
}

const ActionColumn& ModuleRep::column(int i, int index) const {
    return action_.at(i - 1).at(index);
}

std::map<int, Int> ModuleRep::apply(int i, const std::map<int, Int>& v) const {
    std::map<int, Int> out;
    for (const auto& [idx, c] : v) {
        for (const auto& [j, a] : column(i, idx).as_vector(idx)) {
            Int& slot = out[j];
            slot += a * c;
            if (slot == 0) out.erase(j);
        }
    }
    return out;
}

bool ModuleRep::all_columns_monomial() const {
    for (const auto& col_row : action_)
        for (const auto& col : col_row)
            if (col.kind == ActionColumn::General) return false;
    return true;
}

std::string ModuleRep::json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (size_t g = 0; g < action_.size(); ++g) {
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& col : action_[g]) {
            nlohmann::json jc;
            switch (col.kind) {
                case ActionColumn::Zero: jc = {{"kind", "zero"}}; break;
                case ActionColumn::Negate: jc = {{"kind", "negate"}}; break;
                case ActionColumn::Move:
                    jc = {{"kind", "move"}, {"target", col.target}};
                    break;
                case ActionColumn::General: {
                    nlohmann::json combo = nlohmann::json::object();
                    for (const auto& [j, c] : col.combo)
                        combo[std::to_string(j)] = c.get_str();
                    jc = {{"kind", "general"}, {"combo", combo}};
                    break;
                }
            }
            cols.push_back(jc);
        }
        gens.push_back(cols);
    }
    nlohmann::json j{{"n", n_}, {"labels", labels_}, {"action", gens}};
    return j.dump();
}

ModuleRep simple_module(const Composition& alpha) {
    int n = alpha.size();
    ModuleRep rep(n, {"v"});
    auto d = alpha.descents();
    for (int i = 1; i < n; ++i) {
        ActionColumn col;
        col.kind = d.count(i) ? ActionColumn::Negate : ActionColumn::Zero;
        rep.set_column(i, 0, col);
    }
    return rep;
}

std::map<Permutation, Int> express_in_projective_basis(const Composition& alpha,
                                                       const HeckeElt& x) {
    Permutation u0 = longest_parabolic_element(alpha.complement());
    HeckeElt e = HeckeElt::pi_longest_parabolic(alpha.complement());
    auto da = alpha.descents();
    std::map<Permutation, Int> coeffs;
    HeckeElt rest = x;
    while (!rest.is_zero()) {
        // peel the maximal-length term; it must be pibar_{w u0} with D(w)=D(alpha)
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (it->first.inversions() > lead->first.inversions()) lead = it;
        Permutation w = lead->first.compose(u0);
        if (w.descents() != da)
            throw std::runtime_error("element outside the projective span");
        Int c = lead->second;
        coeffs[w] += c;
        if (coeffs[w] == 0) coeffs.erase(w);
        rest = rest - (HeckeElt::pibar(w) * e).scaled(c);
    }
    return coeffs;
}

namespace {
ActionColumn classify(const std::map<int, Int>& v, int self) {
    ActionColumn col;
    if (v.empty()) {
        col.kind = ActionColumn::Zero;
    } else if (v.size() == 1 && v.begin()->first == self &&
               v.begin()->second == -1) {
        col.kind = ActionColumn::Negate;
    } else if (v.size() == 1 && v.begin()->first != self &&
               v.begin()->second == 1) {
        col.kind = ActionColumn::Move;
        col.target = v.begin()->first;
    } else {
        col.kind = ActionColumn::General;
        col.combo = v;
    }
    return col;
}
}  // namespace

ModuleRep projective_module(const Composition& alpha) {
    int n = alpha.size();
    auto da = alpha.descents();
    std::vector<Permutation> basis;
    for (const Permutation& w : all_permutations(n))
        if (w.descents() == da) basis.push_back(w);
    std::map<Permutation, int> index;
    std::vector<std::string> labels;
    for (size_t b = 0; b < basis.size(); ++b) {
        index[basis[b]] = static_cast<int>(b);
        labels.push_back(basis[b].str());
    }

    HeckeElt e = HeckeElt::pi_longest_parabolic(alpha.complement());
    ModuleRep rep(n, labels);
    for (size_t b = 0; b < basis.size(); ++b) {
        HeckeElt vb = HeckeElt::pibar(basis[b]) * e;
        for (int i = 1; i < n; ++i) {
            auto expr = express_in_projective_basis(alpha, vb.gen_mult(i));
            std::map<int, Int> v;
            for (const auto& [w, c] : expr) v[index.at(w)] = c;
            rep.set_column(i, static_cast<int>(b),
                           classify(v, static_cast<int>(b)));
        }
    }
    rep.set_perm_basis(std::move(basis));
    return rep;
}

namespace {
ModuleRep cyclic_module_impl(int n, const std::set<int>& descents) {
    std::vector<Permutation> basis = min_coset_reps(n, descents);
    std::sort(basis.begin(), basis.end());
    std::map<Permutation, int> index;
    std::vector<std::string> labels;
    for (size_t b = 0; b < basis.size(); ++b) {
        index[basis[b]] = static_cast<int>(b);
        labels.push_back(basis[b].str());
    }
    ModuleRep rep(n, labels);
    for (size_t b = 0; b < basis.size(); ++b) {
        const Permutation& w = basis[b];
        auto dinv = w.inverse().descents();
        for (int i = 1; i < n; ++i) {
            ActionColumn col;
            if (dinv.count(i)) {
                col.kind = ActionColumn::Negate;
            } else {
                Permutation sw = w.left_mult_s(i);
                auto it = index.find(sw);
                if (it == index.end()) {
                    col.kind = ActionColumn::Zero;
                } else {
                    col.kind = ActionColumn::Move;
                    col.target = it->second;
                }
            }
            rep.set_column(i, static_cast<int>(b), col);
        }
    }
    rep.set_perm_basis(std::move(basis));
    return rep;
}
}  // namespace

ModuleRep cyclic_module(const WeakComposition& alpha) {
    return cyclic_module_impl(alpha.size(), alpha.descent_set());
}

ModuleRep cyclic_module(const Composition& alpha) {
    return cyclic_module_impl(alpha.size(), alpha.descents());
}

bool check_relations(const ModuleRep& rep) {
    int n = rep.n();
    auto neg = [](std::map<int, Int> v) {
        for (auto& [k, c] : v) c = -c;
        return v;
    };
    for (int b = 0; b < rep.dim(); ++b) {
        std::map<int, Int> v{{b, Int(1)}};
        for (int i = 1; i < n; ++i) {
            auto vi = rep.apply(i, v);
            if (rep.apply(i, vi) != neg(vi)) return false;
            for (int j = i + 2; j < n; ++j) {
                if (rep.apply(i, rep.apply(j, v)) !=
                    rep.apply(j, rep.apply(i, v)))
                    return false;
            }
            if (i + 1 < n) {
                auto lhs = rep.apply(i, rep.apply(i + 1, rep.apply(i, v)));
                auto rhs =
                    rep.apply(i + 1, rep.apply(i, rep.apply(i + 1, v)));
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

}  // namespace srhecke
