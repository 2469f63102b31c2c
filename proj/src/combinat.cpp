#include "srhecke/combinat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srhecke {

int popcount(Subset s) { return std::popcount(s); }

std::vector<int> subset_elements(Subset s) {
    std::vector<int> v;
    for (int i = 1; i <= kMaxN; ++i)
        if (s & (Subset(1) << (i - 1))) v.push_back(i);
    return v;
}

std::string subset_str(Subset s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) os << ",";
        first = false;
        os << e;
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_descents(int n, const std::set<int>& descents) {
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d < 1 || d > n - 1)
            throw std::invalid_argument("descent out of range");
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(parts);
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Composition(parts);
}

std::set<int> Composition::descents() const {
    std::set<int> d;
    int sum = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        sum += parts_[i];
        d.insert(sum);
    }
    return d;
}

int Composition::maj() const {
    int m = 0;
    for (int d : descents()) m += d;
    return m;
}

Composition Composition::complement() const {
    std::set<int> comp;
    auto d = descents();
    for (int i = 1; i <= n_ - 1; ++i)
        if (!d.count(i)) comp.insert(i);
    return from_descents(n_, comp);
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(p);
}

Composition Composition::transpose() const { return complement().reversed(); }

Composition Composition::concat(const Composition& o) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    return Composition(p);
}

Composition Composition::near_concat(const Composition& o) const {
    if (parts_.empty() || o.parts_.empty())
        throw std::invalid_argument("near-concatenation needs nonempty operands");
    std::vector<int> p = parts_;
    p.back() += o.parts_.front();
    p.insert(p.end(), o.parts_.begin() + 1, o.parts_.end());
    return Composition(p);
}

std::string Composition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

bool refines(const Composition& beta, const Composition& alpha) {
    if (beta.size() != alpha.size()) return false;
    auto db = beta.descents();
    auto da = alpha.descents();
    return std::includes(da.begin(), da.end(), db.begin(), db.end());
}

bool Composition::refines(const Composition& coarser) const {
    return srhecke::refines(*this, coarser);
}

// ----------------------------------------------------------- WeakComposition

WeakComposition::WeakComposition(std::vector<int> parts)
    : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("weak composition parts must be >= 0");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> WeakComposition::descent_multiset() const {
    std::vector<int> d;
    int sum = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        sum += parts_[i];
        d.push_back(sum);
    }
    return d;
}

std::set<int> WeakComposition::descent_set() const {
    std::set<int> s;
    for (int d : descent_multiset())
        if (d >= 1 && d <= n_ - 1) s.insert(d);
    return s;
}

Composition WeakComposition::underlying() const {
    std::vector<int> p;
    for (int x : parts_)
        if (x > 0) p.push_back(x);
    return Composition(p);
}

std::string WeakComposition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

// --------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    int x;
    while (ss >> x) v.push_back(x);
    return Permutation(v);
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) v[images_[i] - 1] = i + 1;
    return Permutation(v);
}

Permutation Permutation::compose(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) v[i] = images_[o.images_[i] - 1];
    return Permutation(v);
}

Permutation Permutation::left_mult_s(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("generator index");
    std::vector<int> v = images_;
    for (int& x : v) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    return Permutation(v);
}

Permutation Permutation::right_mult_s(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("generator index");
    std::vector<int> v = images_;
    std::swap(v[i - 1], v[i]);
    return Permutation(v);
}

std::set<int> Permutation::descents() const {
    std::set<int> d;
    for (int i = 1; i < n(); ++i)
        if (images_[i - 1] > images_[i]) d.insert(i);
    return d;
}

int Permutation::des() const { return static_cast<int>(descents().size()); }

int Permutation::maj() const {
    int m = 0;
    for (int d : descents()) m += d;
    return m;
}

long Permutation::inversions() const {
    long inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // strips left factors: pick i with l(s_i w) < l(w), i.e. a descent of w^{-1}
    std::vector<int> word;
    Permutation w = *this;
    while (true) {
        auto d = w.inverse().descents();
        if (d.empty()) break;
        int i = *d.begin();
        word.push_back(i);
        w = w.left_mult_s(i);
    }
    return word;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) {
        if (i) os << " ";
        os << images_[i];
    }
    return os.str();
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("size mismatch");
    auto word = w.reduced_word();
    long lu = u.inversions();
    // subword property: u <= w iff some subword of a reduced word of w is a
    // reduced word of u; search right-to-left greedily over all subwords of
    // the right length via DP on reachable permutations.
    std::vector<Permutation> reachable{Permutation::identity(u.n())};
    for (size_t pos = 0; pos < word.size(); ++pos) {
        std::vector<Permutation> next = reachable;  // skip letter
        for (const auto& v : reachable) {
            Permutation v2 = v.right_mult_s(word[pos]);
            if (v2.inversions() > v.inversions()) next.push_back(v2);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reachable = std::move(next);
    }
    for (const auto& v : reachable)
        if (v == u && v.inversions() == lu) return true;
    return false;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back(Composition(std::vector<int>{}));
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> d;
        for (int i = 1; i <= n - 1; ++i)
            if (mask & (1u << (i - 1))) d.insert(i);
        out.push_back(Composition::from_descents(n, d));
    }
    return out;
}

std::vector<WeakComposition> all_weak_compositions(int n, int k) {
    std::vector<WeakComposition> out;
    std::vector<int> cur(k, 0);
    // k slots summing to n
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k) {
            if (rest == 0) out.push_back(WeakComposition(cur));
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (k == 0) {
        if (n == 0) out.push_back(WeakComposition(std::vector<int>{}));
        return out;
    }
    rec(rec, 0, n);
    return out;
}

std::vector<Permutation> min_coset_reps(int n, const std::set<int>& descents) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(n)) {
        auto dw = w.descents();
        if (std::includes(descents.begin(), descents.end(), dw.begin(), dw.end()))
            out.push_back(w);
    }
    return out;
}

std::vector<Permutation> min_coset_reps(const Composition& alpha) {
    return min_coset_reps(alpha.size(), alpha.descents());
}

std::vector<Permutation> min_coset_reps_n(const WeakComposition& alpha) {
    return min_coset_reps(alpha.size(), alpha.descent_set());
}

std::vector<Permutation> parabolic_subgroup(const Composition& alpha) {
    auto gens = alpha.complement().descents();
    int n = alpha.size();
    // positions i and i+1 share a block iff s_i is a generator; the subgroup
    // consists of the permutations moving every point within its block
    std::vector<int> block(n + 1, 0);
    for (int i = 2; i <= n; ++i)
        block[i] = block[i - 1] + (gens.count(i - 1) ? 0 : 1);
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(n)) {
        bool ok = true;
        for (int j = 1; j <= n && ok; ++j) ok = block[w(j)] == block[j];
        if (ok) out.push_back(w);
    }
    return out;
}

Permutation longest_parabolic_element(const Composition& alpha) {
    // block-reversal within the consecutive blocks of alpha^c
    int n = alpha.size();
    auto blocks = alpha.complement().parts();
    std::vector<int> v;
    int start = 1;
    for (int b : blocks) {
        for (int j = start + b - 1; j >= start; --j) v.push_back(j);
        start += b;
    }
    (void)n;
    return Permutation(v);
}

Permutation longest_element(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(v);
}

// ---------------------------------------------------------------- Multichain

Multichain::Multichain(int n, std::vector<Subset> sets)
    : n_(n), sets_(std::move(sets)) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("n out of range");
    for (size_t i = 0; i + 1 < sets_.size(); ++i)
        if (!subset_of(sets_[i], sets_[i + 1]))
            throw std::invalid_argument("sets not nested");
    for (Subset s : sets_)
        if (!subset_of(s, full_set(n)))
            throw std::invalid_argument("set exceeds ambient [n]");
}

std::vector<int> Multichain::rank_multiset() const {
    std::vector<int> r;
    for (Subset s : sets_) r.push_back(popcount(s));
    return r;
}

std::string Multichain::bar_form() const {
    if (n_ > 9) throw std::invalid_argument("bar form needs n <= 9");
    auto [alpha, sigma] = encode_multichain(*this);
    auto cuts = alpha.descent_multiset();
    std::ostringstream os;
    size_t ci = 0;
    for (int pos = 0; pos <= n_; ++pos) {
        while (ci < cuts.size() && cuts[ci] == pos) {
            os << "|";
            ++ci;
        }
        if (pos < n_) os << sigma(pos + 1);
    }
    return os.str();
}

Multichain Multichain::parse_bar_form(const std::string& text, int n) {
    std::vector<int> digits;
    std::vector<int> cuts;
    for (char c : text) {
        if (c == '|') {
            cuts.push_back(static_cast<int>(digits.size()));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c - '0');
        } else {
            throw std::invalid_argument("bad character in bar form");
        }
    }
    if (static_cast<int>(digits.size()) != n)
        throw std::invalid_argument("bar form has wrong number of digits");
    std::vector<Subset> sets;
    for (int cut : cuts) {
        Subset s = 0;
        for (int i = 0; i < cut; ++i) s |= Subset(1) << (digits[i] - 1);
        sets.push_back(s);
    }
    return Multichain(n, sets);
}

// --------------------------------------------------------------------- PWord

PWord::PWord(std::vector<int> letters, int k) : letters_(std::move(letters)), k_(k) {
    for (int p : letters_)
        if (p < 1 || p > k_ + 1)
            throw std::invalid_argument("letter outside [k+1]");
}

long PWord::inversions() const {
    long inv = 0;
    for (size_t i = 0; i < letters_.size(); ++i)
        for (size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] > letters_[j]) ++inv;
    return inv;
}

std::set<int> PWord::descents() const {
    std::set<int> d;
    for (size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i] > letters_[i + 1]) d.insert(static_cast<int>(i) + 1);
    return d;
}

std::vector<int> PWord::pprime() const {
    std::vector<int> pp(k_);
    for (int i = 1; i <= k_; ++i) {
        int c = 0;
        for (int p : letters_)
            if (p <= i) ++c;
        pp[i - 1] = c;
    }
    return pp;
}

// ----------------------------------------------------------------- encodings

std::pair<WeakComposition, Permutation> encode_multichain(const Multichain& m) {
    int n = m.n();
    std::vector<int> alpha;
    std::vector<int> word;
    Subset prev = 0;
    for (Subset s : m.sets()) {
        alpha.push_back(popcount(s) - popcount(prev));
        for (int e : subset_elements(s & ~prev)) word.push_back(e);
        prev = s;
    }
    alpha.push_back(n - popcount(prev));
    for (int e : subset_elements(full_set(n) & ~prev)) word.push_back(e);
    return {WeakComposition(alpha), Permutation(word)};
}

Multichain decode_multichain(const WeakComposition& alpha,
                             const Permutation& sigma, int k) {
    if (alpha.length() != k + 1)
        throw std::invalid_argument("alpha must have length k+1");
    if (alpha.size() != sigma.n())
        throw std::invalid_argument("size mismatch");
    std::vector<Subset> sets;
    int prefix = 0;
    for (int i = 0; i < k; ++i) {
        prefix += alpha.parts()[i];
        Subset s = 0;
        for (int j = 1; j <= prefix; ++j) s |= Subset(1) << (sigma(j) - 1);
        sets.push_back(s);
    }
    return Multichain(sigma.n(), sets);
}

PWord pword(const Multichain& m) {
    int k = m.length();
    std::vector<int> letters(m.n(), k + 1);
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 0; j < k; ++j) {
            if (m.sets()[j] & (Subset(1) << (i - 1))) {
                letters[i - 1] = j + 1;
                break;
            }
        }
    }
    return PWord(letters, k);
}

Multichain pword_decode(const PWord& p, int n, int k) {
    if (p.n() != n || p.k() != k)
        throw std::invalid_argument("word shape mismatch");
    std::vector<Subset> sets(k, 0);
    for (int j = 1; j <= k; ++j) {
        Subset s = 0;
        for (int i = 1; i <= n; ++i)
            if (p.letters()[i - 1] <= j) s |= Subset(1) << (i - 1);
        sets[j - 1] = s;
    }
    return Multichain(n, sets);
}

std::vector<Multichain> all_multichains(int n, int k) {
    std::vector<Multichain> out;
    std::vector<int> letters(n, 1);
    while (true) {
        out.push_back(pword_decode(PWord(letters, k), n, k));
        int pos = n - 1;
        while (pos >= 0 && letters[pos] == k + 1) {
            letters[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++letters[pos];
    }
    if (n == 0) out.assign(1, Multichain(0, std::vector<Subset>(k, 0)));
    return out;
}

}  // namespace srhecke
