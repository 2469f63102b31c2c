#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace srhecke {

/// Subsets of [n] as bitmasks; bit i-1 is element i. n is capped at 16.
using Subset = std::uint32_t;

constexpr int kMaxN = 16;

inline Subset full_set(int n) { return (Subset(1) << n) - 1; }
inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline bool comparable(Subset a, Subset b) {
    return subset_of(a, b) || subset_of(b, a);
}
int popcount(Subset s);
std::vector<int> subset_elements(Subset s);
std::string subset_str(Subset s);

/// Sequence of positive integers; descent set D = proper partial sums.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition from_descents(int n, const std::set<int>& descents);
    static Composition parse(const std::string& text);  // "2,3,1,1"

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    std::set<int> descents() const;
    int maj() const;
    Composition complement() const;
    Composition reversed() const;
    Composition transpose() const;  // reverse of complement
    Composition concat(const Composition& o) const;
    Composition near_concat(const Composition& o) const;  // last+first merged
    bool refines(const Composition& coarser) const;       // this <= coarser? no:
    // refines(beta, alpha): D(beta) subset of D(alpha), i.e. beta is coarser.

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// beta refines alpha: |beta|=|alpha| and D(beta) subset of D(alpha).
bool refines(const Composition& beta, const Composition& alpha);

/// Sequence of nonnegative integers; descent multiset lives in {0,...,n}.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Sorted with multiplicity; values in {0,...,n}.
    std::vector<int> descent_multiset() const;
    /// Underlying set intersected with [n-1] (drops 0 and n).
    std::set<int> descent_set() const;
    /// Zero parts removed; empty weak composition maps to empty composition.
    Composition underlying() const;

    bool operator==(const WeakComposition& o) const { return parts_ == o.parts_; }
    bool operator<(const WeakComposition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// One-line-notation element of S_n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation parse(const std::string& text);  // "2 1 4 3"

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation compose(const Permutation& o) const;  // this after o
    Permutation left_mult_s(int i) const;   // s_i . w (swaps values i,i+1)
    Permutation right_mult_s(int i) const;  // w . s_i (swaps positions i,i+1)

    std::set<int> descents() const;
    int des() const;
    int maj() const;
    long inversions() const;
    long length() const { return inversions(); }

    /// Greedy reduced word: w = s_{i_1} ... s_{i_k}, left factors stripped.
    std::vector<int> reduced_word() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    std::string str() const;

private:
    std::vector<int> images_;
};

/// Bruhat order via the subword property on a fixed reduced word of w.
bool bruhat_leq(const Permutation& u, const Permutation& w);

std::vector<Permutation> all_permutations(int n);
std::vector<Composition> all_compositions(int n);
std::vector<WeakComposition> all_weak_compositions(int n, int k);

/// All w in S_n with D(w) contained in the given descent set.
std::vector<Permutation> min_coset_reps(int n, const std::set<int>& descents);
std::vector<Permutation> min_coset_reps(const Composition& alpha);
std::vector<Permutation> min_coset_reps_n(const WeakComposition& alpha);

/// The parabolic subgroup S_{alpha} = <s_i : i in D(alpha^c)>.
std::vector<Permutation> parabolic_subgroup(const Composition& alpha);

/// w_0(alpha): longest element of S_{alpha^c}; satisfies D(w_0(alpha)) = D(alpha).
Permutation longest_parabolic_element(const Composition& alpha);

/// Longest element of the full group S_n.
Permutation longest_element(int n);

/// Weakly increasing sequence A_1 <= ... <= A_k of subsets of [n].
class Multichain {
public:
    Multichain() = default;
    Multichain(int n, std::vector<Subset> sets);

    static Multichain parse_bar_form(const std::string& text, int n);

    int n() const { return n_; }
    int length() const { return static_cast<int>(sets_.size()); }
    const std::vector<Subset>& sets() const { return sets_; }

    /// Rank multiset: cardinalities of the entries, in chain order.
    std::vector<int> rank_multiset() const;

    std::string bar_form() const;  // digits only; requires n <= 9

    bool operator==(const Multichain& o) const {
        return n_ == o.n_ && sets_ == o.sets_;
    }
    bool operator<(const Multichain& o) const {
        return std::pair(n_, sets_) < std::pair(o.n_, o.sets_);
    }

private:
    int n_ = 0;
    std::vector<Subset> sets_;
};

/// Word encoding of a multichain: p_i = first chain index containing i.
class PWord {
public:
    PWord() = default;
    PWord(std::vector<int> letters, int k);

    const std::vector<int>& letters() const { return letters_; }
    int n() const { return static_cast<int>(letters_.size()); }
    int k() const { return k_; }

    long inversions() const;
    std::set<int> descents() const;
    /// p'_i = #{j : p_j <= i} for i in [k].
    std::vector<int> pprime() const;

    bool operator==(const PWord& o) const {
        return k_ == o.k_ && letters_ == o.letters_;
    }

private:
    std::vector<int> letters_;
    int k_ = 0;
};

/// (alpha(M), sigma(M)): block-size weak composition and minimal coset rep.
std::pair<WeakComposition, Permutation> encode_multichain(const Multichain& m);
Multichain decode_multichain(const WeakComposition& alpha,
                             const Permutation& sigma, int k);

PWord pword(const Multichain& m);
Multichain pword_decode(const PWord& p, int n, int k);

/// All multichains of length k in B_n (via the [k+1]^n word bijection).
std::vector<Multichain> all_multichains(int n, int k);

}  // namespace srhecke
