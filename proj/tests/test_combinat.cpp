#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "srhecke/combinat.hpp"

using namespace srhecke;

TEST_CASE("composition basics") {
    Composition a = Composition::parse("2,3,1,1");
    CHECK(a.size() == 7);
    CHECK(a.descents() == std::set<int>{2, 5, 6});
    CHECK(a.maj() == 13);
    CHECK(a.complement() == Composition::parse("1,2,1,3"));
    CHECK(a.transpose() == Composition::parse("3,1,2,1"));
    CHECK(a.reversed() == Composition::parse("1,1,3,2"));
    CHECK(a.complement().complement() == a);
    CHECK(a.transpose().transpose() == a);
    CHECK(Composition::from_descents(7, a.descents()) == a);
    CHECK(Composition::parse("2,1").concat(Composition::parse("3")) ==
          Composition::parse("2,1,3"));
    CHECK(Composition::parse("2,1").near_concat(Composition::parse("3")) ==
          Composition::parse("2,4"));
    CHECK(refines(Composition::parse("4"), Composition::parse("2,2")));
    CHECK(!refines(Composition::parse("1,3"), Composition::parse("2,2")));
}

TEST_CASE("composition enumeration and involutions") {
    for (int n = 1; n <= 6; ++n) {
        auto all = all_compositions(n);
        CHECK(static_cast<int>(all.size()) == (1 << (n - 1)));
        for (const Composition& a : all) {
            CHECK(a.complement().complement() == a);
            CHECK(a.transpose() == a.complement().reversed());
            std::set<int> dc;
            for (int i = 1; i < n; ++i)
                if (!a.descents().count(i)) dc.insert(i);
            CHECK(a.complement().descents() == dc);
        }
    }
}

TEST_CASE("weak composition descents") {
    WeakComposition a({2, 5, 1, 2, 4});
    CHECK(a.size() == 14);
    CHECK(a.descent_multiset() == std::vector<int>{2, 7, 8, 10});
    CHECK(a.underlying() == Composition::parse("2,5,1,2,4"));
    WeakComposition b({0, 2, 0, 1});
    CHECK(b.descent_multiset() == std::vector<int>{0, 2, 2});
    CHECK(b.underlying() == Composition::parse("2,1"));
}

TEST_CASE("permutation statistics and products") {
    CHECK_THROWS(Permutation(std::vector<int>{1, 1}));
    Permutation w = Permutation::parse("3 1 4 2");
    CHECK(w.inversions() == 3);
    CHECK(w.descents() == std::set<int>{1, 3});
    CHECK(w.maj() == 4);
    CHECK(w.inverse() == Permutation::parse("2 4 1 3"));
    CHECK(w.compose(w.inverse()) == Permutation::identity(4));
    CHECK(w.left_mult_s(2) == Permutation::parse("2 1 4 3"));
    CHECK(w.right_mult_s(2) == Permutation::parse("3 4 1 2"));
    for (const Permutation& u : all_permutations(4)) {
        auto word = u.reduced_word();
        CHECK(static_cast<long>(word.size()) == u.inversions());
        Permutation v = Permutation::identity(4);
        for (int i : word) v = v.right_mult_s(i);
        CHECK(v == u);
        CHECK(u.maj() == u.inverse().inverse().maj());
    }
}

TEST_CASE("bruhat order sanity") {
    CHECK(bruhat_leq(Permutation::identity(3), Permutation::parse("3 2 1")));
    for (const Permutation& u : all_permutations(4))
        for (const Permutation& w : all_permutations(4)) {
            if (bruhat_leq(u, w)) CHECK(u.inversions() <= w.inversions());
            if (u == w) CHECK(bruhat_leq(u, w));
        }
    // counting: #{u <= w} for the longest element is n!
    int count = 0;
    for (const Permutation& u : all_permutations(4))
        if (bruhat_leq(u, longest_element(4))) ++count;
    CHECK(count == 24);
}

TEST_CASE("parabolic structure") {
    Composition a = Composition::parse("2,2");
    // parabolic subgroup generated by s_i for i in D(a^c) = {1,3}
    auto sub = parabolic_subgroup(a);
    CHECK(sub.size() == 4);
    Permutation w0a = longest_parabolic_element(a);
    CHECK(w0a.descents() == a.descents());
    for (int n = 2; n <= 5; ++n)
        for (const Composition& al : all_compositions(n)) {
            Permutation w0 = longest_parabolic_element(al);
            CHECK(w0.descents() == al.descents());
            // longest element of S_alpha is w0(alpha^c)
            auto grp = parabolic_subgroup(al);
            Permutation best = Permutation::identity(n);
            for (const Permutation& u : grp)
                if (u.inversions() > best.inversions()) best = u;
            CHECK(best == longest_parabolic_element(al.complement()));
            // coset reps partition the group
            auto reps = min_coset_reps(al);
            std::set<Permutation> seen;
            for (const Permutation& r : reps)
                for (const Permutation& u : grp)
                    CHECK(seen.insert(r.compose(u)).second);
            CHECK(seen.size() == all_permutations(n).size());
        }
}

TEST_CASE("multichain bar form and encoding") {
    // {2} <= {2} <= {1,2,4} <= [4], length 4
    Multichain m(4, {0b0010, 0b0010, 0b1011, 0b1111});
    CHECK(m.bar_form() == "2||14|3|");
    CHECK(Multichain::parse_bar_form("2||14|3|", 4) == m);
    auto [alpha, sigma] = encode_multichain(m);
    CHECK(sigma == Permutation::parse("2 1 4 3"));
    CHECK(alpha == WeakComposition({1, 0, 2, 1, 0}));
    CHECK(decode_multichain(alpha, sigma, 4) == m);
}

TEST_CASE("p-word example") {
    // 3|14||2|5
    Multichain m = Multichain::parse_bar_form("3|14||2|5", 5);
    PWord p = pword(m);
    CHECK(p.letters() == std::vector<int>{2, 4, 1, 2, 5});
    CHECK(p.pprime() == std::vector<int>{1, 3, 3, 4});
    CHECK(p.descents() == std::set<int>{2});
    CHECK(pword_decode(p, 5, 4) == m);
    auto [alpha, sigma] = encode_multichain(m);
    CHECK(p.inversions() == sigma.inversions());
    CHECK(PWord({2, 5, 1, 2, 4}, 4).descents() == std::set<int>{2});
}

TEST_CASE("multichain enumeration bijection") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            auto chains = all_multichains(n, k);
            long expect = 1;
            for (int j = 0; j < n; ++j) expect *= (k + 1);
            CHECK(static_cast<long>(chains.size()) == expect);
            std::set<Multichain> seen;
            for (const Multichain& m : chains) {
                CHECK(seen.insert(m).second);
                auto [alpha, sigma] = encode_multichain(m);
                CHECK(alpha.length() == k + 1);
                CHECK(alpha.size() == n);
                CHECK(decode_multichain(alpha, sigma, k) == m);
                PWord p = pword(m);
                CHECK(p.inversions() == sigma.inversions());
                CHECK(pword_decode(p, n, k) == m);
                if (n <= 9)
                    CHECK(Multichain::parse_bar_form(m.bar_form(), n) == m);
            }
            // the encoding hits every (alpha, sigma) pair
            long pairs = 0;
            for (const WeakComposition& a : all_weak_compositions(n, k + 1))
                pairs += static_cast<long>(min_coset_reps_n(a).size());
            CHECK(pairs == expect);
        }
}

TEST_CASE("coset reps are descent classes") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& a : all_compositions(n)) {
            auto reps = min_coset_reps(a);
            long count = 0;
            for (const Permutation& w : all_permutations(n)) {
                auto dw = w.descents();
                auto da = a.descents();
                if (std::includes(da.begin(), da.end(), dw.begin(), dw.end()))
                    ++count;
            }
            CHECK(static_cast<long>(reps.size()) == count);
        }
}
