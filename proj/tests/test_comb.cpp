#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "grex/comb.hpp"

using namespace grex;

TEST_CASE("chord crossing") {
    CHECK(chords_cross(Chord(4, 1, 3), Chord(4, 2, 4)));
    CHECK_FALSE(chords_cross(Chord(6, 1, 2), Chord(6, 3, 4)));
    CHECK_FALSE(chords_cross(Chord(6, 1, 3), Chord(6, 3, 5)));
}

TEST_CASE("weak separation basics") {
    CHECK_FALSE(weakly_separated(KSubset(4, {1, 3}), KSubset(4, {2, 4})));
    CHECK(weakly_separated(KSubset(6, {1, 2}), KSubset(6, {3, 4})));
    KSubset same(6, {2, 4, 6});
    CHECK(weakly_separated(same, same));
    // symmetry on a sample
    for (auto& I : all_ksubsets(3, 6))
        for (auto& J : all_ksubsets(3, 6)) CHECK(weakly_separated(I, J) == weakly_separated(J, I));
}

TEST_CASE("zig-zag triangulations") {
    auto t38 = zigzag_triangulation(3, 8);
    std::vector<Chord> want{Chord(8, 5, 7), Chord(8, 5, 8), Chord(8, 4, 8), Chord(8, 4, 1), Chord(8, 1, 3)};
    CHECK(t38.internal_chords == want);
    CHECK(triangulation_valid(t38));

    auto t25 = zigzag_triangulation(2, 5);
    CHECK(t25.internal_chords.size() == 2);
    CHECK(triangulation_valid(t25));

    auto t36 = zigzag_triangulation(3, 6);
    std::vector<Chord> want36{Chord(6, 3, 5), Chord(6, 3, 6), Chord(6, 2, 6)};
    CHECK(t36.internal_chords == want36);
}

TEST_CASE("grid labels match the known figures") {
    auto L = akn_labels(3, 8);
    std::set<KSubset> got;
    for (auto& K : L.flat()) got.insert(K);
    std::set<KSubset> want{
        KSubset(8, {5, 7, 8}), KSubset(8, {1, 5, 8}), KSubset(8, {1, 4, 8}), KSubset(8, {1, 2, 4}),
        KSubset(8, {5, 6, 8}), KSubset(8, {4, 5, 8}), KSubset(8, {1, 4, 5}), KSubset(8, {1, 3, 4})};
    CHECK(got == want);
    // row-major positions
    CHECK(L.grid[0][0] == KSubset(8, {5, 7, 8}));
    CHECK(L.grid[1][3] == KSubset(8, {1, 3, 4}));

    auto L36 = akn_labels(3, 6);
    CHECK(L36.grid[0][0] == KSubset(6, {3, 5, 6}));
    CHECK(L36.grid[0][1] == KSubset(6, {1, 3, 6}));
    CHECK(L36.grid[1][0] == KSubset(6, {3, 4, 6}));
    CHECK(L36.grid[1][1] == KSubset(6, {2, 3, 6}));
}

TEST_CASE("label sweep: weak separation and cardinality") {
    for (int k = 2; k <= 4; ++k) {
        for (int n = k + 2; n <= 10; ++n) {
            auto L = akn_labels(k, n);
            std::vector<KSubset> all = L.flat();
            for (auto& f : L.frozen) all.push_back(f);
            CHECK(static_cast<int>(all.size()) == k * (n - k) + 1);
            std::set<KSubset> dedup(all.begin(), all.end());
            CHECK(dedup.size() == all.size());
            CHECK(pairwise_weakly_separated(all));
        }
    }
}

TEST_CASE("k=2 labels are triangulation chords") {
    for (int n = 4; n <= 10; ++n) {
        auto L = akn_labels(2, n);
        auto t = zigzag_triangulation(2, n);
        std::set<KSubset> got, want;
        for (auto& K : L.flat()) got.insert(K);
        for (auto& c : t.internal_chords) want.insert(KSubset(n, {c.a, c.b}));
        CHECK(got == want);
    }
}

TEST_CASE("closed-form label variant is recorded but differs") {
    // the chord endpoints produced by the closed form do not reproduce the
    // chain-rule chords for (3,8); we keep the comparison as a report
    auto closed = akn_labels_closed_form_chords(3, 8);
    CHECK(closed.size() == 8);
    std::set<std::pair<int, int>> chain;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 4; ++j) {
            auto [u, v] = zigzag_chord(3, 8, i + j - 1);
            chain.insert({u, v});
        }
    bool all_match = true;
    for (auto& [u, v] : closed)
        if (!chain.count({u, v}) && !chain.count({v, u})) all_match = false;
    CHECK_FALSE(all_match);
}

TEST_CASE("unique exchange inside the octagon") {
    // the quadrilateral 2-4-6-8 with chord 48 present
    int n = 8;
    std::vector<KSubset> labels;
    for (auto c : {std::pair{2, 4}, {4, 6}, {6, 8}, {2, 8}, {4, 8}}) labels.push_back(KSubset(n, {c.first, c.second}));
    WSCollection col;
    col.k = 2;
    col.n = n;
    col.labels = labels;
    for (auto& f : boundary_intervals(2, n)) {
        col.labels.push_back(f);
        col.frozen.push_back(f);
    }
    REQUIRE(pairwise_weakly_separated(col.labels));
    auto r = unique_exchange(col, KSubset(n, {4, 8}));
    CHECK(r.partner == KSubset(n, {2, 6}));
    std::set<KSubset> first{r.first.first, r.first.second}, second{r.second.first, r.second.second};
    std::set<KSubset> wantf{KSubset(n, {2, 4}), KSubset(n, {6, 8})};
    std::set<KSubset> wants{KSubset(n, {2, 8}), KSubset(n, {4, 6})};
    bool ok = (first == wantf && second == wants) || (first == wants && second == wantf);
    CHECK(ok);
}

TEST_CASE("maximal weakly separated collections at desk scale") {
    auto c25 = enumerate_maximal_ws(2, 5);
    CHECK(c25.size() == 5);
    for (auto& c : c25) CHECK(c.labels.size() == 7);

    auto c26 = enumerate_maximal_ws(2, 6);
    CHECK(c26.size() == 14);
    for (auto& c : c26) CHECK(c.labels.size() == 9);

    auto c36 = enumerate_maximal_ws(3, 6);
    for (auto& c : c36) CHECK(c.labels.size() == 10);
    CHECK(c36.size() > 1);
}

TEST_CASE("triangulation seeds") {
    Registry reg(2, 6);
    Seed s = triangulation_seed(fan_triangulation(6), reg);
    CHECK(s.rank() == 3);
    CHECK(s.mat.principal_skew_symmetric());

    // random flip walks from the fan, n up to 12
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        Triangulation t = fan_triangulation(n);
        auto has = [&](int a, int b) {
            if (mod1(a + 1, n) == b || mod1(b + 1, n) == a) return true;  // boundary
            return std::find(t.internal_chords.begin(), t.internal_chords.end(), Chord(n, a, b)) !=
                   t.internal_chords.end();
        };
        for (int step = 0; step < 20; ++step) {
            std::size_t ci = rng() % t.internal_chords.size();
            Chord c = t.internal_chords[ci];
            std::vector<int> xs;
            for (int x = 1; x <= n; ++x)
                if (x != c.a && x != c.b && has(c.a, x) && has(x, c.b)) xs.push_back(x);
            REQUIRE(xs.size() == 2);
            t.internal_chords[ci] = Chord(n, xs[0], xs[1]);
        }
        REQUIRE(triangulation_valid(t));
        Registry r2(2, n);
        Seed st = triangulation_seed(t, r2);
        CHECK(st.mat.principal_skew_symmetric());
    }
}

TEST_CASE("initial seeds across the sweep") {
    for (int k = 2; k <= 4; ++k) {
        for (int n = k + 2; n <= 9; ++n) {
            Registry reg(k, n);
            Seed s = build_initial_seed(k, n, reg);
            CHECK(s.mat.principal_skew_symmetric());
            CHECK(s.rank() == (k - 1) * (n - k - 1));
            for (int c = 0; c < s.rank(); ++c) {
                int plus = 0, minus = 0;
                for (int r = 0; r < s.mat.nrows(); ++r) {
                    if (s.mat.e[r][c] == 1) ++plus;
                    if (s.mat.e[r][c] == -1) ++minus;
                    CHECK(std::abs(s.mat.e[r][c]) <= 1);
                }
                CHECK(plus == 2);
                CHECK(minus == 2);
            }
        }
    }
}

TEST_CASE("double reduced words") {
    auto w3 = double_reduced_word(3);
    CHECK(w3.W == std::vector<int>{2, 1, 2, 1, 2, 1});
    auto w4 = double_reduced_word(4);
    CHECK(w4.W == std::vector<int>{2, 3, 2, 1, 2, 3, 1, 2, 3, 2, 1, 2});
    for (int k = 2; k <= 8; ++k) {
        auto w = double_reduced_word(k);  // internally asserts reducedness
        CHECK(static_cast<int>(w.R.size()) == k * (k - 1) / 2);
        CHECK(w.W.size() == 2 * w.R.size());
    }
}

TEST_CASE("grassmann permutation") {
    GrassmannPermutation pi(3, 8);
    CHECK(pi(1) == 4);
    CHECK(pi(6) == 1);
    CHECK(pi(8) == 3);
}
