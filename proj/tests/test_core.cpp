#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "grex/classify.hpp"
#include "grex/comb.hpp"
#include "grex/figures.hpp"
#include "grex/seed.hpp"

using namespace grex;

TEST_CASE("local mutation fixture") {
    // rows/cols ordered [Iisv, Iijv, Iitv, Ijsv, Ijtv]; the 3x3 tail block is
    // unspecified in the source and set to zero here -- the pinned entries are
    // the first two rows and columns.
    ExtMatrix m;
    m.ncols = 5;
    for (int i = 0; i < 5; ++i) m.rows.push_back(anon_var(i));
    m.e = {{0, 1, 0, 0, 0}, {-1, 0, 1, 1, -1}, {0, -1, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 1, 0, 0, 0}};
    REQUIRE(m.principal_skew_symmetric());
    ExtMatrix r = matrix_mutate(m, 1);
    CHECK(r.e[0] == std::vector<int>{0, -1, 1, 1, 0});
    CHECK(r.e[1] == std::vector<int>{1, 0, -1, -1, 1});
    CHECK(r.e[2][0] == -1);
    CHECK(r.e[2][1] == 1);
    CHECK(r.e[3][0] == -1);
    CHECK(r.e[3][1] == 1);
    CHECK(r.e[4][0] == 0);
    CHECK(r.e[4][1] == -1);
    CHECK(r.principal_skew_symmetric());
}

TEST_CASE("zero matrix is fixed by mutation") {
    ExtMatrix m;
    m.ncols = 3;
    for (int i = 0; i < 3; ++i) m.rows.push_back(anon_var(i));
    m.e.assign(3, std::vector<int>(3, 0));
    for (int z = 0; z < 3; ++z) CHECK(matrix_mutate(m, z).e == m.e);
}

TEST_CASE("matrix mutation is an involution") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        int N = 2 + static_cast<int>(rng() % 4);
        int M = N + static_cast<int>(rng() % 3);
        ExtMatrix m;
        m.ncols = N;
        for (int i = 0; i < M; ++i) m.rows.push_back(anon_var(i));
        m.e.assign(M, std::vector<int>(N, 0));
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                m.e[i][j] = entry(rng);
                m.e[j][i] = -m.e[i][j];
            }
        for (int i = N; i < M; ++i)
            for (int j = 0; j < N; ++j) m.e[i][j] = entry(rng);
        int z = static_cast<int>(rng() % N);
        CHECK(matrix_mutate(matrix_mutate(m, z), z).e == m.e);
    }
}

TEST_CASE("skew-symmetrizability") {
    auto sym = check_skew_symmetrizable({{0, 1}, {-1, 0}});
    REQUIRE(sym.has_value());
    CHECK(*sym == std::vector<Int>{Int(1), Int(1)});

    auto d = check_skew_symmetrizable({{0, 1}, {-2, 0}});
    REQUIRE(d.has_value());
    CHECK(*d == std::vector<Int>{Int(2), Int(1)});

    CHECK_FALSE(check_skew_symmetrizable({{0, 1}, {1, 0}}).has_value());
}

TEST_CASE("quadrilateral flip is a three-term exchange") {
    Registry reg(2, 8);
    // octagon triangulated with chords 24, 46, 68, 28, 48
    Triangulation t;
    t.n = 8;
    for (auto [a, b] : {std::pair{2, 4}, {4, 6}, {6, 8}, {2, 8}, {4, 8}}) t.internal_chords.push_back(Chord(8, a, b));
    REQUIRE(triangulation_valid(t));
    Seed s = triangulation_seed(t, reg);
    int pos = -1;
    for (int i = 0; i < s.rank(); ++i)
        if (s.cluster[i] == pluecker_var({4, 8})) pos = i;
    REQUIRE(pos >= 0);
    Seed s2 = seed_mutate(s, pos, reg);
    CHECK(s2.cluster[pos] == pluecker_var({2, 6}));
    // and the relation: value(26) = (d28 d46 + d24 d68) / d48
    const auto& rel = reg.relations.back();
    std::set<std::uint64_t> zs{rel.z.v, rel.zp.v};
    CHECK(zs == std::set<std::uint64_t>{pluecker_var({4, 8}).v, pluecker_var({2, 6}).v});

    // mutating back restores the cluster
    Seed s3 = seed_mutate(s2, pos, reg);
    CHECK(cluster_key(s3) == cluster_key(s));
    CHECK(canonical_matrix(s3) == canonical_matrix(s));
}

TEST_CASE("hexagon exploration closes") {
    Registry reg(2, 6);
    Seed s0 = build_initial_seed(2, 6, reg);
    auto g = explore(s0, reg);
    CHECK(g.closed);
    CHECK(g.seeds.size() == 14);
    // 9 mutable variables, 6 coefficients
    CHECK(reg.size() == 9 + 6);
    int pluecker = 0;
    for (VarId v : reg.all_variables())
        if (v.is_pluecker()) ++pluecker;
    CHECK(pluecker == 15);  // every variable is a chord
}

TEST_CASE("mutations out of the small grid stay Pluecker") {
    Registry reg(3, 6);
    Seed s0 = build_initial_seed(3, 6, reg);
    for (int i = 0; i < s0.rank(); ++i) {
        Seed t = seed_mutate(s0, i, reg);
        CHECK(t.cluster[i].is_pluecker());
    }
}

TEST_CASE("small grid exploration and the exotic pair") {
    Registry reg(3, 6);
    Seed s0 = build_initial_seed(3, 6, reg);
    auto g = explore(s0, reg);
    CHECK(g.closed);
    CHECK(g.seeds.size() == 50);
    int mut_total = static_cast<int>(reg.size()) - 6;  // minus coefficients
    CHECK(mut_total == 16);
    int pluecker = 0, anon = 0;
    for (VarId v : reg.all_variables()) {
        if (std::find(s0.coeffs.begin(), s0.coeffs.end(), v) != s0.coeffs.end()) continue;
        (v.is_pluecker() ? pluecker : anon)++;
    }
    CHECK(pluecker == 14);
    CHECK(anon == 2);

    // one of the two exotic variables factors as d236 d145 - d123 d456
    auto val = [&](std::initializer_list<int> K) { return reg.value(pluecker_var(std::vector<int>(K))); };
    LaurentPoly y = lp_sub(lp_mul(val({2, 3, 6}), val({1, 4, 5})), lp_mul(val({1, 2, 3}), val({4, 5, 6})));
    bool found = false;
    for (VarId v : reg.all_variables())
        if (v.is_anon() && reg.value(v) == y) found = true;
    CHECK(found);
}

TEST_CASE("published sequence reaches the 4-vertex tree") {
    Registry reg(3, 6);
    Seed s0 = build_initial_seed(3, 6, reg);
    auto g = explore(s0, reg);
    auto [figure, numbering] = locate_figure_seed(g, 6);
    Seed dynkin = run_mutation_sequence(figure, figure_mutation_sequence(6), numbering, reg);
    auto spec = recognize_dynkin(Quiver::of(dynkin.mat));
    REQUIRE(spec.has_value());
    CHECK(spec->name == "D4");
    CHECK(bipartite_orientation(Quiver::of(dynkin.mat)));

    // empty sequence is the identity
    Seed same = run_mutation_sequence(figure, {}, numbering, reg);
    CHECK(cluster_key(same) == cluster_key(figure));

    CHECK_THROWS_AS(run_mutation_sequence(figure, {9}, numbering, reg), BadIndexError);
}

TEST_CASE("exchange-graph sizes for the polygon cases") {
    int catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 5; n <= 8; ++n) {
        Registry reg(2, n);
        Seed s0 = build_initial_seed(2, n, reg);
        auto g = explore(s0, reg);
        CHECK(g.closed);
        CHECK(static_cast<int>(g.seeds.size()) == catalan[n - 2]);
        CHECK(static_cast<int>(reg.size()) - n == n * (n - 3) / 2);
    }
}

TEST_CASE("caps stop exploration without closing") {
    Registry reg(2, 8);
    Seed s0 = build_initial_seed(2, 8, reg);
    ExploreCaps caps;
    caps.max_seeds = 5;
    auto g = explore(s0, reg, caps);
    CHECK_FALSE(g.closed);
    CHECK(g.seeds.size() <= 5);
}
