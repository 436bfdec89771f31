#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "comb.hpp"
#include "numeric.hpp"
#include "seed.hpp"

namespace grex {

struct NotCrossing : std::runtime_error {
    NotCrossing() : std::runtime_error("{i,j} and {s,t} must interleave") {}
};

struct Report {
    std::string check;
    std::string params;
    int trials = 0;
    int failures = 0;
    std::string witness;  // first failing instance, if any

    bool pass() const { return failures == 0; }
    void fail(const std::string& w) {
        if (failures == 0) witness = w;
        ++failures;
    }
};

// ---- point-level Pluecker checks -------------------------------------------

// All short three-term relations on an explicit assignment of minors.
inline Report verify_plucker_values(int k, int n, const std::unordered_map<std::uint64_t, Rat>& vals) {
    Report rep;
    rep.check = "plucker-three-term";
    rep.params = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
    auto value = [&](std::vector<int> K) {
        std::sort(K.begin(), K.end());
        return vals.at(pluecker_var(K).v);
    };
    // I runs over (k-2)-subsets, x1<x2<x3<x4 disjoint from I
    std::vector<int> I(k - 2), X(4);
    std::function<void(int, int)> pickI = [&](int pos, int start) {
        if (pos == k - 2) {
            std::function<void(int, int)> pickX = [&](int xp, int xs) {
                if (xp == 4) {
                    auto with = [&](int a, int b) {
                        std::vector<int> K = I;
                        K.push_back(a);
                        K.push_back(b);
                        return value(K);
                    };
                    ++rep.trials;
                    Rat lhs = with(X[0], X[2]) * with(X[1], X[3]);
                    Rat rhs = with(X[0], X[1]) * with(X[2], X[3]) + with(X[0], X[3]) * with(X[1], X[2]);
                    if (lhs != rhs)
                        rep.fail("I+{" + std::to_string(X[0]) + "," + std::to_string(X[1]) + "," +
                                 std::to_string(X[2]) + "," + std::to_string(X[3]) + "}");
                    return;
                }
                for (int x = xs; x <= n; ++x) {
                    bool used = false;
                    for (int y : I)
                        if (y == x) used = true;
                    if (used) continue;
                    X[xp] = x;
                    pickX(xp + 1, x + 1);
                }
            };
            pickX(0, 1);
            return;
        }
        for (int x = start; x <= n; ++x) {
            I[pos] = x;
            pickI(pos + 1, x + 1);
        }
    };
    pickI(0, 1);
    return rep;
}

inline Report verify_plucker_point(const ConfigMatrix& m) {
    return verify_plucker_values(m.k, m.n, all_minors(m));
}

// ---- exchange relations on random points ------------------------------------

inline Rat evaluate_variable(VarId v, const Registry& reg, const ConfigMatrix& point) {
    auto vals = all_minors(point);
    try {
        return lp_eval(reg.value(v), vals);
    } catch (const ZeroToNegativePower&) {
        throw ChartSingular();
    }
}

// z * zp == prod(plus) + prod(minus), evaluated through the registry's
// expansions on random full-rank matrices.
inline Report verify_exchange_on_points(const Registry& reg, const ExchangeRelation& rel, int trials,
                                        std::uint64_t rng_seed) {
    Report rep;
    rep.check = "exchange-on-points";
    rep.params = rel.z.to_string() + "*" + rel.zp.to_string();
    Rng rng(rng_seed);
    for (int t = 0; t < trials; ++t) {
        ConfigMatrix m = random_full_rank_matrix(reg.k, reg.n, rng);
        auto vals = all_minors(m);
        auto eval = [&](VarId v) { return lp_eval(reg.value(v), vals); };
        try {
            Rat lhs = eval(rel.z) * eval(rel.zp);
            Rat rhs(1), other(1);
            for (auto& [v, e] : rel.plus) rhs *= rat_pow(eval(v), e);
            for (auto& [v, e] : rel.minus) other *= rat_pow(eval(v), e);
            ++rep.trials;
            if (lhs != rhs + other) rep.fail("trial " + std::to_string(t));
        } catch (const ZeroToNegativePower&) {
            --t;  // chart-singular draw; redraw
        }
    }
    return rep;
}

// ---- compound determinants ---------------------------------------------------

inline Report verify_compound_determinants(int trials, std::uint64_t rng_seed) {
    Report rep;
    rep.check = "compound-determinants";
    Rng rng(rng_seed);
    auto fn_eval = [&](char name, const std::vector<int>& idx, const ConfigMatrix& m) {
        return lp_eval(special_function(name, idx), all_minors(m));
    };
    for (int t = 0; t < trials; ++t) {
        ConfigMatrix m6 = random_full_rank_matrix(3, 6, rng);
        auto v = [&](int j) { return column(m6, j); };
        ++rep.trials;
        if (fn_eval('Y', {1, 2, 3, 4, 5, 6}, m6) !=
            triple(cross(v(6), v(1)), cross(v(2), v(3)), cross(v(4), v(5))))
            rep.fail("Y trial " + std::to_string(t));
        ++rep.trials;
        if (fn_eval('X', {1, 2, 3, 4, 5, 6}, m6) !=
            triple(cross(v(1), v(2)), cross(v(3), v(4)), cross(v(5), v(6))))
            rep.fail("X trial " + std::to_string(t));
        ConfigMatrix m8 = random_full_rank_matrix(3, 8, rng);
        auto w = [&](int j) { return column(m8, j); };
        ++rep.trials;
        // A is proportional to det(p q v5) with p, q the two auxiliary
        // intersection points; exact evaluation pins the scale to -1, i.e.
        // A = det(p, v5, q).
        if (fn_eval('A', {1, 2, 3, 4, 5, 6, 7, 8}, m8) !=
            triple(cross(cross(w(1), w(2)), cross(w(3), w(4))), w(5),
                   cross(cross(w(1), w(8)), cross(w(6), w(7)))))
            rep.fail("A trial " + std::to_string(t));
    }
    return rep;
}

// ---- toric chart round-trip --------------------------------------------------

// Evaluate every chart coordinate at `point`, reconstruct all maximal minors
// from the Laurent expansions at those values, and compare with the minors of
// the point itself.
inline Report toric_roundtrip(const Registry& reg, const ConfigMatrix& point) {
    Report rep;
    rep.check = "toric-roundtrip";
    rep.params = "k=" + std::to_string(reg.k) + ",n=" + std::to_string(reg.n);
    auto minors = all_minors(point);
    std::unordered_map<std::uint64_t, Rat> chart;
    for (VarId v : reg.initial_variables()) {
        Rat x = minors.at(v.v);
        if (x == 0) throw ChartSingular();
        chart[v.v] = x;
    }
    for (auto& S : all_ksubsets(reg.k, reg.n)) {
        VarId p = pluecker_var(S);
        ++rep.trials;
        if (lp_eval(reg.value(p), chart) != minors.at(p.v)) rep.fail(p.to_string());
    }
    return rep;
}

// Arbitrary positive chart values (not coming from a point): the
// reconstructed minors must still satisfy every three-term relation.
inline Report toric_relations_from_chart(const Registry& reg, Rng& rng) {
    std::unordered_map<std::uint64_t, Rat> chart;
    for (VarId v : reg.initial_variables()) chart[v.v] = rng.positive_rat();
    std::unordered_map<std::uint64_t, Rat> vals;
    for (auto& S : all_ksubsets(reg.k, reg.n)) {
        VarId p = pluecker_var(S);
        vals[p.v] = lp_eval(reg.value(p), chart);
    }
    Report rep = verify_plucker_values(reg.k, reg.n, vals);
    rep.check = "toric-chart-relations";
    return rep;
}

// ---- Schur analogue ----------------------------------------------------------

namespace detail {
// Bialternant s_lambda(xs): det(x_i^(lambda_j + m - j)) / det(x_i^(m - j)),
// lambda weakly decreasing, padded to m = |xs| parts; zero when lambda has
// more than m nonzero parts.
inline Rat schur_eval(std::vector<int> lambda, const std::vector<Rat>& xs) {
    const int m = static_cast<int>(xs.size());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (static_cast<int>(lambda.size()) > m) return Rat(0);
    lambda.resize(m, 0);
    std::vector<std::vector<Rat>> num(m, std::vector<Rat>(m)), den(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            num[i][j] = rat_pow(xs[i], lambda[j] + m - 1 - j);
            den[i][j] = rat_pow(xs[i], m - 1 - j);
        }
    return det(num) / det(den);
}

inline std::vector<int> partition_of(std::vector<int> J) {
    std::sort(J.begin(), J.end());
    std::vector<int> lambda;
    for (std::size_t r = 0; r < J.size(); ++r) lambda.push_back(J[r] - static_cast<int>(r) - 1);
    std::reverse(lambda.begin(), lambda.end());  // weakly decreasing
    return lambda;
}
}  // namespace detail

inline Report verify_schur_analogue(const std::vector<int>& I, int i, int j, int s, int t,
                                    int variable_count, int trials, std::uint64_t rng_seed) {
    // sorted crossing pattern: i < s < j < t after normalization
    std::vector<int> X{i, j, s, t};
    std::sort(X.begin(), X.end());
    bool crossing = (std::min(i, j) == X[0] && std::max(i, j) == X[2]) ||
                    (std::min(s, t) == X[0] && std::max(s, t) == X[2]);
    if (!crossing) throw NotCrossing();
    for (int x : X)
        for (int y : I)
            if (x == y) throw NotCrossing();

    Report rep;
    rep.check = "schur-analogue";
    Rng rng(rng_seed);
    auto S = [&](std::vector<int> extra, const std::vector<Rat>& xs) {
        std::vector<int> J = I;
        for (int e : extra) J.push_back(e);
        return detail::schur_eval(detail::partition_of(J), xs);
    };
    for (int trial = 0; trial < trials; ++trial) {
        // distinct positive sample points keep the Vandermonde nonsingular
        std::vector<Rat> xs;
        while (static_cast<int>(xs.size()) < variable_count) {
            Rat c = rng.positive_rat() + Rat(rng.uniform(0, 40));
            if (std::find(xs.begin(), xs.end(), c) == xs.end()) xs.push_back(c);
        }
        ++rep.trials;
        Rat lhs = S({X[0], X[2]}, xs) * S({X[1], X[3]}, xs);
        Rat rhs = S({X[0], X[1]}, xs) * S({X[2], X[3]}, xs) + S({X[0], X[3]}, xs) * S({X[1], X[2]}, xs);
        if (lhs != rhs) rep.fail("trial " + std::to_string(trial));
    }
    return rep;
}

// ---- positivity --------------------------------------------------------------

// Every registry variable positive at every supplied totally positive point.
inline Report verify_positivity(const Registry& reg, const std::vector<ConfigMatrix>& points) {
    Report rep;
    rep.check = "positivity";
    rep.params = "k=" + std::to_string(reg.k) + ",n=" + std::to_string(reg.n);
    for (auto& p : points) {
        auto vals = all_minors(p);
        for (VarId v : reg.all_variables()) {
            ++rep.trials;
            if (lp_eval(reg.value(v), vals) <= 0) rep.fail(v.to_string());
        }
    }
    return rep;
}

// All Laurent-expansion coefficients positive (numerator positivity).
inline Report verify_numerator_positivity(const Registry& reg) {
    Report rep;
    rep.check = "numerator-positivity";
    rep.params = "k=" + std::to_string(reg.k) + ",n=" + std::to_string(reg.n);
    for (VarId v : reg.all_variables()) {
        ++rep.trials;
        bool ok = true;
        for (auto& [m, c] : reg.value(v).t)
            if (c <= 0) ok = false;
        if (!ok) rep.fail(v.to_string());
    }
    return rep;
}

}  // namespace grex
