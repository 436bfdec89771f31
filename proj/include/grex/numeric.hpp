#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ksubset.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace grex {

struct BadIndex : std::runtime_error {
    explicit BadIndex(const std::string& w) : std::runtime_error("bad index: " + w) {}
};
struct ChartSingular : std::runtime_error {
    ChartSingular() : std::runtime_error("a chart coordinate vanishes at this point") {}
};
struct ParametersNotIncreasing : std::runtime_error {
    ParametersNotIncreasing() : std::runtime_error("parameters must be strictly increasing and positive") {}
};

// ---- deterministic RNG ------------------------------------------------------

// splitmix64; the single PRNG primitive used everywhere for reproducibility.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // derive an independent stream deterministically
    Rng split(std::uint64_t tag) { return Rng(next() ^ (tag * 0xd1342543de82ef95ULL)); }

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat rat() { return Rat(uniform(-9, 9), uniform(1, 9)); }
    Rat positive_rat() { return Rat(uniform(1, 9), uniform(1, 9)); }
};

// ---- exact matrices ---------------------------------------------------------

struct ConfigMatrix {
    int k = 0, n = 0;
    std::vector<std::vector<Rat>> a;  // k rows, n columns

    ConfigMatrix() = default;
    ConfigMatrix(int k_, int n_) : k(k_), n(n_), a(k_, std::vector<Rat>(n_, Rat(0))) {}
};

inline Rat det(std::vector<std::vector<Rat>> m) {
    const std::size_t s = m.size();
    Rat result(1);
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && m[piv][col] == 0) ++piv;
        if (piv == s) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t r = col + 1; r < s; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c2 = col; c2 < s; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return result;
}

inline Rat minor(const ConfigMatrix& m, const KSubset& K) {
    if (K.k() != m.k) throw BadIndex("minor wants a " + std::to_string(m.k) + "-subset");
    std::vector<std::vector<Rat>> sub(m.k, std::vector<Rat>(m.k));
    for (int r = 0; r < m.k; ++r)
        for (int c = 0; c < m.k; ++c) {
            int col = K.members[c];
            if (col < 1 || col > m.n) throw BadIndex("column " + std::to_string(col));
            sub[r][c] = m.a[r][col - 1];
        }
    return det(sub);
}

inline int rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline ConfigMatrix random_full_rank_matrix(int k, int n, Rng& rng) {
    for (;;) {
        ConfigMatrix m(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) m.a[r][c] = rng.rat();
        if (rank(m.a) == k) return m;
    }
}

// Generalized Vandermonde point: rows x_j^(i-1); all maximal minors positive.
inline ConfigMatrix totally_positive_point(int k, int n, const std::vector<Rat>& xs) {
    if (static_cast<int>(xs.size()) != n) throw BadIndex("need n parameters");
    for (int i = 0; i < n; ++i) {
        if (xs[i] <= 0) throw ParametersNotIncreasing();
        if (i && xs[i - 1] >= xs[i]) throw ParametersNotIncreasing();
    }
    ConfigMatrix m(k, n);
    for (int c = 0; c < n; ++c) {
        Rat p(1);
        for (int r = 0; r < k; ++r) {
            m.a[r][c] = p;
            p *= xs[c];
        }
    }
    return m;
}

// All C(n,k) minors, keyed by the packed Pluecker VarId -- the assignment fed
// straight into lp_eval.
inline std::unordered_map<std::uint64_t, Rat> all_minors(const ConfigMatrix& m) {
    std::unordered_map<std::uint64_t, Rat> out;
    std::vector<int> idx(m.k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == m.k) {
            KSubset K(m.n, idx);
            out[pluecker_var(K).v] = minor(m, K);
            return;
        }
        for (int x = start; x <= m.n; ++x) {
            idx[pos] = x;
            rec(pos + 1, x + 1);
        }
    };
    rec(0, 1);
    return out;
}

// ---- 3-vectors --------------------------------------------------------------

using Vec3 = std::array<Rat, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Rat triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline Vec3 column(const ConfigMatrix& m, int j) {  // 1-based
    if (m.k != 3) throw BadIndex("column vector wants 3 rows");
    return {m.a[0][j - 1], m.a[1][j - 1], m.a[2][j - 1]};
}

// ---- named special functions ------------------------------------------------

namespace detail {
// Term Δ^{positions} with positions replaced through idx (1-based into idx),
// sorted with the sign of the sorting permutation.
inline LaurentPoly delta_of(const std::vector<int>& idx, std::array<int, 3> pos) {
    std::array<int, 3> cols{idx[pos[0] - 1], idx[pos[1] - 1], idx[pos[2] - 1]};
    int sign = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (cols[i] == cols[j]) return LaurentPoly::zero();
            if (cols[i] > cols[j]) {
                std::swap(cols[i], cols[j]);
                sign = -sign;
            }
        }
    return lp_scale(LaurentPoly::var(pluecker_var({cols[0], cols[1], cols[2]})), Rat(sign));
}
}  // namespace detail

struct BadArity : std::runtime_error {
    BadArity() : std::runtime_error("X/Y take 6 indices, A/B take 8") {}
};

// The four exotic-variable formulas as polynomials in Pluecker variables.
// X(1..6) = Δ134 Δ256 − Δ156 Δ234
// Y(1..6) = Δ236 Δ145 − Δ123 Δ456
// A(1..8) = Δ134 (Δ258 Δ167 − Δ678 Δ125) − Δ158 Δ234 Δ167
// B(1..8) = Δ258 Δ134 Δ267 − Δ234 (Δ128 Δ567 + Δ258 Δ167)
inline LaurentPoly special_function(char name, const std::vector<int>& idx) {
    using detail::delta_of;
    auto D = [&](int a, int b, int c) { return delta_of(idx, {a, b, c}); };
    switch (name) {
        case 'X':
            if (idx.size() != 6) throw BadArity();
            return lp_sub(lp_mul(D(1, 3, 4), D(2, 5, 6)), lp_mul(D(1, 5, 6), D(2, 3, 4)));
        case 'Y':
            if (idx.size() != 6) throw BadArity();
            return lp_sub(lp_mul(D(2, 3, 6), D(1, 4, 5)), lp_mul(D(1, 2, 3), D(4, 5, 6)));
        case 'A': {
            if (idx.size() != 8) throw BadArity();
            auto inner = lp_sub(lp_mul(D(2, 5, 8), D(1, 6, 7)), lp_mul(D(6, 7, 8), D(1, 2, 5)));
            return lp_sub(lp_mul(D(1, 3, 4), inner), lp_mul(lp_mul(D(1, 5, 8), D(2, 3, 4)), D(1, 6, 7)));
        }
        case 'B': {
            if (idx.size() != 8) throw BadArity();
            auto first = lp_mul(lp_mul(D(2, 5, 8), D(1, 3, 4)), D(2, 6, 7));
            auto inner = lp_add(lp_mul(D(1, 2, 8), D(5, 6, 7)), lp_mul(D(2, 5, 8), D(1, 6, 7)));
            return lp_sub(first, lp_mul(D(2, 3, 4), inner));
        }
        default:
            throw BadArity();
    }
}

}  // namespace grex
