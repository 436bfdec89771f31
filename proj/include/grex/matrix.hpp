#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "varid.hpp"

namespace grex {

struct NotMutable : std::runtime_error {
    NotMutable() : std::runtime_error("attempt to mutate a frozen direction") {}
};

// Extended exchange matrix. Rows are labeled by all variables (the first
// ncols rows are the mutable ones, in column order); columns by the mutable
// variables only. The principal block e[0..ncols)[0..ncols) is skew-symmetric
// for every seed built here.
struct ExtMatrix {
    std::vector<VarId> rows;
    int ncols = 0;
    std::vector<std::vector<int>> e;

    int nrows() const { return static_cast<int>(rows.size()); }

    bool principal_skew_symmetric() const {
        for (int i = 0; i < ncols; ++i)
            for (int j = 0; j < ncols; ++j)
                if (e[i][j] != -e[j][i]) return false;
        return true;
    }

    std::vector<std::vector<int>> principal() const {
        std::vector<std::vector<int>> b(ncols, std::vector<int>(ncols));
        for (int i = 0; i < ncols; ++i)
            for (int j = 0; j < ncols; ++j) b[i][j] = e[i][j];
        return b;
    }
};

inline ExtMatrix matrix_mutate(const ExtMatrix& m, int z) {
    if (z < 0 || z >= m.ncols) throw NotMutable();
    ExtMatrix r = m;
    for (int x = 0; x < m.nrows(); ++x) {
        for (int y = 0; y < m.ncols; ++y) {
            if (x == z || y == z) {
                r.e[x][y] = -m.e[x][y];
            } else {
                int bxz = m.e[x][z], bzy = m.e[z][y];
                r.e[x][y] = m.e[x][y] + (std::abs(bxz) * bzy + bxz * std::abs(bzy)) / 2;
            }
        }
    }
    return r;
}

// Searches for a positive integer diagonal D with D*B skew-symmetric by sign
// checking and ratio propagation on the graph of nonzero entries.
inline std::optional<std::vector<Int>> check_skew_symmetrizable(const std::vector<std::vector<int>>& B) {
    const int n = static_cast<int>(B.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(B[i].size()) != n) return std::nullopt;
        if (B[i][i] != 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            bool zi = B[i][j] == 0, zj = B[j][i] == 0;
            if (zi != zj) return std::nullopt;
            if (!zi && (B[i][j] > 0) == (B[j][i] > 0)) return std::nullopt;
        }
    }
    std::vector<Rat> d(n, Rat(0));
    for (int start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (B[i][j] == 0) continue;
                Rat want = d[i] * Rat(B[i][j]) / Rat(-B[j][i]);
                if (d[j] == 0) {
                    d[j] = want;
                    stack.push_back(j);
                } else if (d[j] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    Int lcm_den(1);
    for (auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<Int> out(n);
    Int g(0);
    for (int i = 0; i < n; ++i) {
        out[i] = numerator(d[i]) * (lcm_den / denominator(d[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out[i] * B[i][j] != -out[j] * B[j][i]) return std::nullopt;
    return out;
}

}  // namespace grex
