#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ksubset.hpp"
#include "seed.hpp"

namespace grex {

struct NoExchange : std::runtime_error {
    NoExchange() : std::runtime_error("label admits no quadrilateral exchange") {}
};
struct Ambiguous : std::runtime_error {
    Ambiguous() : std::runtime_error("exchange is not unique") {}
};
struct SignConflict : std::runtime_error {
    SignConflict() : std::runtime_error("exchange-sign propagation is inconsistent") {}
};
struct CapExceeded : std::runtime_error {
    CapExceeded() : std::runtime_error("instance exceeds the enumeration cap") {}
};

// ---- triangulations ---------------------------------------------------------

struct Triangulation {
    int n = 0;
    std::vector<Chord> internal_chords;
};

// The zig-zag chain: chord m has endpoints
//   u = n-k - floor((m-1)/2)   (descending side)
//   v = n-k+2 + floor(m/2)     (ascending side), both mod n.
inline std::pair<int, int> zigzag_chord(int k, int n, int m) {
    int u = mod1(n - k - (m - 1) / 2, n);
    int v = mod1(n - k + 2 + m / 2, n);
    return {u, v};
}

inline Triangulation zigzag_triangulation(int k, int n) {
    if (n < k + 2 || k < 2) throw std::invalid_argument("need n >= k+2 >= 4");
    Triangulation t;
    t.n = n;
    for (int m = 1; m <= n - 3; ++m) {
        auto [u, v] = zigzag_chord(k, n, m);
        t.internal_chords.push_back(Chord(n, u, v));
    }
    return t;
}

inline Triangulation fan_triangulation(int n) {
    Triangulation t;
    t.n = n;
    for (int j = 3; j <= n - 1; ++j) t.internal_chords.push_back(Chord(n, 1, j));
    return t;
}

inline bool triangulation_valid(const Triangulation& t) {
    if (static_cast<int>(t.internal_chords.size()) != t.n - 3) return false;
    for (std::size_t i = 0; i < t.internal_chords.size(); ++i)
        for (std::size_t j = i + 1; j < t.internal_chords.size(); ++j)
            if (chords_cross(t.internal_chords[i], t.internal_chords[j])) return false;
    return true;
}

// ---- the initial arrangement labels ----------------------------------------

struct AknLabels {
    int k, n;
    std::vector<std::vector<KSubset>> grid;  // (k-1) x (n-k-1)
    std::vector<KSubset> frozen;             // boundary intervals
    std::vector<KSubset> flat() const {
        std::vector<KSubset> out;
        for (auto& row : grid)
            for (auto& L : row) out.push_back(L);
        return out;
    }
};

// Cell (i,j) takes the i-interval at the descending endpoint and the
// (k-i)-interval at the ascending endpoint of chord i+j-1 of the zig-zag.
inline AknLabels akn_labels(int k, int n) {
    if (n < k + 2 || k < 2) throw std::invalid_argument("need n >= k+2 >= 4");
    AknLabels out;
    out.k = k;
    out.n = n;
    out.grid.assign(k - 1, std::vector<KSubset>(n - k - 1));
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= n - k - 1; ++j) {
            int m = i + j - 1;
            auto [u, v] = zigzag_chord(k, n, m);
            std::vector<int> members = cyclic_interval(u, i, n);
            for (int x : cyclic_interval(v, k - i, n)) members.push_back(x);
            out.grid[i - 1][j - 1] = KSubset(n, members);
        }
    }
    out.frozen = boundary_intervals(k, n);
    return out;
}

// The closed-form variant from the construction's proof, retained as a
// cross-check; it is known not to reproduce the figure labels under the
// obvious index conventions, and callers compare rather than trust it.
inline std::vector<std::pair<int, int>> akn_labels_closed_form_chords(int k, int n) {
    std::vector<std::pair<int, int>> out;
    auto rho = [&](int x, int p) { return mod1(x + p, n); };
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= n - k - 1; ++j) {
            int p1 = 2 - (i + 1) / 2 - (j + 1) / 2;
            int p2 = i / 2 + j / 2;
            out.push_back({rho(n - k, p1), rho(n - k + 2, p2)});
        }
    return out;
}

// ---- weakly separated collections ------------------------------------------

struct WSCollection {
    int k = 0, n = 0;
    std::vector<KSubset> labels;  // mutable then frozen
    std::vector<KSubset> frozen;

    bool is_frozen(const KSubset& L) const {
        return std::find(frozen.begin(), frozen.end(), L) != frozen.end();
    }
};

inline bool pairwise_weakly_separated(const std::vector<KSubset>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (!weakly_separated(ls[i], ls[j])) return false;
    return true;
}

struct ExchangeResult {
    KSubset partner;
    // the two monomial pairs of the three-term relation:
    // L * partner = first.1 * first.2 + second.1 * second.2
    std::pair<KSubset, KSubset> first, second;
};

// Finds the unique quadrilateral exchange for a mutable label L: a
// decomposition L = I+{x1,x3} and partner I+{x2,x4} (x1<x2<x3<x4) with all
// four of I+{xa,xb} (a,b adjacent around the quadrilateral) present in the
// collection and the swapped collection still pairwise weakly separated.
inline ExchangeResult unique_exchange(const WSCollection& c, const KSubset& L) {
    if (c.is_frozen(L)) throw std::invalid_argument("unique_exchange: label is frozen");
    const int n = c.n;
    auto in_collection = [&](const KSubset& K) {
        return std::find(c.labels.begin(), c.labels.end(), K) != c.labels.end();
    };
    auto with = [&](std::vector<int> I, int a, int b) {
        I.push_back(a);
        I.push_back(b);
        return KSubset(n, I);
    };

    std::vector<ExchangeResult> found;
    const auto& mem = L.members;
    const int k = L.k();
    for (int ii = 0; ii < k; ++ii) {
        for (int jj = ii + 1; jj < k; ++jj) {
            int i = mem[ii], j = mem[jj];
            std::vector<int> I;
            for (int t = 0; t < k; ++t)
                if (t != ii && t != jj) I.push_back(mem[t]);
            for (int s = 1; s <= n; ++s) {
                if (s == i || s == j) continue;
                if (std::find(I.begin(), I.end(), s) != I.end()) continue;
                for (int t = s + 1; t <= n; ++t) {
                    if (t == i || t == j) continue;
                    if (std::find(I.begin(), I.end(), t) != I.end()) continue;
                    if (!chords_cross(Chord(n, i, j), Chord(n, s, t))) continue;
                    KSubset partner = with(I, s, t);
                    if (in_collection(partner)) continue;
                    std::array<int, 4> q{i, j, s, t};
                    std::sort(q.begin(), q.end());
                    KSubset m1 = with(I, q[0], q[1]), m2 = with(I, q[2], q[3]);
                    KSubset m3 = with(I, q[0], q[3]), m4 = with(I, q[1], q[2]);
                    if (!in_collection(m1) || !in_collection(m2) || !in_collection(m3) || !in_collection(m4))
                        continue;
                    std::vector<KSubset> swapped;
                    for (auto& K : c.labels)
                        if (!(K == L)) swapped.push_back(K);
                    swapped.push_back(partner);
                    if (!pairwise_weakly_separated(swapped)) continue;
                    ExchangeResult r{partner, {m1, m2}, {m3, m4}};
                    bool dup = false;
                    for (auto& f : found)
                        if (f.partner == r.partner) dup = true;
                    if (!dup) found.push_back(r);
                }
            }
        }
    }
    if (found.empty()) throw NoExchange();
    if (found.size() > 1) throw Ambiguous();
    return found[0];
}

// ---- seed builders ----------------------------------------------------------

// Triangulation seed: b_{[ij],[ik]} = +1 when i,j,k run counter-clockwise
// (vertices are labeled clockwise), for chord pairs bounding a common triangle.
inline Seed triangulation_seed(const Triangulation& t, Registry& reg) {
    const int n = t.n;
    std::vector<Chord> all = t.internal_chords;
    std::vector<Chord> boundary;
    for (int i = 1; i <= n; ++i) boundary.push_back(Chord(n, i, mod1(i + 1, n)));
    for (auto& c : boundary) all.push_back(c);

    auto has = [&](int a, int b) {
        return std::find(all.begin(), all.end(), Chord(n, a, b)) != all.end();
    };
    auto idx_of = [&](const Chord& c) {
        return static_cast<int>(std::find(all.begin(), all.end(), c) - all.begin());
    };
    // (i,j,k) counter-clockwise == the cyclic sequence i->j->k->i has two descents
    auto ccw = [](int i, int j, int k) { return ((j < i) + (k < j) + (i < k)) == 2; };

    int N = static_cast<int>(t.internal_chords.size());
    int M = static_cast<int>(all.size());
    ExtMatrix mat;
    mat.ncols = N;
    mat.e.assign(M, std::vector<int>(N, 0));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                if (!has(a, b) || !has(b, c) || !has(a, c)) continue;
                // triangle a,b,c: each ordered pair of its edges sharing a vertex
                std::array<std::array<int, 3>, 3> corners{{{a, b, c}, {b, a, c}, {c, a, b}}};
                for (auto& [i, j, k] : corners) {
                    int r = idx_of(Chord(n, i, j)), col = idx_of(Chord(n, i, k));
                    if (col < N) mat.e[r][col] += ccw(i, j, k) ? 1 : -1;
                    int r2 = idx_of(Chord(n, i, k)), col2 = idx_of(Chord(n, i, j));
                    if (col2 < N) mat.e[r2][col2] += ccw(i, k, j) ? 1 : -1;
                }
            }

    Seed s;
    for (int c = 0; c < M; ++c) {
        KSubset K(n, {all[c].a, all[c].b});
        VarId id = pluecker_var(K);
        reg.register_initial(id);
        mat.rows.push_back(id);
        if (c < N)
            s.cluster.push_back(id);
        else
            s.coeffs.push_back(id);
    }
    s.mat = mat;
    if (!s.mat.principal_skew_symmetric()) throw std::logic_error("triangulation seed not skew-symmetric");
    return s;
}

// Builds a seed from an arbitrary maximal weakly separated collection by
// running unique_exchange at every mutable label and propagating the +/-
// split of each column so the principal part comes out skew-symmetric.
inline Seed seed_from_collection(int k, int n, const std::vector<KSubset>& mut,
                                 const std::vector<KSubset>& frozen, Registry& reg) {
    WSCollection c;
    c.k = k;
    c.n = n;
    c.frozen = frozen;
    c.labels = mut;
    for (auto& f : frozen) c.labels.push_back(f);

    const int N = static_cast<int>(mut.size());
    const int M = N + static_cast<int>(frozen.size());
    std::vector<ExchangeResult> ex;
    ex.reserve(N);
    for (auto& L : mut) ex.push_back(unique_exchange(c, L));

    auto row_of = [&](const KSubset& K) -> int {
        for (int i = 0; i < N; ++i)
            if (mut[i] == K) return i;
        for (std::size_t i = 0; i < frozen.size(); ++i)
            if (frozen[i] == K) return N + static_cast<int>(i);
        return -1;
    };

    // sigma[col] in {+1,-1}: +1 means pair `first` carries the +1 entries.
    std::vector<int> sigma(N, 0);
    ExtMatrix mat;
    mat.ncols = N;
    mat.e.assign(M, std::vector<int>(N, 0));

    auto entry_sign = [&](int col, const KSubset& K) -> int {
        // sign of K's membership in column col's exchange pairs (0 if absent)
        auto& r = ex[col];
        int s = 0;
        if (r.first.first == K || r.first.second == K) s += 1;
        if (r.second.first == K || r.second.second == K) s -= 1;
        return s;
    };

    for (int start = 0; start < N; ++start) {
        if (sigma[start] != 0) continue;
        sigma[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int col = stack.back();
            stack.pop_back();
            for (int other = 0; other < N; ++other) {
                if (other == col) continue;
                int a = entry_sign(col, mut[other]);   // b_{other,col} up to sigma[col]
                int b = entry_sign(other, mut[col]);   // b_{col,other} up to sigma[other]
                if (a == 0 && b == 0) continue;
                if (a == 0 || b == 0) throw SignConflict();
                // need sigma[col]*a == -sigma[other]*b
                int want = -(sigma[col] * a) / b;
                if (sigma[other] == 0) {
                    sigma[other] = want;
                    stack.push_back(other);
                } else if (sigma[other] != want) {
                    throw SignConflict();
                }
            }
        }
    }

    for (int col = 0; col < N; ++col) {
        int nonzero = 0;
        auto put = [&](const KSubset& K, int v) {
            int r = row_of(K);
            if (r < 0) throw std::logic_error("exchange partner missing from collection");
            mat.e[r][col] += v;
            ++nonzero;
        };
        put(ex[col].first.first, sigma[col]);
        put(ex[col].first.second, sigma[col]);
        put(ex[col].second.first, -sigma[col]);
        put(ex[col].second.second, -sigma[col]);
        if (nonzero != 4) throw std::logic_error("column does not have four entries");
    }

    Seed s;
    for (auto& L : mut) {
        VarId id = pluecker_var(L);
        reg.register_initial(id);
        s.cluster.push_back(id);
        mat.rows.push_back(id);
    }
    for (auto& F : frozen) {
        VarId id = pluecker_var(F);
        reg.register_initial(id);
        s.coeffs.push_back(id);
        mat.rows.push_back(id);
    }
    s.mat = mat;
    if (!s.mat.principal_skew_symmetric()) throw SignConflict();
    return s;
}

// The standard initial seed: grid labels (row-major) plus boundary intervals.
// For k = 2 the global sign is pinned to the triangulation-seed convention.
inline Seed build_initial_seed(int k, int n, Registry& reg) {
    AknLabels L = akn_labels(k, n);
    Seed s = seed_from_collection(k, n, L.flat(), L.frozen, reg);

    const int N = s.rank();
    if (N != (k - 1) * (n - k - 1) || N + n != k * (n - k) + 1)
        throw std::logic_error("rank bookkeeping failed");

    if (k == 2) {
        Registry tmp(2, n);
        Seed ts = triangulation_seed(zigzag_triangulation(2, n), tmp);
        // align columns/rows by variable id and compare; flip globally if needed
        auto find_row = [&](const Seed& x, VarId v) {
            for (int r = 0; r < x.mat.nrows(); ++r)
                if (x.mat.rows[r] == v) return r;
            throw std::logic_error("label mismatch against triangulation seed");
        };
        int flip = 0;
        for (int c = 0; c < N && flip == 0; ++c)
            for (int r = 0; r < s.mat.nrows() && flip == 0; ++r)
                if (s.mat.e[r][c] != 0) {
                    int tr = find_row(ts, s.mat.rows[r]), tc = find_row(ts, s.cluster[c]);
                    flip = (ts.mat.e[tr][tc] == s.mat.e[r][c]) ? 1 : -1;
                }
        if (flip == -1)
            for (auto& row : s.mat.e)
                for (auto& v : row) v = -v;
        for (int c = 0; c < N; ++c)
            for (int r = 0; r < s.mat.nrows(); ++r) {
                int tr = find_row(ts, s.mat.rows[r]), tc = find_row(ts, s.cluster[c]);
                if (s.mat.e[r][c] != ts.mat.e[tr][tc])
                    throw std::logic_error("initial seed disagrees with triangulation rule");
            }
    }
    return s;
}

// ---- enumeration of maximal collections ------------------------------------

inline std::vector<KSubset> all_ksubsets(int k, int n) {
    std::vector<KSubset> out;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            out.push_back(KSubset(n, idx));
            return;
        }
        for (int x = start; x <= n; ++x) {
            idx[pos] = x;
            rec(pos + 1, x + 1);
        }
    };
    rec(0, 1);
    return out;
}

// All maximal-by-inclusion pairwise weakly separated families containing the
// boundary intervals: maximal cliques of the compatibility graph over the
// remaining candidates (Bron-Kerbosch with pivoting).
inline std::vector<WSCollection> enumerate_maximal_ws(int k, int n, int cap = 12) {
    if (k * (n - k) > cap) throw CapExceeded();
    auto frozen = boundary_intervals(k, n);
    std::vector<KSubset> cand;
    for (auto& K : all_ksubsets(k, n)) {
        if (std::find(frozen.begin(), frozen.end(), K) != frozen.end()) continue;
        bool ok = true;
        for (auto& f : frozen)
            if (!weakly_separated(K, f)) {
                ok = false;
                break;
            }
        if (ok) cand.push_back(K);
    }
    const int m = static_cast<int>(cand.size());
    std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            compat[i][j] = compat[j][i] = weakly_separated(cand[i], cand[j]);

    std::vector<WSCollection> out;
    std::vector<int> R;
    std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
            WSCollection c;
            c.k = k;
            c.n = n;
            c.frozen = frozen;
            for (int i : R) c.labels.push_back(cand[i]);
            for (auto& f : frozen) c.labels.push_back(f);
            out.push_back(c);
            return;
        }
        int pivot = -1, best = -1;
        for (int u : P) {
            int cnt = 0;
            for (int v : P)
                if (compat[u][v]) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        for (int u : X) {
            int cnt = 0;
            for (int v : P)
                if (compat[u][v]) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        std::vector<int> todo;
        for (int v : P)
            if (pivot == -1 || !compat[pivot][v]) todo.push_back(v);
        for (int v : todo) {
            std::vector<int> P2, X2;
            for (int w : P)
                if (compat[v][w]) P2.push_back(w);
            for (int w : X)
                if (compat[v][w]) X2.push_back(w);
            R.push_back(v);
            bk(P2, X2);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    std::vector<int> P(m), X;
    std::iota(P.begin(), P.end(), 0);
    bk(P, X);
    return out;
}

// ---- reduced words ----------------------------------------------------------

struct DoubleReducedWord {
    std::vector<int> R, Rprime, W;
};

inline std::vector<int> apply_transpositions(const std::vector<int>& word, int k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) std::swap(perm[*it - 1], perm[*it]);
    return perm;
}

inline DoubleReducedWord double_reduced_word(int k) {
    if (k < 2) throw std::invalid_argument("k >= 2");
    DoubleReducedWord out;
    for (int r = 0;; ++r) {
        std::vector<int> run;
        if (r % 2 == 0) {
            for (int i = r / 2 + 1; i <= k - 1 - r / 2; ++i) run.push_back(i);
        } else {
            for (int i = k - 1 - (r + 1) / 2; i >= (r + 1) / 2; --i) run.push_back(i);
        }
        if (run.empty()) break;
        out.R.insert(out.R.end(), run.begin(), run.end());
    }
    if (static_cast<int>(out.R.size()) != k * (k - 1) / 2)
        throw std::logic_error("reduced word has wrong length");
    std::vector<int> longest(k);
    for (int i = 0; i < k; ++i) longest[i] = k - i;
    if (apply_transpositions(out.R, k) != longest)
        throw std::logic_error("word does not evaluate to the longest permutation");

    out.Rprime = out.R;
    for (auto& x : out.Rprime) x = k - x;
    std::reverse(out.Rprime.begin(), out.Rprime.end());
    out.W = out.Rprime;
    out.W.insert(out.W.end(), out.R.begin(), out.R.end());
    return out;
}

}  // namespace grex
