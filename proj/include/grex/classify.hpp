#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace grex {

// ---- quivers ----------------------------------------------------------------

struct Quiver {
    int nv = 0;
    std::vector<std::vector<int>> b;  // principal exchange matrix

    static Quiver of(const ExtMatrix& m) { return {m.ncols, m.principal()}; }
    static Quiver of(std::vector<std::vector<int>> B) {
        int n = static_cast<int>(B.size());
        return {n, std::move(B)};
    }
    bool edge(int i, int j) const { return b[i][j] != 0; }
    int weight(int i, int j) const { return std::abs(b[i][j]); }
};

inline Quiver quiver_mutate(const Quiver& q, int z) {
    Quiver r = q;
    for (int x = 0; x < q.nv; ++x)
        for (int y = 0; y < q.nv; ++y) {
            if (x == z || y == z)
                r.b[x][y] = -q.b[x][y];
            else
                r.b[x][y] = q.b[x][y] + (std::abs(q.b[x][z]) * q.b[z][y] + q.b[x][z] * std::abs(q.b[z][y])) / 2;
        }
    return r;
}

// ---- Dynkin recognition -----------------------------------------------------

struct CartanSpec {
    std::string name;              // "A5", "D4", "E8", ...
    int rank = 0;
    std::vector<std::vector<int>> a;  // Cartan matrix in the fixed numbering
    std::vector<int> eps;             // +1 / -1 bipartition (empty until set)
};

// Fixed vertex numbering for the three exceptional shapes used by the
// correspondence tables: D4 has center 2; E6/E8 have branch vertex 4 with
// the short arm 4-2 and spine 1-3-4-5-6(-7-8).
inline std::vector<std::pair<int, int>> dynkin_edges(const std::string& name) {
    char fam = name[0];
    int rank = std::stoi(name.substr(1));
    std::vector<std::pair<int, int>> e;
    if (fam == 'A') {
        for (int i = 1; i < rank; ++i) e.push_back({i, i + 1});
    } else if (fam == 'D') {
        // 1-2, 3-2, 4-2, then 4-5-...-rank along the tail
        e = {{1, 2}, {3, 2}, {4, 2}};
        for (int i = 4; i < rank; ++i) e.push_back({i, i + 1});
    } else if (fam == 'E') {
        e = {{1, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}};
        if (rank >= 7) e.push_back({6, 7});
        if (rank >= 8) e.push_back({7, 8});
    }
    return e;
}

inline CartanSpec make_cartan(const std::string& name) {
    CartanSpec s;
    s.name = name;
    s.rank = std::stoi(name.substr(1));
    s.a.assign(s.rank, std::vector<int>(s.rank, 0));
    for (int i = 0; i < s.rank; ++i) s.a[i][i] = 2;
    for (auto& [x, y] : dynkin_edges(name)) s.a[x - 1][y - 1] = s.a[y - 1][x - 1] = -1;
    return s;
}

// Orientation-blind test of the underlying unweighted graph against the
// simply-laced Dynkin shapes.
inline std::optional<CartanSpec> recognize_dynkin(const Quiver& q) {
    const int n = q.nv;
    if (n == 0) return std::nullopt;
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (q.edge(i, j)) {
                if (q.weight(i, j) != 1) return std::nullopt;
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
    if (edges != n - 1) return std::nullopt;  // Dynkin diagrams are trees
    // connectivity
    std::vector<bool> seen(n, false);
    std::deque<int> bfs{0};
    seen[0] = true;
    int cnt = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                bfs.push_back(w);
            }
    }
    if (cnt != n) return std::nullopt;

    std::vector<int> branch;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 3) return std::nullopt;
        if (adj[i].size() == 3) branch.push_back(i);
    }
    if (branch.size() > 1) return std::nullopt;
    if (branch.empty()) return make_cartan("A" + std::to_string(n));
    // arm lengths from the unique branch vertex
    std::vector<int> arms;
    for (int start : adj[branch[0]]) {
        int len = 1, prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return make_cartan("D" + std::to_string(n));
    if (arms == std::vector<int>{1, 2, 2}) return make_cartan("E6");
    if (arms == std::vector<int>{1, 2, 3}) return make_cartan("E7");
    if (arms == std::vector<int>{1, 2, 4}) return make_cartan("E8");
    return std::nullopt;
}

inline bool bipartite_orientation(const Quiver& q) {
    for (int i = 0; i < q.nv; ++i) {
        bool in = false, out = false;
        for (int j = 0; j < q.nv; ++j) {
            if (q.b[i][j] > 0) out = true;
            if (q.b[i][j] < 0) in = true;
        }
        if (in && out) return false;
    }
    return true;
}

// ---- canonical labeling for mutation-class deduplication --------------------

namespace detail {

inline std::string quiver_string(const Quiver& q, const std::vector<int>& order) {
    std::string s;
    for (int i : order)
        for (int j : order) {
            s += std::to_string(q.b[i][j]);
            s += ',';
        }
    return s;
}

inline std::vector<int> refine_colors(const Quiver& q, std::vector<int> color) {
    const int n = q.nv;
    for (;;) {
        std::vector<std::string> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::tuple<int, int, int>> nb;
            for (int j = 0; j < n; ++j)
                if (j != i && (q.b[i][j] || q.b[j][i])) nb.push_back({color[j], q.b[i][j], q.b[j][i]});
            std::sort(nb.begin(), nb.end());
            sig[i] = std::to_string(color[i]) + "|";
            for (auto& [c, x, y] : nb)
                sig[i] += std::to_string(c) + ":" + std::to_string(x) + ":" + std::to_string(y) + ";";
        }
        std::map<std::string, int> remap;
        std::vector<int> nc(n);
        for (int i = 0; i < n; ++i) {
            auto it = remap.find(sig[i]);
            if (it == remap.end()) it = remap.insert({sig[i], static_cast<int>(remap.size())}).first;
        }
        // deterministic: color ids by sorted signature
        std::vector<std::string> keys;
        for (auto& [k, v] : remap) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        std::map<std::string, int> final_map;
        for (std::size_t i = 0; i < keys.size(); ++i) final_map[keys[i]] = static_cast<int>(i);
        for (int i = 0; i < n; ++i) nc[i] = final_map[sig[i]];
        if (nc == color) return color;
        color = nc;
    }
}

inline void canon_search(const Quiver& q, std::vector<int> color, std::string& best) {
    const int n = q.nv;
    color = refine_colors(q, color);
    // find smallest color class with >1 members
    int target = -1, tc = n + 1;
    std::vector<std::vector<int>> classes(n);
    for (int i = 0; i < n; ++i) classes[color[i]].push_back(i);
    for (int c = 0; c < n; ++c)
        if (classes[c].size() > 1 && static_cast<int>(classes[c].size()) < tc) {
            tc = static_cast<int>(classes[c].size());
            target = c;
        }
    if (target == -1) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
        std::string s = quiver_string(q, order);
        if (best.empty() || s < best) best = s;
        return;
    }
    for (int v : classes[target]) {
        std::vector<int> c2 = color;
        for (int i = 0; i < n; ++i)
            if (c2[i] >= c2[v] && i != v) c2[i] += 1;  // individualize v below its class
        canon_search(q, c2, best);
    }
}

}  // namespace detail

inline std::string canonical_quiver(const Quiver& q) {
    std::string best;
    detail::canon_search(q, std::vector<int>(q.nv, 0), best);
    return best;
}

// ---- affine certificates ----------------------------------------------------

// Classifies the induced sub-quiver on `sub` as an acyclically oriented
// simply-laced affine diagram, if it is one.
inline std::optional<std::string> affine_type_of_subset(const Quiver& q, const std::vector<int>& sub) {
    const int m = static_cast<int>(sub.size());
    if (m < 2) return std::nullopt;
    if (m == 2) {
        int w = q.weight(sub[0], sub[1]);
        return w == 2 ? std::optional<std::string>("A1~") : std::nullopt;
    }
    std::vector<std::vector<int>> adj(m);
    int edges = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (q.edge(sub[i], sub[j])) {
                if (q.weight(sub[i], sub[j]) != 1) return std::nullopt;
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
    // connectivity
    std::vector<bool> seen(m, false);
    std::deque<int> bfs{0};
    seen[0] = true;
    int cnt = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                bfs.push_back(w);
            }
    }
    if (cnt != m) return std::nullopt;

    if (edges == m) {
        for (int i = 0; i < m; ++i)
            if (adj[i].size() != 2) return std::nullopt;
        // pure cycle; certificate needs a non-cyclic orientation
        int forward = 0, backward = 0, prev = -1, cur = 0;
        for (int step = 0; step < m; ++step) {
            int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            if (q.b[sub[cur]][sub[nxt]] > 0)
                ++forward;
            else
                ++backward;
            prev = cur;
            cur = nxt;
        }
        if (forward == m || backward == m) return std::nullopt;
        return "A" + std::to_string(m - 1) + "~";
    }
    if (edges != m - 1) return std::nullopt;  // tree (orientation automatically acyclic)

    std::vector<int> deg(m);
    for (int i = 0; i < m; ++i) deg[i] = static_cast<int>(adj[i].size());
    int deg4 = static_cast<int>(std::count(deg.begin(), deg.end(), 4));
    int deg3 = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
    int leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    if (*std::max_element(deg.begin(), deg.end()) > 4) return std::nullopt;
    if (deg4 == 1 && m == 5 && leaves == 4) return "D4~";
    if (deg4 > 0) return std::nullopt;
    if (deg3 == 2 && leaves == 4) {
        for (int i = 0; i < m; ++i)
            if (deg[i] == 1 && deg[adj[i][0]] != 3) return std::nullopt;
        return "D" + std::to_string(m - 1) + "~";
    }
    if (deg3 == 1 && leaves == 3) {
        int center = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
        std::vector<int> arms;
        for (int start : adj[center]) {
            int len = 1, prev = center, cur = start;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<int>{2, 2, 2}) return "E6~";
        if (arms == std::vector<int>{1, 3, 3}) return "E7~";
        if (arms == std::vector<int>{1, 2, 5}) return "E8~";
    }
    return std::nullopt;
}

struct AffineWitness {
    bool found = false;
    int depth = 0;
    std::string type;
    std::vector<int> vertices;       // vertex subset in the witness quiver
    std::vector<int> mutation_path;  // from the start quiver
};

inline std::optional<AffineWitness> scan_quiver_for_affine(const Quiver& q) {
    const int n = q.nv;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(i);
        if (sub.size() < 2) continue;
        if (auto t = affine_type_of_subset(q, sub)) {
            AffineWitness w;
            w.found = true;
            w.type = *t;
            w.vertices = sub;
            return w;
        }
    }
    return std::nullopt;
}

// Matrix-only BFS over the mutation class with canonical-form deduplication.
inline AffineWitness find_affine_certificate(const Quiver& q0, int depth_cap) {
    struct Node {
        Quiver q;
        int depth;
        std::vector<int> path;
    };
    std::unordered_set<std::string> seen;
    std::deque<Node> frontier;
    frontier.push_back({q0, 0, {}});
    seen.insert(canonical_quiver(q0));
    while (!frontier.empty()) {
        Node cur = std::move(frontier.front());
        frontier.pop_front();
        if (auto w = scan_quiver_for_affine(cur.q)) {
            w->depth = cur.depth;
            w->mutation_path = cur.path;
            return *w;
        }
        if (cur.depth >= depth_cap) continue;
        for (int z = 0; z < cur.q.nv; ++z) {
            Quiver nxt = quiver_mutate(cur.q, z);
            std::string c = canonical_quiver(nxt);
            if (seen.insert(c).second) {
                auto path = cur.path;
                path.push_back(z);
                frontier.push_back({nxt, cur.depth + 1, std::move(path)});
            }
        }
    }
    return {};
}

// ---- root machinery ---------------------------------------------------------

using RootVec = std::vector<int>;

inline std::vector<RootVec> positive_roots(const CartanSpec& spec) {
    const int n = spec.rank;
    std::set<RootVec> pos;
    std::deque<RootVec> todo;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        pos.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        RootVec r = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += spec.a[i][j] * r[j];
            RootVec s = r;
            s[i] -= pairing;  // simple reflection
            bool positive = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; }) &&
                            std::any_of(s.begin(), s.end(), [](int x) { return x > 0; });
            if (positive && pos.insert(s).second) todo.push_back(s);
        }
    }
    return std::vector<RootVec>(pos.begin(), pos.end());
}

inline std::vector<RootVec> almost_positive_roots(const CartanSpec& spec) {
    auto out = positive_roots(spec);
    for (int i = 0; i < spec.rank; ++i) {
        RootVec e(spec.rank, 0);
        e[i] = -1;
        out.push_back(e);
    }
    return out;
}

// Exponents from the height distribution of positive roots (conjugate
// partition); Coxeter number = max height + 1.
struct ExponentData {
    std::vector<int> exponents;
    int coxeter = 0;
};

inline ExponentData exponents_of(const CartanSpec& spec) {
    auto pos = positive_roots(spec);
    std::map<int, int> by_height;
    int maxh = 0;
    for (auto& r : pos) {
        int h = std::accumulate(r.begin(), r.end(), 0);
        by_height[h] += 1;
        maxh = std::max(maxh, h);
    }
    ExponentData d;
    d.coxeter = maxh + 1;
    for (int i = 1;; ++i) {
        int cnt = 0;
        for (auto& [h, c] : by_height)
            if (c >= i) ++cnt;
        if (cnt == 0) break;
        d.exponents.push_back(cnt);
    }
    std::sort(d.exponents.begin(), d.exponents.end());
    return d;
}

inline Int expected_seed_count(const CartanSpec& spec) {
    auto d = exponents_of(spec);
    Rat prod(1);
    for (int e : d.exponents) prod *= Rat(e + d.coxeter + 1, e + 1);
    if (denominator(prod) != 1) throw std::logic_error("seed-count product not integral");
    return numerator(prod);
}

// The piecewise-linear involutions: coordinates at vertices of the chosen
// sign become -[a:a_i] - sum_{j!=i} a_ij * max([a:a_j], 0), others unchanged.
inline RootVec tau(int sign, const RootVec& alpha, const CartanSpec& spec) {
    RootVec out = alpha;
    for (int i = 0; i < spec.rank; ++i) {
        if (spec.eps[i] != sign) continue;
        int v = -alpha[i];
        for (int j = 0; j < spec.rank; ++j)
            if (j != i) v -= spec.a[i][j] * std::max(alpha[j], 0);
        out[i] = v;
    }
    return out;
}

}  // namespace grex
