#pragma once

#include <algorithm>
#include <cassert>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"
#include "numeric.hpp"

namespace grex {

struct LaurentViolation : std::runtime_error {
    LaurentViolation() : std::runtime_error("exchange quotient failed to divide exactly") {}
};
struct NotHomogeneous : std::runtime_error {
    NotHomogeneous() : std::runtime_error("variable expansion is not torus-homogeneous") {}
};
struct BadIndexError : std::runtime_error {
    explicit BadIndexError(const std::string& w) : std::runtime_error("bad vertex index: " + w) {}
};

struct Seed {
    std::vector<VarId> cluster;  // mutable variables, in column order
    std::vector<VarId> coeffs;   // frozen variables
    ExtMatrix mat;               // rows = cluster ++ coeffs

    int rank() const { return static_cast<int>(cluster.size()); }
};

// One exchange event: z * zp = prod(plus) + prod(minus), as monomials over
// variable ids (exponents always positive here).
struct ExchangeRelation {
    VarId z, zp;
    std::vector<std::pair<VarId, int>> plus, minus;
};

// Keeps the canonical Laurent expansion (in the initial variables) of every
// variable ever produced, deduplicates by value, and recognizes when a new
// value is a Pluecker coordinate: a torus-homogeneous function whose weight
// is a 0/1 vector summing to k is a scalar multiple of that minor, so a
// single generic evaluation settles the name (two points are used).
class Registry {
  public:
    int k = 0, n = 0;

    Registry(int k_, int n_) : k(k_), n(n_) {
        std::vector<Rat> xs1, xs2;
        for (int i = 1; i <= n; ++i) {
            xs1.push_back(Rat(i));
            xs2.push_back(Rat(i * i + i + 1, 2));
        }
        refpts_.push_back(totally_positive_point(k, n, xs1));
        refpts_.push_back(totally_positive_point(k, n, xs2));
        for (auto& p : refpts_) refassign_.push_back(all_minors(p));
    }

    const std::vector<ConfigMatrix>& reference_points() const { return refpts_; }

    // Declare an initial variable (its value is itself). Pluecker initial
    // variables need no extra data; anonymous ones must come with their toral
    // weight and exact values at the two reference points.
    void register_initial(VarId id, const std::vector<int>* weight = nullptr,
                          const std::vector<Rat>* refvals = nullptr) {
        if (values_.count(id.v)) return;
        if (id.is_pluecker()) {
            std::vector<int> w(n, 0);
            for (int x : id.pluecker_members()) w[x - 1] = 1;
            weights_[id.v] = w;
        } else {
            if (!weight || !refvals) throw std::invalid_argument("anon initial variable needs weight and values");
            weights_[id.v] = *weight;
            for (std::size_t i = 0; i < refpts_.size(); ++i) refassign_[i][id.v] = (*refvals)[i];
            next_anon_ = std::max(next_anon_, id.anon_ordinal() + 1);
        }
        LaurentPoly p = LaurentPoly::var(id);
        values_[id.v] = p;
        byhash_[p.hash()].push_back(id);
        initial_.push_back(id);
    }

    const LaurentPoly& value(VarId id) const {
        auto it = values_.find(id.v);
        if (it == values_.end()) throw std::invalid_argument("unknown variable " + id.to_string());
        return it->second;
    }
    bool known(VarId id) const { return values_.count(id.v) != 0; }
    std::size_t size() const { return values_.size(); }
    const std::vector<VarId>& initial_variables() const { return initial_; }

    std::vector<VarId> all_variables() const {
        std::vector<VarId> out;
        out.reserve(values_.size());
        for (auto& [v, p] : values_) out.push_back(VarId{v});
        std::sort(out.begin(), out.end());
        return out;
    }

    // Toral weight of an expansion; asserts homogeneity across terms.
    std::vector<int> toral_weight(const LaurentPoly& p) const {
        if (p.is_zero()) throw NotHomogeneous();
        std::vector<int> w;
        bool first = true;
        for (auto& [m, c] : p.t) {
            std::vector<int> tw(n, 0);
            for (auto& [v, e] : m.f) {
                auto it = weights_.find(v.v);
                if (it == weights_.end()) throw std::invalid_argument("no weight for " + v.to_string());
                for (int i = 0; i < n; ++i) tw[i] += e * it->second[i];
            }
            if (first) {
                w = tw;
                first = false;
            } else if (tw != w) {
                throw NotHomogeneous();
            }
        }
        return w;
    }
    std::vector<int> toral_weight(VarId id) const { return toral_weight(value(id)); }

    Rat eval_at_reference(const LaurentPoly& p, std::size_t which) const {
        return lp_eval(p, refassign_[which]);
    }

    // Deduplicating insert; names Pluecker values as such.
    VarId intern(const LaurentPoly& p) {
        std::uint64_t h = p.hash();
        auto it = byhash_.find(h);
        if (it != byhash_.end())
            for (VarId id : it->second)
                if (values_.at(id.v) == p) return id;

        VarId id{};
        std::vector<int> w = toral_weight(p);
        bool indicator = std::accumulate(w.begin(), w.end(), 0) == k &&
                         std::all_of(w.begin(), w.end(), [](int x) { return x == 0 || x == 1; });
        bool named = false;
        if (indicator) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (w[i]) members.push_back(i + 1);
            VarId cand = pluecker_var(members);
            bool match = true;
            for (std::size_t r = 0; r < refpts_.size() && match; ++r)
                match = eval_at_reference(p, r) == refassign_[r].at(cand.v);
            if (match) {
                if (values_.count(cand.v)) throw std::logic_error("two expansions claim " + cand.to_string());
                id = cand;
                named = true;
            }
        }
        if (!named) id = anon_var(next_anon_++);
        weights_[id.v] = w;
        values_[id.v] = p;
        byhash_[h].push_back(id);
        return id;
    }

    // ---- exchange memo and bookkeeping ----
    std::unordered_map<std::string, VarId> exchange_memo;
    std::vector<ExchangeRelation> relations;

    const std::vector<int>& weight_of(VarId id) const { return weights_.at(id.v); }

  private:
    std::vector<ConfigMatrix> refpts_;
    std::vector<std::unordered_map<std::uint64_t, Rat>> refassign_;
    std::unordered_map<std::uint64_t, LaurentPoly> values_;
    std::unordered_map<std::uint64_t, std::vector<VarId>> byhash_;
    std::unordered_map<std::uint64_t, std::vector<int>> weights_;
    std::vector<VarId> initial_;
    std::uint32_t next_anon_ = 0;
};

namespace detail {
inline void append_u64(std::string& s, std::uint64_t v) {
    char buf[8];
    std::memcpy(buf, &v, 8);
    s.append(buf, 8);
}
inline std::string mono_key(const std::vector<std::pair<VarId, int>>& m) {
    std::string s;
    for (auto& [v, e] : m) {
        append_u64(s, v.v);
        append_u64(s, static_cast<std::uint64_t>(e));
    }
    return s;
}
}  // namespace detail

inline Seed seed_mutate(const Seed& s, int i, Registry& reg) {
    if (i < 0 || i >= s.rank()) throw NotMutable();
    VarId z = s.cluster[i];

    std::vector<std::pair<VarId, int>> plus, minus;
    for (int r = 0; r < s.mat.nrows(); ++r) {
        int e = s.mat.e[r][i];
        if (e > 0) plus.push_back({s.mat.rows[r], e});
        if (e < 0) minus.push_back({s.mat.rows[r], -e});
    }
    auto by_var = [](auto& a, auto& b) { return a.first < b.first; };
    std::sort(plus.begin(), plus.end(), by_var);
    std::sort(minus.begin(), minus.end(), by_var);

    std::string ka = detail::mono_key(plus), kb = detail::mono_key(minus);
    if (kb < ka) {
        std::swap(ka, kb);
        std::swap(plus, minus);
    }
    std::string key;
    detail::append_u64(key, z.v);
    key += ka;
    key += "|";
    key += kb;

    VarId zp{};
    auto memo_it = reg.exchange_memo.find(key);
    if (memo_it != reg.exchange_memo.end()) {
        zp = memo_it->second;
    } else {
        auto expand = [&](const std::vector<std::pair<VarId, int>>& m) {
            LaurentPoly p = LaurentPoly::constant(Rat(1));
            for (auto& [v, e] : m) p = lp_mul(p, lp_pow(reg.value(v), e));
            return p;
        };
        LaurentPoly num = lp_add(expand(plus), expand(minus));
        LaurentPoly zpval;
        try {
            zpval = lp_div_exact(num, reg.value(z));
        } catch (const NotDivisible&) {
            throw LaurentViolation();
        }
        zp = reg.intern(zpval);
        reg.exchange_memo[key] = zp;
        std::string rkey;
        detail::append_u64(rkey, zp.v);
        rkey += ka;
        rkey += "|";
        rkey += kb;
        reg.exchange_memo[rkey] = z;
        reg.relations.push_back({z, zp, plus, minus});
    }
    if (zp == z) throw std::logic_error("mutation returned the same variable");

    Seed t = s;
    t.mat = matrix_mutate(s.mat, i);
    t.cluster[i] = zp;
    t.mat.rows[i] = zp;
    return t;
}

inline std::string cluster_key(const Seed& s) {
    std::vector<std::uint64_t> ids;
    ids.reserve(s.cluster.size());
    for (VarId v : s.cluster) ids.push_back(v.v);
    std::sort(ids.begin(), ids.end());
    std::string key;
    for (auto v : ids) detail::append_u64(key, v);
    return key;
}

// Rows/columns reordered by variable id -- used to assert that two seeds with
// the same cluster carry the same matrix.
inline std::vector<std::vector<int>> canonical_matrix(const Seed& s) {
    int N = s.rank(), M = s.mat.nrows();
    std::vector<int> cperm(N), rperm(M - N);
    std::iota(cperm.begin(), cperm.end(), 0);
    std::sort(cperm.begin(), cperm.end(), [&](int a, int b) { return s.cluster[a] < s.cluster[b]; });
    std::iota(rperm.begin(), rperm.end(), N);
    std::sort(rperm.begin(), rperm.end(), [&](int a, int b) { return s.mat.rows[a] < s.mat.rows[b]; });
    std::vector<std::vector<int>> out(M, std::vector<int>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out[i][j] = s.mat.e[cperm[i]][cperm[j]];
    for (int i = N; i < M; ++i)
        for (int j = 0; j < N; ++j) out[i][j] = s.mat.e[rperm[i - N]][cperm[j]];
    return out;
}

struct ExchangeGraph {
    std::vector<Seed> seeds;
    std::vector<int> depth;
    std::vector<std::vector<int>> adj;  // adj[s][i] = neighbor index (-1 unexplored)
    std::unordered_map<std::string, int> index;
    bool closed = false;
};

struct ExploreCaps {
    std::size_t max_seeds = 100000;
    std::size_t max_variables = 10000;
};

inline ExchangeGraph explore(const Seed& s0, Registry& reg, ExploreCaps caps = {}) {
    ExchangeGraph g;
    const int N = s0.rank();
    g.seeds.push_back(s0);
    g.depth.push_back(0);
    g.adj.push_back(std::vector<int>(N, -1));
    g.index[cluster_key(s0)] = 0;

    std::deque<std::size_t> frontier{0};
    bool capped = false;
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (int i = 0; i < N; ++i) {
            if (g.adj[cur][i] != -1) continue;
            Seed t = seed_mutate(g.seeds[cur], i, reg);
            if (!t.mat.principal_skew_symmetric())
                throw std::logic_error("mutation broke skew-symmetry");
            std::string key = cluster_key(t);
            auto it = g.index.find(key);
            int ti;
            if (it != g.index.end()) {
                ti = it->second;
                if (canonical_matrix(t) != canonical_matrix(g.seeds[ti]))
                    throw std::logic_error("same cluster, different exchange matrix");
            } else {
                if (g.seeds.size() >= caps.max_seeds || reg.size() > caps.max_variables) {
                    capped = true;
                    continue;
                }
                ti = static_cast<int>(g.seeds.size());
                g.seeds.push_back(t);
                g.depth.push_back(g.depth[cur] + 1);
                g.adj.push_back(std::vector<int>(N, -1));
                g.index[key] = ti;
                frontier.push_back(ti);
            }
            g.adj[cur][i] = ti;
        }
        if (capped) break;
    }
    g.closed = !capped && frontier.empty();
    if (g.closed) {
        for (std::size_t sidx = 0; sidx < g.seeds.size(); ++sidx) {
            std::set<int> nb;
            for (int i = 0; i < N; ++i) {
                if (g.adj[sidx][i] == -1) {
                    Seed t = seed_mutate(g.seeds[sidx], i, reg);
                    g.adj[sidx][i] = g.index.at(cluster_key(t));
                }
                nb.insert(g.adj[sidx][i]);
            }
            if (static_cast<int>(nb.size()) != N)
                throw std::logic_error("exchange graph is not N-regular");
        }
    }
    return g;
}

// Applies mutations by the builder-exposed vertex numbering: numbering[x-1]
// is the cluster position of figure vertex x.
inline Seed run_mutation_sequence(const Seed& s0, const std::vector<int>& seq,
                                  const std::vector<int>& numbering, Registry& reg) {
    Seed s = s0;
    for (int x : seq) {
        if (x < 1 || x > static_cast<int>(numbering.size())) throw BadIndexError(std::to_string(x));
        s = seed_mutate(s, numbering[x - 1], reg);
    }
    return s;
}

}  // namespace grex
