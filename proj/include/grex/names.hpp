#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "figures.hpp"
#include "seed.hpp"
#include "tables.hpp"

namespace grex {

// Substitutes every variable of p by its registry expansion; p must be an
// honest polynomial (nonnegative exponents).
inline LaurentPoly lp_compose(const LaurentPoly& p, const Registry& reg) {
    LaurentPoly out;
    for (auto& [m, c] : p.t) {
        LaurentPoly term = LaurentPoly::constant(c);
        for (auto& [v, e] : m.f) {
            if (e < 0) throw std::invalid_argument("composition needs nonnegative exponents");
            term = lp_mul(term, lp_pow(reg.value(v), e));
        }
        out = lp_add(out, term);
    }
    return out;
}

inline std::vector<int> rotated_indices(int n, int j) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) out.push_back((i - 1 + j) % n + 1);
    return out;
}

inline std::vector<int> reflected_indices(int n, int j) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) out.push_back(((j - i) % n + n) % n + 1);
    return out;
}

// Exact polynomial (in the registry's initial variables) for an exactly-named
// table entry; A/B orbit names return nullopt and are handled at orbit level.
inline std::optional<LaurentPoly> table_name_to_poly(const std::string& name, const Registry& reg) {
    if (name.rfind("p[", 0) == 0) return reg.value(parse_varid(name));
    if ((name[0] == 'X' || name[0] == 'Y') && name.size() > 1 && std::isdigit(name[1])) {
        std::vector<int> idx;
        for (std::size_t i = 1; i < name.size(); ++i) idx.push_back(name[i] - '0');
        return lp_compose(special_function(name[0], idx), reg);
    }
    return std::nullopt;
}

// All dihedral images of the two cubic functions, composed into the
// registry's initial variables.  A is invariant under the reflections, so its
// orbit is the 8 rotations; B has the full orbit of 16.
inline std::vector<LaurentPoly> special_orbit(char name, int n, const Registry& reg) {
    std::vector<LaurentPoly> out;
    for (int j = 0; j < n; ++j) {
        out.push_back(lp_compose(special_function(name, rotated_indices(n, j)), reg));
        if (name == 'B') out.push_back(lp_compose(special_function(name, reflected_indices(n, j)), reg));
    }
    return out;
}

// Dihedral translates of a cluster variable are cluster variables only up to
// sign, so orbit membership is tested sign-insensitively.
inline bool in_orbit_up_to_sign(const LaurentPoly& p, const std::vector<LaurentPoly>& orbit) {
    for (auto& q : orbit)
        if (p == q || p == lp_scale(q, Rat(-1))) return true;
    return false;
}

struct CorrespondenceReport {
    std::string type;                     // "D4", "E6", "E8"
    bool sequence_reaches_dynkin = false; // quiver recognized + bipartite
    bool bijection_ok = false;            // denominator vectors <-> almost positive roots
    int rows_checked = 0;
    int exact_rows = 0;    // rows named p/X/Y, verified by polynomial identity
    int orbit_rows = 0;    // A/B rows, verified by orbit membership + weights
    std::vector<std::string> failures;
};

// Checks the root-coefficient table against the tree-shaped seed: each
// almost positive root must pick out exactly one cluster variable (via its
// denominator vector in the tree-seed cluster), and that variable must
// expand to the named function.
//
// The seed comes out of a closed exploration, so the registry already holds
// every variable and every exchange relation of the algebra, and all
// identity checks run in the registry's own chart.  Denominator vectors
// with respect to the tree cluster are computed by univariate
// specialization: fix a direction, set that tree variable to t and every
// other tree variable and coefficient to a positive constant, and propagate
// values through the recorded exchange relations.  Positivity of the
// Laurent numerators rules out cancellation, so the pole order at t = 0 is
// exactly the denominator exponent in that direction.  This avoids
// re-expanding any variable symbolically in the tree chart, where the
// expansions are far larger than in the original chart.
inline CorrespondenceReport correspondence_check(int k, int n, const Seed& dynseed, Registry& reg1,
                                                 const std::string& table_text) {
    (void)k;
    CorrespondenceReport rep;
    auto specOpt = recognize_dynkin(Quiver::of(dynseed.mat));
    if (!specOpt || !bipartite_orientation(Quiver::of(dynseed.mat))) {
        rep.failures.push_back("seed is not a bipartite tree-shape seed");
        return rep;
    }
    CartanSpec spec = *specOpt;
    rep.type = spec.name;
    rep.sequence_reaches_dynkin = true;
    const int N = spec.rank;

    std::set<std::uint64_t> frozen;
    for (VarId c : dynseed.coeffs) frozen.insert(c.v);
    const std::vector<VarId> vars = reg1.all_variables();
    std::map<std::uint64_t, std::vector<int>> dv_of;
    for (VarId v : vars)
        if (!frozen.count(v.v)) dv_of[v.v] = std::vector<int>(N, 0);

    const VarId tvar{~std::uint64_t{0}};  // cannot collide with interned ids
    for (int dir = 0; dir < N; ++dir) {
        std::unordered_map<std::uint64_t, LaurentPoly> val;
        val.reserve(vars.size());
        for (int j = 0; j < N; ++j)
            val[dynseed.cluster[j].v] =
                j == dir ? LaurentPoly::var(tvar) : LaurentPoly::constant(Rat(j + 2));
        int c = N + 2;
        for (VarId f : dynseed.coeffs) val[f.v] = LaurentPoly::constant(Rat(c++));
        auto expand = [&](const std::vector<std::pair<VarId, int>>& m) {
            LaurentPoly p = LaurentPoly::constant(Rat(1));
            for (auto& [u, e] : m) p = lp_mul(p, lp_pow(val.at(u.v), e));
            return p;
        };
        bool progress = true;
        while (progress && val.size() < vars.size()) {
            progress = false;
            for (const auto& rel : reg1.relations) {
                bool zk = val.count(rel.z.v) != 0, zpk = val.count(rel.zp.v) != 0;
                if (zk == zpk) continue;
                bool ready = true;
                for (auto& [u, e] : rel.plus)
                    if (!val.count(u.v)) ready = false;
                for (auto& [u, e] : rel.minus)
                    if (!val.count(u.v)) ready = false;
                if (!ready) continue;
                LaurentPoly num = lp_add(expand(rel.plus), expand(rel.minus));
                val[(zk ? rel.zp : rel.z).v] = lp_div_exact(num, val.at((zk ? rel.z : rel.zp).v));
                progress = true;
            }
        }
        if (val.size() < vars.size()) {
            rep.failures.push_back("relation set does not reach every variable");
            return rep;
        }
        for (auto& [id, dv] : dv_of) {
            int low = 0;
            bool first = true;
            for (auto& [m, co] : val.at(id).t) {
                int e = 0;
                for (auto& [u, ex] : m.f)
                    if (u.v == tvar.v) e = ex;
                if (first || e < low) low = e, first = false;
            }
            dv[dir] = -low;
        }
    }

    // Denominator vectors of all mutable variables, in seed-column order.
    std::map<std::vector<int>, std::vector<VarId>> by_dvec;
    int mutable_count = 0;
    for (VarId v : vars) {
        if (frozen.count(v.v)) continue;
        ++mutable_count;
        by_dvec[dv_of[v.v]].push_back(v);
    }

    auto roots = almost_positive_roots(spec);
    rep.bijection_ok = static_cast<int>(roots.size()) == mutable_count;

    auto rows = parse_table(table_text, N);
    std::vector<LaurentPoly> orbitA, orbitB;
    if (n == 8) {
        orbitA = special_orbit('A', 8, reg1);
        orbitB = special_orbit('B', 8, reg1);
    }

    // Try every isomorphism of the seed's tree onto the fixed Cartan
    // numbering; the tables pin down which one is meant.
    auto edges = dynkin_edges(spec.name);
    std::vector<int> perm(N);  // perm[a-1] = seed column of Cartan vertex a
    std::iota(perm.begin(), perm.end(), 0);
    CorrespondenceReport best = rep;
    bool have_best = false;
    do {
        bool iso = true;
        int cnt = 0;
        for (int a = 1; a <= N && iso; ++a)
            for (int b = a + 1; b <= N && iso; ++b) {
                bool want = false;
                for (auto& [x, y] : edges)
                    if ((x == a && y == b) || (x == b && y == a)) want = true;
                bool have = dynseed.mat.e[perm[a - 1]][perm[b - 1]] != 0;
                if (want != have) iso = false;
                if (have) ++cnt;
            }
        if (!iso) continue;

        CorrespondenceReport cand = rep;
        for (auto& row : rows) {
            ++cand.rows_checked;
            // table coefficients are in Cartan order; translate to columns
            std::vector<int> dv(N);
            for (int a = 1; a <= N; ++a) dv[perm[a - 1]] = row.coeffs[a - 1];
            // reorder to match by_dvec key order (seed-column order)
            auto it = by_dvec.find(dv);
            if (it == by_dvec.end() || it->second.size() != 1) {
                cand.failures.push_back("no unique variable for root of " + row.name);
                continue;
            }
            VarId v = it->second[0];
            if (auto poly = table_name_to_poly(row.name, reg1)) {
                if (reg1.value(v) == *poly)
                    ++cand.exact_rows;
                else
                    cand.failures.push_back("expansion mismatch for " + row.name);
            } else {
                // A/B rows: exact orbit membership (the specific dihedral
                // element in the name is a presentation choice)
                const auto& orbit = row.name[0] == 'A' ? orbitA : orbitB;
                bool hit = in_orbit_up_to_sign(reg1.value(v), orbit);
                // both cubic families are degree 3 with one doubled index
                std::vector<int> w = reg1.toral_weight(v);
                std::sort(w.begin(), w.end());
                bool weight_ok = w == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 2};
                if (hit && weight_ok)
                    ++cand.orbit_rows;
                else
                    cand.failures.push_back("orbit mismatch for " + row.name);
            }
        }
        if (!have_best || cand.failures.size() < best.failures.size()) {
            best = cand;
            have_best = true;
        }
        if (best.failures.empty()) break;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!have_best) rep.failures.push_back("no tree isomorphism found");
    return have_best ? best : rep;
}

}  // namespace grex
