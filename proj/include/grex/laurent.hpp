#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rational.hpp"
#include "varid.hpp"

namespace grex {

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact Laurent division failed") {}
};
struct DivideByZero : std::runtime_error {
    DivideByZero() : std::runtime_error("division by zero polynomial") {}
};
struct MissingVariable : std::runtime_error {
    explicit MissingVariable(const std::string& v) : std::runtime_error("no value for variable " + v) {}
};
struct ZeroToNegativePower : std::runtime_error {
    ZeroToNegativePower() : std::runtime_error("zero raised to a negative power") {}
};

using Exp = std::int32_t;

// Sparse exponent vector, factors sorted by VarId, no zero exponents.
struct Monomial {
    std::vector<std::pair<VarId, Exp>> f;

    bool operator==(const Monomial& o) const { return f == o.f; }
    bool is_unit() const { return f.empty(); }

    long long degree() const {
        long long d = 0;
        for (auto& [v, e] : f) d += e;
        return d;
    }

    Exp exponent_of(VarId v) const {
        auto it = std::lower_bound(f.begin(), f.end(), v,
                                   [](const std::pair<VarId, Exp>& p, VarId x) { return p.first < x; });
        return (it != f.end() && it->first == v) ? it->second : 0;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 14695981039346656037ULL;
        for (auto& [v, e] : f) {
            h = hash_combine(h, v.v);
            h = hash_combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(e)));
        }
        return h;
    }
};

// Graded-lex: higher total degree first, ties by exponents along the global
// variable order (smaller VarId = earlier); larger exponent earlier wins.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    std::size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        if (i == a.f.size()) {
            // a has exponent 0 on b's next variable
            return b.f[j].second > 0 ? -1 : 1;
        }
        if (j == b.f.size()) {
            return a.f[i].second > 0 ? 1 : -1;
        }
        if (a.f[i].first.v != b.f[j].first.v) {
            if (a.f[i].first.v < b.f[j].first.v) return a.f[i].second > 0 ? 1 : -1;
            return b.f[j].second > 0 ? -1 : 1;
        }
        if (a.f[i].second != b.f[j].second) return a.f[i].second > b.f[j].second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f.reserve(a.f.size() + b.f.size());
    std::size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        if (j == b.f.size() || (i < a.f.size() && a.f[i].first < b.f[j].first)) {
            r.f.push_back(a.f[i++]);
        } else if (i == a.f.size() || b.f[j].first < a.f[i].first) {
            r.f.push_back(b.f[j++]);
        } else {
            Exp e = a.f[i].second + b.f[j].second;
            if (e != 0) r.f.push_back({a.f[i].first, e});
            ++i, ++j;
        }
    }
    return r;
}

inline Monomial mono_inv(const Monomial& a) {
    Monomial r = a;
    for (auto& [v, e] : r.f) e = -e;
    return r;
}

// a / b in the polynomial sense; false when some exponent would go negative.
inline bool mono_try_div(const Monomial& a, const Monomial& b, Monomial& out) {
    out.f.clear();
    std::size_t i = 0;
    for (auto& [v, e] : b.f) {
        while (i < a.f.size() && a.f[i].first < v) out.f.push_back(a.f[i++]);
        if (i == a.f.size() || !(a.f[i].first == v) || a.f[i].second < e) return false;
        if (a.f[i].second > e) out.f.push_back({v, a.f[i].second - e});
        ++i;
    }
    while (i < a.f.size()) out.f.push_back(a.f[i++]);
    return true;
}

// Terms kept sorted descending by mono_cmp (leading term first).
struct LaurentPoly {
    std::vector<std::pair<Monomial, Rat>> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const LaurentPoly& o) const { return t == o.t; }

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(const Rat& c) {
        LaurentPoly p;
        if (c != 0) p.t.push_back({Monomial{}, c});
        return p;
    }
    static LaurentPoly var(VarId v, Exp e = 1) {
        LaurentPoly p;
        Monomial m;
        if (e != 0) m.f.push_back({v, e});
        p.t.push_back({m, Rat(1)});
        return p;
    }
    static LaurentPoly monomial(const Monomial& m, const Rat& c) {
        LaurentPoly p;
        if (c != 0) p.t.push_back({m, c});
        return p;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 14695981039346656037ULL;
        for (auto& [m, c] : t) {
            h = hash_combine(h, m.hash());
            h = hash_string(numerator(c).str(), h);
            h = hash_string(denominator(c).str(), h);
        }
        return h;
    }
};

inline LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        int c;
        if (i == a.t.size())
            c = -1;
        else if (j == b.t.size())
            c = 1;
        else
            c = mono_cmp(a.t[i].first, b.t[j].first);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            Rat s = a.t[i].second + b.t[j].second;
            if (s != 0) r.t.push_back({a.t[i].first, s});
            ++i, ++j;
        }
    }
    return r;
}

inline LaurentPoly lp_neg(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [m, c] : r.t) c = -c;
    return r;
}

inline LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) { return lp_add(a, lp_neg(b)); }

inline LaurentPoly lp_scale(const LaurentPoly& a, const Rat& c) {
    if (c == 0) return {};
    LaurentPoly r = a;
    for (auto& [m, co] : r.t) co *= c;
    return r;
}

inline LaurentPoly lp_mul_term(const LaurentPoly& a, const Monomial& m, const Rat& c) {
    if (c == 0) return {};
    LaurentPoly r;
    r.t.reserve(a.t.size());
    for (auto& [ma, ca] : a.t) r.t.push_back({mono_mul(ma, m), ca * c});
    // multiplying by a fixed monomial preserves the term order
    return r;
}

inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.t.size() == 1) return lp_mul_term(b, a.t[0].first, a.t[0].second);
    if (b.t.size() == 1) return lp_mul_term(a, b.t[0].first, b.t[0].second);
    // hash-accumulate then sort once
    struct Slot {
        Monomial m;
        Rat c;
    };
    std::unordered_map<std::uint64_t, std::vector<Slot>> acc;
    acc.reserve(a.t.size() * b.t.size() / 2 + 8);
    for (auto& [ma, ca] : a.t) {
        for (auto& [mb, cb] : b.t) {
            Monomial m = mono_mul(ma, mb);
            auto& bucket = acc[m.hash()];
            bool found = false;
            for (auto& s : bucket) {
                if (s.m == m) {
                    s.c += ca * cb;
                    found = true;
                    break;
                }
            }
            if (!found) bucket.push_back({std::move(m), ca * cb});
        }
    }
    LaurentPoly r;
    for (auto& [h, bucket] : acc)
        for (auto& s : bucket)
            if (s.c != 0) r.t.push_back({std::move(s.m), std::move(s.c)});
    std::sort(r.t.begin(), r.t.end(),
              [](const auto& x, const auto& y) { return mono_cmp(x.first, y.first) > 0; });
    return r;
}

inline LaurentPoly lp_pow(const LaurentPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("lp_pow: negative exponent");
    LaurentPoly r = LaurentPoly::constant(Rat(1));
    LaurentPoly base = a;
    while (e > 0) {
        if (e & 1) r = lp_mul(r, base);
        e >>= 1;
        if (e) base = lp_mul(base, base);
    }
    return r;
}

// Per-variable minimal exponent over all terms of p (variables present only
// with positive exponents get their minimum vs 0 from absent occurrences only
// if absent in some term -- here we want the true valuation: min over terms of
// the exponent, where a term not containing v has exponent 0 unless v occurs
// in no term at all).
inline std::map<std::uint64_t, Exp> lp_valuations(const LaurentPoly& p) {
    std::map<std::uint64_t, Exp> mins;  // VarId.v -> min exponent
    bool first = true;
    std::map<std::uint64_t, Exp> seen_count;
    for (auto& [m, c] : p.t) {
        for (auto& [v, e] : m.f) {
            auto it = mins.find(v.v);
            if (it == mins.end())
                mins[v.v] = e;
            else
                it->second = std::min(it->second, e);
            seen_count[v.v] += 1;
        }
        (void)first;
    }
    // a variable absent from some term has valuation at most 0
    for (auto& [v, cnt] : seen_count)
        if (static_cast<std::size_t>(cnt) < p.t.size()) mins[v] = std::min(mins[v], 0);
    return mins;
}

// Exact division in the Laurent ring: returns q with q*den == num, or throws
// NotDivisible. Strategy: shift both operands to honest polynomials with
// per-variable valuation 0, long-divide by leading terms, and shift back.
inline LaurentPoly lp_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivideByZero();
    if (num.is_zero()) return {};

    auto shift_of = [](const LaurentPoly& p) {
        Monomial s;
        for (auto& [v, e] : lp_valuations(p))
            if (e != 0) s.f.push_back({VarId{v}, static_cast<Exp>(-e)});
        return s;  // multiply by this to clear negative exponents down to val 0
    };
    Monomial snum = shift_of(num), sden = shift_of(den);
    LaurentPoly P = lp_mul_term(num, snum, Rat(1));
    LaurentPoly Q = lp_mul_term(den, sden, Rat(1));

    LaurentPoly q;
    Monomial mq;
    while (!P.is_zero()) {
        if (!mono_try_div(P.t[0].first, Q.t[0].first, mq)) throw NotDivisible();
        Rat c = P.t[0].second / Q.t[0].second;
        q.t.push_back({mq, c});
        P = lp_sub(P, lp_mul_term(Q, mq, c));
    }
    // q as computed satisfies q*Q == P; undo the shifts: result = q * sden / snum.
    Monomial back = mono_mul(sden, mono_inv(snum));
    LaurentPoly r = lp_mul_term(q, back, Rat(1));
    std::sort(r.t.begin(), r.t.end(),
              [](const auto& x, const auto& y) { return mono_cmp(x.first, y.first) > 0; });
    return r;
}

inline Rat rat_pow(const Rat& r, int e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned ue = static_cast<unsigned>(neg ? -e : e);
    if (neg && r == 0) throw ZeroToNegativePower();
    Int n = boost::multiprecision::pow(numerator(r), ue);
    Int d = boost::multiprecision::pow(denominator(r), ue);
    Rat out(n, d);
    if (neg) out = Rat(1) / out;
    return out;
}

template <class Map>
inline Rat lp_eval(const LaurentPoly& p, const Map& assignment) {
    Rat total(0);
    for (auto& [m, c] : p.t) {
        Rat term = c;
        for (auto& [v, e] : m.f) {
            auto it = assignment.find(v.v);
            if (it == assignment.end()) throw MissingVariable(v.to_string());
            term *= rat_pow(it->second, e);
        }
        total += term;
    }
    return total;
}

// Entry per cluster variable: the exponent of its monomial denominator, i.e.
// the negated minimal exponent over all terms (0 when the variable is absent
// from the denominator).
inline std::vector<int> lp_denominator_vector(const LaurentPoly& p, const std::vector<VarId>& cluster) {
    std::vector<int> out(cluster.size(), 0);
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        Exp mn = 0;
        bool any = false;
        for (auto& [m, c] : p.t) {
            Exp e = m.exponent_of(cluster[i]);
            if (!any || e < mn) mn = e;
            any = true;
        }
        out[i] = -static_cast<int>(mn);
    }
    return out;
}

// ---- canonical text form ----------------------------------------------------

inline std::string mono_to_string(const Monomial& m) {
    std::string s;
    for (auto& [v, e] : m.f) {
        s += "*";
        s += v.to_string();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string lp_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.t.size(); ++i) {
        if (i) s += " + ";
        s += rat_to_string(p.t[i].second);
        s += mono_to_string(p.t[i].first);
    }
    return s;
}

inline LaurentPoly lp_parse(const std::string& s) {
    LaurentPoly p;
    if (s == "0") return p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(" + ", pos);
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end + 3;

        std::size_t star = term.find('*');
        std::string coeff = term.substr(0, star);
        std::size_t slash = coeff.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("lp_parse: bad coefficient '" + coeff + "'");
        Rat c(Int(coeff.substr(0, slash)), Int(coeff.substr(slash + 1)));
        Monomial m;
        while (star != std::string::npos) {
            std::size_t next = term.find('*', star + 1);
            std::string fac = term.substr(star + 1, next == std::string::npos ? std::string::npos : next - star - 1);
            std::size_t caret = fac.rfind('^');
            // beware: '^' cannot occur inside a variable token
            Exp e = 1;
            std::string vtok = fac;
            if (caret != std::string::npos && fac.find(']', caret) == std::string::npos) {
                e = static_cast<Exp>(std::stol(fac.substr(caret + 1)));
                vtok = fac.substr(0, caret);
            }
            m.f.push_back({parse_varid(vtok), e});
            star = next;
        }
        std::sort(m.f.begin(), m.f.end(), [](auto& a, auto& b) { return a.first < b.first; });
        p.t.push_back({std::move(m), std::move(c)});
    }
    std::sort(p.t.begin(), p.t.end(),
              [](const auto& x, const auto& y) { return mono_cmp(x.first, y.first) > 0; });
    return p;
}

}  // namespace grex
