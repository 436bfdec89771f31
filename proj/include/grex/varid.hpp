#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksubset.hpp"

namespace grex {

// A variable name packed into 64 bits so that plain integer comparison gives
// the global term order: all Pluecker variables (sorted by (k, lexicographic
// subset)) precede all anonymous ones (sorted by ordinal).
//
// Pluecker layout: bit63 = 0, bits 56..60 = k, element i (0-based, <= 7)
// in bits [49-7i .. 55-7i]. Supports k <= 8, n <= 127 -- ample here.
// Anon layout: bit63 = 1, low 32 bits = ordinal.
struct VarId {
    std::uint64_t v = 0;

    bool operator==(const VarId& o) const { return v == o.v; }
    bool operator!=(const VarId& o) const { return v != o.v; }
    bool operator<(const VarId& o) const { return v < o.v; }

    bool is_anon() const { return (v >> 63) != 0; }
    bool is_pluecker() const { return !is_anon(); }

    std::uint32_t anon_ordinal() const { return static_cast<std::uint32_t>(v & 0xffffffffu); }

    int pluecker_k() const { return static_cast<int>((v >> 56) & 0x1f); }

    std::vector<int> pluecker_members() const {
        int k = pluecker_k();
        std::vector<int> m(k);
        for (int i = 0; i < k; ++i) m[i] = static_cast<int>((v >> (49 - 7 * i)) & 0x7f);
        return m;
    }

    std::string to_string() const {
        if (is_anon()) return "a" + std::to_string(anon_ordinal());
        std::string s = "p[";
        auto m = pluecker_members();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(m[i]);
        }
        return s + "]";
    }
};

inline VarId pluecker_var(const std::vector<int>& sorted_members) {
    int k = static_cast<int>(sorted_members.size());
    if (k < 1 || k > 8) throw std::invalid_argument("pluecker_var: k out of packed range");
    std::uint64_t v = static_cast<std::uint64_t>(k) << 56;
    for (int i = 0; i < k; ++i) {
        int e = sorted_members[i];
        if (e < 1 || e > 127) throw std::invalid_argument("pluecker_var: element out of range");
        if (i && sorted_members[i - 1] >= e) throw std::invalid_argument("pluecker_var: not increasing");
        v |= static_cast<std::uint64_t>(e) << (49 - 7 * i);
    }
    return VarId{v};
}

inline VarId pluecker_var(const KSubset& K) { return pluecker_var(K.members); }

inline VarId anon_var(std::uint32_t ordinal) {
    return VarId{(1ULL << 63) | static_cast<std::uint64_t>(ordinal)};
}

inline KSubset var_to_ksubset(VarId id, int n) {
    if (!id.is_pluecker()) throw std::invalid_argument("var_to_ksubset: anon variable");
    return KSubset(n, id.pluecker_members());
}

// Parses "p[1,3,6]" or "a17".
inline VarId parse_varid(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_varid: empty");
    if (s[0] == 'a') return anon_var(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
    if (s[0] != 'p' || s.size() < 4 || s[1] != '[' || s.back() != ']')
        throw std::invalid_argument("parse_varid: bad form '" + s + "'");
    std::vector<int> m;
    std::size_t i = 2;
    while (i < s.size() - 1) {
        std::size_t j = s.find_first_of(",]", i);
        m.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return pluecker_var(m);
}

}  // namespace grex
