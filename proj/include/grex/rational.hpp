#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace grex {

// Exact arbitrary-precision rational. Canonical form (reduced, positive
// denominator) is maintained by GMP itself.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// 64-bit FNV-1a, the repo-wide stable hash primitive.
inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 14695981039346656037ULL) {
    auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return fnv1a(&v, sizeof v, h);
}

inline std::uint64_t hash_string(const std::string& s, std::uint64_t h = 14695981039346656037ULL) {
    return fnv1a(s.data(), s.size(), h);
}

}  // namespace grex
