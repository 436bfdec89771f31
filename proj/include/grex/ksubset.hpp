#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace grex {

// A k-element subset of [1..n], kept strictly increasing.
struct KSubset {
    int n = 0;
    std::vector<int> members;

    KSubset() = default;
    KSubset(int n_, std::vector<int> m) : n(n_), members(std::move(m)) {
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            if (members[i] == members[i + 1]) throw std::invalid_argument("KSubset: repeated element");
        if (!members.empty() && (members.front() < 1 || members.back() > n))
            throw std::invalid_argument("KSubset: element out of range");
    }

    int k() const { return static_cast<int>(members.size()); }
    bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }

    bool operator==(const KSubset& o) const { return n == o.n && members == o.members; }
    bool operator<(const KSubset& o) const {
        if (members.size() != o.members.size()) return members.size() < o.members.size();
        return members < o.members;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(members[i]);
        }
        return s + "]";
    }
};

inline int mod1(int x, int n) {  // representative in [1..n]
    int r = x % n;
    return r <= 0 ? r + n : r;
}

// Cyclic interval [a, a+len-1] taken mod n.
inline std::vector<int> cyclic_interval(int a, int len, int n) {
    std::vector<int> v;
    v.reserve(len);
    for (int i = 0; i < len; ++i) v.push_back(mod1(a + i, n));
    return v;
}

// The n frozen boundary labels [i .. i+k-1] mod n, in order of starting point.
inline std::vector<KSubset> boundary_intervals(int k, int n) {
    std::vector<KSubset> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.emplace_back(n, cyclic_interval(i, k, n));
    return out;
}

struct Chord {
    int n = 0;
    int a = 0, b = 0;  // unordered; stored a < b
    Chord() = default;
    Chord(int n_, int x, int y) : n(n_), a(std::min(x, y)), b(std::max(x, y)) {
        if (a == b || a < 1 || b > n) throw std::invalid_argument("Chord: bad endpoints");
    }
    bool operator==(const Chord& o) const { return n == o.n && a == o.a && b == o.b; }
    bool operator<(const Chord& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

// True iff the chords meet in the open interior of the polygon:
// endpoints strictly interleave; a shared endpoint never crosses.
inline bool chords_cross(const Chord& c1, const Chord& c2) {
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
    bool a_in = c1.a < c2.b && c1.a > c2.a;
    bool b_in = c1.b < c2.b && c1.b > c2.a;
    return a_in != b_in;
}

// Weak separation: no chord over I-J crosses a chord over J-I, i.e. the two
// difference sets occupy at most two cyclic blocks around the circle.
inline bool weakly_separated(const KSubset& I, const KSubset& J) {
    assert(I.n == J.n);
    std::vector<std::pair<int, int>> marks;  // (position, side)
    for (int x : I.members)
        if (!J.contains(x)) marks.push_back({x, 0});
    for (int x : J.members)
        if (!I.contains(x)) marks.push_back({x, 1});
    if (marks.empty()) return true;
    std::sort(marks.begin(), marks.end());
    int transitions = 0;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i].second != marks[(i + 1) % marks.size()].second) ++transitions;
    }
    return transitions <= 2;
}

// The permutation i -> i+k mod n.
struct GrassmannPermutation {
    int k, n;
    GrassmannPermutation(int k_, int n_) : k(k_), n(n_) {}
    int operator()(int i) const { return mod1(i + k, n); }
};

}  // namespace grex
