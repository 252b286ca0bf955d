#ifndef GWIDTH_SUBSET_HPP
#define GWIDTH_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace gwidth {

// Vertex subsets of a ground set [n+1] as bitmasks; bit (v-1) holds vertex v.
// Labels are 1-based throughout, matching the usual [n+1] convention.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

inline Subset singleton(int v) { return Subset{1} << (v - 1); }

inline Subset full_subset(int n) {
    return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline bool subset_contains(Subset s, int v) { return (s >> (v - 1)) & 1; }

inline int cardinality(Subset s) { return std::popcount(s); }

inline bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

// Smallest member; s must be nonempty.
inline int min_element(Subset s) { return std::countr_zero(s) + 1; }

inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality(s)));
    while (s != 0) {
        out.push_back(min_element(s));
        s &= s - 1;
    }
    return out;
}

inline Subset subset_of(const std::vector<int>& vs) {
    Subset s = 0;
    for (int v : vs) s |= singleton(v);
    return s;
}

// Lexicographic order on ascending element sequences ({1,4} < {2,3}).
inline bool lex_less(Subset a, Subset b) {
    while (a != 0 && b != 0) {
        int ea = min_element(a);
        int eb = min_element(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Canonical order for building-set members: cardinality, then lexicographic.
inline bool canonical_less(Subset a, Subset b) {
    int ca = cardinality(a);
    int cb = cardinality(b);
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

inline std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int v : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace gwidth

#endif // GWIDTH_SUBSET_HPP
