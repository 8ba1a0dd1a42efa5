#pragma once

// Naive reference computations used only by the tests. Each one enumerates
// its search space outright and shares no code with the library kernels
// beyond Group arithmetic and edge ranking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "zsr/coloring.hpp"
#include "zsr/group.hpp"
#include "zsr/hypergraph.hpp"

namespace oracle {

inline int sum_ranks(const zsr::Group& g, const std::vector<int>& xs) {
    int s = 0;
    for (int x : xs) s = g.add_ranks(s, x);
    return s;
}

/// Some subset of exactly m positions sums to zero (2^|S| scan).
inline bool has_zero_sum_len(const zsr::Group& g, const std::vector<int>& seq, int m) {
    const int n = static_cast<int>(seq.size());
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        int s = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) s = g.add_ranks(s, seq[i]);
        if (s == 0) return true;
    }
    return false;
}

inline bool has_nonempty_zero_sum(const zsr::Group& g, const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        int s = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) s = g.add_ranks(s, seq[i]);
        if (s == 0) return true;
    }
    return false;
}

/// Calls fn on every nondecreasing rank sequence of length len.
inline void for_each_multiset(int order, int len, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> cur(len, 0);
    if (len == 0) {
        fn(cur);
        return;
    }
    while (true) {
        if (!fn(cur)) return;
        int i = len - 1;
        while (i >= 0 && cur[i] == order - 1) --i;
        if (i < 0) return;
        const int v = cur[i] + 1;
        for (int j = i; j < len; ++j) cur[j] = v;
    }
}

/// Least d such that every length-d multiset satisfies `bad` == false.
inline int least_forcing_length(const zsr::Group& g, int start,
                                const std::function<bool(const std::vector<int>&)>& is_bad) {
    for (int len = start;; ++len) {
        bool any_bad = false;
        for_each_multiset(g.order(), len, [&](const std::vector<int>& s) {
            if (is_bad(s)) any_bad = true;
            return !any_bad;
        });
        if (!any_bad) return len;
    }
}

inline int davenport(const zsr::Group& g) {
    return least_forcing_length(g, 1, [&](const std::vector<int>& s) { return !has_nonempty_zero_sum(g, s); });
}

inline int egz(const zsr::Group& g, int m) {
    return least_forcing_length(g, m, [&](const std::vector<int>& s) { return !has_zero_sum_len(g, s, m); });
}

inline bool pairwise(const std::vector<std::uint64_t>& fam, const std::function<bool(std::uint64_t, std::uint64_t)>& p) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (!p(fam[i], fam[j])) return false;
    return true;
}

/// Direct definitions of each family kind on edge bitmasks.
inline bool family_is(zsr::FamilySpec spec, const std::vector<std::uint64_t>& fam) {
    switch (spec.kind) {
        case zsr::FamilyKind::hyperstar: {
            std::uint64_t common = ~std::uint64_t{0};
            for (auto e : fam) common &= e;
            return !fam.empty() && common != 0;
        }
        case zsr::FamilyKind::intersecting:
            return pairwise(fam, [](std::uint64_t a, std::uint64_t b) { return (a & b) != 0; });
        case zsr::FamilyKind::matching:
            return pairwise(fam, [](std::uint64_t a, std::uint64_t b) { return (a & b) == 0; });
        case zsr::FamilyKind::delta: {
            if (fam.size() < 2) return !fam.empty();
            const std::uint64_t core = fam[0] & fam[1];
            if (__builtin_popcountll(core) != spec.q) return false;
            return pairwise(fam, [&](std::uint64_t a, std::uint64_t b) { return (a & b) == core; });
        }
    }
    return false;
}

/// Every m-subset of edges, checked against the definitions.
inline bool has_zero_sum_family(const zsr::Group& g, int n, int r, const std::vector<int>& colors,
                                zsr::FamilySpec spec, int m) {
    const auto edges = zsr::all_edges(n, r);
    const int e = static_cast<int>(edges.size());
    if (m > e) return false;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<std::uint64_t> fam;
        int s = 0;
        for (int i : idx) {
            fam.push_back(edges[i].mask());
            s = g.add_ranks(s, colors[i]);
        }
        if (s == 0 && family_is(spec, fam)) return true;
        int i = m - 1;
        while (i >= 0 && idx[i] == e - m + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Least bad coloring of K_n^(r) in lexicographic order, or empty when every
/// coloring has a zero-sum family. `found` reports which.
inline std::vector<int> least_bad_coloring(const zsr::Group& g, int n, int r, zsr::FamilySpec spec, int m,
                                           bool& found) {
    const int e = n >= r ? static_cast<int>(zsr::binomial(n, r)) : 0;
    std::vector<int> colors(e, 0);
    while (true) {
        if (!has_zero_sum_family(g, n, r, colors, spec, m)) {
            found = true;
            return colors;
        }
        int i = e - 1;
        while (i >= 0 && colors[i] == g.order() - 1) --i;
        if (i < 0) break;
        ++colors[i];
        for (int j = i + 1; j < e; ++j) colors[j] = 0;
    }
    found = false;
    return {};
}

/// Least n at which no bad coloring exists, scanning upward from r.
inline int ramsey(const zsr::Group& g, int r, zsr::FamilySpec spec, int m, int n_max) {
    for (int n = r; n <= n_max; ++n) {
        bool found = false;
        least_bad_coloring(g, n, r, spec, m, found);
        if (!found) return n;
    }
    return -1;
}

}  // namespace oracle
