#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zsr/hypergraph.hpp"

namespace zsr {

/// Ordered partition of E(K_n^(r)) into parts of recorded sizes.
struct Decomposition {
    int n = 0;
    int r = 0;
    std::vector<std::int64_t> sizes;
    std::vector<EdgeFamily> parts;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionCheck {
    bool ok = true;
    std::string violation;  ///< first violated clause, empty when ok

    explicit operator bool() const { return ok; }
};

/// Checks: recorded sizes match, parts are edge-disjoint and cover
/// K_n^(r), and floor(r m_j / n) <= deg_j(v) <= ceil(r m_j / n) everywhere.
DecompositionCheck verify_decomposition(const Decomposition& d);

/// Baranyai partition of K_n^(r) into parts of the given sizes with
/// near-regular degrees. Built vertex by vertex: each step routes the new
/// vertex through the partial parts with an integral feasible flow. The seed
/// relabels vertices (seed 0 keeps the identity labelling). The result always
/// passes verify_decomposition.
Decomposition baranyai_partition(int n, int r, std::span<const std::int64_t> sizes, std::uint64_t seed = 0);

/// Number of hypermatchings: ceil(C(n, r) / floor(n / r)).
std::int64_t matching_part_count(int n, int r);

/// K_n^(r) as matching_part_count(n, r) edge-disjoint matchings: all of size
/// floor(n / r) except the last, which takes the remainder. r = 2 uses the
/// round-robin (circle) 1-factorization; r >= 3 uses baranyai_partition.
Decomposition matching_decomposition(int n, int r, std::uint64_t seed = 0);

}  // namespace zsr
