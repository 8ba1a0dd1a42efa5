#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zsr {

/// Vertex bound for the bitmask-based kernels.
inline constexpr int kMaxVertices = 64;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws DomainError on
/// 64-bit overflow.
std::uint64_t binomial(int n, int k);

/// An r-subset of vertices, kept strictly increasing.
class Edge {
public:
    Edge() = default;
    explicit Edge(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int arity() const { return static_cast<int>(vertices_.size()); }
    int max_vertex() const { return vertices_.back(); }
    bool contains(int v) const;
    std::uint64_t mask() const;

    friend bool operator==(const Edge&, const Edge&) = default;

private:
    std::vector<int> vertices_;
};

/// Colex rank of an edge among the r-subsets of {0..n-1}: sum C(v_i, i+1).
/// The rank does not depend on n; n only bounds the vertex ids.
std::int64_t edge_rank(const Edge& edge, int n);
Edge edge_unrank(std::int64_t rank, int n, int r);

/// Every edge of K_n^(r) in colex order.
std::vector<Edge> all_edges(int n, int r);

/// Distinct r-edges of K_n^(r), stored in colex order.
class EdgeFamily {
public:
    EdgeFamily(int n, int r) : n_(n), r_(r) {}
    EdgeFamily(int n, int r, std::vector<Edge> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

    friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;
};

/// The maximal hyperstar at v: all C(n-1, r-1) edges containing v.
EdgeFamily star_edges(int n, int r, int v);

struct FamilyClass {
    bool is_matching = false;
    bool is_intersecting = false;
    bool is_hyperstar = false;
    /// Common pairwise intersection Q (possibly empty) when one exists.
    std::optional<std::vector<int>> delta_core;
    /// Fewer than two edges: every Q would do, so none is reported.
    bool core_undetermined = false;
};

/// Single edges count as matching, intersecting and hyperstar with an
/// undetermined core. The empty family is a vacuous matching and
/// intersecting family but not a hyperstar.
FamilyClass classify_family(const EdgeFamily& family);

}  // namespace zsr
