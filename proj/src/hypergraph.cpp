#include "zsr/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zsr/errors.hpp"

namespace zsr {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (c > std::numeric_limits<std::uint64_t>::max())
            throw DomainError("C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

Edge::Edge(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw StructuralError("an edge needs at least one vertex");
    if (vertices_.front() < 0) throw StructuralError("negative vertex id");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i - 1] >= vertices_[i]) throw StructuralError("edge vertices must be strictly increasing");
}

bool Edge::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::uint64_t Edge::mask() const {
    if (max_vertex() >= kMaxVertices) throw DomainError("vertex id beyond the 64-vertex kernel limit");
    std::uint64_t m = 0;
    for (int v : vertices_) m |= std::uint64_t{1} << v;
    return m;
}

std::int64_t edge_rank(const Edge& edge, int n) {
    if (edge.max_vertex() >= n) throw DomainError("edge vertex exceeds n - 1");
    std::int64_t r = 0;
    for (int i = 0; i < edge.arity(); ++i) r += static_cast<std::int64_t>(binomial(edge.vertices()[i], i + 1));
    return r;
}

Edge edge_unrank(std::int64_t rank, int n, int r) {
    if (r < 1 || r > n) throw DomainError("edge arity must satisfy 1 <= r <= n");
    if (rank < 0 || static_cast<std::uint64_t>(rank) >= binomial(n, r))
        throw DomainError("edge rank " + std::to_string(rank) + " out of range for K_" + std::to_string(n) + "^(" +
                          std::to_string(r) + ")");
    std::vector<int> v(r);
    int hi = n - 1;
    for (int i = r; i >= 1; --i) {
        // Largest c with C(c, i) <= rank.
        int c = hi;
        while (static_cast<std::int64_t>(binomial(c, i)) > rank) --c;
        v[i - 1] = c;
        rank -= static_cast<std::int64_t>(binomial(c, i));
        hi = c - 1;
    }
    return Edge(std::move(v));
}

std::vector<Edge> all_edges(int n, int r) {
    std::vector<Edge> out;
    if (r < 1 || r > n) return out;
    const auto count = static_cast<std::int64_t>(binomial(n, r));
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) out.push_back(edge_unrank(k, n, r));
    return out;
}

EdgeFamily::EdgeFamily(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.arity() != r_) throw StructuralError("edge arity differs from family arity");
        if (e.max_vertex() >= n_) throw StructuralError("edge vertex exceeds ambient vertex count");
    }
    std::sort(edges_.begin(), edges_.end(),
              [n](const Edge& a, const Edge& b) { return edge_rank(a, n) < edge_rank(b, n); });
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw StructuralError("edge family contains a repeated edge");
}

EdgeFamily star_edges(int n, int r, int v) {
    if (v < 0 || v >= n) throw DomainError("star centre outside the vertex set");
    std::vector<Edge> out;
    for (auto& e : all_edges(n, r))
        if (e.contains(v)) out.push_back(std::move(e));
    return EdgeFamily(n, r, std::move(out));
}

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

FamilyClass classify_family(const EdgeFamily& family) {
    FamilyClass fc;
    const auto& e = family.edges();
    if (e.size() < 2) {
        fc.is_matching = true;
        fc.is_intersecting = true;
        fc.is_hyperstar = !e.empty();
        fc.core_undetermined = true;
        return fc;
    }
    fc.is_matching = true;
    fc.is_intersecting = true;
    std::optional<std::vector<int>> core;
    bool same_core = true;
    std::vector<int> common = e.front().vertices();
    for (std::size_t i = 0; i < e.size(); ++i) {
        common = intersect(common, e[i].vertices());
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            auto q = intersect(e[i].vertices(), e[j].vertices());
            if (q.empty())
                fc.is_intersecting = false;
            else
                fc.is_matching = false;
            if (!core)
                core = q;
            else if (*core != q)
                same_core = false;
        }
    }
    fc.is_hyperstar = !common.empty();
    if (same_core) fc.delta_core = core;
    return fc;
}

}  // namespace zsr
