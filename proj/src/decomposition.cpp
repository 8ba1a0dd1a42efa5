#include "zsr/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "maxflow.hpp"
#include "zsr/errors.hpp"

namespace zsr {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b; }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void check_ambient(int n, int r) {
    if (r < 2 || n < r) throw DomainError("need n >= r >= 2");
    if (n > kMaxVertices - 1) throw DomainError("n beyond the supported vertex count");
}

std::vector<int> seeded_labels(int n, std::uint64_t seed) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(label.begin(), label.end(), rng);
    }
    return label;
}

Decomposition assemble(int n, int r, std::vector<std::int64_t> sizes,
                       const std::vector<std::vector<std::uint64_t>>& part_masks, const std::vector<int>& label) {
    Decomposition d{n, r, std::move(sizes), {}};
    for (const auto& masks : part_masks) {
        std::vector<Edge> edges;
        for (std::uint64_t m : masks) {
            std::vector<int> v;
            for (std::uint64_t b = m; b; b &= b - 1) v.push_back(label[std::countr_zero(b)]);
            std::sort(v.begin(), v.end());
            edges.emplace_back(std::move(v));
        }
        d.parts.emplace_back(n, r, std::move(edges));
    }
    const auto check = verify_decomposition(d);
    if (!check) throw InternalError("constructed decomposition failed verification: " + check.violation);
    return d;
}

}  // namespace

DecompositionCheck verify_decomposition(const Decomposition& d) {
    auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
    if (d.r < 1 || d.n < d.r) return fail("ambient parameters need n >= r >= 1");
    if (d.sizes.size() != d.parts.size()) return fail("number of recorded sizes differs from number of parts");
    const auto total = static_cast<std::int64_t>(binomial(d.n, d.r));
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::int64_t covered = 0;
    for (std::size_t j = 0; j < d.parts.size(); ++j) {
        const auto& part = d.parts[j];
        const std::string tag = "part " + std::to_string(j + 1);
        if (part.n() != d.n || part.r() != d.r) return fail(tag + " has a different ambient hypergraph");
        if (static_cast<std::int64_t>(part.size()) != d.sizes[j]) return fail(tag + " size differs from recorded size");
        std::vector<std::int64_t> degree(d.n, 0);
        for (const auto& e : part.edges()) {
            const auto k = edge_rank(e, d.n);
            if (seen[k]) return fail("edge covered twice (not a partition), found again in " + tag);
            seen[k] = 1;
            ++covered;
            for (int v : e.vertices()) ++degree[v];
        }
        const std::int64_t lo = floor_div(d.r * d.sizes[j], d.n);
        const std::int64_t hi = ceil_div(d.r * d.sizes[j], d.n);
        for (int v = 0; v < d.n; ++v)
            if (degree[v] < lo || degree[v] > hi)
                return fail(tag + " not within degree bounds: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(degree[v]) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "]");
    }
    if (covered != total) return fail("parts do not cover every edge (not a partition)");
    return {};
}

Decomposition baranyai_partition(int n, int r, std::span<const std::int64_t> sizes, std::uint64_t seed) {
    check_ambient(n, r);
    const auto total = static_cast<std::int64_t>(binomial(n, r));
    std::int64_t sum = 0;
    for (auto m : sizes) {
        if (m < 0) throw DomainError("part sizes must be >= 0");
        sum += m;
    }
    if (sum != total)
        throw DomainError("part sizes sum to " + std::to_string(sum) + ", need C(n, r) = " + std::to_string(total));

    const int t = static_cast<int>(sizes.size());
    // parts[j]: multiset of partial edges (subsets of the vertices placed so far).
    std::vector<std::map<std::uint64_t, std::int64_t>> parts(t);
    std::vector<std::int64_t> lo(t), hi(t), remaining(t);
    for (int j = 0; j < t; ++j) {
        if (sizes[j] > 0) parts[j][0] = sizes[j];
        lo[j] = floor_div(r * sizes[j], n);
        hi[j] = ceil_div(r * sizes[j], n);
        remaining[j] = r * sizes[j];
    }

    for (int k = 0; k < n; ++k) {
        // Invariant: (n-k) lo_j <= remaining_j <= (n-k) hi_j, and each subset S
        // of {0..k-1} occurs C(n-k, r-|S|) times across all parts.
        const int left_after = n - k - 1;
        std::map<std::uint64_t, int> type_index;
        for (const auto& p : parts)
            for (const auto& [mask, mult] : p)
                if (std::popcount(mask) < r) type_index.emplace(mask, 0);
        int next = 0;
        for (auto& [mask, idx] : type_index) idx = next++;

        const int source = 0, sink = 1, part0 = 2, type0 = 2 + t;
        detail::FlowNetwork net(type0 + next);
        for (int j = 0; j < t; ++j) {
            const std::int64_t a = std::max(lo[j], remaining[j] - left_after * hi[j]);
            const std::int64_t b = std::min(hi[j], remaining[j] - left_after * lo[j]);
            if (a > b) throw InternalError("degree window collapsed while building decomposition");
            net.add_edge(source, part0 + j, a, b);
        }
        std::vector<std::vector<std::pair<std::uint64_t, int>>> handles(t);
        for (int j = 0; j < t; ++j)
            for (const auto& [mask, mult] : parts[j])
                if (std::popcount(mask) < r)
                    handles[j].emplace_back(mask, net.add_edge(part0 + j, type0 + type_index[mask], 0, mult));
        for (const auto& [mask, idx] : type_index) {
            const auto demand = static_cast<std::int64_t>(binomial(left_after, r - std::popcount(mask) - 1));
            net.add_edge(type0 + idx, sink, demand, demand);
        }
        if (!net.feasible(source, sink))
            throw InternalError("no integral extension found at vertex " + std::to_string(k));

        const std::uint64_t bit = std::uint64_t{1} << k;
        for (int j = 0; j < t; ++j) {
            std::int64_t degree = 0;
            for (const auto& [mask, id] : handles[j]) {
                const std::int64_t f = net.flow(id);
                if (f == 0) continue;
                degree += f;
                auto it = parts[j].find(mask);
                it->second -= f;
                if (it->second == 0) parts[j].erase(it);
                parts[j][mask | bit] += f;
            }
            remaining[j] -= degree;
        }
    }

    std::vector<std::vector<std::uint64_t>> masks(t);
    for (int j = 0; j < t; ++j)
        for (const auto& [mask, mult] : parts[j]) {
            if (std::popcount(mask) != r || mult != 1) throw InternalError("incomplete edge left after final vertex");
            masks[j].push_back(mask);
        }
    return assemble(n, r, std::vector<std::int64_t>(sizes.begin(), sizes.end()), masks, seeded_labels(n, seed));
}

std::int64_t matching_part_count(int n, int r) {
    check_ambient(n, r);
    const auto total = static_cast<std::int64_t>(binomial(n, r));
    return ceil_div(total, n / r);
}

Decomposition matching_decomposition(int n, int r, std::uint64_t seed) {
    check_ambient(n, r);
    const auto total = static_cast<std::int64_t>(binomial(n, r));
    const std::int64_t per = n / r;
    const std::int64_t t = matching_part_count(n, r);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(t), per);
    sizes.back() = total - (t - 1) * per;

    if (r != 2) return baranyai_partition(n, r, sizes, seed);

    // Circle method on an even number of points; the extra point of an odd n
    // is a dummy whose pairs are dropped.
    const int even = n % 2 == 0 ? n : n + 1;
    const int rounds = even - 1;
    std::vector<std::vector<std::uint64_t>> masks;
    for (int i = 0; i < rounds; ++i) {
        std::vector<std::uint64_t> round;
        auto pair = [&](int a, int b) {
            if (a < n && b < n) round.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        };
        pair(even - 1, i);
        for (int j = 1; j < even / 2; ++j) pair((i + j) % rounds, (i - j + rounds) % rounds);
        masks.push_back(std::move(round));
    }
    return assemble(n, r, std::move(sizes), masks, seeded_labels(n, seed));
}

}  // namespace zsr
