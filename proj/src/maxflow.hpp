#pragma once

// Dinic max-flow with support for edge lower bounds (feasible-flow form).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace zsr::detail {

class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(nodes), excess_(nodes, 0) {}

    /// Adds u -> v carrying a flow in [lo, hi]; returns a handle for flow().
    int add_edge(int u, int v, std::int64_t lo, std::int64_t hi) {
        const int id = add_arc(u, v, hi - lo);
        lower_.resize(arcs_.size(), 0);
        lower_[id] = lo;
        excess_[v] += lo;
        excess_[u] -= lo;
        return id;
    }

    /// Finds a flow from source to sink meeting every bound (any value).
    /// Returns false when none exists.
    bool feasible(int source, int sink) {
        const int n = static_cast<int>(adj_.size());
        const int s = n, t = n + 1;
        adj_.resize(n + 2);
        add_arc(sink, source, kInf);
        std::int64_t need = 0;
        for (int v = 0; v < n; ++v) {
            if (excess_[v] > 0) {
                add_arc(s, v, excess_[v]);
                need += excess_[v];
            } else if (excess_[v] < 0) {
                add_arc(v, t, -excess_[v]);
            }
        }
        lower_.resize(arcs_.size(), 0);
        return max_flow(s, t) == need;
    }

    std::int64_t flow(int id) const { return lower_[id] + arcs_[id ^ 1].cap; }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    int add_arc(int u, int v, std::int64_t cap) {
        const int id = static_cast<int>(arcs_.size());
        arcs_.push_back({v, cap});
        adj_[u].push_back(id);
        arcs_.push_back({u, 0});
        adj_[v].push_back(id + 1);
        return id;
    }

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int id : adj_[u]) {
                if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
                    level_[arcs_[id].to] = level_[u] + 1;
                    q.push(arcs_[id].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t pushed) {
        if (u == t) return pushed;
        for (auto& i = iter_[u]; i < adj_[u].size(); ++i) {
            const int id = adj_[u][i];
            const int v = arcs_[id].to;
            if (arcs_[id].cap <= 0 || level_[v] != level_[u] + 1) continue;
            const std::int64_t got = dfs(v, t, std::min(pushed, arcs_[id].cap));
            if (got > 0) {
                arcs_[id].cap -= got;
                arcs_[id ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            iter_.assign(adj_.size(), 0);
            while (std::int64_t f = dfs(s, t, kInf)) total += f;
        }
        return total;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::int64_t> excess_;
    std::vector<std::int64_t> lower_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

}  // namespace zsr::detail
