#include "zsr/coloring.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>

#include "sumset.hpp"
#include "zsr/errors.hpp"
#include "zsr/ramsey.hpp"

namespace zsr {

Coloring::Coloring(Group group, int n, int r)
    : Coloring(group, n, r, std::vector<int>(n >= r && r >= 1 ? binomial(n, r) : 0, 0)) {}

Coloring::Coloring(Group group, int n, int r, std::vector<int> color_ranks)
    : group_(std::move(group)), n_(n), r_(r), colors_(std::move(color_ranks)) {
    if (r_ < 1 || n_ < 0) throw DomainError("coloring needs r >= 1 and n >= 0");
    if (n_ > kMaxVertices) throw DomainError("coloring vertex count beyond the kernel limit");
    const std::uint64_t expected = n_ >= r_ ? binomial(n_, r_) : 0;
    if (colors_.size() != expected)
        throw StructuralError("coloring has " + std::to_string(colors_.size()) + " colors, K_" + std::to_string(n_) +
                              "^(" + std::to_string(r_) + ") has " + std::to_string(expected) + " edges");
    for (int c : colors_)
        if (c < 0 || c >= group_.order()) throw StructuralError("coloring uses an element outside " + group_.name());
}

std::string FamilySpec::name() const {
    switch (kind) {
        case FamilyKind::hyperstar: return "hyperstar";
        case FamilyKind::intersecting: return "intersecting";
        case FamilyKind::matching: return "matching";
        case FamilyKind::delta: return "delta(" + std::to_string(q) + ")";
    }
    return "?";
}

FamilySpec FamilySpec::parse(const std::string& text) {
    if (text == "hyperstar") return {FamilyKind::hyperstar, 0};
    if (text == "intersecting") return {FamilyKind::intersecting, 0};
    if (text == "matching") return {FamilyKind::matching, 0};
    std::string digits;
    if (text.rfind("delta(", 0) == 0 && text.size() > 7 && text.back() == ')')
        digits = text.substr(6, text.size() - 7);
    else if (text.rfind("delta:", 0) == 0)
        digits = text.substr(6);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return {FamilyKind::delta, std::stoi(digits)};
    throw DomainError("unknown family kind '" + text + "' (hyperstar, intersecting, matching, delta(q))");
}

bool family_matches(const EdgeFamily& family, FamilySpec spec, int m) {
    if (static_cast<int>(family.size()) != m) return false;
    const FamilyClass fc = classify_family(family);
    switch (spec.kind) {
        case FamilyKind::hyperstar: return fc.is_hyperstar;
        case FamilyKind::intersecting: return fc.is_intersecting;
        case FamilyKind::matching: return fc.is_matching;
        case FamilyKind::delta:
            if (spec.q < 0 || spec.q >= family.r()) return false;
            if (family.size() < 2) return !family.edges().empty();
            return fc.delta_core && static_cast<int>(fc.delta_core->size()) == spec.q;
    }
    return false;
}

int family_color_sum(const Coloring& coloring, const EdgeFamily& family) {
    int sum = 0;
    for (const auto& e : family.edges())
        sum = coloring.group().add_ranks(sum, coloring.color_rank(static_cast<std::size_t>(edge_rank(e, coloring.n()))));
    return sum;
}

namespace {

void check_spec(const Coloring& c, FamilySpec spec, int m) {
    if (m < 1) throw DomainError("family size m must be >= 1");
    if (spec.kind == FamilyKind::delta && (spec.q < 0 || spec.q >= c.r()))
        throw DomainError("delta-system core size must satisfy 0 <= q < r");
}

EdgeFamily make_family(const Coloring& c, const std::vector<Edge>& edges, const std::vector<int>& idx) {
    std::vector<Edge> out;
    for (int i : idx) out.push_back(edges[i]);
    return EdgeFamily(c.n(), c.r(), std::move(out));
}

FamilySearchResult hyperstar_search(const Coloring& c, int m, const SearchLimits& limits) {
    const CayleyTable table(c.group());
    const int words = detail::words_for(table.size());
    const auto edges = all_edges(c.n(), c.r());
    BudgetMeter meter(limits);
    FamilySearchResult res;
    for (int v = 0; v < c.n(); ++v) {
        if (!meter.charge()) {
            res.status = FamilyStatus::inconclusive;
            break;
        }
        std::vector<int> star;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (edges[i].contains(v)) star.push_back(i);
        const int len = static_cast<int>(star.size());
        if (len < m) continue;
        // suffix[i][k]: sums of exactly k colors from star[i..].
        auto at = [&](int i, int k) { return static_cast<std::size_t>((i * (m + 1) + k) * words); };
        std::vector<detail::Word> suffix(static_cast<std::size_t>((len + 1) * (m + 1) * words), 0);
        detail::set_bit(&suffix[at(len, 0)], 0);
        for (int i = len - 1; i >= 0; --i) {
            const int g = c.color_rank(star[i]);
            std::copy_n(&suffix[at(i + 1, 0)], (m + 1) * words, &suffix[at(i, 0)]);
            for (int k = 1; k <= m; ++k) detail::translate_or(&suffix[at(i, k)], &suffix[at(i + 1, k - 1)], words, g, table);
        }
        if (!detail::test_bit(&suffix[at(0, m)], 0)) continue;
        std::vector<int> pick;
        int target = 0;
        int need = m;
        for (int i = 0; i < len && need > 0; ++i) {
            const int rest = table.add(target, table.neg(c.color_rank(star[i])));
            if (detail::test_bit(&suffix[at(i + 1, need - 1)], rest)) {
                pick.push_back(star[i]);
                target = rest;
                --need;
            }
        }
        res.status = FamilyStatus::witness_found;
        res.witness = make_family(c, edges, pick);
        break;
    }
    res.nodes = meter.nodes();
    return res;
}

// Backtracking over colex-ordered edges for one fixed first edge.
class FamilyBacktrack {
public:
    FamilyBacktrack(const std::vector<std::uint64_t>& masks, const std::vector<int>& colors, const CayleyTable& table,
                    FamilySpec spec, int m, BudgetMeter& meter, const std::atomic<int>& found_task, int task)
        : masks_(masks),
          colors_(colors),
          table_(table),
          spec_(spec),
          m_(m),
          meter_(meter),
          found_task_(found_task),
          task_(task) {}

    void run() {
        const int first = task_;
        chosen_.push_back(first);
        std::vector<int> cand;
        for (int f = first + 1; f < static_cast<int>(masks_.size()); ++f)
            if (compatible(f)) cand.push_back(f);
        dfs(cand, colors_[first]);
        if (!found_) chosen_.clear();
    }

    bool found() const { return found_; }
    bool budget_hit() const { return budget_hit_; }
    const std::vector<int>& chosen() const { return chosen_; }

private:
    bool compatible(int e) const {
        const std::uint64_t me = masks_[e];
        switch (spec_.kind) {
            case FamilyKind::hyperstar: {
                std::uint64_t common = me;
                for (int f : chosen_) common &= masks_[f];
                return common != 0;
            }
            case FamilyKind::intersecting:
                for (int f : chosen_)
                    if (!(me & masks_[f])) return false;
                return true;
            case FamilyKind::matching:
                for (int f : chosen_)
                    if (me & masks_[f]) return false;
                return true;
            case FamilyKind::delta: {
                const std::uint64_t core = chosen_.size() >= 2 ? masks_[chosen_[0]] & masks_[chosen_[1]] : 0;
                for (int f : chosen_) {
                    const std::uint64_t x = me & masks_[f];
                    if (std::popcount(x) != spec_.q) return false;
                    if (chosen_.size() >= 2 && x != core) return false;
                }
                return true;
            }
        }
        return false;
    }

    void dfs(const std::vector<int>& cand, int sum) {
        if (found_ || budget_hit_) return;
        const int need = m_ - static_cast<int>(chosen_.size());
        if (need == 0) {
            found_ = sum == 0;
            return;
        }
        if (static_cast<int>(cand.size()) < need) return;
        if (found_task_.load(std::memory_order_relaxed) < task_) return;
        if (!meter_.charge()) {
            budget_hit_ = true;
            return;
        }
        if (need == 1) {
            const int target = table_.neg(sum);
            for (int e : cand)
                if (colors_[e] == target) {
                    chosen_.push_back(e);
                    found_ = true;
                    return;
                }
            return;
        }
        std::vector<int> next;
        for (std::size_t i = 0; i + need <= cand.size(); ++i) {
            const int e = cand[i];
            chosen_.push_back(e);
            next.clear();
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (compatible(cand[j])) next.push_back(cand[j]);
            dfs(next, table_.add(sum, colors_[e]));
            if (found_ || budget_hit_) return;
            chosen_.pop_back();
        }
    }

    const std::vector<std::uint64_t>& masks_;
    const std::vector<int>& colors_;
    const CayleyTable& table_;
    FamilySpec spec_;
    int m_;
    BudgetMeter& meter_;
    const std::atomic<int>& found_task_;
    int task_;
    std::vector<int> chosen_;
    bool found_ = false;
    bool budget_hit_ = false;
};

FamilySearchResult backtracking_search(const Coloring& c, FamilySpec spec, int m, const SearchLimits& limits) {
    const CayleyTable table(c.group());
    const auto edges = all_edges(c.n(), c.r());
    std::vector<std::uint64_t> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) masks.push_back(e.mask());
    const auto& colors = c.color_ranks();
    BudgetMeter meter(limits);

    const int ntasks = static_cast<int>(edges.size());
    std::atomic<int> found_task{INT_MAX};
    std::vector<std::vector<int>> task_pick(ntasks);
    std::vector<char> task_budget(ntasks, 0);
    const int jobs = std::max(1, limits.jobs);

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int i = 0; i < ntasks; ++i) {
        if (found_task.load(std::memory_order_relaxed) < i) continue;
        FamilyBacktrack bt(masks, colors, table, spec, m, meter, found_task, i);
        bt.run();
        task_budget[i] = bt.budget_hit() ? 1 : 0;
        if (bt.found()) {
            task_pick[i] = bt.chosen();
            int cur = found_task.load();
            while (i < cur && !found_task.compare_exchange_weak(cur, i)) {
            }
        }
    }

    FamilySearchResult res;
    res.nodes = meter.nodes();
    const int hit = found_task.load();
    if (hit != INT_MAX) {
        res.status = FamilyStatus::witness_found;
        res.witness = make_family(c, edges, task_pick[hit]);
    } else {
        res.status = FamilyStatus::certified_absent;
        for (int i = 0; i < ntasks; ++i)
            if (task_budget[i]) res.status = FamilyStatus::inconclusive;
    }
    return res;
}

}  // namespace

FamilySearchResult find_zero_sum_family(const Coloring& coloring, FamilySpec spec, int m, const SearchLimits& limits) {
    check_spec(coloring, spec, m);
    if (spec.kind == FamilyKind::hyperstar) return hyperstar_search(coloring, m, limits);
    return backtracking_search(coloring, spec, m, limits);
}

FamilySearchResult verify_no_zero_sum_family(const Coloring& coloring, FamilySpec spec, int m,
                                             const SearchLimits& limits) {
    auto res = find_zero_sum_family(coloring, spec, m, limits);
    if (res.witness) {
        if (!family_matches(*res.witness, spec, m))
            throw InternalError("search returned a family that is not a size-" + std::to_string(m) + " " + spec.name());
        if (family_color_sum(coloring, *res.witness) != 0)
            throw InternalError("search returned a family whose colors do not sum to zero");
    }
    return res;
}

MatchingColoring theorem1_lower_coloring(const Group& group, int k, int r, LowerVariant variant,
                                         const SearchLimits& limits) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (r < 2) throw DomainError("r must be >= 2");
    const int m = k * group.exponent();
    const InvariantResult s = egz_invariant(group, m, limits);
    if (!s.is_exact())
        throw Inconclusive("s_" + std::to_string(m) + "(" + group.name() + ") not determined within budget");
    const int om = omega(s.value, r);
    if (variant == LowerVariant::minus_one && (om - 1) % r != 0)
        throw DomainError("the K_{omega-1} variant needs r | omega - 1 (omega = " + std::to_string(om) + ")");
    const int n = variant == LowerVariant::minus_two ? om - 2 : om - 1;

    MatchingColoring out{Coloring(group, std::max(n, 0), r), s.value, om, 0, s.witness, {}, {}};
    if (n < r) return out;

    out.decomposition = matching_decomposition(n, r);
    out.t = static_cast<std::int64_t>(out.decomposition.parts.size());
    if (out.t != matching_part_count(n, r)) throw InternalError("matching decomposition has the wrong part count");
    if (out.t >= s.value)
        throw InternalError("t = " + std::to_string(out.t) + " hypermatchings is not below s = " +
                            std::to_string(s.value) + " for " + group.name() + ", k = " + std::to_string(k) +
                            ", r = " + std::to_string(r));
    for (const auto& part : out.decomposition.parts)
        if (!classify_family(part).is_matching) throw InternalError("decomposition part is not a matching");

    std::vector<int> colors(binomial(n, r), 0);
    for (std::int64_t i = 0; i < out.t; ++i) {
        const int g = s.witness.ranks()[static_cast<std::size_t>(i)];
        out.part_colors.push_back(g);
        for (const auto& e : out.decomposition.parts[static_cast<std::size_t>(i)].edges())
            colors[static_cast<std::size_t>(edge_rank(e, n))] = g;
    }
    out.coloring = Coloring(group, n, r, std::move(colors));
    return out;
}

PotentialColoring delta_lower_coloring(const Group& group, int r, int q, int m, const SearchLimits& limits) {
    if (!(r > q && q >= 0)) throw DomainError("need r > q >= 0");
    if (m < 1 || m % group.exponent() != 0) throw DomainError("m must be a positive multiple of exp(G)");
    const InvariantResult d = davenport(group, limits);
    if (!d.is_exact()) throw Inconclusive("D(" + group.name() + ") not determined within budget");
    const int n = (r - q) * m + d.value - 2;
    if (n < r)
        throw DomainError("degenerate parameters: n = (r-q)m + D - 2 = " + std::to_string(n) + " is below r = " +
                          std::to_string(r));

    VertexPotential f{group, std::vector<int>(n, 0)};
    std::copy(d.witness.ranks().begin(), d.witness.ranks().end(), f.values.begin());
    const auto edges = all_edges(n, r);
    std::vector<int> colors;
    colors.reserve(edges.size());
    for (const auto& e : edges) {
        int c = 0;
        for (int v : e.vertices()) c = group.add_ranks(c, f.values[v]);
        colors.push_back(c);
    }
    return {Coloring(group, n, r, std::move(colors)), std::move(f), d.value};
}

}  // namespace zsr
