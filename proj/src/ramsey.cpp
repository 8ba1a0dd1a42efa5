#include "zsr/ramsey.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "sumset.hpp"
#include "zsr/errors.hpp"
#include "zsr/hypergraph.hpp"

namespace zsr {

int omega(int s, int r) {
    if (r < 1) throw DomainError("omega needs r >= 1");
    if (s < 1) throw DomainError("omega needs s >= 1");
    for (int n = r;; ++n)
        if (binomial(n - 1, r - 1) >= static_cast<std::uint64_t>(s)) return n;
}

// ---------------------------------------------------------------- bounds

namespace {

const Provenance kHyperstarUpper{"hyperstar pigeonhole upper bound", "R_S <= Omega(s)"};
const Provenance kMatchingLower{"hypermatching coloring lower bound", "R_I >= Omega(s) - 1"};
const Provenance kDivisibleEquality{"divisible case equality", "r | Omega(s) - 1 => R_I = R_S = Omega(s)"};
const Provenance kLargeR{"large-r intersecting value",
                         "2r > Omega(s) - 1 => R_I = Omega(s) - 1 if C(Omega(s)-1, r) >= s, else Omega(s)"};
const Provenance kFamilyOrder{"family inclusion", "R_I <= R_S"};

}  // namespace

std::optional<int> remark_intersecting_value(int s, int r) {
    const int om = omega(s, r);
    if (2 * r <= om - 1) return std::nullopt;
    return binomial(om - 1, r) >= static_cast<std::uint64_t>(s) ? om - 1 : om;
}

StarBounds theorem1_bounds(int s, int m, int r) {
    if (r < 2) throw DomainError("r must be >= 2");
    StarBounds b;
    b.m = m;
    b.s_lower = b.s_upper = s;
    b.omega = omega(s, r);
    const int om = b.omega;
    b.intersecting = {om - 1, om, std::nullopt, {kMatchingLower, kFamilyOrder, kHyperstarUpper}};
    b.hyperstar = {om - 1, om, std::nullopt, {kMatchingLower, kFamilyOrder, kHyperstarUpper}};
    if ((om - 1) % r == 0) {
        for (auto* rep : {&b.intersecting, &b.hyperstar}) {
            rep->lower = rep->upper = om;
            rep->exact = om;
            rep->provenance.push_back(kDivisibleEquality);
        }
    }
    if (const auto v = remark_intersecting_value(s, r)) {
        b.remark_applies = true;
        b.intersecting.lower = b.intersecting.upper = *v;
        b.intersecting.exact = *v;
        b.intersecting.provenance.push_back(kLargeR);
        // R_S >= R_I.
        b.hyperstar.lower = std::max(b.hyperstar.lower, *v);
        if (b.hyperstar.lower == b.hyperstar.upper) b.hyperstar.exact = b.hyperstar.lower;
    }
    return b;
}

StarBounds theorem1_bounds(const Group& group, int k, int r, const SearchLimits& limits) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (r < 2) throw DomainError("r must be >= 2");
    const int m = k * group.exponent();
    const InvariantResult s = egz_invariant(group, m, limits);
    if (s.is_exact()) return theorem1_bounds(s.value, m, r);

    StarBounds b;
    b.m = m;
    b.s_status = SearchStatus::inconclusive;
    b.s_lower = s.value;
    b.s_upper = s.upper;
    const int lo = omega(s.value, r) - 1;
    const int hi = omega(s.upper, r);
    b.intersecting = {lo, hi, std::nullopt, {kMatchingLower, kFamilyOrder, kHyperstarUpper}};
    b.hyperstar = b.intersecting;
    return b;
}

BoundReport corollary_r2_bounds(int s) {
    if (s < 1) throw DomainError("s must be >= 1");
    BoundReport b{s, s + 1, std::nullopt, {{"graph star sandwich", "s <= R(K_{1,m}) <= s + 1"}}};
    if (s % 2 == 0) {
        b.lower = s + 1;
        b.exact = s + 1;
        b.provenance.push_back({"even s equality", "s even => R(K_{1,m}) = s + 1"});
    }
    return b;
}

BoundReport corollary_r2_bounds(const Group& group, int k, const SearchLimits& limits) {
    if (k < 1) throw DomainError("k must be >= 1");
    const int m = k * group.exponent();
    const InvariantResult s = egz_invariant(group, m, limits);
    if (!s.is_exact())
        return {s.value, s.upper + 1, std::nullopt, {{"graph star sandwich", "s <= R(K_{1,m}) <= s + 1"}}};
    return corollary_r2_bounds(s.value);
}

int theoremC_value(int m, int t) {
    if (t < 2 || m < 1) throw DomainError("the cyclic star formula needs t >= 2 and m >= 1");
    if (m % t != 0) throw DomainError("the cyclic star formula needs t | m");
    return (m % 2 == 0 && t % 2 == 0) ? m + t - 1 : m + t;
}

BoundReport theorem2_bounds(int davenport, int order, int exponent, int r, int q, int m) {
    if (!(r > q && q >= 0)) throw DomainError("need r > q >= 0");
    if (m < order) throw DomainError("delta-system bounds need m >= |G|");
    if (m % exponent != 0) throw DomainError("delta-system bounds need exp(G) | m");
    const int base = (r - q) * m;
    BoundReport b;
    b.lower = base + std::max(q, davenport - 1);
    b.upper = base + std::min((r - q) * (davenport - 1), order - 1) + q;
    if (b.lower == b.upper) b.exact = b.lower;
    b.provenance = {
        {"trivial vertex count", "R >= (r-q)m + q"},
        {"potential coloring lower bound", "R >= (r-q)m + D - 1"},
        {"hypermatching upper bound", "R(S(r',0,m)) <= r'm + min(r'(D-1), |G|-1)"},
        {"core shift", "R(S(r,q,m)) <= q + R(S(r-q,0,m))"},
    };
    return b;
}

BoundReport theorem2_bounds(const Group& group, int r, int q, int m, const SearchLimits& limits) {
    if (!(r > q && q >= 0)) throw DomainError("need r > q >= 0");
    if (m < group.order()) throw DomainError("delta-system bounds need m >= |G|");
    if (m % group.exponent() != 0) throw DomainError("delta-system bounds need exp(G) | m");
    const InvariantResult d = davenport(group, limits);
    if (!d.is_exact()) throw Inconclusive("D(" + group.name() + ") not determined within budget");
    return theorem2_bounds(d.value, group.order(), group.exponent(), r, q, m);
}

// ---------------------------------------------------------- level search

namespace {

// For every multiset T without a zero-sum m-subset, the largest number of
// further elements that can be added while staying so. Multisets are keyed
// by their multiplicity vector in base m (every multiplicity is below m).
class StarTable {
public:
    static std::unique_ptr<StarTable> build(const CayleyTable& table, int m, std::size_t max_states) {
        const int order = table.size();
        if (static_cast<double>(order) * std::log2(static_cast<double>(std::max(m, 2))) >= 62.0) return nullptr;
        auto t = std::unique_ptr<StarTable>(new StarTable());
        t->weight_.resize(order);
        std::uint64_t w = 1;
        for (int g = 0; g < order; ++g) {
            t->weight_[g] = w;
            w *= static_cast<std::uint64_t>(m);
        }
        detail::ExactLengthTracker tracker(table, m);
        if (!t->visit(0, tracker, order, max_states)) return nullptr;
        return t;
    }

    int max_extension(std::uint64_t key) const { return ext_.at(key); }
    std::uint64_t weight(int g) const { return weight_[g]; }

private:
    StarTable() = default;

    // Returns false when the state cap is exceeded.
    bool visit(std::uint64_t key, detail::ExactLengthTracker& tracker, int order, std::size_t max_states) {
        if (ext_.count(key)) return true;
        int best = 0;
        for (int g = 0; g < order; ++g) {
            if (tracker.closes_zero_sum(g)) continue;
            const std::uint64_t child = key + weight_[g];
            tracker.push(g);
            const bool ok = visit(child, tracker, order, max_states);
            tracker.pop();
            if (!ok) return false;
            best = std::max(best, 1 + ext_.at(child));
        }
        ext_.emplace(key, best);
        return ext_.size() <= max_states;
    }

    std::unordered_map<std::uint64_t, int> ext_;
    std::vector<std::uint64_t> weight_;
};

constexpr std::size_t kStarTableMaxStates = 2'000'000;
constexpr int kMaxSymmetryVertices = 7;

struct LevelContext {
    int n = 0;
    int r = 0;
    int m = 0;
    FamilySpec spec;
    const CayleyTable* table = nullptr;
    int num_edges = 0;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> verts;
    std::vector<std::vector<int>> cand;  // earlier edges that can share a family with edge i
    bool trackers = false;
    bool backtrack = false;
    std::int64_t star_size = 0;
    const StarTable* star = nullptr;
    std::vector<int> boundary;  // depth -> index into sym_maps, or -1
    std::vector<std::vector<std::vector<int>>> sym_maps;
};

void build_symmetry(LevelContext& ctx) {
    ctx.boundary.assign(ctx.num_edges + 1, -1);
    const int kmax = std::min({ctx.n, ctx.r + 2, kMaxSymmetryVertices});
    for (int k = ctx.r + 1; k <= kmax; ++k) {
        const int b = static_cast<int>(binomial(k, ctx.r));
        std::vector<std::vector<int>> maps;
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> map(b);
            for (int j = 0; j < b; ++j) {
                std::vector<int> img;
                for (int v : ctx.verts[j]) img.push_back(perm[v]);
                std::sort(img.begin(), img.end());
                map[j] = static_cast<int>(edge_rank(Edge(img), ctx.n));
            }
            maps.push_back(std::move(map));
        }
        ctx.boundary[b] = static_cast<int>(ctx.sym_maps.size());
        ctx.sym_maps.push_back(std::move(maps));
    }
}

LevelContext make_context(const RamseyQuery& q, int n, const CayleyTable& table, const StarTable* star,
                          bool symmetry) {
    LevelContext ctx;
    ctx.n = n;
    ctx.r = q.r;
    ctx.m = q.m;
    ctx.spec = q.kind;
    ctx.table = &table;
    const auto edges = n >= q.r ? all_edges(n, q.r) : std::vector<Edge>{};
    ctx.num_edges = static_cast<int>(edges.size());
    for (const auto& e : edges) {
        ctx.masks.push_back(e.mask());
        ctx.verts.push_back(e.vertices());
    }
    const FamilyKind kind = q.kind.kind;
    ctx.trackers = kind == FamilyKind::hyperstar || kind == FamilyKind::intersecting;
    if (kind == FamilyKind::intersecting)
        // Intersecting families of size <= 2 are hyperstars, and so are
        // graph ones of size >= 4.
        ctx.backtrack = q.m >= 3 && !(q.r == 2 && q.m >= 4);
    else
        ctx.backtrack = kind == FamilyKind::matching || kind == FamilyKind::delta;
    if (ctx.backtrack) {
        const int core = kind == FamilyKind::delta ? q.kind.q : 0;
        ctx.cand.resize(ctx.num_edges);
        for (int i = 0; i < ctx.num_edges; ++i)
            for (int j = 0; j < i; ++j) {
                const std::uint64_t x = ctx.masks[i] & ctx.masks[j];
                const bool ok = kind == FamilyKind::intersecting ? x != 0 : std::popcount(x) == core;
                if (ok) ctx.cand[i].push_back(j);
            }
    }
    ctx.star_size = n >= 1 && n - 1 >= q.r - 1 ? static_cast<std::int64_t>(binomial(n - 1, q.r - 1)) : 0;
    ctx.star = ctx.trackers ? star : nullptr;
    if (symmetry)
        build_symmetry(ctx);
    else
        ctx.boundary.assign(ctx.num_edges + 1, -1);
    return ctx;
}

enum class Dfs { found, exhausted, stopped };

class LevelSearcher {
public:
    LevelSearcher(const LevelContext& ctx, BudgetMeter& meter) : ctx_(ctx), meter_(meter), colors_(ctx.num_edges, 0) {
        if (ctx_.trackers) {
            trackers_.reserve(ctx_.n);
            for (int v = 0; v < ctx_.n; ++v) trackers_.emplace_back(*ctx_.table, ctx_.m);
            keys_.assign(ctx_.n, 0);
        }
    }

    /// False when the empty coloring is already forced (star bound at the root).
    bool root_ok() const {
        if (!ctx_.star || ctx_.n == 0) return true;
        return ctx_.star->max_extension(0) >= ctx_.star_size;
    }

    bool try_assign(int g) {
        const int i = depth_;
        const auto& vs = ctx_.verts[i];
        if (ctx_.trackers)
            for (int v : vs)
                if (trackers_[v].closes_zero_sum(g)) return false;
        if (ctx_.backtrack) {
            const int hit = closes_family(i, g);
            if (hit < 0) budget_hit_ = true;
            if (hit != 0) return false;
        }
        colors_[i] = g;
        ++depth_;
        if (ctx_.trackers)
            for (int v : vs) {
                trackers_[v].push(g);
                if (ctx_.star) keys_[v] += ctx_.star->weight(g);
            }
        if (ctx_.boundary[depth_] >= 0 && !canonical(ctx_.sym_maps[ctx_.boundary[depth_]])) {
            unassign();
            return false;
        }
        if (ctx_.star)
            for (int v : vs)
                if (ctx_.star->max_extension(keys_[v]) < ctx_.star_size - trackers_[v].length()) {
                    unassign();
                    return false;
                }
        return true;
    }

    void unassign() {
        --depth_;
        const int g = colors_[depth_];
        if (ctx_.trackers)
            for (int v : ctx_.verts[depth_]) {
                trackers_[v].pop();
                if (ctx_.star) keys_[v] -= ctx_.star->weight(g);
            }
        colors_[depth_] = 0;
    }

    Dfs dfs(const std::atomic<int>& found_task, int task) {
        if (depth_ == ctx_.num_edges) return Dfs::found;
        if (found_task.load(std::memory_order_relaxed) < task) return Dfs::stopped;
        if (!meter_.charge()) {
            budget_hit_ = true;
            return Dfs::stopped;
        }
        for (int g = 0; g < ctx_.table->size(); ++g) {
            if (!try_assign(g)) {
                if (budget_hit_) return Dfs::stopped;
                continue;
            }
            const Dfs res = dfs(found_task, task);
            if (res == Dfs::found) return res;
            unassign();
            if (res == Dfs::stopped) return res;
        }
        return Dfs::exhausted;
    }

    /// Valid prefixes of length `target` (or complete colorings), in lex order.
    void collect(int target, std::vector<std::vector<int>>& out) {
        if (depth_ == target || depth_ == ctx_.num_edges) {
            out.emplace_back(colors_.begin(), colors_.begin() + depth_);
            return;
        }
        for (int g = 0; g < ctx_.table->size(); ++g) {
            if (!try_assign(g)) continue;
            collect(target, out);
            unassign();
        }
    }

    int depth() const { return depth_; }
    bool budget_hit() const { return budget_hit_; }
    const std::vector<int>& colors() const { return colors_; }

private:
    bool canonical(const std::vector<std::vector<int>>& maps) const {
        for (const auto& map : maps)
            for (std::size_t j = 0; j < map.size(); ++j) {
                const int a = colors_[map[j]];
                const int b = colors_[j];
                if (a < b) return false;
                if (a > b) break;
            }
        return true;
    }

    bool compatible(std::uint64_t h, std::uint64_t f, std::uint64_t core) const {
        if (ctx_.spec.kind == FamilyKind::intersecting) return (h & f) != 0;
        return (h & f) == core;
    }

    // 1 when coloring edge i with g completes a zero-sum family through i,
    // 0 when it does not, -1 when the budget ran out.
    int closes_family(int i, int g) {
        const int need = ctx_.m - 1;
        if (need == 0) return g == 0 ? 1 : 0;
        const auto& cand = ctx_.cand[i];
        if (static_cast<int>(cand.size()) < need) return 0;
        const int target = ctx_.table->neg(g);
        if (need == 1) {
            for (int f : cand)
                if (colors_[f] == target) return 1;
            return 0;
        }
        const std::uint64_t e = ctx_.masks[i];
        std::vector<int> next;
        for (std::size_t a = 0; a + need <= cand.size(); ++a) {
            const int f = cand[a];
            const std::uint64_t fm = ctx_.masks[f];
            const std::uint64_t core = e & fm;
            next.clear();
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                const std::uint64_t h = ctx_.masks[cand[b]];
                if (compatible(h, e, core) && compatible(h, fm, core)) next.push_back(cand[b]);
            }
            const int res = extend(next, need - 1, ctx_.table->add(target, ctx_.table->neg(colors_[f])), core);
            if (res != 0) return res;
        }
        return 0;
    }

    int extend(const std::vector<int>& cand, int need, int target, std::uint64_t core) {
        if (static_cast<int>(cand.size()) < need) return 0;
        if (!meter_.charge()) return -1;
        if (need == 1) {
            for (int f : cand)
                if (colors_[f] == target) return 1;
            return 0;
        }
        std::vector<int> next;
        for (std::size_t a = 0; a + need <= cand.size(); ++a) {
            const int f = cand[a];
            const std::uint64_t fm = ctx_.masks[f];
            next.clear();
            for (std::size_t b = a + 1; b < cand.size(); ++b)
                if (compatible(ctx_.masks[cand[b]], fm, core)) next.push_back(cand[b]);
            const int res = extend(next, need - 1, ctx_.table->add(target, ctx_.table->neg(colors_[f])), core);
            if (res != 0) return res;
        }
        return 0;
    }

    const LevelContext& ctx_;
    BudgetMeter& meter_;
    std::vector<int> colors_;
    int depth_ = 0;
    std::vector<detail::ExactLengthTracker> trackers_;
    std::vector<std::uint64_t> keys_;
    bool budget_hit_ = false;
};

void check_query(const RamseyQuery& q) {
    if (q.r < 2) throw DomainError("r must be >= 2");
    if (q.m < 1) throw DomainError("family size m must be >= 1");
    if (q.m % q.group.exponent() != 0)
        throw DomainError("m = " + std::to_string(q.m) + " is not a multiple of exp(" + q.group.name() + ") = " +
                          std::to_string(q.group.exponent()));
    if (q.kind.kind == FamilyKind::delta && (q.kind.q < 0 || q.kind.q >= q.r))
        throw DomainError("delta-system core size must satisfy 0 <= q < r");
    if (q.group.order() > CayleyTable::kMaxOrder)
        throw DomainError("group order beyond the coloring search limit of " + std::to_string(CayleyTable::kMaxOrder));
}

LevelResult search_level(const RamseyQuery& q, int n, const RamseyOptions& opt, const CayleyTable& table,
                         const StarTable* star, BudgetMeter& meter) {
    if (n < 0 || n > kMaxVertices - 1) throw DomainError("vertex count out of range");
    const LevelContext ctx = make_context(q, n, table, star, opt.symmetry);
    const std::uint64_t nodes_before = meter.nodes();
    LevelResult res;
    res.n = n;

    LevelSearcher root(ctx, meter);
    if (!root.root_ok()) {
        res.outcome = LevelOutcome::exhausted;
        return res;
    }

    const int jobs = std::max(1, opt.limits.jobs);
    std::vector<std::vector<int>> tasks{{}};
    for (int d = 1; jobs > 1 && static_cast<int>(tasks.size()) < 8 * jobs && d <= std::min(ctx.num_edges, 8); ++d) {
        tasks.clear();
        root.collect(d, tasks);
    }
    if (root.budget_hit()) {
        res.outcome = LevelOutcome::inconclusive;
        res.nodes = meter.nodes() - nodes_before;
        return res;
    }

    const int ntasks = static_cast<int>(tasks.size());
    std::atomic<int> found_task{INT_MAX};
    std::vector<std::vector<int>> found_colors(ntasks);
    std::vector<char> budget(ntasks, 0);

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int t = 0; t < ntasks; ++t) {
        if (found_task.load(std::memory_order_relaxed) < t) continue;
        LevelSearcher s(ctx, meter);
        for (int g : tasks[t])
            if (!s.try_assign(g)) {
                budget[t] = 1;  // only a budget hit can reject a collected prefix
                break;
            }
        if (budget[t]) continue;
        const Dfs out = s.dfs(found_task, t);
        if (out == Dfs::found) {
            found_colors[t] = s.colors();
            int cur = found_task.load();
            while (t < cur && !found_task.compare_exchange_weak(cur, t)) {
            }
        } else if (s.budget_hit()) {
            budget[t] = 1;
        }
    }

    res.nodes = meter.nodes() - nodes_before;
    const int hit = found_task.load();
    if (hit != INT_MAX) {
        res.outcome = LevelOutcome::bad_coloring;
        res.bad = Coloring(q.group, n, q.r, found_colors[hit]);
    } else {
        res.outcome = LevelOutcome::exhausted;
        for (int t = 0; t < ntasks; ++t)
            if (budget[t]) res.outcome = LevelOutcome::inconclusive;
    }
    return res;
}

// Re-checks a bad coloring with the independent family search.
void certify_bad(const RamseyQuery& q, const Coloring& c, const SearchLimits& limits) {
    if (c.num_edges() == 0) return;
    const auto check = verify_no_zero_sum_family(c, q.kind, q.m, limits);
    if (check.status == FamilyStatus::witness_found)
        throw InternalError("search produced a coloring of K_" + std::to_string(c.n()) + " that has a zero-sum " +
                            q.kind.name() + " of size " + std::to_string(q.m));
}

std::unique_ptr<StarTable> maybe_star_table(const RamseyQuery& q, const RamseyOptions& opt, const CayleyTable& table) {
    if (!opt.star_bound) return nullptr;
    if (q.kind.kind != FamilyKind::hyperstar && q.kind.kind != FamilyKind::intersecting) return nullptr;
    return StarTable::build(table, q.m, kStarTableMaxStates);
}

}  // namespace

LevelResult search_bad_coloring(const RamseyQuery& query, int n, const RamseyOptions& options) {
    check_query(query);
    const CayleyTable table(query.group);
    const auto star = maybe_star_table(query, options, table);
    BudgetMeter meter(options.limits);
    LevelResult res = search_level(query, n, options, table, star.get(), meter);
    if (res.bad) certify_bad(query, *res.bad, options.limits);
    return res;
}

RamseyResult exact_ramsey(const RamseyQuery& query, const RamseyOptions& options) {
    check_query(query);
    if (options.n_max < query.r || options.n_max > kMaxVertices - 1)
        throw DomainError("n_max must lie in [r, " + std::to_string(kMaxVertices - 1) + "]");
    const CayleyTable table(query.group);
    const auto star = maybe_star_table(query, options, table);
    BudgetMeter meter(options.limits);

    // Sandwich values used for the start point and a consistency check.
    std::optional<int> om;
    int start = query.r - 1;
    const FamilyKind kind = query.kind.kind;
    if (kind == FamilyKind::hyperstar || kind == FamilyKind::intersecting) {
        const InvariantResult s = egz_invariant(query.group, query.m, options.limits);
        start = std::max(start, omega(s.value, query.r) - 2);
        if (s.is_exact()) om = omega(s.value, query.r);
    } else {
        const int q = kind == FamilyKind::delta ? query.kind.q : 0;
        int lower = (query.r - q) * query.m + q;
        if (query.m >= query.group.order()) {
            const InvariantResult d = davenport(query.group, options.limits);
            if (d.is_exact()) lower = std::max(lower, (query.r - q) * query.m + d.value - 1);
        }
        start = std::max(start, lower - 1);
    }
    if (options.n_start) start = std::max(query.r - 1, *options.n_start);
    start = std::min(start, options.n_max);

    RamseyResult res;
    res.lower = query.r;  // K_{r-1} has no edges
    auto record_bad = [&](const LevelResult& lv) {
        if (lv.n + 1 >= res.lower) {
            res.lower = lv.n + 1;
            res.certificate = *lv.bad;
        }
    };

    int n = start;
    bool stop = false;
    auto run = [&](int level) {
        if (level < query.r) {
            LevelResult lv;
            lv.n = level;
            lv.outcome = LevelOutcome::bad_coloring;
            lv.bad = Coloring(query.group, level, query.r);
            return lv;
        }
        LevelResult lv = search_level(query, level, options, table, star.get(), meter);
        if (lv.bad) certify_bad(query, *lv.bad, options.limits);
        return lv;
    };

    LevelResult first = run(n);
    res.levels.push_back(first);
    if (first.outcome == LevelOutcome::exhausted) {
        res.upper = n;
        while (!stop) {
            --n;
            LevelResult lv = run(n);
            res.levels.push_back(lv);
            if (lv.outcome == LevelOutcome::exhausted) {
                res.upper = n;
            } else {
                if (lv.outcome == LevelOutcome::bad_coloring) record_bad(lv);
                stop = true;
            }
        }
    } else if (first.outcome == LevelOutcome::bad_coloring) {
        record_bad(first);
        while (!stop && n < options.n_max) {
            ++n;
            LevelResult lv = run(n);
            res.levels.push_back(lv);
            if (lv.outcome == LevelOutcome::bad_coloring) {
                record_bad(lv);
            } else {
                if (lv.outcome == LevelOutcome::exhausted) res.upper = n;
                stop = true;
            }
        }
    }
    if (!res.certificate) res.certificate = Coloring(query.group, res.lower - 1, query.r);
    res.status = res.exact() ? SearchStatus::exact : SearchStatus::inconclusive;

    if (om) {
        if (res.lower > *om)
            throw InternalError("bad coloring of K_" + std::to_string(res.lower - 1) + " exceeds the star upper bound " +
                                std::to_string(*om));
        if (res.upper && *res.upper < *om - 1)
            throw InternalError("exhaustion at n = " + std::to_string(*res.upper) +
                                " is below the hypermatching lower bound " + std::to_string(*om - 1));
    }
    return res;
}

ConjectureReport conjecture_probe(const Group& group, int k, int r, const RamseyOptions& options) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (r < 2) throw DomainError("r must be >= 2");
    ConjectureReport rep;
    rep.m = k * group.exponent();
    const InvariantResult s = egz_invariant(group, rep.m, options.limits);
    if (!s.is_exact()) throw Inconclusive("s_" + std::to_string(rep.m) + "(" + group.name() + ") not determined within budget");
    rep.s = s.value;
    rep.omega = omega(s.value, r);
    rep.hypothesis_holds = 2 * r <= rep.omega - 1;

    RamseyOptions opt = options;
    opt.n_max = std::min(std::max(options.n_max, rep.omega), kMaxVertices - 1);
    rep.intersecting = exact_ramsey({group, r, rep.m, {FamilyKind::intersecting, 0}}, opt);
    rep.hyperstar = exact_ramsey({group, r, rep.m, {FamilyKind::hyperstar, 0}}, opt);

    const auto ri = rep.intersecting.exact();
    const auto rs = rep.hyperstar.exact();
    if (ri && rs) {
        if (*ri > *rs) throw InternalError("intersecting value exceeds the hyperstar value");
        rep.agreement = *ri == *rs ? Agreement::agree : Agreement::disagree;
    } else if (rep.intersecting.upper && rep.intersecting.upper < rep.hyperstar.lower) {
        rep.agreement = Agreement::disagree;
    } else {
        rep.agreement = Agreement::inconclusive;
    }
    return rep;
}

}  // namespace zsr
