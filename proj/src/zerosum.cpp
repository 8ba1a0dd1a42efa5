#include "zsr/zerosum.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>

#include "sumset.hpp"
#include "zsr/errors.hpp"

namespace zsr {

GSeq::GSeq(Group group, std::vector<int> ranks) : group_(std::move(group)), ranks_(std::move(ranks)) {
    for (int r : ranks_)
        if (r < 0 || r >= group_.order()) throw StructuralError("sequence item out of range for group " + group_.name());
    std::sort(ranks_.begin(), ranks_.end());
}

GSeq GSeq::from_elements(const Group& group, const std::vector<Element>& items) {
    std::vector<int> ranks;
    ranks.reserve(items.size());
    for (const auto& e : items) {
        if (!(e.group() == group)) throw StructuralError("sequence item does not belong to group " + group.name());
        ranks.push_back(e.rank());
    }
    return GSeq(group, std::move(ranks));
}

std::vector<Element> GSeq::elements() const {
    std::vector<Element> out;
    out.reserve(ranks_.size());
    for (int r : ranks_) out.push_back(Element::from_rank(group_, r));
    return out;
}

namespace {

// Plain byte-table DP, used for groups beyond the CayleyTable limit.
bool exact_len_dp_generic(const GSeq& seq, int m) {
    const Group& g = seq.group();
    const int n = g.order();
    std::vector<std::vector<std::uint8_t>> reach(m + 1, std::vector<std::uint8_t>(n, 0));
    reach[0][0] = 1;
    int seen = 0;
    for (int item : seq.ranks()) {
        ++seen;
        for (int c = std::min(seen, m); c >= 1; --c)
            for (int h = 0; h < n; ++h)
                if (reach[c - 1][h]) reach[c][g.add_ranks(h, item)] = 1;
    }
    return reach[m][0] != 0;
}

}  // namespace

bool has_zero_sum_exact_len(const GSeq& seq, int m) {
    if (m < 0) throw DomainError("subsequence length must be >= 0");
    if (m == 0) return true;
    if (static_cast<std::size_t>(m) > seq.size()) return false;
    if (seq.group().order() > CayleyTable::kMaxOrder) return exact_len_dp_generic(seq, m);
    const CayleyTable table(seq.group());
    detail::ExactLengthTracker tracker(table, m);
    for (int item : seq.ranks()) {
        if (tracker.closes_zero_sum(item)) return true;
        tracker.push(item);
    }
    return false;
}

bool has_nonempty_zero_sum(const GSeq& seq) {
    const Group& g = seq.group();
    if (g.order() > CayleyTable::kMaxOrder) {
        std::vector<std::uint8_t> sums(g.order(), 0), next;
        for (int item : seq.ranks()) {
            if (item == 0 || sums[g.neg_rank(item)]) return true;
            next = sums;
            for (int h = 0; h < g.order(); ++h)
                if (sums[h]) next[g.add_ranks(h, item)] = 1;
            next[item] = 1;
            sums.swap(next);
        }
        return false;
    }
    const CayleyTable table(g);
    detail::NonemptyTracker tracker(table);
    for (int item : seq.ranks()) {
        if (tracker.closes_zero_sum(item)) return true;
        tracker.push(item);
    }
    return false;
}

namespace {

struct Candidate {
    std::vector<int> seq;
    bool valid = false;

    // Longer wins; among equal lengths the lexicographically least.
    bool improves_on(const Candidate& other) const {
        if (!valid) return false;
        if (!other.valid) return true;
        if (seq.size() != other.seq.size()) return seq.size() > other.seq.size();
        return seq < other.seq;
    }
    void offer(const std::vector<int>& s) {
        Candidate c{s, true};
        if (c.improves_on(*this)) *this = std::move(c);
    }
};

struct SearchOutcome {
    Candidate best;
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Depth-first search for the longest nondecreasing multiset the tracker
// accepts. Subsets of accepted multisets are accepted (downward closure),
// so a rejected extension prunes its whole subtree.
template <class Tracker>
class SubtreeSearch {
public:
    SubtreeSearch(Tracker tracker, int order, int cap, BudgetMeter& meter, const std::atomic<int>& cap_task,
                  int task_index)
        : tracker_(std::move(tracker)),
          order_(order),
          cap_(cap),
          meter_(meter),
          cap_task_(cap_task),
          task_index_(task_index) {}

    void replay(const std::vector<int>& prefix) {
        for (int g : prefix) {
            tracker_.push(g);
            seq_.push_back(g);
        }
    }

    void run() { visit(seq_.empty() ? 0 : seq_.back()); }

    const Candidate& best() const { return best_; }
    bool budget_hit() const { return budget_hit_; }
    bool reached_cap() const { return reached_cap_; }

private:
    void visit(int min_rank) {
        if (!meter_.charge()) {
            budget_hit_ = true;
            return;
        }
        best_.offer(seq_);
        if (cap_ >= 0 && static_cast<int>(seq_.size()) >= cap_) {
            reached_cap_ = true;
            return;
        }
        for (int g = min_rank; g < order_; ++g) {
            if (budget_hit_ || reached_cap_ || cap_task_.load(std::memory_order_relaxed) < task_index_) return;
            if (tracker_.closes_zero_sum(g)) continue;
            tracker_.push(g);
            seq_.push_back(g);
            visit(g);
            seq_.pop_back();
            tracker_.pop();
        }
    }

    Tracker tracker_;
    int order_;
    int cap_;
    BudgetMeter& meter_;
    const std::atomic<int>& cap_task_;
    int task_index_;
    std::vector<int> seq_;
    Candidate best_;
    bool budget_hit_ = false;
    bool reached_cap_ = false;
};

// Collects the accepted prefixes of length `depth` in lexicographic order;
// shorter accepted prefixes that cannot be extended to that depth are offered
// to `shallow` directly.
template <class Tracker>
void expand_frontier(Tracker& tracker, std::vector<int>& seq, int order, int depth, Candidate& shallow,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(seq.size()) == depth) {
        out.push_back(seq);
        return;
    }
    shallow.offer(seq);
    const int start = seq.empty() ? 0 : seq.back();
    for (int g = start; g < order; ++g) {
        if (tracker.closes_zero_sum(g)) continue;
        tracker.push(g);
        seq.push_back(g);
        expand_frontier(tracker, seq, order, depth, shallow, out);
        seq.pop_back();
        tracker.pop();
    }
}

/// Longest bad multiset. `cap` (or -1) is a length no bad multiset can
/// exceed; reaching it ends the search. jobs == 1 is the serial reference
/// path: one task rooted at the empty multiset.
template <class MakeTracker>
SearchOutcome longest_bad_multiset(int order, int cap, const SearchLimits& limits, MakeTracker make_tracker) {
    BudgetMeter meter(limits);
    const int jobs = std::max(1, limits.jobs);

    Candidate shallow;
    std::vector<std::vector<int>> prefixes;
    if (jobs == 1) {
        prefixes.emplace_back();
    } else {
        int depth = 0;
        const int max_depth = cap >= 0 ? std::min(cap, 3) : 3;
        for (;;) {
            Candidate scratch;
            std::vector<std::vector<int>> level;
            auto tracker = make_tracker();
            std::vector<int> seq;
            expand_frontier(tracker, seq, order, depth, scratch, level);
            prefixes = std::move(level);
            shallow = std::move(scratch);
            if (depth >= max_depth || static_cast<int>(prefixes.size()) >= 8 * jobs) break;
            ++depth;
        }
    }

    const int ntasks = static_cast<int>(prefixes.size());
    std::vector<Candidate> task_best(ntasks);
    std::vector<char> task_budget_hit(ntasks, 0);
    std::atomic<int> cap_task{INT_MAX};

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int i = 0; i < ntasks; ++i) {
        if (cap_task.load(std::memory_order_relaxed) < i) continue;
        SubtreeSearch search(make_tracker(), order, cap, meter, cap_task, i);
        search.replay(prefixes[i]);
        search.run();
        task_best[i] = search.best();
        task_budget_hit[i] = search.budget_hit() ? 1 : 0;
        if (search.reached_cap()) {
            int cur = cap_task.load();
            while (i < cur && !cap_task.compare_exchange_weak(cur, i)) {
            }
        }
    }

    SearchOutcome out;
    out.best = shallow;
    const int last = std::min(ntasks - 1, cap_task.load());
    for (int i = 0; i <= last; ++i) {
        if (task_budget_hit[i]) out.complete = false;
        if (task_best[i].improves_on(out.best)) out.best = task_best[i];
    }
    out.nodes = meter.nodes();
    return out;
}

void check_m(const Group& group, int m) {
    if (m < 1) throw DomainError("subsequence length m must be >= 1");
    if (m % group.exponent() != 0)
        throw DomainError("m = " + std::to_string(m) + " is not a multiple of exp(" + group.name() +
                          ") = " + std::to_string(group.exponent()));
}

}  // namespace

InvariantResult davenport(const Group& group, const SearchLimits& limits) {
    const CayleyTable table(group);
    // Any |G| terms have a zero-sum run of prefix sums, so D(G) <= |G|.
    const int cap = group.order() - 1;
    auto outcome = longest_bad_multiset(group.order(), cap, limits, [&] { return detail::NonemptyTracker(table); });

    InvariantResult res;
    res.nodes = outcome.nodes;
    res.witness = GSeq(group, outcome.best.seq);
    res.value = static_cast<int>(outcome.best.seq.size()) + 1;
    res.status = outcome.complete ? SearchStatus::exact : SearchStatus::inconclusive;
    res.upper = outcome.complete ? res.value : group.order();
    if (has_nonempty_zero_sum(res.witness))
        throw InternalError("Davenport witness for " + group.name() + " is not zero-sum free");
    return res;
}

InvariantResult egz_invariant(const Group& group, int m, const SearchLimits& limits) {
    check_m(group, m);
    const CayleyTable table(group);
    const InvariantResult d = davenport(group, limits);

    auto outcome = longest_bad_multiset(group.order(), -1, limits, [&] { return detail::ExactLengthTracker(table, m); });

    InvariantResult res;
    res.nodes = outcome.nodes + d.nodes;
    res.witness = GSeq(group, outcome.best.seq);
    res.value = static_cast<int>(outcome.best.seq.size()) + 1;
    if (has_zero_sum_exact_len(res.witness, m))
        throw InternalError("EGZ witness for " + group.name() + " contains a zero-sum of length " + std::to_string(m));

    // d.value is exact or a certified lower bound for D(G); either way
    // m + d.value - 1 is a valid floor for s_m.
    const int floor_bound = m + d.value - 1;
    if (outcome.complete) {
        res.status = SearchStatus::exact;
        res.upper = res.value;
        if (res.value < floor_bound)
            throw InternalError("s_" + std::to_string(m) + "(" + group.name() + ") = " + std::to_string(res.value) +
                                " violates s_m >= m + D - 1 = " + std::to_string(floor_bound));
        if (m == group.exponent() && res.value > group.order() + group.exponent() - 1)
            throw InternalError("s(" + group.name() + ") = " + std::to_string(res.value) +
                                " violates s(G) <= |G| + exp(G) - 1");
    } else {
        res.status = SearchStatus::inconclusive;
        // Every multiplicity is below m because m * g = 0.
        res.upper = group.order() * (m - 1) + 1;
        if (res.value < floor_bound) {
            res.witness = star_lower_witness(group, m, limits);
            res.value = static_cast<int>(res.witness.size()) + 1;
        }
    }
    return res;
}

EllResult ell_invariant(const Group& group, const SearchLimits& limits) {
    EllResult res;
    const InvariantResult d = davenport(group, limits);
    const int e = group.exponent();
    res.davenport = d.value;
    res.lower = std::max(1, (d.value + e - 1) / e);
    res.upper = group.order() / e;
    if (!d.is_exact()) {
        res.status = SearchStatus::inconclusive;
        res.value = res.lower;
        return res;
    }
    if (res.lower > res.upper) throw InternalError("D(G)/exp(G) exceeds |G|/exp(G) for " + group.name());
    if (res.lower == res.upper) {
        res.pinched = true;
        res.value = res.upper;
        return res;
    }
    // Equality holds for every k >= upper; scan downwards for the first failure.
    for (int k = res.upper - 1; k >= res.lower; --k) {
        const InvariantResult s = egz_invariant(group, k * e, limits);
        if (!s.is_exact()) {
            res.status = SearchStatus::inconclusive;
            res.upper = k + 1;
            res.value = res.lower;
            return res;
        }
        res.s_values[k] = s.value;
        if (s.value != k * e + d.value - 1) {
            res.value = k + 1;
            return res;
        }
    }
    res.value = res.lower;
    return res;
}

GSeq star_lower_witness(const Group& group, int m, const SearchLimits& limits) {
    check_m(group, m);
    const InvariantResult d = davenport(group, limits);
    std::vector<int> ranks(static_cast<std::size_t>(m - 1), 0);
    ranks.insert(ranks.end(), d.witness.ranks().begin(), d.witness.ranks().end());
    GSeq seq(group, std::move(ranks));
    if (has_zero_sum_exact_len(seq, m))
        throw InternalError("star lower witness for " + group.name() + " has a zero-sum of length " + std::to_string(m));
    return seq;
}

std::string egz_witness_key(int m) { return "egz:" + std::to_string(m); }

std::optional<std::string> validate_record(const InvariantRecord& rec) {
    const Group& g = rec.group;
    auto witness = [&](const std::string& key) -> const GSeq* {
        auto it = rec.witnesses.find(key);
        return it == rec.witnesses.end() ? nullptr : &it->second;
    };
    for (const auto& [key, seq] : rec.witnesses) {
        if (!(seq.group() == g)) return "witness '" + key + "' belongs to a different group";
        if (key == "davenport") {
            if (!rec.davenport) return "davenport witness without a value";
        } else if (key.rfind("egz:", 0) == 0) {
            int m = 0;
            try {
                m = std::stoi(key.substr(4));
            } catch (const std::exception&) {
                return "malformed witness key '" + key + "'";
            }
            if (!rec.egz.count(m)) return "witness '" + key + "' without a value";
        } else {
            return "unknown witness key '" + key + "'";
        }
    }
    if (rec.davenport) {
        const int dv = *rec.davenport;
        if (dv < 1 || dv > g.order()) return "D(G) out of range [1, |G|]";
        const GSeq* w = witness("davenport");
        if (!w) return "missing davenport witness";
        if (static_cast<int>(w->size()) != dv - 1) return "davenport witness length is not D(G) - 1";
        if (has_nonempty_zero_sum(*w)) return "davenport witness is not zero-sum free";
    }
    for (const auto& [m, s] : rec.egz) {
        if (m < 1 || m % g.exponent() != 0) return "s_m stored for m not a multiple of exp(G)";
        if (rec.davenport && s < m + *rec.davenport - 1) return "s_m below m + D - 1";
        const GSeq* w = witness(egz_witness_key(m));
        if (!w) return "missing witness for s_" + std::to_string(m);
        if (static_cast<int>(w->size()) != s - 1) return "s_m witness length is not s_m - 1";
        if (has_zero_sum_exact_len(*w, m)) return "s_m witness has a zero-sum subsequence of length m";
    }
    if (rec.ell) {
        const int e = g.exponent();
        const int lo = rec.davenport ? std::max(1, (*rec.davenport + e - 1) / e) : 1;
        if (*rec.ell < lo || *rec.ell > g.order() / e) return "ell(G) outside D/exp <= ell <= |G|/exp";
    }
    return std::nullopt;
}

}  // namespace zsr
