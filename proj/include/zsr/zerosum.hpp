#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zsr/budget.hpp"
#include "zsr/group.hpp"

namespace zsr {

/// A finite multiset of group elements, stored as element ranks in
/// nondecreasing order so equal multisets compare equal.
class GSeq {
public:
    GSeq() = default;
    explicit GSeq(Group group) : group_(std::move(group)) {}
    GSeq(Group group, std::vector<int> ranks);
    static GSeq from_elements(const Group& group, const std::vector<Element>& items);

    const Group& group() const { return group_; }
    const std::vector<int>& ranks() const { return ranks_; }
    std::vector<Element> elements() const;
    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }

    friend bool operator==(const GSeq& a, const GSeq& b) { return a.group_ == b.group_ && a.ranks_ == b.ranks_; }

private:
    Group group_;
    std::vector<int> ranks_;
};

/// True iff some sub-multiset of exactly m terms sums to zero. Boolean DP
/// over (items seen, partial sum, count), O(|S| * |G| * m).
bool has_zero_sum_exact_len(const GSeq& seq, int m);

/// True iff some nonempty sub-multiset sums to zero.
bool has_nonempty_zero_sum(const GSeq& seq);

enum class SearchStatus { exact, inconclusive };

/// Outcome of a "longest bad sequence" search. When exact, `value` is the
/// invariant and `witness` has length value - 1. When inconclusive, `value`
/// is a certified lower bound (witness length + 1) and `upper` an elementary
/// upper bound.
struct InvariantResult {
    SearchStatus status = SearchStatus::exact;
    int value = 0;
    int upper = 0;
    GSeq witness;
    std::uint64_t nodes = 0;

    bool is_exact() const { return status == SearchStatus::exact; }
};

/// D(G) by depth-first search over nondecreasing zero-sum-free multisets.
InvariantResult davenport(const Group& group, const SearchLimits& limits = {});

/// s_m(G) for exp(G) | m. Throws DomainError otherwise, InternalError if the
/// result breaks s_m >= m + D - 1 or (for m = exp(G)) s <= |G| + exp(G) - 1.
InvariantResult egz_invariant(const Group& group, int m, const SearchLimits& limits = {});

struct EllResult {
    SearchStatus status = SearchStatus::exact;
    int value = 0;  ///< ell(G) when exact
    int lower = 0;  ///< ceil(D / exp), at least 1
    int upper = 0;  ///< |G| / exp
    int davenport = 0;
    bool pinched = false;           ///< lower == upper, no s_m search run
    std::map<int, int> s_values;    ///< k -> s_{k exp(G)}(G) for each k searched
};

/// Smallest t with s_{k exp} = k exp + D - 1 for every k >= t, using
/// ell <= |G| / exp(G) to stop the scan.
EllResult ell_invariant(const Group& group, const SearchLimits& limits = {});

/// (0 repeated m-1 times) followed by a zero-sum-free sequence of maximal
/// found length; has no zero-sum subsequence of length m.
GSeq star_lower_witness(const Group& group, int m, const SearchLimits& limits = {});

/// Known invariants of one group, as persisted in the cache.
struct InvariantRecord {
    Group group;
    std::optional<int> davenport;
    std::map<int, int> egz;  ///< m -> s_m(G)
    std::optional<int> ell;
    std::map<std::string, GSeq> witnesses;  ///< "davenport", "egz:<m>"

    friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

std::string egz_witness_key(int m);

/// Re-checks every structural invariant and witness of a record. Returns a
/// description of the first problem, or nullopt when the record is sound.
std::optional<std::string> validate_record(const InvariantRecord& record);

}  // namespace zsr
