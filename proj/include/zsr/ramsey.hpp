#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsr/budget.hpp"
#include "zsr/coloring.hpp"
#include "zsr/group.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

/// Least n with C(n-1, r-1) >= s: the vertex count at which a single star
/// is long enough to force a zero-sum subsequence of the star colors.
int omega(int s, int r);

struct Provenance {
    std::string name;
    std::string formula;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BoundReport {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    std::vector<Provenance> provenance;
};

/// Bounds on R(I_m^(r), G) (intersecting) and R(S_m^(r), G) (hyperstar)
/// for m = k exp(G).
struct StarBounds {
    int m = 0;
    SearchStatus s_status = SearchStatus::exact;
    int s_lower = 0;  ///< s_m(G), or a lower bound when inconclusive
    int s_upper = 0;
    int omega = 0;    ///< omega(s) when exact
    bool remark_applies = false;  ///< r > (omega - 1) / 2
    BoundReport intersecting;
    BoundReport hyperstar;
};

/// Omega(s)-1 <= R_I <= R_S <= Omega(s), with equality at Omega(s) when
/// r | Omega(s) - 1, and for r > (Omega(s)-1)/2 the exact intersecting
/// value Omega(s)-1 or Omega(s) according to C(Omega(s)-1, r) >= s.
StarBounds theorem1_bounds(int s, int m, int r);
StarBounds theorem1_bounds(const Group& group, int k, int r, const SearchLimits& limits = {});

/// The large-r value of R_I; nullopt when r <= (Omega(s) - 1) / 2.
std::optional<int> remark_intersecting_value(int s, int r);

/// s <= R(K_{1,m}, G) <= s + 1, exact s + 1 when s is even.
BoundReport corollary_r2_bounds(int s);
BoundReport corollary_r2_bounds(const Group& group, int k, const SearchLimits& limits = {});

/// R(K_{1,m}, Z_t) for t | m, t >= 2: m + t - 1 if m and t are even, else m + t.
int theoremC_value(int m, int t);

/// (r-q)m + max(q, D-1) <= R(S(r,q,m), G) <= (r-q)m + min((r-q)(D-1), |G|-1) + q
/// for r > q >= 0, m >= |G|, exp(G) | m.
BoundReport theorem2_bounds(int davenport, int order, int exponent, int r, int q, int m);
BoundReport theorem2_bounds(const Group& group, int r, int q, int m, const SearchLimits& limits = {});

struct RamseyQuery {
    Group group;
    int r = 2;
    int m = 2;
    FamilySpec kind;
};

struct RamseyOptions {
    int n_max = 12;
    /// First vertex count probed; defaults to one below the known lower bound.
    std::optional<int> n_start;
    SearchLimits limits;
    /// Prune a partial coloring once some vertex star can no longer be
    /// completed without a zero-sum m-subset (hyperstar and intersecting
    /// kinds only). Uses an exhaustive table of bad multisets.
    bool star_bound = true;
    /// Vertex-permutation canonicity on the first C(k, r) edges, k <= r + 2.
    bool symmetry = true;
};

enum class LevelOutcome { bad_coloring, exhausted, inconclusive };

struct LevelResult {
    int n = 0;
    LevelOutcome outcome = LevelOutcome::exhausted;
    std::optional<Coloring> bad;  ///< lexicographically least bad coloring
    std::uint64_t nodes = 0;
};

/// Decides whether some G-coloring of K_n^(r) has no zero-sum family of the
/// query's kind and size. Colors are assigned depth-first in colex edge
/// order, element ranks ascending, so the first bad coloring found is the
/// lexicographically least one.
LevelResult search_bad_coloring(const RamseyQuery& query, int n, const RamseyOptions& options);

struct RamseyResult {
    SearchStatus status = SearchStatus::exact;
    int lower = 0;             ///< certified R >= lower
    std::optional<int> upper;  ///< certified R <= upper
    std::optional<Coloring> certificate;  ///< bad coloring of K_{lower-1}
    std::vector<LevelResult> levels;

    std::optional<int> exact() const {
        if (upper && *upper == lower) return lower;
        return std::nullopt;
    }
};

/// Least n such that every G-coloring of K_n^(r) has a zero-sum family of
/// the query's kind and size m, by sweeping n and searching each level.
RamseyResult exact_ramsey(const RamseyQuery& query, const RamseyOptions& options = {});

enum class Agreement { agree, disagree, inconclusive };

struct ConjectureReport {
    int m = 0;
    int s = 0;
    int omega = 0;
    bool hypothesis_holds = false;  ///< r <= (omega - 1) / 2
    RamseyResult intersecting;
    RamseyResult hyperstar;
    Agreement agreement = Agreement::inconclusive;
};

/// Computes R_I and R_S by search and compares them. Reports only; never a
/// proof of anything beyond the instances searched.
ConjectureReport conjecture_probe(const Group& group, int k, int r, const RamseyOptions& options = {});

}  // namespace zsr
