#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsr/budget.hpp"
#include "zsr/decomposition.hpp"
#include "zsr/group.hpp"
#include "zsr/hypergraph.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

/// G-coloring of K_n^(r): one element rank per edge, indexed by colex rank.
class Coloring {
public:
    /// All edges colored 0.
    Coloring(Group group, int n, int r);
    Coloring(Group group, int n, int r, std::vector<int> color_ranks);

    const Group& group() const { return group_; }
    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t num_edges() const { return colors_.size(); }
    int color_rank(std::size_t edge) const { return colors_.at(edge); }
    Element color(std::size_t edge) const { return Element::from_rank(group_, colors_.at(edge)); }
    const std::vector<int>& color_ranks() const { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Group group_;
    int n_;
    int r_;
    std::vector<int> colors_;
};

/// f : V -> G, used by the potential coloring c(e) = sum_{v in e} f(v).
struct VertexPotential {
    Group group;
    std::vector<int> values;  ///< element rank per vertex
};

enum class FamilyKind { hyperstar, intersecting, matching, delta };

struct FamilySpec {
    FamilyKind kind = FamilyKind::hyperstar;
    int q = 0;  ///< core size, delta only

    /// "hyperstar", "intersecting", "matching", "delta(q)".
    std::string name() const;
    /// Accepts the names above; "delta:q" is also understood.
    static FamilySpec parse(const std::string& text);

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Whether `family` has exactly m edges and is of the requested kind.
bool family_matches(const EdgeFamily& family, FamilySpec spec, int m);

enum class FamilyStatus { certified_absent, witness_found, inconclusive };

struct FamilySearchResult {
    FamilyStatus status = FamilyStatus::certified_absent;
    std::optional<EdgeFamily> witness;
    std::uint64_t nodes = 0;
};

/// Size-m zero-sum family of the given kind. Hyperstars are answered by the
/// exact-length DP on each vertex star; the other kinds by exhaustive
/// backtracking over edges in colex order (candidates restricted to edges
/// compatible with everything chosen). The witness is the colex-least found:
/// lowest star centre then lex-least edge subset for hyperstars,
/// lexicographically least rank sequence otherwise.
FamilySearchResult find_zero_sum_family(const Coloring& coloring, FamilySpec spec, int m,
                                        const SearchLimits& limits = {});

/// As find_zero_sum_family, additionally re-checking any witness found
/// (size, kind, zero sum) before reporting it.
FamilySearchResult verify_no_zero_sum_family(const Coloring& coloring, FamilySpec spec, int m,
                                             const SearchLimits& limits = {});

/// Sum of the colors of `family` under `coloring`, as an element rank.
int family_color_sum(const Coloring& coloring, const EdgeFamily& family);

enum class LowerVariant { minus_two, minus_one };

/// The matching coloring behind the intersecting-family lower bound.
struct MatchingColoring {
    Coloring coloring;
    int s = 0;      ///< s_{k exp(G)}(G)
    int omega = 0;  ///< least n with C(n-1, r-1) >= s
    std::int64_t t = 0;
    GSeq witness;                  ///< length s - 1, no zero-sum subsequence of length k exp(G)
    std::vector<int> part_colors;  ///< first t terms of the witness, one per part
    Decomposition decomposition;
};

/// Colors K_{omega-2}^(r) (or K_{omega-1}^(r) when r | omega - 1) by
/// splitting it into t hypermatchings and giving part i the i-th term of a
/// length-(s-1) sequence with no zero-sum subsequence of length k exp(G).
/// Any intersecting family meets each matching at most once, so its colors
/// form a subsequence of that sequence.
MatchingColoring theorem1_lower_coloring(const Group& group, int k, int r, LowerVariant variant,
                                         const SearchLimits& limits = {});

struct PotentialColoring {
    Coloring coloring;
    VertexPotential potential;
    int davenport = 0;
};

/// K_n^(r) with n = (r-q) m + D(G) - 2, colored by c(e) = sum of f over e
/// where f puts a zero-sum-free sequence of length D(G)-1 on the first
/// vertices and 0 elsewhere.
PotentialColoring delta_lower_coloring(const Group& group, int r, int q, int m, const SearchLimits& limits = {});

}  // namespace zsr
