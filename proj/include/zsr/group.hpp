#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zsr {

/// Finite abelian group Z_{n_1} x ... x Z_{n_k} in invariant-factor form
/// (n_1 | n_2 | ... | n_k, each n_i >= 2). The empty factor list is the
/// trivial group. Construction always canonicalizes, so two Groups compare
/// equal exactly when they are isomorphic.
///
/// Elements are addressed by a mixed-radix rank in [0, |G|): coordinates in
/// lexicographic order, last coordinate varying fastest.
class Group {
public:
    /// Trivial group.
    Group() = default;

    /// Invariant-factor normal form of prod Z_{f_i}. Entries equal to 1 vanish.
    static Group canonical(std::span<const std::int64_t> factors);
    static Group canonical(std::initializer_list<std::int64_t> factors) {
        return canonical(std::span<const std::int64_t>(factors.begin(), factors.size()));
    }
    /// Parses "2,12" (or "" / "1" for the trivial group).
    static Group parse(const std::string& text);

    const std::vector<int>& factors() const { return factors_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    int order() const { return order_; }
    int exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    bool is_trivial() const { return factors_.empty(); }

    int rank_of(std::span<const int> coords) const;
    std::vector<int> coords_of(int rank) const;

    int add_ranks(int a, int b) const;
    int neg_rank(int a) const;
    int multiply_rank(std::int64_t k, int a) const;

    /// "2,12"; empty string for the trivial group.
    std::string factor_list() const;
    /// "Z2 x Z12"; "{0}" for the trivial group.
    std::string name() const;

    friend bool operator==(const Group& a, const Group& b) { return a.factors_ == b.factors_; }
    friend bool operator<(const Group& a, const Group& b) { return a.factors_ < b.factors_; }

private:
    explicit Group(std::vector<int> invariant_factors);

    std::vector<int> factors_;
    std::vector<int> strides_;
    int order_ = 1;
};

/// A group element carrying its group, so mixed-group arithmetic is caught.
class Element {
public:
    Element(Group group, std::vector<int> coords);
    static Element from_rank(const Group& group, int rank);

    const Group& group() const { return group_; }
    const std::vector<int>& coords() const { return coords_; }
    int rank() const { return group_.rank_of(coords_); }
    bool is_zero() const;

    friend bool operator==(const Element& a, const Element& b) {
        return a.group_ == b.group_ && a.coords_ == b.coords_;
    }

private:
    Group group_;
    std::vector<int> coords_;
};

Element add(const Element& a, const Element& b);
Element neg(const Element& a);
Element zero(const Group& group);
Element multiply(std::int64_t k, const Element& a);

/// All elements in lexicographic coordinate order (= rank order).
std::vector<Element> elements(const Group& group);

/// Dense addition/negation tables for the search kernels.
class CayleyTable {
public:
    static constexpr int kMaxOrder = 1024;

    explicit CayleyTable(const Group& group);

    int size() const { return size_; }
    int add(int a, int b) const { return sum_[static_cast<std::size_t>(a) * size_ + b]; }
    int neg(int a) const { return neg_[a]; }

private:
    int size_;
    std::vector<std::uint16_t> sum_;
    std::vector<std::uint16_t> neg_;
};

}  // namespace zsr
