#pragma once

// Dense subset-of-G bitsets and the incremental zero-sum trackers used by
// every search kernel. Elements are CayleyTable ranks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "zsr/group.hpp"

namespace zsr::detail {

using Word = std::uint64_t;

inline int words_for(int bits) { return (bits + 63) / 64; }
inline bool test_bit(const Word* s, int i) { return (s[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(Word* s, int i) { s[i >> 6] |= Word{1} << (i & 63); }

/// dst |= src + g. dst and src must not alias.
inline void translate_or(Word* dst, const Word* src, int words, int g, const CayleyTable& table) {
    for (int w = 0; w < words; ++w) {
        Word bits = src[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            set_bit(dst, table.add(w * 64 + b, g));
        }
    }
}

/// Tracks, for a growing multiset, the sums reachable with exactly c terms
/// for c < m. Adding g closes a zero-sum of length m iff -g is reachable with
/// m - 1 terms.
class ExactLengthTracker {
public:
    ExactLengthTracker(const CayleyTable& table, int m)
        : table_(&table), m_(m), words_(words_for(table.size())), rows_(static_cast<std::size_t>(m) * words_, 0) {
        if (m_ > 0) set_bit(row(0), 0);
    }

    bool closes_zero_sum(int g) const {
        if (m_ == 0) return true;
        return test_bit(row(m_ - 1), table_->neg(g));
    }

    void push(int g) {
        undo_.insert(undo_.end(), rows_.begin(), rows_.end());
        const int top = std::min(length_ + 1, m_ - 1);
        for (int c = top; c >= 1; --c) translate_or(row(c), row(c - 1), words_, g, *table_);
        ++length_;
    }

    void pop() {
        const auto n = rows_.size();
        std::copy(undo_.end() - static_cast<std::ptrdiff_t>(n), undo_.end(), rows_.begin());
        undo_.resize(undo_.size() - n);
        --length_;
    }

    int length() const { return length_; }

private:
    Word* row(int c) { return rows_.data() + static_cast<std::size_t>(c) * words_; }
    const Word* row(int c) const { return rows_.data() + static_cast<std::size_t>(c) * words_; }

    const CayleyTable* table_;
    int m_;
    int words_;
    int length_ = 0;
    std::vector<Word> rows_;
    std::vector<Word> undo_;
};

/// Tracks the set of nonempty subsums. Adding g creates a nonempty zero-sum
/// iff g = 0 or -g is already a subsum.
class NonemptyTracker {
public:
    explicit NonemptyTracker(const CayleyTable& table)
        : table_(&table), words_(words_for(table.size())), sums_(words_, 0), scratch_(words_, 0) {}

    bool closes_zero_sum(int g) const { return g == 0 || test_bit(sums_.data(), table_->neg(g)); }

    void push(int g) {
        undo_.insert(undo_.end(), sums_.begin(), sums_.end());
        scratch_ = sums_;
        translate_or(sums_.data(), scratch_.data(), words_, g, *table_);
        set_bit(sums_.data(), g);
        ++length_;
    }

    void pop() {
        std::copy(undo_.end() - words_, undo_.end(), sums_.begin());
        undo_.resize(undo_.size() - static_cast<std::size_t>(words_));
        --length_;
    }

    int length() const { return length_; }

private:
    const CayleyTable* table_;
    int words_;
    int length_ = 0;
    std::vector<Word> sums_;
    std::vector<Word> scratch_;
    std::vector<Word> undo_;
};

}  // namespace zsr::detail
