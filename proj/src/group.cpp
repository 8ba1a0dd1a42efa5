#include "zsr/group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "zsr/errors.hpp"

namespace zsr {

namespace {

std::map<std::int64_t, std::vector<int>> prime_power_exponents(std::span<const std::int64_t> factors) {
    std::map<std::int64_t, std::vector<int>> out;
    for (std::int64_t f : factors) {
        if (f < 1) throw DomainError("group factors must be >= 1, got " + std::to_string(f));
        for (std::int64_t p = 2; p * p <= f; ++p) {
            int e = 0;
            while (f % p == 0) {
                f /= p;
                ++e;
            }
            if (e > 0) out[p].push_back(e);
        }
        if (f > 1) out[f].push_back(1);
    }
    return out;
}

}  // namespace

Group::Group(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
    std::int64_t order = 1;
    for (int f : factors_) {
        order *= f;
        if (order > std::numeric_limits<int>::max()) throw DomainError("group order exceeds 2^31 - 1");
    }
    order_ = static_cast<int>(order);
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * factors_[i + 1];
}

Group Group::canonical(std::span<const std::int64_t> factors) {
    auto by_prime = prime_power_exponents(factors);
    std::size_t count = 0;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        count = std::max(count, exps.size());
    }
    // invariant[0] is the largest factor; reversed below.
    std::vector<std::int64_t> invariant(count, 1);
    for (const auto& [p, exps] : by_prime) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (int e = 0; e < exps[i]; ++e) {
                invariant[i] *= p;
                if (invariant[i] > std::numeric_limits<int>::max()) throw DomainError("group factor overflow");
            }
        }
    }
    std::vector<int> ascending(invariant.rbegin(), invariant.rend());
    return Group(std::move(ascending));
}

Group Group::parse(const std::string& text) {
    std::vector<std::int64_t> factors;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw DomainError("cannot parse group factor '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw DomainError("cannot parse group factor '" + item + "'");
        factors.push_back(v);
    }
    return canonical(factors);
}

int Group::rank_of(std::span<const int> coords) const {
    if (coords.size() != factors_.size()) throw StructuralError("coordinate count does not match group " + name());
    int r = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= factors_[i])
            throw StructuralError("coordinate out of range for group " + name());
        r += coords[i] * strides_[i];
    }
    return r;
}

std::vector<int> Group::coords_of(int rank) const {
    if (rank < 0 || rank >= order_) throw StructuralError("element rank out of range for group " + name());
    std::vector<int> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        c[i] = rank / strides_[i];
        rank %= strides_[i];
    }
    return c;
}

int Group::add_ranks(int a, int b) const {
    int r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const int x = (a / strides_[i]) % factors_[i];
        const int y = (b / strides_[i]) % factors_[i];
        r += ((x + y) % factors_[i]) * strides_[i];
    }
    return r;
}

int Group::neg_rank(int a) const {
    int r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const int x = (a / strides_[i]) % factors_[i];
        r += ((factors_[i] - x) % factors_[i]) * strides_[i];
    }
    return r;
}

int Group::multiply_rank(std::int64_t k, int a) const {
    int r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t x = (a / strides_[i]) % factors_[i];
        std::int64_t y = (k % factors_[i]) * x % factors_[i];
        if (y < 0) y += factors_[i];
        r += static_cast<int>(y) * strides_[i];
    }
    return r;
}

std::string Group::factor_list() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(factors_[i]);
    }
    return s;
}

std::string Group::name() const {
    if (factors_.empty()) return "{0}";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += "Z" + std::to_string(factors_[i]);
    }
    return s;
}

Element::Element(Group group, std::vector<int> coords) : group_(std::move(group)), coords_(std::move(coords)) {
    if (coords_.size() != group_.factors().size())
        throw StructuralError("coordinate count does not match group " + group_.name());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const int n = group_.factors()[i];
        coords_[i] = ((coords_[i] % n) + n) % n;
    }
}

Element Element::from_rank(const Group& group, int rank) { return Element(group, group.coords_of(rank)); }

bool Element::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Element add(const Element& a, const Element& b) {
    if (!(a.group() == b.group())) throw StructuralError("cannot add elements of different groups");
    std::vector<int> c(a.coords().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coords()[i] + b.coords()[i]) % a.group().factors()[i];
    return Element(a.group(), std::move(c));
}

Element neg(const Element& a) {
    std::vector<int> c(a.coords().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int n = a.group().factors()[i];
        c[i] = (n - a.coords()[i]) % n;
    }
    return Element(a.group(), std::move(c));
}

Element zero(const Group& group) { return Element(group, std::vector<int>(group.factors().size(), 0)); }

Element multiply(std::int64_t k, const Element& a) {
    return Element::from_rank(a.group(), a.group().multiply_rank(k, a.rank()));
}

std::vector<Element> elements(const Group& group) {
    std::vector<Element> out;
    out.reserve(group.order());
    for (int r = 0; r < group.order(); ++r) out.push_back(Element::from_rank(group, r));
    return out;
}

CayleyTable::CayleyTable(const Group& group) : size_(group.order()) {
    if (size_ > kMaxOrder)
        throw DomainError("group " + group.name() + " is too large for the search kernels (|G| <= " +
                          std::to_string(kMaxOrder) + ")");
    sum_.resize(static_cast<std::size_t>(size_) * size_);
    neg_.resize(size_);
    for (int a = 0; a < size_; ++a) {
        neg_[a] = static_cast<std::uint16_t>(group.neg_rank(a));
        for (int b = 0; b < size_; ++b) sum_[static_cast<std::size_t>(a) * size_ + b] = static_cast<std::uint16_t>(group.add_ranks(a, b));
    }
}

}  // namespace zsr
