/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace osr {

using Index = std::size_t;

/// Subset of a finite carrier {0, .., 63}; bit i stands for element i.
///
/// Ordering is numeric on the bit pattern, a linear extension of inclusion.
/// Every sorted list of subsets in this library uses it as canonical order.
class Subset {
public:
    static constexpr std::size_t capacity = 64;

    constexpr Subset() = default;

    static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
    static constexpr Subset singleton(Index i) { return Subset(std::uint64_t{1} << i); }
    static constexpr Subset full(std::size_t n)
    {
        return Subset(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Index i) const { return (bits_ >> i) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr void insert(Index i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(Index i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
    constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
    constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

    std::vector<Index> members() const
    {
        std::vector<Index> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<Index>(std::countr_zero(b)));
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(static_cast<Index>(std::countr_zero(b)));
        }
    }

    friend constexpr bool operator==(Subset, Subset) = default;
    friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

private:
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

    std::uint64_t bits_ = 0;
};

/// Dense n×n boolean matrix used for order relations.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), cells_(n * n, 0) {}

    static Relation identity(std::size_t n)
    {
        Relation r(n);
        for (Index i = 0; i < n; ++i) {
            r.set(i, i);
        }
        return r;
    }

    std::size_t size() const { return n_; }
    bool operator()(Index i, Index j) const { return cells_[i * n_ + j] != 0; }
    void set(Index i, Index j, bool v = true) { cells_[i * n_ + j] = v ? 1 : 0; }

    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    bool is_preorder() const { return is_reflexive() && is_transitive(); }
    bool is_partial_order() const { return is_preorder() && is_antisymmetric(); }

    /// Reflexive-transitive closure (Warshall).
    Relation closure() const;
    Relation transpose() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Dense n×n table of a binary operation.
class Table {
public:
    Table() = default;
    explicit Table(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const { return n_; }
    Index operator()(Index i, Index j) const { return cells_[i * n_ + j]; }
    void set(Index i, Index j, Index v) { cells_[i * n_ + j] = v; }

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Index> cells_;
};

} // namespace osr
