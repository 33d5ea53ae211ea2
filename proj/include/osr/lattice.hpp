/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "osr/subset.hpp"

namespace osr {

/// A finite bounded lattice, optionally carrying a commutative monoid
/// multiplication (quantale role).
class FiniteLattice {
public:
    /// Builds joins and meets from a partial order. Throws NotAPartialOrder
    /// or NotALattice.
    static FiniteLattice from_order(std::vector<std::string> labels, const Relation& le);

    /// Attaches a multiplication. Throws NotAQuantale unless it is a
    /// commutative monoid with the given unit that distributes over binary
    /// joins and annihilates bottom.
    FiniteLattice with_multiplication(const Table& mul, Index unit) const;

    /// Frame viewed as a quantale: multiplication is meet, unit is top.
    /// Throws NotAQuantale if the lattice is not distributive.
    FiniteLattice as_frame_quantale() const;

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Index i) const { return labels_[i]; }

    bool le(Index x, Index y) const { return le_(x, y); }
    Index join(Index x, Index y) const { return join_(x, y); }
    Index meet(Index x, Index y) const { return meet_(x, y); }
    Index bottom() const { return bottom_; }
    Index top() const { return top_; }
    const Relation& order() const { return le_; }

    bool has_multiplication() const { return unit_.has_value(); }
    /// Requires has_multiplication().
    Index mul(Index x, Index y) const { return mul_(x, y); }
    Index unit() const { return *unit_; }
    Index power(Index x, std::size_t n) const;

    bool is_distributive() const { return distributive_; }
    bool is_integral_quantale() const { return unit_.has_value() && *unit_ == top_; }
    /// Finite frames are exactly the finite distributive lattices.
    bool is_frame() const { return distributive_; }

    Index join_all(Subset elements) const;
    Index meet_all(Subset elements) const;

    /// Elements with exactly one lower cover.
    std::vector<Index> join_irreducibles() const;
    /// p != top with a∧b <= p implying a <= p or b <= p.
    std::vector<Index> meet_primes() const;
    /// Pairs (lower, upper) of the cover relation, in index order.
    std::vector<std::pair<Index, Index>> covers() const;

private:
    FiniteLattice() = default;

    std::vector<std::string> labels_;
    Relation le_;
    Table join_;
    Table meet_;
    Index bottom_ = 0;
    Index top_ = 0;
    bool distributive_ = false;
    Table mul_;
    std::optional<Index> unit_;
};

/// Structural identity of order, joins, multiplication and unit; labels ignored.
bool same_structure(const FiniteLattice& a, const FiniteLattice& b);

/// k-element chain 0 < 1 < ... < k-1, no multiplication.
FiniteLattice chain_lattice(std::size_t k);
/// Power set of an atoms-element set under inclusion; atoms = 2 is the diamond.
FiniteLattice boolean_lattice(std::size_t atoms);
/// k-chain quantale with multiplication = meet (a frame).
FiniteLattice chain_frame_quantale(std::size_t k);

/// Every map from -> to that preserves bottom and binary joins, listed in
/// lexicographic order of value tables. Generated from assignments on the
/// join-irreducibles of `from`. Throws SizeLimit if |to|^#JI exceeds 2^24.
std::vector<std::vector<Index>> enumerate_join_homs(const FiniteLattice& from, const FiniteLattice& to);

bool preserves_joins(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g);
bool preserves_meets(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g);
/// Joins (with bottom), unit and multiplication.
bool is_quantale_hom(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g);
/// Joins (with bottom), binary meets and top.
bool is_frame_hom(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g);

/// Order-isomorphism test for an explicit bijection candidate.
bool is_order_isomorphism(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g);

} // namespace osr
