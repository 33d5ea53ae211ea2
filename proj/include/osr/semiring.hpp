/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "osr/subset.hpp"

namespace osr {

class FiniteLattice;

/// Largest carrier accepted by validate().
inline constexpr std::size_t max_carrier_size = 24;

struct DiscreteOrder {
    friend bool operator==(DiscreteOrder, DiscreteOrder) = default;
};
/// Elements listed in ascending order.
struct ChainOrder {
    friend bool operator==(ChainOrder, ChainOrder) = default;
};
using LePairs = std::vector<std::pair<std::string, std::string>>;
using OrderSpec = std::variant<DiscreteOrder, ChainOrder, LePairs>;

/// Label-level description of an ordered semiring, as read from text.
struct RawSemiringDescription {
    std::string name;
    std::vector<std::string> elements;
    OrderSpec le = DiscreteOrder{};
    std::string zero;
    std::string one;
    std::vector<std::vector<std::string>> add_table;
    std::vector<std::vector<std::string>> mul_table;

    friend bool operator==(const RawSemiringDescription&, const RawSemiringDescription&) = default;
};

/// A finite ordered semiring (A, <=, 0, 1, +, *) whose axioms have been
/// checked exhaustively. Elements are indices 0..n-1 in input order.
/// Instances are immutable and only obtainable through validate() or one of
/// the builders below.
class Semiring {
public:
    std::size_t size() const { return labels_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Index i) const { return labels_[i]; }
    std::optional<Index> find(std::string_view label) const;

    bool le(Index x, Index y) const { return le_(x, y); }
    Index add(Index x, Index y) const { return add_(x, y); }
    Index mul(Index x, Index y) const { return mul_(x, y); }
    Index zero() const { return zero_; }
    Index one() const { return one_; }

    const Relation& order() const { return le_; }
    const Table& add_table() const { return add_; }
    const Table& mul_table() const { return mul_; }

    /// x^n for n >= 1 (x^0 = 1).
    Index power(Index x, std::size_t n) const;
    bool is_discrete() const;
    Subset carrier() const { return Subset::full(size()); }

    /// "{a,b,c}" using element labels, in index order.
    std::string subset_label(Subset s) const;

    /// Same order, tables and constants; names and labels are ignored.
    bool same_structure(const Semiring& other) const;

private:
    friend std::shared_ptr<const Semiring> make_semiring(std::string, std::vector<std::string>, Relation, Index,
                                                         Index, Table, Table);
    Semiring() = default;

    std::string name_;
    std::vector<std::string> labels_;
    Relation le_;
    Table add_;
    Table mul_;
    Index zero_ = 0;
    Index one_ = 0;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// Checks every ordered-semiring law over all pairs and triples. Throws
/// AxiomViolation listing one witness per failed law, or SizeLimit.
SemiringPtr make_semiring(std::string name, std::vector<std::string> labels, Relation le, Index zero, Index one,
                          Table add, Table mul);

/// Resolves labels, closes the order reflexively and transitively and
/// validates. Throws LabelError, SizeLimit or AxiomViolation.
SemiringPtr validate(const RawSemiringDescription& desc);

/// Inverse of validate() up to closure of the order.
RawSemiringDescription describe(const Semiring& a);

// Builders. Each result has passed the same exhaustive validation.

/// Z/m, discretely ordered.
SemiringPtr build_zmod(std::size_t m);
/// k-element chain with join as addition and meet as multiplication.
SemiringPtr build_chain_lattice(std::size_t k);
/// Downsets of a finite partial order (at most 6 points) under union and
/// intersection. Throws NotAPartialOrder.
SemiringPtr build_dlat_from_poset(const Relation& poset, const std::vector<std::string>& point_labels = {});
/// Boolean ring on 2^atoms elements (symmetric difference, meet), discrete.
SemiringPtr build_boolean_ring(std::size_t atoms);
/// {0..cap} with saturating + and *, usual order.
SemiringPtr build_truncated_naturals(std::size_t cap);
/// {-inf, 0..cap}: max as addition, saturating + as multiplication.
SemiringPtr build_truncated_maxplus(std::size_t cap);
/// (Q, <=, bottom, unit, join, mul) for a finite quantale. Throws NotAQuantale.
SemiringPtr build_from_quantale(const FiniteLattice& q);
/// Same tables, identity order.
SemiringPtr discretize(const Semiring& a);
/// Same tables, reversed order.
SemiringPtr order_dual(const Semiring& a);

/// "{a,b}" labels for subsets of named points, shared by the Boolean ring
/// and downset builders.
std::string point_set_label(Subset s, const std::vector<std::string>& point_labels);
std::vector<std::string> default_point_labels(std::size_t n);

} // namespace osr
