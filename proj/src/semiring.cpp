/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/semiring.hpp"

#include <algorithm>
#include <map>

#include "osr/error.hpp"
#include "osr/lattice.hpp"

namespace osr {

std::optional<Index> Semiring::find(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<Index>(it - labels_.begin());
}

Index Semiring::power(Index x, std::size_t n) const
{
    Index r = one_;
    for (std::size_t i = 0; i < n; ++i) {
        r = mul(r, x);
    }
    return r;
}

bool Semiring::is_discrete() const
{
    return le_ == Relation::identity(size());
}

std::string Semiring::subset_label(Subset s) const
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](Index i) {
        if (!first) {
            out += ',';
        }
        out += labels_[i];
        first = false;
    });
    return out + "}";
}

bool Semiring::same_structure(const Semiring& other) const
{
    return le_ == other.le_ && add_ == other.add_ && mul_ == other.mul_ && zero_ == other.zero_ &&
           one_ == other.one_;
}

namespace {

class AxiomChecker {
public:
    AxiomChecker(const std::vector<std::string>& labels, const Relation& le, const Table& add, const Table& mul,
                 Index zero, Index one)
        : labels_(labels), le_(le), add_(add), mul_(mul), zero_(zero), one_(one), n_(labels.size())
    {
    }

    std::vector<Violation> run()
    {
        check_order();
        for (Index x = 0; x < n_; ++x) {
            expect(add_(x, zero_) == x, "add-identity", {x});
            expect(mul_(x, one_) == x, "mul-identity", {x});
            expect(mul_(x, zero_) == zero_, "mul-zero", {x});
            for (Index y = 0; y < n_; ++y) {
                expect(add_(x, y) == add_(y, x), "add-commutative", {x, y});
                expect(mul_(x, y) == mul_(y, x), "mul-commutative", {x, y});
                for (Index z = 0; z < n_; ++z) {
                    expect(add_(add_(x, y), z) == add_(x, add_(y, z)), "add-associative", {x, y, z});
                    expect(mul_(mul_(x, y), z) == mul_(x, mul_(y, z)), "mul-associative", {x, y, z});
                    expect(mul_(x, add_(y, z)) == add_(mul_(x, y), mul_(x, z)), "distributive", {x, y, z});
                    if (le_(x, y)) {
                        expect(le_(add_(x, z), add_(y, z)) && le_(add_(z, x), add_(z, y)), "add-monotone",
                               {x, y, z});
                        expect(le_(mul_(x, z), mul_(y, z)) && le_(mul_(z, x), mul_(z, y)), "mul-monotone",
                               {x, y, z});
                    }
                }
            }
        }
        return std::move(violations_);
    }

private:
    void check_order()
    {
        for (Index x = 0; x < n_; ++x) {
            expect(le_(x, x), "le-reflexive", {x});
            for (Index y = 0; y < n_; ++y) {
                for (Index z = 0; z < n_; ++z) {
                    expect(!(le_(x, y) && le_(y, z)) || le_(x, z), "le-transitive", {x, y, z});
                }
            }
        }
    }

    void expect(bool ok, const char* axiom, std::initializer_list<Index> witness)
    {
        if (ok || seen_.count(axiom)) {
            return;
        }
        seen_[axiom] = true;
        Violation v{axiom, {}};
        for (Index i : witness) {
            v.witness.push_back(labels_[i]);
        }
        violations_.push_back(std::move(v));
    }

    const std::vector<std::string>& labels_;
    const Relation& le_;
    const Table& add_;
    const Table& mul_;
    Index zero_;
    Index one_;
    std::size_t n_;
    std::map<std::string, bool> seen_;
    std::vector<Violation> violations_;
};

void require(bool ok, ErrorKind kind, const std::string& message)
{
    if (!ok) {
        throw Error(kind, message);
    }
}

bool table_in_range(const Table& t, std::size_t n)
{
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (t(i, j) >= n) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::string> numeric_labels(std::size_t n, std::size_t offset = 0)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i + offset));
    }
    return out;
}

Relation chain_relation(std::size_t n)
{
    Relation r(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            r.set(i, j);
        }
    }
    return r;
}

} // namespace

SemiringPtr make_semiring(std::string name, std::vector<std::string> labels, Relation le, Index zero, Index one,
                          Table add, Table mul)
{
    const std::size_t n = labels.size();
    require(n <= max_carrier_size, ErrorKind::SizeLimit,
            std::to_string(n) + " elements exceed the limit of " + std::to_string(max_carrier_size));
    require(n >= 1, ErrorKind::InvalidArgument, "carrier is empty");
    require(le.size() == n && add.size() == n && mul.size() == n, ErrorKind::InvalidArgument,
            "order and tables must be " + std::to_string(n) + "x" + std::to_string(n));
    require(zero < n && one < n && table_in_range(add, n) && table_in_range(mul, n), ErrorKind::InvalidArgument,
            "table entry out of range");

    auto violations = AxiomChecker(labels, le, add, mul, zero, one).run();
    if (!violations.empty()) {
        throw AxiomViolation(std::move(violations));
    }

    std::shared_ptr<Semiring> s(new Semiring());
    s->name_ = std::move(name);
    s->labels_ = std::move(labels);
    s->le_ = std::move(le);
    s->add_ = std::move(add);
    s->mul_ = std::move(mul);
    s->zero_ = zero;
    s->one_ = one;
    return s;
}

SemiringPtr validate(const RawSemiringDescription& desc)
{
    const std::size_t n = desc.elements.size();
    require(n <= max_carrier_size, ErrorKind::SizeLimit,
            std::to_string(n) + " elements exceed the limit of " + std::to_string(max_carrier_size));
    require(n >= 1, ErrorKind::LabelError, "no elements");

    std::map<std::string, Index> index;
    for (Index i = 0; i < n; ++i) {
        require(index.emplace(desc.elements[i], i).second, ErrorKind::LabelError,
                "duplicate element '" + desc.elements[i] + "'");
    }
    auto resolve = [&](const std::string& label, const char* where) {
        auto it = index.find(label);
        require(it != index.end(), ErrorKind::LabelError,
                "unknown label '" + label + "' in " + where);
        return it->second;
    };
    auto resolve_table = [&](const std::vector<std::vector<std::string>>& rows, const char* where) {
        require(rows.size() == n, ErrorKind::InvalidArgument,
                std::string(where) + " table has " + std::to_string(rows.size()) + " rows, expected " +
                    std::to_string(n));
        Table t(n);
        for (Index i = 0; i < n; ++i) {
            require(rows[i].size() == n, ErrorKind::InvalidArgument,
                    std::string(where) + " row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
            for (Index j = 0; j < n; ++j) {
                t.set(i, j, resolve(rows[i][j], where));
            }
        }
        return t;
    };

    Relation le(n);
    if (std::holds_alternative<DiscreteOrder>(desc.le)) {
        le = Relation::identity(n);
    } else if (std::holds_alternative<ChainOrder>(desc.le)) {
        le = chain_relation(n);
    } else {
        for (const auto& [lo, hi] : std::get<LePairs>(desc.le)) {
            le.set(resolve(lo, "le"), resolve(hi, "le"));
        }
        le = le.closure();
    }

    const Index zero = resolve(desc.zero, "zero");
    const Index one = resolve(desc.one, "one");
    Table add = resolve_table(desc.add_table, "add");
    Table mul = resolve_table(desc.mul_table, "mul");
    return make_semiring(desc.name, desc.elements, std::move(le), zero, one, std::move(add), std::move(mul));
}

RawSemiringDescription describe(const Semiring& a)
{
    const std::size_t n = a.size();
    RawSemiringDescription d;
    d.name = a.name();
    d.elements = a.labels();
    d.zero = a.label(a.zero());
    d.one = a.label(a.one());
    if (a.is_discrete()) {
        d.le = DiscreteOrder{};
    } else if (a.order() == chain_relation(n)) {
        d.le = ChainOrder{};
    } else {
        LePairs pairs;
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                if (i != j && a.le(i, j)) {
                    pairs.emplace_back(a.label(i), a.label(j));
                }
            }
        }
        d.le = std::move(pairs);
    }
    d.add_table.assign(n, std::vector<std::string>(n));
    d.mul_table.assign(n, std::vector<std::string>(n));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            d.add_table[i][j] = a.label(a.add(i, j));
            d.mul_table[i][j] = a.label(a.mul(i, j));
        }
    }
    return d;
}

std::vector<std::string> default_point_labels(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return out;
}

std::string point_set_label(Subset s, const std::vector<std::string>& point_labels)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](Index i) {
        if (!first) {
            out += ',';
        }
        out += point_labels[i];
        first = false;
    });
    return out + "}";
}

SemiringPtr build_zmod(std::size_t m)
{
    require(m >= 1, ErrorKind::InvalidArgument, "zmod needs m >= 1");
    require(m <= max_carrier_size, ErrorKind::SizeLimit, "zmod modulus too large");
    Table add(m), mul(m);
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            add.set(i, j, (i + j) % m);
            mul.set(i, j, (i * j) % m);
        }
    }
    return make_semiring("Z/" + std::to_string(m), numeric_labels(m), Relation::identity(m), 0, 1 % m,
                         std::move(add), std::move(mul));
}

SemiringPtr build_chain_lattice(std::size_t k)
{
    require(k >= 1, ErrorKind::InvalidArgument, "chain needs k >= 1");
    require(k <= max_carrier_size, ErrorKind::SizeLimit, "chain too long");
    Table add(k), mul(k);
    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            add.set(i, j, std::max(i, j));
            mul.set(i, j, std::min(i, j));
        }
    }
    return make_semiring(k == 2 ? "2" : "chain-" + std::to_string(k), numeric_labels(k), chain_relation(k), 0,
                         k - 1, std::move(add), std::move(mul));
}

SemiringPtr build_dlat_from_poset(const Relation& poset, const std::vector<std::string>& point_labels)
{
    const std::size_t p = poset.size();
    require(p <= 6, ErrorKind::SizeLimit, "downset construction accepts at most 6 points");
    require(poset.is_partial_order(), ErrorKind::NotAPartialOrder, "input relation is not a partial order");
    const auto names = point_labels.empty() ? default_point_labels(p) : point_labels;
    require(names.size() == p, ErrorKind::InvalidArgument, "one label per point required");

    std::vector<Subset> downsets;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
        const Subset s = Subset::from_bits(bits);
        bool closed = true;
        s.for_each([&](Index y) {
            for (Index x = 0; x < p; ++x) {
                if (poset(x, y) && !s.contains(x)) {
                    closed = false;
                }
            }
        });
        if (closed) {
            downsets.push_back(s);
        }
    }
    const std::size_t n = downsets.size();
    require(n <= max_carrier_size, ErrorKind::SizeLimit, "too many downsets");
    auto index_of = [&](Subset s) {
        return static_cast<Index>(std::lower_bound(downsets.begin(), downsets.end(), s) - downsets.begin());
    };
    Relation le(n);
    Table add(n), mul(n);
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) {
        labels.push_back(point_set_label(downsets[i], names));
        for (Index j = 0; j < n; ++j) {
            le.set(i, j, downsets[i].is_subset_of(downsets[j]));
            add.set(i, j, index_of(downsets[i] | downsets[j]));
            mul.set(i, j, index_of(downsets[i] & downsets[j]));
        }
    }
    return make_semiring("downsets", std::move(labels), std::move(le), 0, n - 1, std::move(add), std::move(mul));
}

SemiringPtr build_boolean_ring(std::size_t atoms)
{
    require(atoms >= 1 && atoms <= 3, ErrorKind::InvalidArgument, "Boolean ring needs 1 to 3 atoms");
    const std::size_t n = std::size_t{1} << atoms;
    const auto names = default_point_labels(atoms);
    Table add(n), mul(n);
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) {
        labels.push_back(point_set_label(Subset::from_bits(i), names));
        for (Index j = 0; j < n; ++j) {
            add.set(i, j, i ^ j);
            mul.set(i, j, i & j);
        }
    }
    return make_semiring("bool-" + std::to_string(atoms), std::move(labels), Relation::identity(n), 0, n - 1,
                         std::move(add), std::move(mul));
}

SemiringPtr build_truncated_naturals(std::size_t cap)
{
    require(cap >= 1, ErrorKind::InvalidArgument, "truncnat needs cap >= 1");
    const std::size_t n = cap + 1;
    require(n <= max_carrier_size, ErrorKind::SizeLimit, "cap too large");
    Table add(n), mul(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            add.set(i, j, std::min(i + j, cap));
            mul.set(i, j, std::min(i * j, cap));
        }
    }
    return make_semiring("truncnat-" + std::to_string(cap), numeric_labels(n), chain_relation(n), 0, 1,
                         std::move(add), std::move(mul));
}

SemiringPtr build_truncated_maxplus(std::size_t cap)
{
    require(cap >= 1, ErrorKind::InvalidArgument, "maxplus needs cap >= 1");
    const std::size_t n = cap + 2;  // -inf, 0..cap
    require(n <= max_carrier_size, ErrorKind::SizeLimit, "cap too large");
    std::vector<std::string> labels{"-inf"};
    for (const auto& l : numeric_labels(cap + 1)) {
        labels.push_back(l);
    }
    Table add(n), mul(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            add.set(i, j, std::max(i, j));
            // index k > 0 stands for the monoid element k - 1
            mul.set(i, j, (i == 0 || j == 0) ? 0 : std::min((i - 1) + (j - 1), cap) + 1);
        }
    }
    return make_semiring("maxplus-" + std::to_string(cap), std::move(labels), chain_relation(n), 0, 1,
                         std::move(add), std::move(mul));
}

SemiringPtr build_from_quantale(const FiniteLattice& q)
{
    require(q.has_multiplication(), ErrorKind::NotAQuantale, "lattice carries no multiplication");
    const std::size_t n = q.size();
    Table add(n), mul(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            add.set(i, j, q.join(i, j));
            mul.set(i, j, q.mul(i, j));
        }
    }
    return make_semiring("quantale", q.labels(), q.order(), q.bottom(), q.unit(), std::move(add), std::move(mul));
}

SemiringPtr discretize(const Semiring& a)
{
    return make_semiring(a.name(), a.labels(), Relation::identity(a.size()), a.zero(), a.one(), a.add_table(),
                         a.mul_table());
}

SemiringPtr order_dual(const Semiring& a)
{
    return make_semiring(a.name() + "^op", a.labels(), a.order().transpose(), a.zero(), a.one(), a.add_table(),
                         a.mul_table());
}

} // namespace osr
