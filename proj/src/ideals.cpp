/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "osr/error.hpp"

namespace osr {

bool is_ideal(const Semiring& a, Subset s)
{
    if (!s.contains(a.zero())) {
        return false;
    }
    const std::size_t n = a.size();
    for (Index y = 0; y < n; ++y) {
        if (!s.contains(y)) {
            continue;
        }
        for (Index x = 0; x < n; ++x) {
            if (a.le(x, y) && !s.contains(x)) {
                return false;
            }
            if (!s.contains(a.mul(y, x))) {
                return false;
            }
            if (s.contains(x) && !s.contains(a.add(x, y))) {
                return false;
            }
        }
    }
    return true;
}

Ideal ideal_generated(const Semiring& a, Subset s)
{
    const std::size_t n = a.size();
    Subset current = s;
    current.insert(a.zero());
    while (true) {
        Subset next = current;
        current.for_each([&](Index y) {
            for (Index x = 0; x < n; ++x) {
                if (a.le(x, y)) {
                    next.insert(x);
                }
                next.insert(a.mul(y, x));
                if (current.contains(x)) {
                    next.insert(a.add(x, y));
                }
            }
        });
        if (next == current) {
            return {&a, current};
        }
        current = next;
    }
}

Subset ideal_generated_by_formula(const Semiring& a, Subset s)
{
    const std::size_t n = a.size();
    Subset terms;
    s.for_each([&](Index g) {
        for (Index y = 0; y < n; ++y) {
            terms.insert(a.mul(g, y));
        }
    });
    // sums of at most m terms, starting from the empty sum
    Subset sums = Subset::singleton(a.zero());
    bool stable = false;
    for (std::size_t m = 0; m <= n && !stable; ++m) {
        Subset longer = sums;
        sums.for_each([&](Index r) { terms.for_each([&](Index t) { longer.insert(a.add(r, t)); }); });
        stable = longer == sums;
        sums = longer;
    }
    if (!stable) {
        throw Error(ErrorKind::InternalMismatch,
                    "sums of generators did not stabilise within " + std::to_string(n) + " terms");
    }
    Subset out;
    for (Index z = 0; z < n; ++z) {
        sums.for_each([&](Index r) {
            if (a.le(z, r)) {
                out.insert(z);
            }
        });
    }
    return out;
}

Ideal principal(const Semiring& a, Index x)
{
    Subset direct;
    for (Index y = 0; y < a.size(); ++y) {
        const Index xy = a.mul(x, y);
        for (Index z = 0; z < a.size(); ++z) {
            if (a.le(z, xy)) {
                direct.insert(z);
            }
        }
    }
    const Ideal generated = ideal_generated(a, Subset::singleton(x));
    if (generated.members != direct) {
        throw Error(ErrorKind::InternalMismatch, "principal ideal of " + a.label(x) + ": formula gives " +
                                                     a.subset_label(direct) + ", closure gives " +
                                                     a.subset_label(generated.members));
    }
    return generated;
}

namespace {

void require_owner(const Semiring& a, const Ideal& i)
{
    if (i.owner != &a) {
        throw Error(ErrorKind::OwnerMismatch, "ideal " + a.subset_label(i.members) + " belongs to another semiring");
    }
}

Subset products(const Semiring& a, Subset s, Subset t)
{
    Subset out;
    s.for_each([&](Index x) { t.for_each([&](Index y) { out.insert(a.mul(x, y)); }); });
    return out;
}

} // namespace

Ideal ideal_join(const Semiring& a, std::span<const Ideal> family)
{
    Subset all;
    for (const auto& i : family) {
        require_owner(a, i);
        all |= i.members;
    }
    return ideal_generated(a, all);
}

Ideal ideal_product(const Semiring& a, const Ideal& i, const Ideal& j)
{
    require_owner(a, i);
    require_owner(a, j);
    return ideal_generated(a, products(a, i.members, j.members));
}

bool check_product_generators(const Semiring& a, Subset s, Subset t)
{
    const Ideal lhs = ideal_product(a, ideal_generated(a, s), ideal_generated(a, t));
    return lhs.members == ideal_generated(a, products(a, s, t)).members;
}

// ---------------------------------------------------------------------------

std::optional<Index> IdealQuantale::index_of(Subset s) const
{
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), s);
    if (it == ideals_.end() || *it != s) {
        return std::nullopt;
    }
    return static_cast<Index>(it - ideals_.begin());
}

IdealQuantale IdealQuantale::compute(SemiringPtr ap)
{
    const Semiring& a = *ap;
    const std::size_t n = a.size();
    if (n > max_carrier_size) {
        throw Error(ErrorKind::SizeLimit, "ideal enumeration is limited to " + std::to_string(max_carrier_size) +
                                              " elements");
    }

    // close {<0>} under adding one generator
    std::set<Subset> seen;
    std::deque<Subset> queue;
    const Subset bottom = ideal_generated(a, {}).members;
    seen.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        const Subset current = queue.front();
        queue.pop_front();
        for (Index x = 0; x < n; ++x) {
            if (current.contains(x)) {
                continue;
            }
            Subset grown = current;
            grown.insert(x);
            const Subset next = ideal_generated(a, grown).members;
            if (seen.insert(next).second) {
                queue.push_back(next);
            }
        }
    }

    IdealQuantale q;
    q.owner_ = std::move(ap);
    q.ideals_.assign(seen.begin(), seen.end());
    const std::size_t k = q.ideals_.size();

    for (Index x = 0; x < n; ++x) {
        q.principal_.push_back(*q.index_of(principal(a, x).members));
    }

    Relation le(k);
    std::vector<std::string> labels;
    for (Index i = 0; i < k; ++i) {
        labels.push_back(a.subset_label(q.ideals_[i]));
        for (Index j = 0; j < k; ++j) {
            le.set(i, j, q.ideals_[i].is_subset_of(q.ideals_[j]));
        }
    }
    FiniteLattice lattice = FiniteLattice::from_order(std::move(labels), le);

    Table product(k);
    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            const Subset ij = ideal_generated(a, products(a, q.ideals_[i], q.ideals_[j])).members;
            product.set(i, j, *q.index_of(ij));
        }
    }
    try {
        q.lattice_ = lattice.with_multiplication(product, lattice.top());
    } catch (const Error& e) {
        throw Error(ErrorKind::InternalMismatch, std::string("ideal product: ") + e.what());
    }
    if (q.ideals_.back() != a.carrier() || lattice.top() != k - 1) {
        throw Error(ErrorKind::InternalMismatch, "the whole carrier is not the top ideal");
    }
    auto semiring = build_from_quantale(q.lattice_);
    q.semiring_ = make_semiring("Idl(" + a.name() + ")", semiring->labels(), semiring->order(), semiring->zero(),
                                semiring->one(), semiring->add_table(), semiring->mul_table());
    return q;
}

std::optional<std::string> IdealQuantale::verify() const
{
    const Semiring& a = *owner_;
    const std::size_t n = a.size();
    const std::size_t k = size();

    std::vector<Subset> filtered;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (is_ideal(a, Subset::from_bits(bits))) {
            filtered.push_back(Subset::from_bits(bits));
        }
    }
    if (filtered != ideals_) {
        return "ideal list differs from the subset filter (" + std::to_string(filtered.size()) + " vs " +
               std::to_string(k) + ")";
    }
    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            const Subset generated = ideal_generated(a, ideals_[i] | ideals_[j]).members;
            if (ideals_[join(i, j)] != generated) {
                return "join of " + label(i) + " and " + label(j) + " is not the ideal generated by the union";
            }
            if (ideals_[meet(i, j)] != (ideals_[i] & ideals_[j])) {
                return "meet of " + label(i) + " and " + label(j) + " is not the intersection";
            }
            if (product(i, j) != product(j, i)) {
                return "product not commutative at " + label(i) + ", " + label(j);
            }
            for (Index l = 0; l < k; ++l) {
                if (product(product(i, j), l) != product(i, product(j, l))) {
                    return "product not associative at " + label(i) + ", " + label(j) + ", " + label(l);
                }
                if (product(i, join(j, l)) != join(product(i, j), product(i, l))) {
                    return "product does not distribute over join at " + label(i) + ", " + label(j) + ", " +
                           label(l);
                }
            }
        }
        if (product(i, top()) != i) {
            return "whole carrier is not a unit for " + label(i);
        }
        if (product(i, bottom()) != bottom()) {
            return "bottom ideal does not absorb " + label(i);
        }
    }
    if (!lattice_.is_integral_quantale()) {
        return "unit is not the top element";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

MorphismTable canonical_embedding(const IdealQuantale& idl)
{
    std::vector<Index> values(idl.owner().size());
    for (Index x = 0; x < values.size(); ++x) {
        values[x] = idl.principal_index(x);
    }
    MorphismTable m = classify(std::move(values), idl.owner_ptr(), idl.as_semiring());
    if (!m.flags.subadditive_morphism()) {
        throw Error(ErrorKind::InternalMismatch, "x -> <x> is not a subadditive morphism");
    }
    return m;
}

namespace {

bool induced_by(const Semiring& s, const FiniteLattice& q)
{
    if (s.size() != q.size() || !(s.order() == q.order()) || s.zero() != q.bottom() || s.one() != q.unit()) {
        return false;
    }
    for (Index x = 0; x < q.size(); ++x) {
        for (Index y = 0; y < q.size(); ++y) {
            if (s.add(x, y) != q.join(x, y) || s.mul(x, y) != q.mul(x, y)) {
                return false;
            }
        }
    }
    return true;
}

void require_integral(const FiniteLattice& q)
{
    if (!q.is_integral_quantale()) {
        throw Error(ErrorKind::NotIntegral, "target is not an integral quantale");
    }
}

} // namespace

std::vector<Index> extend_to_quantale_hom(const IdealQuantale& idl, const MorphismTable& f, const FiniteLattice& q)
{
    require_integral(q);
    if (!f.flags.subadditive_morphism()) {
        throw Error(ErrorKind::NotSubadditive, "map " + describe_values(f) + " is not a subadditive morphism");
    }
    if (!f.source->same_structure(idl.owner()) || !induced_by(*f.target, q)) {
        throw Error(ErrorKind::InvalidArgument, "morphism endpoints do not match the ideal quantale and target");
    }
    std::vector<Index> g(idl.size());
    for (Index i = 0; i < idl.size(); ++i) {
        g[i] = q.bottom();
        idl.ideal(i).for_each([&](Index x) { g[i] = q.join(g[i], f(x)); });
    }
    if (!is_quantale_hom(idl.lattice(), q, g)) {
        throw Error(ErrorKind::UniversalityFailure,
                    "extension of " + describe_values(f) + " is not a quantale homomorphism");
    }
    for (Index x = 0; x < idl.owner().size(); ++x) {
        if (g[idl.principal_index(x)] != f(x)) {
            throw Error(ErrorKind::UniversalityFailure,
                        "extension of " + describe_values(f) + " does not restrict to it at " + idl.owner().label(x));
        }
    }
    return g;
}

UniversalityReport check_idl_universal(const IdealQuantale& idl, const FiniteLattice& q)
{
    require_integral(q);
    const auto target = build_from_quantale(q);

    std::vector<std::vector<Index>> homs;
    for (auto& g : enumerate_join_homs(idl.lattice(), q)) {
        if (is_quantale_hom(idl.lattice(), q, g)) {
            homs.push_back(std::move(g));
        }
    }
    const auto maps = enumerate_subadditive(idl.owner_ptr(), target);

    std::set<std::vector<Index>> map_tables;
    for (const auto& f : maps) {
        map_tables.insert(f.values);
    }
    std::set<std::vector<Index>> images;
    for (const auto& g : homs) {
        std::vector<Index> composite(idl.owner().size());
        for (Index x = 0; x < composite.size(); ++x) {
            composite[x] = g[idl.principal_index(x)];
        }
        if (!map_tables.count(composite)) {
            throw Error(ErrorKind::UniversalityFailure,
                        "restriction of a quantale homomorphism is not a subadditive morphism");
        }
        if (!images.insert(composite).second) {
            throw Error(ErrorKind::UniversalityFailure, "two quantale homomorphisms restrict to the same map");
        }
    }
    const std::set<std::vector<Index>> hom_set(homs.begin(), homs.end());
    for (const auto& f : maps) {
        if (!hom_set.count(extend_to_quantale_hom(idl, f, q))) {
            throw Error(ErrorKind::UniversalityFailure,
                        "extension of " + describe_values(f) + " was not found among the homomorphisms");
        }
    }
    if (images.size() != maps.size()) {
        throw Error(ErrorKind::UniversalityFailure, "restriction is not surjective");
    }
    return {homs.size(), maps.size()};
}

std::vector<Index> idl_map(const MorphismTable& f, const IdealQuantale& source, const IdealQuantale& target)
{
    if (!f.flags.subadditive_morphism()) {
        throw Error(ErrorKind::NotSubadditive, "map " + describe_values(f) + " is not a subadditive morphism");
    }
    if (!f.source->same_structure(source.owner()) || !f.target->same_structure(target.owner())) {
        throw Error(ErrorKind::EndpointMismatch, "morphism endpoints do not match the ideal quantales");
    }
    std::vector<Index> through(f.values.size());
    for (Index x = 0; x < through.size(); ++x) {
        through[x] = target.principal_index(f(x));
    }
    const auto h = classify(std::move(through), source.owner_ptr(), target.as_semiring());
    auto g = extend_to_quantale_hom(source, h, target.lattice());

    for (Index i = 0; i < source.size(); ++i) {
        Subset image;
        source.ideal(i).for_each([&](Index x) { image.insert(f(x)); });
        const Subset direct = ideal_generated(target.owner(), image).members;
        if (target.ideal(g[i]) != direct) {
            throw Error(ErrorKind::InternalMismatch, "Idl(f) disagrees with <f(I)> at " + source.label(i));
        }
    }
    return g;
}

} // namespace osr
