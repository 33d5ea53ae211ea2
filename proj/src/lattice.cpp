/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/lattice.hpp"

#include <algorithm>

#include "osr/error.hpp"
#include "osr/morphism.hpp"
#include "osr/semiring.hpp"

namespace osr {

namespace {

std::optional<Index> least_of(const Relation& le, const std::vector<Index>& candidates)
{
    for (Index c : candidates) {
        if (std::all_of(candidates.begin(), candidates.end(), [&](Index d) { return le(c, d); })) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<std::string> numeric_labels(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

} // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels, const Relation& le)
{
    const std::size_t n = labels.size();
    if (n == 0 || le.size() != n) {
        throw Error(ErrorKind::NotALattice, "a lattice needs a nonempty carrier and an n x n order");
    }
    if (!le.is_partial_order()) {
        throw Error(ErrorKind::NotAPartialOrder, "order relation is not a partial order");
    }
    const Relation ge = le.transpose();

    FiniteLattice l;
    l.labels_ = std::move(labels);
    l.le_ = le;
    l.join_ = Table(n);
    l.meet_ = Table(n);
    std::vector<Index> all(n);
    for (Index i = 0; i < n; ++i) {
        all[i] = i;
    }
    auto bottom = least_of(le, all);
    auto top = least_of(ge, all);
    if (!bottom || !top) {
        throw Error(ErrorKind::NotALattice, "missing bottom or top");
    }
    l.bottom_ = *bottom;
    l.top_ = *top;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            std::vector<Index> upper, lower;
            for (Index k = 0; k < n; ++k) {
                if (le(i, k) && le(j, k)) {
                    upper.push_back(k);
                }
                if (le(k, i) && le(k, j)) {
                    lower.push_back(k);
                }
            }
            auto join = least_of(le, upper);
            auto meet = least_of(ge, lower);
            if (!join || !meet) {
                throw Error(ErrorKind::NotALattice,
                            "no " + std::string(join ? "meet" : "join") + " for " + l.labels_[i] + ", " +
                                l.labels_[j]);
            }
            l.join_.set(i, j, *join);
            l.meet_.set(i, j, *meet);
        }
    }
    l.distributive_ = true;
    for (Index x = 0; x < n && l.distributive_; ++x) {
        for (Index y = 0; y < n && l.distributive_; ++y) {
            for (Index z = 0; z < n; ++z) {
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
                    l.distributive_ = false;
                    break;
                }
            }
        }
    }
    return l;
}

FiniteLattice FiniteLattice::with_multiplication(const Table& mul, Index unit) const
{
    const std::size_t n = size();
    auto fail = [&](const std::string& law, std::initializer_list<Index> at) {
        std::string w;
        for (Index i : at) {
            w += (w.empty() ? "" : ", ") + labels_[i];
        }
        throw Error(ErrorKind::NotAQuantale, law + " fails at (" + w + ")");
    };
    if (mul.size() != n || unit >= n) {
        throw Error(ErrorKind::NotAQuantale, "multiplication table has the wrong shape");
    }
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (mul(x, y) >= n) {
                throw Error(ErrorKind::NotAQuantale, "multiplication entry out of range");
            }
        }
    }
    for (Index x = 0; x < n; ++x) {
        if (mul(x, unit) != x) {
            fail("unit", {x});
        }
        if (mul(x, bottom_) != bottom_) {
            fail("bottom-absorbing", {x});
        }
        for (Index y = 0; y < n; ++y) {
            if (mul(x, y) != mul(y, x)) {
                fail("commutative", {x, y});
            }
            for (Index z = 0; z < n; ++z) {
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
                    fail("associative", {x, y, z});
                }
                if (mul(x, join(y, z)) != join(mul(x, y), mul(x, z))) {
                    fail("join-distributive", {x, y, z});
                }
            }
        }
    }
    FiniteLattice q = *this;
    q.mul_ = mul;
    q.unit_ = unit;
    return q;
}

FiniteLattice FiniteLattice::as_frame_quantale() const
{
    if (!distributive_) {
        throw Error(ErrorKind::NotAQuantale, "lattice is not distributive, so not a frame");
    }
    return with_multiplication(meet_, top_);
}

Index FiniteLattice::power(Index x, std::size_t n) const
{
    Index r = unit();
    for (std::size_t i = 0; i < n; ++i) {
        r = mul(r, x);
    }
    return r;
}

Index FiniteLattice::join_all(Subset elements) const
{
    Index r = bottom_;
    elements.for_each([&](Index i) { r = join(r, i); });
    return r;
}

Index FiniteLattice::meet_all(Subset elements) const
{
    Index r = top_;
    elements.for_each([&](Index i) { r = meet(r, i); });
    return r;
}

std::vector<std::pair<Index, Index>> FiniteLattice::covers() const
{
    const std::size_t n = size();
    std::vector<std::pair<Index, Index>> out;
    for (Index lo = 0; lo < n; ++lo) {
        for (Index hi = 0; hi < n; ++hi) {
            if (lo == hi || !le(lo, hi)) {
                continue;
            }
            bool cover = true;
            for (Index mid = 0; mid < n && cover; ++mid) {
                if (mid != lo && mid != hi && le(lo, mid) && le(mid, hi)) {
                    cover = false;
                }
            }
            if (cover) {
                out.emplace_back(lo, hi);
            }
        }
    }
    return out;
}

std::vector<Index> FiniteLattice::join_irreducibles() const
{
    std::vector<std::size_t> lower_covers(size(), 0);
    for (const auto& [lo, hi] : covers()) {
        ++lower_covers[hi];
    }
    std::vector<Index> out;
    for (Index x = 0; x < size(); ++x) {
        if (lower_covers[x] == 1) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<Index> FiniteLattice::meet_primes() const
{
    const std::size_t n = size();
    std::vector<Index> out;
    for (Index p = 0; p < n; ++p) {
        if (p == top_) {
            continue;
        }
        bool prime = true;
        for (Index a = 0; a < n && prime; ++a) {
            for (Index b = 0; b < n && prime; ++b) {
                if (le(meet(a, b), p) && !le(a, p) && !le(b, p)) {
                    prime = false;
                }
            }
        }
        if (prime) {
            out.push_back(p);
        }
    }
    return out;
}

bool same_structure(const FiniteLattice& a, const FiniteLattice& b)
{
    if (a.size() != b.size() || !(a.order() == b.order()) ||
        a.has_multiplication() != b.has_multiplication()) {
        return false;
    }
    if (!a.has_multiplication()) {
        return true;
    }
    if (a.unit() != b.unit()) {
        return false;
    }
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < a.size(); ++y) {
            if (a.mul(x, y) != b.mul(x, y)) {
                return false;
            }
        }
    }
    return true;
}

FiniteLattice chain_lattice(std::size_t k)
{
    Relation le(k);
    for (Index i = 0; i < k; ++i) {
        for (Index j = i; j < k; ++j) {
            le.set(i, j);
        }
    }
    return FiniteLattice::from_order(numeric_labels(k), le);
}

FiniteLattice boolean_lattice(std::size_t atoms)
{
    const std::size_t n = std::size_t{1} << atoms;
    const auto names = default_point_labels(atoms);
    Relation le(n);
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) {
        labels.push_back(point_set_label(Subset::from_bits(i), names));
        for (Index j = 0; j < n; ++j) {
            le.set(i, j, (i & ~j) == 0);
        }
    }
    return FiniteLattice::from_order(std::move(labels), le);
}

FiniteLattice chain_frame_quantale(std::size_t k)
{
    return chain_lattice(k).as_frame_quantale();
}

bool preserves_joins(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g)
{
    if (g.size() != from.size() || g[from.bottom()] != to.bottom()) {
        return false;
    }
    for (Index x = 0; x < from.size(); ++x) {
        for (Index y = x + 1; y < from.size(); ++y) {
            if (g[from.join(x, y)] != to.join(g[x], g[y])) {
                return false;
            }
        }
    }
    return true;
}

bool preserves_meets(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g)
{
    if (g.size() != from.size() || g[from.top()] != to.top()) {
        return false;
    }
    for (Index x = 0; x < from.size(); ++x) {
        for (Index y = x + 1; y < from.size(); ++y) {
            if (g[from.meet(x, y)] != to.meet(g[x], g[y])) {
                return false;
            }
        }
    }
    return true;
}

bool is_quantale_hom(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g)
{
    if (!from.has_multiplication() || !to.has_multiplication() || !preserves_joins(from, to, g) ||
        g[from.unit()] != to.unit()) {
        return false;
    }
    for (Index x = 0; x < from.size(); ++x) {
        for (Index y = x; y < from.size(); ++y) {
            if (g[from.mul(x, y)] != to.mul(g[x], g[y])) {
                return false;
            }
        }
    }
    return true;
}

bool is_frame_hom(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g)
{
    return preserves_joins(from, to, g) && preserves_meets(from, to, g);
}

bool is_order_isomorphism(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Index>& g)
{
    if (g.size() != from.size() || from.size() != to.size()) {
        return false;
    }
    std::vector<bool> hit(to.size(), false);
    for (Index v : g) {
        if (v >= to.size() || hit[v]) {
            return false;
        }
        hit[v] = true;
    }
    for (Index x = 0; x < from.size(); ++x) {
        for (Index y = 0; y < from.size(); ++y) {
            if (from.le(x, y) != to.le(g[x], g[y])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Index>> enumerate_join_homs(const FiniteLattice& from, const FiniteLattice& to)
{
    const auto irreducibles = from.join_irreducibles();
    std::size_t bound = 1;
    for (std::size_t i = 0; i < irreducibles.size(); ++i) {
        bound *= to.size();
        if (bound > max_enumeration) {
            throw Error(ErrorKind::SizeLimit, "join-homomorphism search space exceeds 2^24");
        }
    }

    std::vector<std::vector<Index>> out;
    std::vector<Index> values(irreducibles.size(), 0);
    auto extend = [&] {
        std::vector<Index> g(from.size(), to.bottom());
        for (Index x = 0; x < from.size(); ++x) {
            for (std::size_t k = 0; k < irreducibles.size(); ++k) {
                if (from.le(irreducibles[k], x)) {
                    g[x] = to.join(g[x], values[k]);
                }
            }
        }
        if (preserves_joins(from, to, g)) {
            out.push_back(std::move(g));
        }
    };
    auto assign = [&](auto&& self, std::size_t k) -> void {
        if (k == irreducibles.size()) {
            extend();
            return;
        }
        for (Index v = 0; v < to.size(); ++v) {
            bool monotone = true;
            for (std::size_t m = 0; m < k && monotone; ++m) {
                if (from.le(irreducibles[m], irreducibles[k]) && !to.le(values[m], v)) {
                    monotone = false;
                }
                if (from.le(irreducibles[k], irreducibles[m]) && !to.le(v, values[m])) {
                    monotone = false;
                }
            }
            if (monotone) {
                values[k] = v;
                self(self, k + 1);
            }
        }
    };
    assign(assign, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace osr
