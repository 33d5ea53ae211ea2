/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/morphism.hpp"

#include <array>

#include "osr/error.hpp"

namespace osr {

Subset MorphismTable::kernel() const
{
    Subset k;
    for (Index x = 0; x < values.size(); ++x) {
        if (values[x] == target->zero()) {
            k.insert(x);
        }
    }
    return k;
}

namespace {

MorphismFlags compute_flags(const std::vector<Index>& f, const Semiring& a, const Semiring& b)
{
    MorphismFlags fl;
    fl.monotone = true;
    fl.subadditive = fl.additive = fl.multiplicative = fl.submultiplicative = true;
    const std::size_t n = a.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (a.le(x, y) && !b.le(f[x], f[y])) {
                fl.monotone = false;
            }
            const Index s = f[a.add(x, y)];
            const Index bs = b.add(f[x], f[y]);
            fl.subadditive = fl.subadditive && b.le(s, bs);
            fl.additive = fl.additive && s == bs;
            const Index p = f[a.mul(x, y)];
            const Index bp = b.mul(f[x], f[y]);
            fl.multiplicative = fl.multiplicative && p == bp;
            fl.submultiplicative = fl.submultiplicative && b.le(p, bp);
        }
    }
    fl.zero_subzero = b.le(f[a.zero()], b.zero());
    fl.zero_strict = f[a.zero()] == b.zero();
    fl.unit_strict = f[a.one()] == b.one();
    fl.unit_subunit = b.le(f[a.one()], b.one());
    return fl;
}

enum class Kind { Subadditive, SubSubmul };

void check_enumeration_size(std::size_t source, std::size_t target)
{
    std::size_t bound = 1;
    for (std::size_t i = 0; i < source; ++i) {
        bound *= target;
        if (bound > max_enumeration) {
            throw Error(ErrorKind::SizeLimit, std::to_string(target) + "^" + std::to_string(source) +
                                                  " candidate maps exceed 2^24");
        }
    }
}

/// Lexicographic backtracking. A constraint is tested as soon as every
/// element it mentions has a value, i.e. at the largest such index.
std::vector<MorphismTable> enumerate(const SemiringPtr& ap, const SemiringPtr& bp, Kind kind,
                                     MorphismOptions options)
{
    const Semiring& a = *ap;
    const Semiring& b = *bp;
    const std::size_t n = a.size();
    check_enumeration_size(n, b.size());

    struct Pair {
        Index x, y, r;
    };
    std::vector<std::vector<std::array<Index, 2>>> monotone_at(n);
    std::vector<std::vector<Pair>> add_at(n), mul_at(n);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (x != y && a.le(x, y)) {
                monotone_at[std::max(x, y)].push_back({x, y});
            }
            if (y < x) {
                continue;
            }
            const Index s = a.add(x, y);
            add_at[std::max({x, y, s})].push_back({x, y, s});
            const Index p = a.mul(x, y);
            mul_at[std::max({x, y, p})].push_back({x, y, p});
        }
    }

    std::vector<MorphismTable> out;
    std::vector<Index> f(n, 0);
    auto admissible = [&](Index i) {
        if (i == a.zero()) {
            const bool zero_ok = options.strict_zero ? f[i] == b.zero() : b.le(f[i], b.zero());
            if (!zero_ok) {
                return false;
            }
        }
        if (i == a.one()) {
            const bool one_ok = kind == Kind::Subadditive ? f[i] == b.one() : b.le(f[i], b.one());
            if (!one_ok) {
                return false;
            }
        }
        for (const auto& [x, y] : monotone_at[i]) {
            if (!b.le(f[x], f[y])) {
                return false;
            }
        }
        for (const auto& c : add_at[i]) {
            if (!b.le(f[c.r], b.add(f[c.x], f[c.y]))) {
                return false;
            }
        }
        for (const auto& c : mul_at[i]) {
            const Index prod = b.mul(f[c.x], f[c.y]);
            if (kind == Kind::Subadditive ? f[c.r] != prod : !b.le(f[c.r], prod)) {
                return false;
            }
        }
        return true;
    };
    auto search = [&](auto&& self, Index i) -> void {
        if (i == n) {
            out.push_back(classify(f, ap, bp));
            return;
        }
        for (Index v = 0; v < b.size(); ++v) {
            f[i] = v;
            if (admissible(i)) {
                self(self, i + 1);
            }
        }
    };
    search(search, 0);

    for (const auto& m : out) {
        const bool ok = kind == Kind::Subadditive ? m.flags.subadditive_morphism()
                                                  : m.flags.subadditive_submultiplicative();
        if (!ok) {
            throw Error(ErrorKind::InternalMismatch, "enumerator produced a map failing its own class: " +
                                                         describe_values(m));
        }
    }
    return out;
}

} // namespace

MorphismTable classify(std::vector<Index> values, SemiringPtr source, SemiringPtr target)
{
    if (!source || !target) {
        throw Error(ErrorKind::InvalidArgument, "null semiring");
    }
    if (values.size() != source->size()) {
        throw Error(ErrorKind::InvalidArgument, "value table has " + std::to_string(values.size()) +
                                                    " entries, source has " + std::to_string(source->size()));
    }
    for (Index v : values) {
        if (v >= target->size()) {
            throw Error(ErrorKind::InvalidArgument, "value " + std::to_string(v) + " outside the target");
        }
    }
    MorphismTable m;
    m.flags = compute_flags(values, *source, *target);
    m.values = std::move(values);
    m.source = std::move(source);
    m.target = std::move(target);
    return m;
}

std::vector<MorphismTable> enumerate_subadditive(const SemiringPtr& a, const SemiringPtr& b,
                                                 MorphismOptions options)
{
    return enumerate(a, b, Kind::Subadditive, options);
}

std::vector<MorphismTable> enumerate_sub_submul(const SemiringPtr& a, const SemiringPtr& b,
                                                MorphismOptions options)
{
    return enumerate(a, b, Kind::SubSubmul, options);
}

RemarkReport check_remark_conditions(const SemiringPtr& a, const SemiringPtr& b)
{
    RemarkReport r;
    r.target_discrete = b->is_discrete();

    bool zero_least = true;
    for (Index x = 0; x < a->size(); ++x) {
        zero_least = zero_least && a->le(a->zero(), x);
    }
    bool add_is_join = true;
    for (Index x = 0; x < b->size() && add_is_join; ++x) {
        for (Index y = 0; y < b->size() && add_is_join; ++y) {
            const Index s = b->add(x, y);
            add_is_join = b->le(x, s) && b->le(y, s);
            for (Index z = 0; z < b->size() && add_is_join; ++z) {
                if (b->le(x, z) && b->le(y, z) && !b->le(s, z)) {
                    add_is_join = false;
                }
            }
        }
    }
    r.source_zero_least_target_join = zero_least && add_is_join;

    const auto maps = enumerate_subadditive(a, b);
    r.subadditive_count = maps.size();
    for (const auto& f : maps) {
        if (f.flags.homomorphism()) {
            ++r.homomorphism_count;
        } else if (r.target_discrete || r.source_zero_least_target_join) {
            throw Error(ErrorKind::RemarkViolation,
                        "subadditive morphism " + describe_values(f) + " is not a homomorphism");
        }
    }
    return r;
}

MorphismTable compose(const MorphismTable& f, const MorphismTable& g)
{
    if (!f.target || !g.source || !f.target->same_structure(*g.source) ||
        f.target->size() != g.source->size()) {
        throw Error(ErrorKind::EndpointMismatch, "target of the first map is not the source of the second");
    }
    std::vector<Index> values(f.values.size());
    for (Index x = 0; x < values.size(); ++x) {
        values[x] = g.values[f.values[x]];
    }
    return classify(std::move(values), f.source, g.target);
}

MorphismTable identity_morphism(const SemiringPtr& a)
{
    std::vector<Index> values(a->size());
    for (Index x = 0; x < values.size(); ++x) {
        values[x] = x;
    }
    return classify(std::move(values), a, a);
}

const SemiringPtr& two()
{
    static const SemiringPtr instance = build_chain_lattice(2);
    return instance;
}

std::string describe_values(const MorphismTable& f)
{
    std::string out = "[";
    for (Index x = 0; x < f.values.size(); ++x) {
        out += (x ? " " : "") + f.target->label(f.values[x]);
    }
    return out + "]";
}

} // namespace osr
