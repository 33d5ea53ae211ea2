/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/radical.hpp"

#include <algorithm>
#include <set>

#include "osr/error.hpp"

namespace osr {

namespace {

/// {x, x^2, .., x^n} for n = |A|. Throws InternalMismatch if x^(n+1) lies
/// outside that set.
Subset powers_of(const Semiring& a, Index x)
{
    Subset out;
    Index p = x;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        out.insert(p);
        p = a.mul(p, x);
    }
    if (!out.contains(p)) {
        throw Error(ErrorKind::InternalMismatch, "powers of " + a.label(x) + " did not cycle within |A| steps");
    }
    return out;
}

} // namespace

bool is_radical(const Semiring& a, Subset s)
{
    for (Index x = 0; x < a.size(); ++x) {
        if (!s.contains(x) && !(powers_of(a, x) & s).empty()) {
            return false;
        }
    }
    return true;
}

Ideal radical_closure(const Semiring& a, const Ideal& i)
{
    if (i.owner != &a) {
        throw Error(ErrorKind::OwnerMismatch, "ideal belongs to another semiring");
    }
    Subset current = i.members;
    while (true) {
        Subset roots = current;
        for (Index x = 0; x < a.size(); ++x) {
            if (!(powers_of(a, x) & current).empty()) {
                roots.insert(x);
            }
        }
        const Subset next = ideal_generated(a, roots).members;
        if (next == current) {
            return {&a, current};
        }
        current = next;
    }
}

// ---------------------------------------------------------------------------

std::optional<Index> RadicalFrame::index_of(Subset s) const
{
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) {
        return std::nullopt;
    }
    return static_cast<Index>(it - members_.begin());
}

RadicalFrame RadicalFrame::compute(const IdealQuantale& idl)
{
    RadicalFrame r;
    r.idl_ = std::make_shared<const IdealQuantale>(idl);
    const Semiring& a = idl.owner();

    for (Index i = 0; i < idl.size(); ++i) {
        if (is_radical(a, idl.ideal(i))) {
            r.members_.push_back(idl.ideal(i));
            r.ideal_index_.push_back(i);
        }
    }
    for (Index i = 0; i < idl.size(); ++i) {
        const Subset closure = radical_closure(a, {&a, idl.ideal(i)}).members;
        auto at = r.index_of(closure);
        if (!at) {
            throw Error(ErrorKind::InternalMismatch, "radical closure of " + idl.label(i) + " is not radical");
        }
        r.radical_of_.push_back(*at);
    }

    const std::size_t k = r.members_.size();
    Relation le(k);
    std::vector<std::string> labels;
    for (Index i = 0; i < k; ++i) {
        labels.push_back(a.subset_label(r.members_[i]));
        for (Index j = 0; j < k; ++j) {
            le.set(i, j, r.members_[i].is_subset_of(r.members_[j]));
        }
    }
    FiniteLattice lattice = FiniteLattice::from_order(std::move(labels), le);
    if (!lattice.is_distributive()) {
        throw Error(ErrorKind::InternalMismatch, "radical ideals do not form a frame");
    }
    r.lattice_ = lattice.as_frame_quantale();

    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            if (r.members_[r.lattice_.meet(i, j)] != (r.members_[i] & r.members_[j])) {
                throw Error(ErrorKind::InternalMismatch, "meet in Rad(A) is not intersection");
            }
            const Index joined = idl.join(r.ideal_index_[i], r.ideal_index_[j]);
            if (r.lattice_.join(i, j) != r.radical_of_[joined]) {
                throw Error(ErrorKind::InternalMismatch, "join in Rad(A) is not the radical of the ideal join");
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

bool is_semiprime(const FiniteLattice& q, Index p)
{
    for (Index x = 0; x < q.size(); ++x) {
        if (q.le(x, p)) {
            continue;
        }
        Index power = x;
        for (std::size_t n = 1; n <= q.size(); ++n) {
            if (q.le(power, p)) {
                return false;
            }
            power = q.mul(power, x);
        }
    }
    return true;
}

SemiprimeReflection semiprime_elements(const FiniteLattice& q)
{
    if (!q.is_integral_quantale()) {
        throw Error(ErrorKind::NotIntegral, "semiprime reflection needs an integral quantale");
    }
    SemiprimeReflection s;
    for (Index p = 0; p < q.size(); ++p) {
        if (is_semiprime(q, p)) {
            s.members.push_back(p);
        }
    }
    const std::size_t k = s.members.size();
    auto position = [&](Index p) -> std::optional<Index> {
        auto it = std::find(s.members.begin(), s.members.end(), p);
        if (it == s.members.end()) {
            return std::nullopt;
        }
        return static_cast<Index>(it - s.members.begin());
    };

    for (Index x = 0; x < q.size(); ++x) {
        Subset above;
        for (Index i = 0; i < k; ++i) {
            if (q.le(x, s.members[i])) {
                above.insert(s.members[i]);
            }
        }
        auto root = position(q.meet_all(above));
        if (!root) {
            throw Error(ErrorKind::InternalMismatch, "semiprime elements are not closed under meets at " + q.label(x));
        }
        s.reflector.push_back(*root);
        for (Index i = 0; i < k; ++i) {
            if (q.le(s.members[*root], s.members[i]) != q.le(x, s.members[i])) {
                throw Error(ErrorKind::InternalMismatch,
                            "reflection is not left adjoint to the inclusion at " + q.label(x));
            }
        }
    }

    Relation le(k);
    std::vector<std::string> labels;
    for (Index i = 0; i < k; ++i) {
        labels.push_back(q.label(s.members[i]));
        for (Index j = 0; j < k; ++j) {
            le.set(i, j, q.le(s.members[i], s.members[j]));
        }
    }
    FiniteLattice frame = FiniteLattice::from_order(std::move(labels), le);
    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            if (s.members[frame.meet(i, j)] != q.meet(s.members[i], s.members[j])) {
                throw Error(ErrorKind::InternalMismatch, "meets of semiprime elements differ from meets in Q");
            }
        }
    }
    if (!frame.is_distributive()) {
        throw Error(ErrorKind::InternalMismatch, "semiprime elements do not form a frame");
    }
    s.frame = frame.as_frame_quantale();
    return s;
}

// ---------------------------------------------------------------------------

namespace {

FiniteLattice frame_target(const FiniteLattice& f)
{
    if (!f.is_frame()) {
        throw Error(ErrorKind::NotAQuantale, "target lattice is not a frame");
    }
    return f.as_frame_quantale();
}

/// Shared bijection test for g -> g∘u between lattice-side homomorphisms
/// and subadditive morphisms. `extend` must return the unique preimage.
template <class Extend>
UniversalityReport check_bijection(const std::vector<std::vector<Index>>& homs,
                                   const std::vector<MorphismTable>& maps, const std::vector<Index>& universal,
                                   Extend&& extend)
{
    std::set<std::vector<Index>> map_tables;
    for (const auto& f : maps) {
        map_tables.insert(f.values);
    }
    std::set<std::vector<Index>> images;
    for (const auto& g : homs) {
        std::vector<Index> composite(universal.size());
        for (Index x = 0; x < universal.size(); ++x) {
            composite[x] = g[universal[x]];
        }
        if (!map_tables.count(composite)) {
            throw Error(ErrorKind::UniversalityFailure, "restriction of a homomorphism is not a subadditive morphism");
        }
        if (!images.insert(composite).second) {
            throw Error(ErrorKind::UniversalityFailure, "two homomorphisms restrict to the same map");
        }
    }
    const std::set<std::vector<Index>> hom_set(homs.begin(), homs.end());
    for (const auto& f : maps) {
        if (!hom_set.count(extend(f))) {
            throw Error(ErrorKind::UniversalityFailure,
                        "extension of " + describe_values(f) + " was not found among the homomorphisms");
        }
    }
    if (images.size() != maps.size()) {
        throw Error(ErrorKind::UniversalityFailure, "restriction is not surjective");
    }
    return {homs.size(), maps.size()};
}

std::vector<Index> radical_universal_map(const RadicalFrame& rad)
{
    std::vector<Index> u(rad.owner().size());
    for (Index x = 0; x < u.size(); ++x) {
        u[x] = rad.radical_principal(x);
    }
    return u;
}

/// Extends f: A -> D along sqrt<->, where D is any lattice whose semiring
/// view f targets. Verifies with the supplied homomorphism predicate.
template <class IsHom>
std::vector<Index> extend_along_radical(const RadicalFrame& rad, const MorphismTable& f, const FiniteLattice& d,
                                        IsHom&& is_hom)
{
    if (!f.flags.subadditive_morphism()) {
        throw Error(ErrorKind::NotSubadditive, "map " + describe_values(f) + " is not a subadditive morphism");
    }
    std::vector<Index> g(rad.size());
    for (Index i = 0; i < rad.size(); ++i) {
        g[i] = d.bottom();
        rad.member(i).for_each([&](Index x) { g[i] = d.join(g[i], f(x)); });
    }
    if (!is_hom(rad.lattice(), d, g)) {
        throw Error(ErrorKind::UniversalityFailure, "extension of " + describe_values(f) + " is not a homomorphism");
    }
    for (Index x = 0; x < rad.owner().size(); ++x) {
        if (g[rad.radical_principal(x)] != f(x)) {
            throw Error(ErrorKind::UniversalityFailure,
                        "extension of " + describe_values(f) + " does not restrict to it at " + rad.owner().label(x));
        }
    }
    return g;
}

} // namespace

std::vector<Index> extend_to_frame_hom(const RadicalFrame& rad, const MorphismTable& f, const FiniteLattice& frame)
{
    const FiniteLattice target = frame_target(frame);
    if (!f.source->same_structure(rad.owner()) || !f.target->same_structure(*build_from_quantale(target))) {
        throw Error(ErrorKind::InvalidArgument, "morphism endpoints do not match Rad(A) and the frame");
    }
    return extend_along_radical(rad, f, target, is_frame_hom);
}

UniversalityReport check_rad_universal(const RadicalFrame& rad, const FiniteLattice& f)
{
    const FiniteLattice target = frame_target(f);
    std::vector<std::vector<Index>> homs;
    for (auto& g : enumerate_join_homs(rad.lattice(), target)) {
        if (is_frame_hom(rad.lattice(), target, g)) {
            homs.push_back(std::move(g));
        }
    }
    const auto maps = enumerate_subadditive(rad.ideals().owner_ptr(), build_from_quantale(target));
    return check_bijection(homs, maps, radical_universal_map(rad),
                           [&](const MorphismTable& m) { return extend_along_radical(rad, m, target, is_frame_hom); });
}

ReflectionResult dlat_reflection(const RadicalFrame& rad)
{
    const Semiring& a = rad.owner();
    const FiniteLattice& lattice = rad.lattice();
    const auto u = radical_universal_map(rad);
    auto fail = [&](const std::string& what) { throw Error(ErrorKind::PresentationViolation, what); };

    if (!lattice.is_distributive()) {
        fail("reflection is not distributive");
    }
    if (u[a.zero()] != lattice.bottom()) {
        fail("image of 0 is not bottom");
    }
    if (u[a.one()] != lattice.top()) {
        fail("image of 1 is not top");
    }
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < a.size(); ++y) {
            const std::string at = " at (" + a.label(x) + ", " + a.label(y) + ")";
            if (a.le(x, y) && !lattice.le(u[x], u[y])) {
                fail("order not preserved" + at);
            }
            if (!lattice.le(u[a.add(x, y)], lattice.join(u[x], u[y]))) {
                fail("image of a sum exceeds the join" + at);
            }
            if (u[a.mul(x, y)] != lattice.meet(u[x], u[y])) {
                fail("image of a product is not the meet" + at);
            }
        }
    }

    Subset generated;
    for (Index v : u) {
        generated.insert(v);
    }
    for (bool grew = true; grew;) {
        grew = false;
        const Subset before = generated;
        before.for_each([&](Index p) {
            before.for_each([&](Index q) {
                generated.insert(lattice.join(p, q));
                generated.insert(lattice.meet(p, q));
            });
        });
        grew = generated != before;
    }
    if (generated != Subset::full(lattice.size())) {
        fail("image of A does not generate the lattice");
    }

    ReflectionResult result;
    result.lattice = lattice;
    result.universal_map = u;
    for (Index i = 0; i < lattice.size(); ++i) {
        result.radical_index.push_back(i);
    }
    for (const auto& d : small_distributive_lattices(6)) {
        const FiniteLattice target = d.as_frame_quantale();
        std::vector<std::vector<Index>> homs;
        for (auto& g : enumerate_join_homs(lattice, target)) {
            if (is_frame_hom(lattice, target, g)) {
                homs.push_back(std::move(g));
            }
        }
        const auto maps = enumerate_subadditive(rad.ideals().owner_ptr(), build_from_quantale(target));
        check_bijection(homs, maps, u, [&](const MorphismTable& m) {
            return extend_along_radical(rad, m, target, is_frame_hom);
        });
        ++result.test_lattices;
    }
    return result;
}

CoherenceReport check_coherence(const RadicalFrame& rad)
{
    const FiniteLattice& lattice = rad.lattice();
    const auto reflection = build_from_quantale(lattice);
    const auto idl = IdealQuantale::compute(reflection);

    CoherenceReport report;
    report.rad_size = rad.size();
    report.idl_of_reflection_size = idl.size();
    for (Index i = 0; i < rad.size(); ++i) {
        report.isomorphism.push_back(idl.principal_index(i));
    }
    if (!is_order_isomorphism(lattice, idl.lattice(), report.isomorphism) ||
        !is_frame_hom(lattice, idl.lattice(), report.isomorphism)) {
        throw Error(ErrorKind::IsoFailure, "a -> (down-set of a) is not a frame isomorphism Rad(A) -> Idl(L(A))");
    }
    return report;
}

// ---------------------------------------------------------------------------

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b)
{
    const std::size_t n = a.size();
    if (n != b.size()) {
        return false;
    }
    std::vector<Index> g(n);
    std::vector<bool> used(n, false);
    auto search = [&](auto&& self, Index i) -> bool {
        if (i == n) {
            return true;
        }
        for (Index v = 0; v < n; ++v) {
            if (used[v]) {
                continue;
            }
            bool ok = true;
            for (Index j = 0; j < i && ok; ++j) {
                ok = a.le(i, j) == b.le(v, g[j]) && a.le(j, i) == b.le(g[j], v);
            }
            if (!ok) {
                continue;
            }
            g[i] = v;
            used[v] = true;
            if (self(self, i + 1)) {
                return true;
            }
            used[v] = false;
        }
        return false;
    };
    return search(search, 0);
}

std::vector<FiniteLattice> small_distributive_lattices(std::size_t max_size)
{
    std::vector<FiniteLattice> out;
    // p points give at least p + 1 downsets
    for (std::size_t p = 0; p + 1 <= max_size && p <= 6; ++p) {
        std::vector<std::pair<Index, Index>> slots;
        for (Index i = 0; i < p; ++i) {
            for (Index j = i + 1; j < p; ++j) {
                slots.emplace_back(i, j);
            }
        }
        // posets whose numbering is a linear extension
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            Relation r = Relation::identity(p);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if ((mask >> s) & 1U) {
                    r.set(slots[s].first, slots[s].second);
                }
            }
            if (!r.is_transitive()) {
                continue;
            }
            std::size_t downsets = 0;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
                const Subset d = Subset::from_bits(bits);
                bool closed = true;
                d.for_each([&](Index y) {
                    for (Index x = 0; x < p; ++x) {
                        closed = closed && (!r(x, y) || d.contains(x));
                    }
                });
                downsets += closed ? 1 : 0;
            }
            if (downsets > max_size) {
                continue;
            }
            const auto s = build_dlat_from_poset(r);
            FiniteLattice l = FiniteLattice::from_order(s->labels(), s->order());
            const bool seen = std::any_of(out.begin(), out.end(),
                                          [&](const FiniteLattice& o) { return lattices_isomorphic(o, l); });
            if (!seen) {
                out.push_back(std::move(l));
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const FiniteLattice& x, const FiniteLattice& y) { return x.size() < y.size(); });
    return out;
}

} // namespace osr
