/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/spectrum.hpp"

#include <algorithm>
#include <set>

#include "osr/error.hpp"

namespace osr {

bool FiniteTopSpace::is_open(Subset s) const
{
    return std::binary_search(opens.begin(), opens.end(), s);
}

Subset FiniteTopSpace::closure(Subset s) const
{
    Subset outside;
    for (Subset u : opens) {
        if ((u & s).empty()) {
            outside |= u;
        }
    }
    return all_points().minus(outside);
}

FiniteTopSpace space_generated_by(std::vector<std::string> points,
                                  std::vector<std::pair<std::string, Subset>> generators)
{
    if (points.size() > Subset::capacity) {
        throw Error(ErrorKind::SizeLimit, "spaces are limited to 64 points");
    }
    const Subset all = Subset::full(points.size());
    std::set<Subset> opens{Subset{}, all};
    for (const auto& [name, g] : generators) {
        if (!g.is_subset_of(all)) {
            throw Error(ErrorKind::InvalidArgument, "generator " + name + " mentions unknown points");
        }
        opens.insert(g);
    }
    // intersections first, then unions
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Subset> current(opens.begin(), opens.end());
        for (Subset u : current) {
            for (Subset v : current) {
                grew = opens.insert(u & v).second || grew;
            }
        }
    }
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Subset> current(opens.begin(), opens.end());
        for (Subset u : current) {
            for (Subset v : current) {
                grew = opens.insert(u | v).second || grew;
            }
        }
    }
    FiniteTopSpace x;
    x.points = std::move(points);
    x.opens.assign(opens.begin(), opens.end());
    x.basis = std::move(generators);
    validate_space(x);
    return x;
}

void validate_space(const FiniteTopSpace& x)
{
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
    if (x.size() > Subset::capacity) {
        fail("more than 64 points");
    }
    if (!std::is_sorted(x.opens.begin(), x.opens.end()) ||
        std::adjacent_find(x.opens.begin(), x.opens.end()) != x.opens.end()) {
        fail("open sets are not in canonical order");
    }
    if (!x.is_open(Subset{}) || !x.is_open(x.all_points())) {
        fail("empty set and whole space must be open");
    }
    for (Subset u : x.opens) {
        if (!u.is_subset_of(x.all_points())) {
            fail("open set mentions unknown points");
        }
        for (Subset v : x.opens) {
            if (!x.is_open(u | v) || !x.is_open(u & v)) {
                fail("open sets are not closed under union and intersection");
            }
        }
    }
    if (x.basis.empty()) {
        return;
    }
    for (const auto& [name, b] : x.basis) {
        if (!x.is_open(b)) {
            fail("basis element " + name + " is not open");
        }
    }
    for (Subset u : x.opens) {
        Subset covered;
        for (const auto& [name, b] : x.basis) {
            if (b.is_subset_of(u)) {
                covered |= b;
            }
        }
        if (covered != u) {
            fail("open set " + point_set_label(u, x.points) + " is not a union of basis elements");
        }
    }
}

Relation specialization_order(const FiniteTopSpace& x)
{
    Relation r(x.size());
    for (Index y = 0; y < x.size(); ++y) {
        const Subset c = x.closure(Subset::singleton(y));
        c.for_each([&](Index p) { r.set(p, y); });
    }
    return r;
}

// ---------------------------------------------------------------------------

bool is_prime_ideal(const Semiring& a, Subset s)
{
    if (!is_ideal(a, s) || s == a.carrier()) {
        return false;
    }
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = x; y < a.size(); ++y) {
            if (s.contains(a.mul(x, y)) && !s.contains(x) && !s.contains(y)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Index> enumerate_primes(const IdealQuantale& idl)
{
    const Semiring& a = idl.owner();
    std::vector<Index> out;
    std::set<Subset> primes;
    for (Index i = 0; i < idl.size(); ++i) {
        if (is_prime_ideal(a, idl.ideal(i))) {
            out.push_back(i);
            primes.insert(idl.ideal(i));
        }
    }
    std::set<Subset> kernels;
    for (const auto& f : enumerate_subadditive(idl.owner_ptr(), two())) {
        kernels.insert(f.kernel());
    }
    if (kernels != primes) {
        throw Error(ErrorKind::CrossCheckFailure, "prime ideals (" + std::to_string(primes.size()) +
                                                      ") differ from kernels of morphisms into 2 (" +
                                                      std::to_string(kernels.size()) + ")");
    }
    return out;
}

std::vector<Index> enumerate_maximal(const IdealQuantale& idl)
{
    const Subset whole = idl.owner().carrier();
    std::vector<Index> out;
    for (Index i = 0; i < idl.size(); ++i) {
        if (idl.ideal(i) == whole) {
            continue;
        }
        bool maximal = true;
        for (Index j = 0; j < idl.size() && maximal; ++j) {
            const Subset s = idl.ideal(j);
            maximal = !(s != whole && s != idl.ideal(i) && idl.ideal(i).is_subset_of(s));
        }
        if (maximal) {
            out.push_back(i);
        }
    }
    return out;
}

MaximalPrimeReport check_maximal_implies_prime(const IdealQuantale& idl)
{
    const Semiring& a = idl.owner();
    MaximalPrimeReport r;
    const auto maximal = enumerate_maximal(idl);
    const auto primes = enumerate_primes(idl);
    r.maximal = maximal.size();
    r.primes = primes.size();
    for (Index m : maximal) {
        const Subset s = idl.ideal(m);
        for (Index x = 0; x < a.size(); ++x) {
            for (Index y = 0; y < a.size(); ++y) {
                if (!s.contains(x) && !s.contains(y) && s.contains(a.mul(x, y))) {
                    throw Error(ErrorKind::LemmaViolation, "maximal ideal " + idl.label(m) + " is not prime: " +
                                                               a.label(x) + "*" + a.label(y) + " lies inside");
                }
            }
        }
    }
    for (Index p : primes) {
        if (std::find(maximal.begin(), maximal.end(), p) == maximal.end()) {
            r.prime_not_maximal.push_back(p);
        }
    }
    return r;
}

DegeneracyReport check_degeneracy_equivalence(const IdealQuantale& idl)
{
    const Semiring& a = idl.owner();
    DegeneracyReport r;
    r.everything_below_zero = true;
    for (Index x = 0; x < a.size(); ++x) {
        r.everything_below_zero = r.everything_below_zero && a.le(x, a.zero());
    }
    r.one_below_zero = a.le(a.one(), a.zero());
    r.no_primes = enumerate_primes(idl).empty();
    r.no_maximal = enumerate_maximal(idl).empty();
    r.zero_ideal_is_whole = idl.ideal(idl.principal_index(a.zero())) == a.carrier();

    const bool v = r.everything_below_zero;
    if (r.one_below_zero != v || r.no_primes != v || r.no_maximal != v || r.zero_ideal_is_whole != v) {
        auto flag = [](bool b) { return b ? "1" : "0"; };
        throw Error(ErrorKind::EquivalenceViolation,
                    std::string("conditions disagree: all<=0=") + flag(r.everything_below_zero) +
                        " 1<=0=" + flag(r.one_below_zero) + " no-primes=" + flag(r.no_primes) +
                        " no-maximal=" + flag(r.no_maximal) + " <0>=A:" + flag(r.zero_ideal_is_whole));
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subset> prime_sets(const IdealQuantale& idl, const std::vector<Index>& primes)
{
    std::vector<Subset> out;
    for (Index p : primes) {
        out.push_back(idl.ideal(p));
    }
    return out;
}

Subset basic_open(const std::vector<Subset>& primes, Index x)
{
    Subset d;
    for (Index i = 0; i < primes.size(); ++i) {
        if (!primes[i].contains(x)) {
            d.insert(i);
        }
    }
    return d;
}

Index open_index(const FiniteTopSpace& x, Subset u)
{
    auto it = std::lower_bound(x.opens.begin(), x.opens.end(), u);
    if (it == x.opens.end() || *it != u) {
        throw Error(ErrorKind::InternalMismatch, "set " + point_set_label(u, x.points) + " is not open");
    }
    return static_cast<Index>(it - x.opens.begin());
}

Subset image(const std::vector<Index>& map, Subset s)
{
    Subset out;
    s.for_each([&](Index i) { out.insert(map[i]); });
    return out;
}

} // namespace

FiniteTopSpace spec_space(const IdealQuantale& idl)
{
    const Semiring& a = idl.owner();
    const auto primes = prime_sets(idl, enumerate_primes(idl));
    const Subset all = Subset::full(primes.size());

    std::vector<std::string> points;
    for (Subset p : primes) {
        points.push_back(a.subset_label(p));
    }
    std::vector<std::pair<std::string, Subset>> basis;
    for (Index x = 0; x < a.size(); ++x) {
        basis.emplace_back("D_" + a.label(x), basic_open(primes, x));
    }
    if (!basis[a.zero()].second.empty() || basis[a.one()].second != all) {
        throw Error(ErrorKind::InternalMismatch, "D_0 must be empty and D_1 the whole spectrum");
    }
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < a.size(); ++y) {
            if ((basis[x].second & basis[y].second) != basis[a.mul(x, y)].second) {
                throw Error(ErrorKind::InternalMismatch,
                            "D_" + a.label(x) + " ∩ D_" + a.label(y) + " differs from D_" + a.label(a.mul(x, y)));
            }
        }
    }
    return space_generated_by(std::move(points), std::move(basis));
}

FiniteTopSpace pt_of_frame(const FiniteLattice& f)
{
    if (!f.is_frame()) {
        throw Error(ErrorKind::NotAQuantale, "points are taken of frames only");
    }
    const auto primes = f.meet_primes();
    std::vector<std::string> points;
    for (Index p : primes) {
        points.push_back(f.label(p));
    }
    std::vector<std::pair<std::string, Subset>> basis;
    for (Index a = 0; a < f.size(); ++a) {
        Subset u;
        for (Index i = 0; i < primes.size(); ++i) {
            if (!f.le(a, primes[i])) {
                u.insert(i);
            }
        }
        basis.emplace_back("U_" + f.label(a), u);
    }
    return space_generated_by(std::move(points), std::move(basis));
}

FiniteLattice opens_frame(const FiniteTopSpace& x)
{
    const std::size_t k = x.opens.size();
    Relation le(k);
    std::vector<std::string> labels;
    for (Index i = 0; i < k; ++i) {
        labels.push_back(point_set_label(x.opens[i], x.points));
        for (Index j = 0; j < k; ++j) {
            le.set(i, j, x.opens[i].is_subset_of(x.opens[j]));
        }
    }
    return FiniteLattice::from_order(std::move(labels), le).as_frame_quantale();
}

SpaceIso make_space_iso(const FiniteTopSpace& x, const FiniteTopSpace& y, std::vector<Index> forward)
{
    auto fail = [](const std::string& what) { throw Error(ErrorKind::HomeoFailure, what); };
    if (forward.size() != x.size() || x.size() != y.size()) {
        fail("spaces have " + std::to_string(x.size()) + " and " + std::to_string(y.size()) + " points");
    }
    SpaceIso iso;
    iso.backward.assign(y.size(), y.size());
    for (Index p = 0; p < x.size(); ++p) {
        if (forward[p] >= y.size() || iso.backward[forward[p]] != y.size()) {
            fail("point map is not a bijection");
        }
        iso.backward[forward[p]] = p;
    }
    if (x.opens.size() != y.opens.size()) {
        fail("spaces have different numbers of open sets");
    }
    for (Subset u : x.opens) {
        const Subset v = image(forward, u);
        if (!y.is_open(v)) {
            fail("image of " + point_set_label(u, x.points) + " is not open");
        }
        iso.open_map.push_back(open_index(y, v));
    }
    for (Subset v : y.opens) {
        if (!x.is_open(image(iso.backward, v))) {
            fail("preimage of " + point_set_label(v, y.points) + " is not open");
        }
    }
    iso.forward = std::move(forward);
    iso.verified = true;
    return iso;
}

SpaceIso check_pt_rad_equals_spec(const RadicalFrame& rad)
{
    const Semiring& a = rad.owner();
    const FiniteLattice& frame = rad.lattice();
    const FiniteTopSpace pt = pt_of_frame(frame);
    const FiniteTopSpace spec = spec_space(rad.ideals());
    const auto primes = prime_sets(rad.ideals(), enumerate_primes(rad.ideals()));
    const auto meet_primes = frame.meet_primes();

    std::vector<Index> forward;
    for (Index p : meet_primes) {
        Subset kernel;
        for (Index x = 0; x < a.size(); ++x) {
            if (frame.le(rad.radical_principal(x), p)) {
                kernel.insert(x);
            }
        }
        auto it = std::find(primes.begin(), primes.end(), kernel);
        if (it == primes.end()) {
            throw Error(ErrorKind::HomeoFailure, "point " + frame.label(p) + " restricts to a non-prime kernel " +
                                                     a.subset_label(kernel));
        }
        forward.push_back(static_cast<Index>(it - primes.begin()));
    }
    SpaceIso iso = make_space_iso(pt, spec, std::move(forward));
    for (Index x = 0; x < a.size(); ++x) {
        Subset u;
        for (Index i = 0; i < meet_primes.size(); ++i) {
            if (!frame.le(rad.radical_principal(x), meet_primes[i])) {
                u.insert(i);
            }
        }
        if (image(iso.forward, u) != basic_open(primes, x)) {
            throw Error(ErrorKind::HomeoFailure, "U_sqrt<" + a.label(x) + "> is not sent to D_" + a.label(x));
        }
    }
    return iso;
}

FrameIsoReport check_rad_is_opens_of_spec(const RadicalFrame& rad)
{
    const Semiring& a = rad.owner();
    const FiniteTopSpace spec = spec_space(rad.ideals());
    const auto primes = prime_sets(rad.ideals(), enumerate_primes(rad.ideals()));
    auto fail = [](const std::string& what) { throw Error(ErrorKind::IsoFailure, what); };

    FrameIsoReport r;
    for (Index i = 0; i < rad.size(); ++i) {
        Subset u;
        for (Index p = 0; p < primes.size(); ++p) {
            if (!rad.member(i).is_subset_of(primes[p])) {
                u.insert(p);
            }
        }
        if (!spec.is_open(u)) {
            fail("image of " + rad.label(i) + " is not open");
        }
        r.isomorphism.push_back(open_index(spec, u));
    }
    const FiniteLattice opens = opens_frame(spec);
    if (!is_order_isomorphism(rad.lattice(), opens, r.isomorphism) ||
        !is_frame_hom(rad.lattice(), opens, r.isomorphism)) {
        fail("Rad(A) -> O(Spec A) is not a frame isomorphism");
    }
    for (Index x = 0; x < a.size(); ++x) {
        if (spec.opens[r.isomorphism[rad.radical_principal(x)]] != basic_open(primes, x)) {
            fail("sqrt<" + a.label(x) + "> is not sent to D_" + a.label(x));
        }
    }
    return r;
}

std::size_t check_prime_element_correspondence(const IdealQuantale& idl)
{
    const Semiring& a = idl.owner();
    std::size_t count = 0;
    for (Index i = 0; i < idl.size(); ++i) {
        bool prime_element = i != idl.top();
        for (Index j = 0; j < idl.size() && prime_element; ++j) {
            for (Index k = 0; k < idl.size() && prime_element; ++k) {
                if (idl.le(idl.product(j, k), i) && !idl.le(j, i) && !idl.le(k, i)) {
                    prime_element = false;
                }
            }
        }
        const bool prime_ideal = is_prime_ideal(a, idl.ideal(i));
        if (prime_element != prime_ideal) {
            throw Error(ErrorKind::CorrespondenceFailure,
                        "ideal " + idl.label(i) + (prime_ideal ? " is prime but not a prime element"
                                                               : " is a prime element but not a prime ideal"));
        }
        count += prime_ideal ? 1 : 0;
    }
    return count;
}

SoberReport check_sober(const FiniteTopSpace& x)
{
    SoberReport r;
    std::vector<Subset> point_closures;
    for (Index p = 0; p < x.size(); ++p) {
        point_closures.push_back(x.closure(Subset::singleton(p)));
    }
    r.t0 = true;
    for (Index p = 0; p < x.size() && r.t0; ++p) {
        for (Index q = p + 1; q < x.size() && r.t0; ++q) {
            if (point_closures[p] == point_closures[q]) {
                r.t0 = false;
                r.witness = "points " + x.points[p] + " and " + x.points[q] + " have the same closure";
            }
        }
    }

    std::vector<Subset> closed;
    for (Subset u : x.opens) {
        closed.push_back(x.all_points().minus(u));
    }
    r.sober = r.t0;
    for (Subset c : closed) {
        if (c.empty() || !r.sober) {
            continue;
        }
        bool irreducible = true;
        for (Subset d : closed) {
            for (Subset e : closed) {
                if (d != c && e != c && d.is_subset_of(c) && e.is_subset_of(c) && (d | e) == c) {
                    irreducible = false;
                }
            }
        }
        if (!irreducible) {
            continue;
        }
        std::size_t generic = 0;
        for (Index p = 0; p < x.size(); ++p) {
            generic += point_closures[p] == c ? 1 : 0;
        }
        if (generic != 1) {
            r.sober = false;
            r.witness = "irreducible closed set " + point_set_label(c, x.points) + " has " +
                        std::to_string(generic) + " generic points";
        }
    }
    return r;
}

SpaceIso check_pt_of_opens(const FiniteTopSpace& x)
{
    const SoberReport s = check_sober(x);
    if (!s.sober) {
        throw Error(ErrorKind::NotSober, s.witness);
    }
    const FiniteLattice frame = opens_frame(x);
    const FiniteTopSpace pt = pt_of_frame(frame);
    const auto meet_primes = frame.meet_primes();

    std::vector<Index> forward;
    for (Index p = 0; p < x.size(); ++p) {
        const Subset kernel_top = x.all_points().minus(x.closure(Subset::singleton(p)));
        const Index open = open_index(x, kernel_top);
        auto it = std::find(meet_primes.begin(), meet_primes.end(), open);
        if (it == meet_primes.end()) {
            throw Error(ErrorKind::HomeoFailure, "point " + x.points[p] + " does not give a meet-prime open");
        }
        forward.push_back(static_cast<Index>(it - meet_primes.begin()));
    }
    return make_space_iso(x, pt, std::move(forward));
}

std::vector<Index> check_opens_of_pt(const FiniteLattice& f)
{
    const FiniteTopSpace pt = pt_of_frame(f);
    const auto meet_primes = f.meet_primes();
    std::vector<Index> table;
    for (Index a = 0; a < f.size(); ++a) {
        Subset u;
        for (Index i = 0; i < meet_primes.size(); ++i) {
            if (!f.le(a, meet_primes[i])) {
                u.insert(i);
            }
        }
        table.push_back(open_index(pt, u));
    }
    const FiniteLattice opens = opens_frame(pt);
    if (!is_order_isomorphism(f, opens, table) || !is_frame_hom(f, opens, table)) {
        throw Error(ErrorKind::IsoFailure, "a -> U_a is not a frame isomorphism F -> O(pt F)");
    }
    return table;
}

} // namespace osr
