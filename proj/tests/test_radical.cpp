/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "builtins.hpp"
#include "oracles.hpp"
#include "osr/error.hpp"
#include "osr/radical.hpp"

using namespace osr;

namespace {

Subset bits(std::uint64_t b)
{
    return Subset::from_bits(b);
}

RadicalFrame rad_of(const SemiringPtr& a)
{
    return RadicalFrame::compute(IdealQuantale::compute(a));
}

/// 3-chain with m*m = bottom.
FiniteLattice nilpotent_chain()
{
    Table mul(3);
    for (Index x = 0; x < 3; ++x) {
        for (Index y = 0; y < 3; ++y) {
            mul.set(x, y, x == 2 ? y : y == 2 ? x : 0);
        }
    }
    return chain_lattice(3).with_multiplication(mul, 2);
}

/// Bottom, three atoms, top. Not distributive.
FiniteLattice m3()
{
    Relation le = Relation::identity(5);
    for (Index i = 1; i <= 3; ++i) {
        le.set(0, i);
        le.set(i, 4);
    }
    le.set(0, 4);
    return FiniteLattice::from_order({"0", "a", "b", "c", "1"}, le);
}

const std::vector<FiniteLattice>& frame_targets()
{
    static const std::vector<FiniteLattice> targets = {chain_lattice(1), chain_lattice(2), chain_lattice(3),
                                                       boolean_lattice(2)};
    return targets;
}

} // namespace

TEST_CASE("radical closure examples")
{
    const auto z4 = build_zmod(4);
    CHECK(radical_closure(*z4, {z4.get(), bits(0b0001)}).members == bits(0b0101));
    const auto z6 = build_zmod(6);
    CHECK(radical_closure(*z6, {z6.get(), bits(0b000001)}).members == bits(0b000001));
    CHECK(is_radical(*z6, bits(0b000001)));
    CHECK_FALSE(is_radical(*z4, bits(0b0001)));

    try {
        radical_closure(*z6, {z4.get(), bits(0b0001)});
        FAIL("expected OwnerMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OwnerMismatch);
    }
}

TEST_CASE("radical ideal counts")
{
    CHECK(rad_of(build_zmod(6)).size() == 4);
    CHECK(rad_of(build_zmod(4)).size() == 2);
    CHECK(rad_of(build_zmod(8)).size() == 2);
    CHECK(rad_of(build_zmod(1)).size() == 1);

    const auto b2 = rad_of(build_boolean_ring(2));
    CHECK(b2.size() == 4);
    CHECK(lattices_isomorphic(b2.lattice(), boolean_lattice(2)));
}

TEST_CASE("radical ideals agree with the subset filter")
{
    for (const auto& inst : testing::builtins(10)) {
        CAPTURE(inst.name);
        const auto& a = *inst.semiring;
        const auto rad = rad_of(inst.semiring);
        std::vector<std::uint64_t> members;
        for (Subset s : rad.members()) {
            members.push_back(s.bits());
        }
        CHECK(members == oracle::radicals(a));
        CHECK(rad.lattice().is_frame());
        for (Index i = 0; i < rad.ideals().size(); ++i) {
            CHECK(rad.member(rad.radical_of(i)).bits() == oracle::radical_closure(a, rad.ideals().ideal(i).bits()));
        }
    }
}

TEST_CASE("every ideal of a distributive lattice is radical")
{
    for (const auto& inst : testing::builtins(10)) {
        if (inst.name.rfind("chain:", 0) != 0 && inst.name.rfind("downsets:", 0) != 0) {
            continue;
        }
        CAPTURE(inst.name);
        const auto idl = IdealQuantale::compute(inst.semiring);
        CHECK(RadicalFrame::compute(idl).size() == idl.size());
    }
}

TEST_CASE("radical closure is a nucleus")
{
    for (const auto& inst : testing::builtins(10)) {
        CAPTURE(inst.name);
        const auto& a = *inst.semiring;
        const auto rad = rad_of(inst.semiring);
        const auto& idl = rad.ideals();
        for (Index i = 0; i < idl.size(); ++i) {
            const Subset ri = rad.member(rad.radical_of(i));
            CHECK(idl.ideal(i).is_subset_of(ri));
            CHECK(rad.radical_of(rad.ideal_index(rad.radical_of(i))) == rad.radical_of(i));
            for (Index j = 0; j < idl.size(); ++j) {
                const Subset rj = rad.member(rad.radical_of(j));
                if (idl.le(i, j)) {
                    CHECK(ri.is_subset_of(rj));
                }
                CHECK(rad.member(rad.radical_of(idl.meet(i, j))) == (ri & rj));
                CHECK(rad.member(rad.radical_of(idl.product(i, j))) == (ri & rj));
            }
            // sqrt I <= R iff I <= R for radical R
            for (Index r = 0; r < rad.size(); ++r) {
                CHECK(ri.is_subset_of(rad.member(r)) == idl.ideal(i).is_subset_of(rad.member(r)));
            }
            // sqrt I is the join of sqrt<x> over x in I
            Index joined = rad.lattice().bottom();
            idl.ideal(i).for_each([&](Index x) { joined = rad.lattice().join(joined, rad.radical_principal(x)); });
            CHECK(joined == rad.radical_of(i));
        }
        for (Index r = 0; r < rad.size(); ++r) {
            for (Index s = 0; s < rad.size(); ++s) {
                CHECK(rad.member(rad.lattice().meet(r, s)) == (rad.member(r) & rad.member(s)));
                CHECK(rad.member(rad.lattice().join(r, s)).bits() ==
                      oracle::radical_closure(a, rad.member(r).bits() | rad.member(s).bits()));
            }
        }
    }
}

TEST_CASE("semiprime elements")
{
    const auto idl = IdealQuantale::compute(build_zmod(4));
    const auto s = semiprime_elements(idl.lattice());
    CHECK(s.members == std::vector<Index>{1, 2});
    CHECK(s.reflector == std::vector<Index>{0, 0, 1});
    CHECK_FALSE(is_semiprime(idl.lattice(), 0));

    const auto nil = semiprime_elements(nilpotent_chain());
    CHECK(nil.members == std::vector<Index>{1, 2});
    CHECK(nil.frame.size() == 2);

    for (const auto& q : {chain_frame_quantale(3), boolean_lattice(2).as_frame_quantale()}) {
        const auto all = semiprime_elements(q);
        CHECK(all.members.size() == q.size());
    }

    try {
        semiprime_elements(chain_lattice(3));
        FAIL("expected NotIntegral");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotIntegral);
    }
}

TEST_CASE("radical ideals are the semiprime elements of the ideal quantale")
{
    for (const auto& inst : testing::builtins(10)) {
        CAPTURE(inst.name);
        const auto idl = IdealQuantale::compute(inst.semiring);
        const auto rad = RadicalFrame::compute(idl);
        const auto s = semiprime_elements(idl.lattice());
        std::vector<Subset> semiprime;
        for (Index m : s.members) {
            semiprime.push_back(idl.ideal(m));
        }
        CHECK(semiprime == rad.members());
        for (Index i = 0; i < idl.size(); ++i) {
            CHECK(s.members[s.reflector[i]] == rad.ideal_index(rad.radical_of(i)));
        }
        CHECK(lattices_isomorphic(s.frame, rad.lattice()));
    }
}

TEST_CASE("universal property of the radical frame")
{
    const auto z6 = check_rad_universal(rad_of(build_zmod(6)), chain_lattice(2));
    CHECK(z6.homomorphisms == 2);
    CHECK(z6.morphisms == 2);
    const auto z4 = check_rad_universal(rad_of(build_zmod(4)), chain_lattice(2));
    CHECK(z4.homomorphisms == 1);
    CHECK(z4.morphisms == 1);

    for (const auto& inst : testing::builtins(6)) {
        const auto rad = rad_of(inst.semiring);
        for (const auto& f : frame_targets()) {
            CAPTURE(inst.name);
            CAPTURE(f.size());
            const auto report = check_rad_universal(rad, f);
            CHECK(report.homomorphisms == report.morphisms);
            CHECK(report.homomorphisms == oracle::count_lattice_maps(rad.lattice(), f, true, false));
            const auto target = build_from_quantale(f.as_frame_quantale());
            CHECK(report.morphisms == oracle::maps_where(*inst.semiring, *target, oracle::is_subadditive_morphism).size());
        }
    }

    try {
        check_rad_universal(rad_of(build_zmod(4)), m3());
        FAIL("expected NotAQuantale");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAQuantale);
    }
}

TEST_CASE("extending a morphism along the radical frame")
{
    const auto rad = rad_of(build_zmod(6));
    const auto frame = chain_lattice(2);
    const auto f = classify({0, 1, 0, 1, 0, 1}, build_zmod(6), two());
    const auto g = extend_to_frame_hom(rad, f, frame);
    CHECK(is_frame_hom(rad.lattice(), frame, g));
    for (Index x = 0; x < 6; ++x) {
        CHECK(g[rad.radical_principal(x)] == f(x));
    }
}

TEST_CASE("distributive lattice reflection")
{
    const auto z4 = dlat_reflection(rad_of(build_zmod(4)));
    REQUIRE(z4.lattice.size() == 2);
    CHECK(z4.universal_map[0] == z4.lattice.bottom());
    CHECK(z4.universal_map[2] == z4.lattice.bottom());
    CHECK(z4.universal_map[1] == z4.lattice.top());
    CHECK(z4.universal_map[3] == z4.lattice.top());
    CHECK(z4.test_lattices == 13);

    for (std::size_t k = 1; k <= 3; ++k) {
        CAPTURE(k);
        const auto r = dlat_reflection(rad_of(build_boolean_ring(k)));
        CHECK(lattices_isomorphic(r.lattice, boolean_lattice(k)));
        CHECK(std::set<Index>(r.universal_map.begin(), r.universal_map.end()).size() == r.lattice.size());
    }

    // a distributive lattice is its own reflection
    for (const auto& inst : testing::builtins(8)) {
        if (inst.name.rfind("chain:", 0) != 0 && inst.name.rfind("downsets:", 0) != 0) {
            continue;
        }
        CAPTURE(inst.name);
        const auto& a = *inst.semiring;
        const auto r = dlat_reflection(rad_of(inst.semiring));
        CHECK(std::set<Index>(r.universal_map.begin(), r.universal_map.end()).size() == a.size());
        CHECK(is_order_isomorphism(FiniteLattice::from_order(a.labels(), a.order()), r.lattice, r.universal_map));
    }
}

TEST_CASE("reflection map satisfies the lattice relations")
{
    for (const auto& inst : testing::builtins(8)) {
        CAPTURE(inst.name);
        const auto& a = *inst.semiring;
        const auto r = dlat_reflection(rad_of(inst.semiring));
        const auto& l = r.lattice;
        const auto& u = r.universal_map;
        CHECK(u[a.zero()] == l.bottom());
        CHECK(u[a.one()] == l.top());
        for (Index x = 0; x < a.size(); ++x) {
            for (Index y = 0; y < a.size(); ++y) {
                CHECK(l.le(u[a.add(x, y)], l.join(u[x], u[y])));
                CHECK(u[a.mul(x, y)] == l.meet(u[x], u[y]));
                if (a.le(x, y)) {
                    CHECK(l.le(u[x], u[y]));
                }
            }
        }
    }
}

TEST_CASE("coherence of radicals and ideals of the reflection")
{
    const auto z6 = check_coherence(rad_of(build_zmod(6)));
    CHECK(z6.rad_size == 4);
    CHECK(z6.idl_of_reflection_size == 4);
    CHECK(check_coherence(rad_of(two())).rad_size == 2);
    CHECK(check_coherence(rad_of(build_truncated_naturals(2))).idl_of_reflection_size == 2);

    for (const auto& inst : testing::builtins(10)) {
        CAPTURE(inst.name);
        const auto rad = rad_of(inst.semiring);
        const auto c = check_coherence(rad);
        CHECK(c.rad_size == c.idl_of_reflection_size);
        CHECK(std::set<Index>(c.isomorphism.begin(), c.isomorphism.end()).size() == rad.size());
    }
}
