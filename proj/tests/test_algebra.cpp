/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "builtins.hpp"
#include "osr/error.hpp"
#include "osr/lattice.hpp"
#include "osr/semiring.hpp"

using namespace osr;

namespace {

RawSemiringDescription z4_description()
{
    RawSemiringDescription d;
    d.name = "Z4";
    d.elements = {"0", "1", "2", "3"};
    d.le = DiscreteOrder{};
    d.zero = "0";
    d.one = "1";
    for (int i = 0; i < 4; ++i) {
        std::vector<std::string> add_row, mul_row;
        for (int j = 0; j < 4; ++j) {
            add_row.push_back(std::to_string((i + j) % 4));
            mul_row.push_back(std::to_string((i * j) % 4));
        }
        d.add_table.push_back(add_row);
        d.mul_table.push_back(mul_row);
    }
    return d;
}

/// {-1, 0, 1} ordered as a chain, clamped addition, real multiplication.
RawSemiringDescription signed_fragment()
{
    const std::vector<int> v = {-1, 0, 1};
    RawSemiringDescription d;
    d.name = "signed";
    d.elements = {"-1", "0", "1"};
    d.le = ChainOrder{};
    d.zero = "0";
    d.one = "1";
    for (int x : v) {
        std::vector<std::string> add_row, mul_row;
        for (int y : v) {
            add_row.push_back(std::to_string(std::clamp(x + y, -1, 1)));
            mul_row.push_back(std::to_string(x * y));
        }
        d.add_table.push_back(add_row);
        d.mul_table.push_back(mul_row);
    }
    return d;
}

} // namespace

TEST_CASE("validate accepts Z/4 as a discretely ordered semiring")
{
    const auto a = validate(z4_description());
    CHECK(a->size() == 4);
    CHECK(a->is_discrete());
    CHECK(a->add(3, 3) == 2);
    CHECK(a->mul(2, 2) == 0);
}

TEST_CASE("multiplication by a negative element is not monotone")
{
    try {
        validate(signed_fragment());
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.kind() == ErrorKind::AxiomViolation);
        REQUIRE(e.violates("mul-monotone"));
        for (const auto& v : e.violations()) {
            if (v.axiom == "mul-monotone") {
                CHECK(v.witness.size() == 3);
            }
        }
    }
}

TEST_CASE("the 3-chain with join and meet tables is valid")
{
    RawSemiringDescription d;
    d.name = "chain";
    d.elements = {"b", "m", "t"};
    d.le = ChainOrder{};
    d.zero = "b";
    d.one = "t";
    d.add_table = {{"b", "m", "t"}, {"m", "m", "t"}, {"t", "t", "t"}};
    d.mul_table = {{"b", "b", "b"}, {"b", "m", "m"}, {"b", "m", "t"}};
    const auto a = validate(d);
    CHECK(a->same_structure(*build_chain_lattice(3)));
}

TEST_CASE("validate rejects malformed descriptions")
{
    auto d = z4_description();
    SUBCASE("unknown label")
    {
        d.add_table[1][2] = "7";
        CHECK_THROWS_AS(validate(d), Error);
        try {
            validate(d);
            FAIL("expected LabelError");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::LabelError);
        }
    }
    SUBCASE("duplicate element")
    {
        d.elements[3] = "2";
        try {
            validate(d);
            FAIL("expected LabelError");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::LabelError);
        }
    }
    SUBCASE("short table")
    {
        d.mul_table.pop_back();
        try {
            validate(d);
            FAIL("expected InvalidArgument");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidArgument);
        }
    }
    SUBCASE("broken distributivity")
    {
        d.mul_table[2][3] = "1";
        d.mul_table[3][2] = "1";
        CHECK_THROWS_AS(validate(d), AxiomViolation);
    }
}

TEST_CASE("preorders are closed rather than rejected")
{
    auto d = z4_description();
    d.name = "Z4-preorder";
    d.le = LePairs{{"0", "2"}, {"2", "0"}};
    try {
        validate(d);
    } catch (const AxiomViolation& e) {
        // only semiring laws may fail
        CHECK_FALSE(e.violates("le-reflexive"));
        CHECK_FALSE(e.violates("le-transitive"));
    }
}

TEST_CASE("carrier size guardrail")
{
    CHECK_THROWS_AS(build_zmod(25), Error);
    try {
        build_chain_lattice(max_carrier_size + 1);
        FAIL("expected SizeLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
    CHECK(build_zmod(24)->size() == 24);
}

TEST_CASE("zmod builder")
{
    const auto one = build_zmod(1);
    CHECK(one->size() == 1);
    CHECK(one->zero() == one->one());

    const auto z4 = build_zmod(4);
    CHECK(z4->labels() == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(z4->is_discrete());
    for (Index x = 0; x < 4; ++x) {
        for (Index y = 0; y < 4; ++y) {
            CHECK(z4->add(x, y) == (x + y) % 4);
            CHECK(z4->mul(x, y) == (x * y) % 4);
        }
    }
    CHECK(build_zmod(6)->size() == 6);
}

TEST_CASE("chain lattice builder")
{
    const auto two = build_chain_lattice(2);
    CHECK(two->name() == "2");
    CHECK(two->le(0, 1));
    CHECK_FALSE(two->le(1, 0));
    CHECK(two->zero() == 0);
    CHECK(two->one() == 1);
    CHECK(two->add(0, 1) == 1);
    CHECK(two->mul(0, 1) == 0);

    const auto one = build_chain_lattice(1);
    CHECK(one->zero() == one->one());

    const auto three = build_chain_lattice(3);
    for (Index x = 0; x < 3; ++x) {
        for (Index y = 0; y < 3; ++y) {
            CHECK(three->mul(x, y) == std::min(x, y));
            CHECK(three->add(x, y) == std::max(x, y));
        }
    }
}

TEST_CASE("downset lattices of small posets")
{
    const auto diamond = build_dlat_from_poset(Relation::identity(2));
    CHECK(diamond->size() == 4);
    CHECK(FiniteLattice::from_order(diamond->labels(), diamond->order()).is_distributive());
    CHECK_FALSE(diamond->le(1, 2));
    CHECK_FALSE(diamond->le(2, 1));

    Relation chain2 = Relation::identity(2);
    chain2.set(0, 1);
    const auto three = build_dlat_from_poset(chain2);
    CHECK(three->size() == 3);
    CHECK(three->same_structure(*build_chain_lattice(3)));

    const auto trivial = build_dlat_from_poset(Relation(0));
    CHECK(trivial->size() == 1);

    Relation cycle = Relation::identity(2);
    cycle.set(0, 1);
    cycle.set(1, 0);
    try {
        build_dlat_from_poset(cycle);
        FAIL("expected NotAPartialOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAPartialOrder);
    }
}

TEST_CASE("Boolean ring builder")
{
    const auto b1 = build_boolean_ring(1);
    CHECK(b1->same_structure(*build_zmod(2)));

    // Z/2 x Z/2 with elements (i, j) at index i + 2j
    const auto b2 = build_boolean_ring(2);
    REQUIRE(b2->size() == 4);
    for (Index x = 0; x < 4; ++x) {
        for (Index y = 0; y < 4; ++y) {
            const Index sum = ((x & 1) ^ (y & 1)) | ((((x >> 1) & 1) ^ ((y >> 1) & 1)) << 1);
            const Index prod = ((x & 1) & (y & 1)) | ((((x >> 1) & 1) & ((y >> 1) & 1)) << 1);
            CHECK(b2->add(x, y) == sum);
            CHECK(b2->mul(x, y) == prod);
        }
    }
    CHECK(b2->labels() == build_dlat_from_poset(Relation::identity(2))->labels());
    CHECK_THROWS_AS(build_boolean_ring(4), Error);
}

TEST_CASE("truncated naturals")
{
    CHECK(build_truncated_naturals(1)->same_structure(*build_chain_lattice(2)));
    const auto t2 = build_truncated_naturals(2);
    REQUIRE(t2->size() == 3);
    CHECK(t2->add(1, 1) == 2);
    CHECK(t2->mul(2, 2) == 2);
    CHECK(t2->mul(0, 2) == 0);
}

TEST_CASE("truncated max-plus")
{
    const auto m1 = build_truncated_maxplus(1);
    CHECK(m1->labels() == std::vector<std::string>{"-inf", "0", "1"});
    for (std::size_t cap = 1; cap <= 6; ++cap) {
        const auto m = build_truncated_maxplus(cap);
        const Index minus_inf = *m->find("-inf");
        for (Index x = 0; x < m->size(); ++x) {
            CHECK(m->mul(x, minus_inf) == minus_inf);
            CHECK(m->add(x, x) == x);
            for (Index y = 0; y < m->size(); ++y) {
                CHECK(m->le(x, y) == (m->add(x, y) == y));
            }
        }
    }
}

TEST_CASE("semirings from quantales")
{
    CHECK(build_from_quantale(chain_frame_quantale(2))->same_structure(*build_chain_lattice(2)));
    CHECK(build_from_quantale(chain_frame_quantale(3))->same_structure(*build_chain_lattice(3)));
    CHECK_THROWS_AS(build_from_quantale(chain_lattice(3)), Error);

    // the order dual of the 2-chain quantale puts the unit below zero
    const auto dual = order_dual(*build_from_quantale(chain_frame_quantale(2)));
    CHECK(dual->le(dual->one(), dual->zero()));
    CHECK_FALSE(dual->le(dual->zero(), dual->one()));
}

TEST_CASE("discretize keeps the tables")
{
    const auto two = build_chain_lattice(2);
    const auto d = discretize(*two);
    CHECK(d->is_discrete());
    CHECK(d->add_table() == two->add_table());
    CHECK(d->mul_table() == two->mul_table());
    CHECK_FALSE(d->same_structure(*build_zmod(2)));
}

TEST_CASE("describe inverts validate")
{
    for (const auto& inst : testing::builtins(8)) {
        CAPTURE(inst.name);
        const auto back = validate(describe(*inst.semiring));
        CHECK(back->same_structure(*inst.semiring));
        CHECK(back->labels() == inst.semiring->labels());
    }
}

TEST_CASE("builders are deterministic")
{
    for (const auto& inst : testing::builtins(24)) {
        CAPTURE(inst.name);
        if (inst.name.rfind("discrete-", 0) == 0 || inst.name.rfind("downsets:", 0) == 0) {
            continue;
        }
        const auto again = build_named(inst.name);
        CHECK(again->same_structure(*inst.semiring));
        CHECK(again->labels() == inst.semiring->labels());
    }
}

TEST_CASE("powers")
{
    const auto z4 = build_zmod(4);
    CHECK(z4->power(2, 0) == 1);
    CHECK(z4->power(2, 1) == 2);
    CHECK(z4->power(2, 2) == 0);
    CHECK(z4->power(3, 2) == 1);
}
