/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "builtins.hpp"
#include "osr/error.hpp"
#include "osr/format.hpp"

using namespace osr;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(OSR_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// Runs parse and returns the error it raises.
ParseError parse_error(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(ErrorKind::ParseError, 0, 0, "");
}

const std::string z2_head = "name: Z2\nelements: 0 1\nle: discrete\nzero: 0\none: 1\n";
const std::string z2_tables = "add:\n0 1\n1 0\nmul:\n0 0\n0 1\n";

} // namespace

TEST_CASE("parses a document with comments and blank lines")
{
    const auto doc = parse(fixture("z4.osr"));
    const auto a = validate(doc.description);
    CHECK(a->name() == "Z4");
    CHECK(a->same_structure(*build_zmod(4)));
    CHECK(a->is_discrete());
    CHECK(doc.spans.at("name").line == 3);
    CHECK(doc.spans.at("add").line == 9);
    CHECK(doc.spans.at("add").column == 1);
    CHECK(doc.spans.at("mul").line == 14);
}

TEST_CASE("order given by pairs")
{
    const auto doc = parse(fixture("chain3.osr"));
    const auto* pairs = std::get_if<LePairs>(&doc.description.le);
    REQUIRE(pairs != nullptr);
    CHECK(pairs->size() == 2);
    CHECK(doc.spans.at("le[1]").line == 6);
    const auto a = validate(doc.description);
    CHECK(a->same_structure(*build_chain_lattice(3)));
    CHECK(a->le(0, 2));
}

TEST_CASE("discrete order is the identity")
{
    const auto a = validate(parse(z2_head + z2_tables).description);
    CHECK(a->le(0, 0));
    CHECK(a->le(1, 1));
    CHECK_FALSE(a->le(0, 1));
    CHECK_FALSE(a->le(1, 0));
}

TEST_CASE("short table row is reported at its position")
{
    const auto e = parse_error(fixture("short_row.osr"));
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.line() == 10);
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()).rfind("ParseError: line 10, column 6: ", 0) == 0);
}

TEST_CASE("axiom violations survive parsing")
{
    const auto doc = parse(fixture("signed.osr"));
    try {
        validate(doc.description);
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.violates("mul-monotone"));
    }
}

TEST_CASE("malformed documents")
{
    SUBCASE("duplicate label")
    {
        const auto e = parse_error("name: x\nelements: a b a\n");
        CHECK(e.kind() == ErrorKind::DuplicateLabel);
        CHECK(e.line() == 2);
        CHECK(e.column() == 15);
    }
    SUBCASE("missing section")
    {
        const auto e = parse_error("name: Z2\nelements: 0 1\nle: discrete\nzero: 0\n" + z2_tables);
        CHECK(e.kind() == ErrorKind::MissingSection);
        CHECK(e.line() == 5);
    }
    SUBCASE("missing section at the end")
    {
        const auto e = parse_error(z2_head + "add:\n0 1\n1 0\n");
        CHECK(e.kind() == ErrorKind::MissingSection);
        CHECK(e.line() == 9);
    }
    SUBCASE("unknown label in a table")
    {
        const auto e = parse_error(z2_head + "add:\n0 1\n1 2\nmul:\n0 0\n0 1\n");
        CHECK(e.kind() == ErrorKind::LabelError);
        CHECK(e.line() == 8);
        CHECK(e.column() == 3);
    }
    SUBCASE("unknown zero")
    {
        const auto e = parse_error("name: Z2\nelements: 0 1\nle: discrete\nzero: z\none: 1\n" + z2_tables);
        CHECK(e.kind() == ErrorKind::LabelError);
        CHECK(e.line() == 4);
        CHECK(e.column() == 7);
    }
    SUBCASE("long row")
    {
        const auto e = parse_error(z2_head + "add:\n0 1 1\n1 0\nmul:\n0 0\n0 1\n");
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(e.line() == 7);
        CHECK(e.column() == 5);
    }
    SUBCASE("missing rows")
    {
        const auto e = parse_error(z2_head + "add:\n0 1\nmul:\n0 0\n0 1\n");
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(e.line() == 8);
    }
    SUBCASE("bad order pair")
    {
        const auto e = parse_error("name: Z2\nelements: 0 1\nle:\n0 < 1\nzero: 0\none: 1\n" + z2_tables);
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(e.line() == 4);
    }
    SUBCASE("trailing content")
    {
        const auto e = parse_error(z2_head + z2_tables + "0 1\n");
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(e.line() == 12);
    }
    SUBCASE("sections out of order")
    {
        const auto e = parse_error("elements: 0 1\nname: Z2\n");
        CHECK(e.kind() == ErrorKind::MissingSection);
        CHECK(e.line() == 1);
    }
    SUBCASE("empty document")
    {
        const auto e = parse_error("# nothing here\n\n");
        CHECK(e.kind() == ErrorKind::MissingSection);
    }
}

TEST_CASE("whitespace and comments are insignificant")
{
    const std::string spaced = "# header\nname:   Z2\nelements:\t0   1  # two elements\nle: discrete\n\nzero: 0\none: 1\n"
                               "add:\n 0 1\n1\t0\n\nmul:\n0 0\n0 1   \n";
    CHECK(parse(spaced).description == parse(z2_head + z2_tables).description);
}

TEST_CASE("render and parse are inverse")
{
    for (const auto& inst : testing::builtins(24)) {
        CAPTURE(inst.name);
        const auto d = describe(*inst.semiring);
        const std::string text = render(d);
        CHECK(parse(text).description == d);
        const auto back = validate(parse(text).description);
        CHECK(back->same_structure(*inst.semiring));
        CHECK(back->labels() == inst.semiring->labels());
        CHECK(render(parse(text).description) == text);
    }
}

TEST_CASE("named builders")
{
    CHECK(build_named("zmod:6")->same_structure(*build_zmod(6)));
    CHECK(build_named("chain:2")->same_structure(*build_chain_lattice(2)));
    CHECK(build_named("bool:2")->same_structure(*build_boolean_ring(2)));
    CHECK(build_named("truncnat:3")->same_structure(*build_truncated_naturals(3)));
    CHECK(build_named("maxplus:2")->same_structure(*build_truncated_maxplus(2)));
    const auto dual = build_named("dualq:2");
    CHECK(dual->name() == "dualq-2");
    CHECK(dual->le(dual->one(), dual->zero()));

    for (const char* bad : {"zmod", "zmod:", "zmod:x", "zmod:-1", "nope:3", "dualq:0"}) {
        CAPTURE(bad);
        try {
            build_named(bad);
            FAIL("expected InvalidArgument");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidArgument);
        }
    }
    for (const char* big : {"zmod:25", "chain:100", "zmod:99999999999999999999"}) {
        CAPTURE(big);
        try {
            build_named(big);
            FAIL("expected SizeLimit");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SizeLimit);
        }
    }
}
