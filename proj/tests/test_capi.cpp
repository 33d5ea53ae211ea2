/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "osr/osr.h"

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(OSR_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// Owns a semiring handle for the duration of a test.
struct Handle {
    osr_semiring* ptr = nullptr;
    ~Handle() { osr_semiring_free(ptr); }
};

std::string take(char* s)
{
    std::string out = s ? s : "";
    osr_string_free(s);
    return out;
}

osr_status parse(const std::string& text, Handle& h)
{
    return osr_semiring_parse(text.data(), text.size(), &h.ptr);
}

} // namespace

TEST_CASE("version and status names")
{
    CHECK(std::string(osr_version()) == "0.1.0");
    CHECK(std::string(osr_status_name(OSR_OK)) == "ok");
    CHECK(std::string(osr_status_name(OSR_ERR_AXIOM)) == "axiom violation");
    CHECK(std::string(osr_status_name(static_cast<osr_status>(99))) == "unknown status");
}

TEST_CASE("builders")
{
    Handle h;
    REQUIRE(osr_semiring_build("zmod:6", &h.ptr) == OSR_OK);
    CHECK(osr_semiring_size(h.ptr) == 6);
    CHECK(std::string(osr_semiring_name(h.ptr)) == "Z/6");
    CHECK(std::string(osr_last_error_message()).empty());

    osr_counts counts{};
    REQUIRE(osr_counts_get(h.ptr, &counts) == OSR_OK);
    CHECK(counts.elements == 6);
    CHECK(counts.ideals == 4);
    CHECK(counts.radicals == 4);
    CHECK(counts.primes == 2);
    CHECK(counts.maximal == 2);

    Handle bad;
    CHECK(osr_semiring_build("nope:3", &bad.ptr) == OSR_ERR_INVALID_ARGUMENT);
    CHECK(bad.ptr == nullptr);
    CHECK(std::string(osr_last_error_message()).rfind("InvalidArgument: ", 0) == 0);
    CHECK(osr_semiring_build("zmod:99", &bad.ptr) == OSR_ERR_SIZE_LIMIT);
    CHECK(osr_semiring_build("zmod:30", &bad.ptr) == OSR_ERR_SIZE_LIMIT);
}

TEST_CASE("parsing text")
{
    Handle h;
    REQUIRE(parse(fixture("z4.osr"), h) == OSR_OK);
    CHECK(osr_semiring_size(h.ptr) == 4);
    CHECK(std::string(osr_semiring_name(h.ptr)) == "Z4");

    char* text = nullptr;
    REQUIRE(osr_semiring_render(h.ptr, &text) == OSR_OK);
    const std::string rendered = take(text);
    Handle again;
    REQUIRE(parse(rendered, again) == OSR_OK);
    REQUIRE(osr_semiring_render(again.ptr, &text) == OSR_OK);
    CHECK(take(text) == rendered);
}

TEST_CASE("errors carry positions")
{
    Handle h;
    CHECK(parse(fixture("short_row.osr"), h) == OSR_ERR_PARSE);
    CHECK(h.ptr == nullptr);
    CHECK(osr_last_error_line() == 10);
    CHECK(osr_last_error_column() == 6);
    CHECK(std::string(osr_last_error_message()).find("line 10, column 6") != std::string::npos);

    CHECK(parse(fixture("signed.osr"), h) == OSR_ERR_AXIOM);
    CHECK(std::string(osr_last_error_message()).find("mul-monotone") != std::string::npos);
    CHECK(osr_last_error_line() == 0);

    CHECK(parse("name: x\nelements: a b a\n", h) == OSR_ERR_PARSE);
    CHECK(parse("name: x\nelements: a\nle: discrete\nzero: b\n", h) == OSR_ERR_LABEL);
    CHECK(osr_last_error_line() == 4);
}

TEST_CASE("null arguments")
{
    Handle h;
    CHECK(osr_semiring_parse(nullptr, 0, &h.ptr) == OSR_ERR_INVALID_ARGUMENT);
    CHECK(osr_semiring_build(nullptr, &h.ptr) == OSR_ERR_INVALID_ARGUMENT);
    CHECK(osr_semiring_build("zmod:2", nullptr) == OSR_ERR_INVALID_ARGUMENT);
    char* out = nullptr;
    CHECK(osr_run(nullptr, OSR_CMD_CHECK, 0, &out) == OSR_ERR_INVALID_ARGUMENT);
    CHECK(osr_semiring_render(nullptr, &out) == OSR_ERR_INVALID_ARGUMENT);
    osr_counts counts{};
    CHECK(osr_counts_get(nullptr, &counts) == OSR_ERR_INVALID_ARGUMENT);
    CHECK(osr_semiring_size(nullptr) == 0);
    osr_semiring_free(nullptr);
    osr_string_free(nullptr);
}

TEST_CASE("running commands")
{
    Handle h;
    REQUIRE(osr_semiring_build("zmod:6", &h.ptr) == OSR_OK);
    char* out = nullptr;

    REQUIRE(osr_run(h.ptr, OSR_CMD_CHECK, OSR_FLAG_JSON, &out) == OSR_OK);
    const std::string report = take(out);
    CHECK(report.find("\"name\": \"Z/6\"") != std::string::npos);
    CHECK(report.find("timings") == std::string::npos);

    REQUIRE(osr_run(h.ptr, OSR_CMD_CHECK, OSR_FLAG_JSON | OSR_FLAG_TIMINGS, &out) == OSR_OK);
    CHECK(take(out).find("\"timings\"") != std::string::npos);

    REQUIRE(osr_run(h.ptr, OSR_CMD_DOT_IDL, 0, &out) == OSR_OK);
    CHECK(take(out).rfind("digraph idl {", 0) == 0);

    REQUIRE(osr_run(h.ptr, OSR_CMD_PRIMES, 0, &out) == OSR_OK);
    CHECK(take(out) == "{0,3} maximal\n{0,2,4} maximal\n");

    for (int c = OSR_CMD_VALIDATE; c <= OSR_CMD_DOT_SPEC; ++c) {
        CAPTURE(c);
        CHECK(osr_run(h.ptr, static_cast<osr_command>(c), 0, &out) == OSR_OK);
        CHECK_FALSE(take(out).empty());
    }
    CHECK(osr_run(h.ptr, static_cast<osr_command>(42), 0, &out) == OSR_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
}
