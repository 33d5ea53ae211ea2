/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "builtins.hpp"
#include "oracles.hpp"
#include "osr/error.hpp"
#include "osr/report.hpp"

using namespace osr;
using json = nlohmann::json;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle)
{
    std::size_t count = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        if (text.substr(start, end - start).find(needle) != std::string::npos) {
            ++count;
        }
        start = end + 1;
    }
    return count;
}

} // namespace

TEST_CASE("check names")
{
    const auto& names = check_names();
    REQUIRE(names.size() == 14);
    CHECK(names.front() == "idl-quantale-axioms");
    CHECK(names.back() == "spec-sober");
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}

TEST_CASE("every builtin passes every check")
{
    for (const auto& inst : testing::builtins(8)) {
        CAPTURE(inst.name);
        const auto& a = *inst.semiring;
        const auto report = run_checks(inst.semiring);
        CHECK(report.all_pass());
        REQUIRE(report.verdicts.size() == check_names().size());
        for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
            CHECK(report.verdicts[i].check == check_names()[i]);
            CHECK(report.verdicts[i].pass);
            CHECK(report.verdicts[i].witness.empty());
        }
        CHECK(report.counts.elements == a.size());
        CHECK(report.counts.ideals == oracle::ideals(a).size());
        CHECK(report.counts.radicals == oracle::radicals(a).size());
        CHECK(report.counts.primes == oracle::primes(a).size());
        CHECK(report.counts.maximal == oracle::maximal(a).size());
    }
}

TEST_CASE("check report rendering")
{
    const auto report = run_checks(build_zmod(6));
    const std::string once = render_json(report);
    CHECK(once == render_json(run_checks(build_zmod(6))));
    CHECK(once.back() == '\n');

    const auto doc = json::parse(once);
    CHECK(doc["name"] == "Z/6");
    CHECK(doc["counts"]["ideals"] == 4);
    CHECK(doc["counts"]["primes"] == 2);
    CHECK(doc["verdicts"].size() == 14);
    CHECK_FALSE(doc.contains("timings"));
    CHECK_FALSE(doc["verdicts"][0].contains("witness"));

    const auto timed = json::parse(render_json(report, true));
    CHECK(timed.contains("timings"));

    const std::string text = render_text(report);
    CHECK(text.rfind("Z/6: |A|=6 |Idl|=4 |Rad|=4 |Spec|=2 |Max|=2\n", 0) == 0);
    CHECK(count_lines_with(text, "pass ") == 14);
    CHECK(count_lines_with(text, "FAIL ") == 0);
}

TEST_CASE("failed verdicts carry a witness")
{
    CheckReport report;
    report.name = "x";
    report.verdicts = {{"idl-quantale-axioms", true, ""}, {"coherence", false, "sizes differ"}};
    CHECK_FALSE(report.all_pass());
    const auto doc = json::parse(render_json(report));
    CHECK(doc["verdicts"][1]["pass"] == false);
    CHECK(doc["verdicts"][1]["witness"] == "sizes differ");
    CHECK(render_text(report).find("FAIL coherence: sizes differ") != std::string::npos);
}

TEST_CASE("graph output")
{
    const auto idl = emit_dot(DotTarget::Idl, build_zmod(6));
    CHECK(idl.rfind("digraph idl {", 0) == 0);
    CHECK(count_lines_with(idl, "->") == 4);
    CHECK(count_lines_with(idl, "\";") == 8);

    const auto rad = emit_dot(DotTarget::Rad, build_zmod(4));
    CHECK(rad.find("\"{0,2}\" -> \"{0,1,2,3}\";") != std::string::npos);
    CHECK(count_lines_with(rad, "->") == 1);

    const auto spec = emit_dot(DotTarget::Spec, build_chain_lattice(3));
    CHECK(spec.rfind("digraph spec {", 0) == 0);
    CHECK(spec.find("\"{0,1}\" -> \"{0}\";") != std::string::npos);

    const auto empty = emit_dot(DotTarget::Spec, build_zmod(1));
    CHECK(count_lines_with(empty, "->") == 0);
}

TEST_CASE("listing commands")
{
    const std::vector<Command> commands = {Command::Validate, Command::Ideals,  Command::Radicals, Command::Primes,
                                           Command::Spec,     Command::Reflect, Command::Pt};
    for (const auto& inst : testing::builtins(6)) {
        for (Command c : commands) {
            CAPTURE(inst.name);
            CAPTURE(static_cast<int>(c));
            const auto text = render_command(c, inst.semiring, false);
            CHECK_FALSE(text.empty());
            const auto doc = json::parse(render_command(c, inst.semiring, true));
            CHECK(doc["name"] == inst.semiring->name());
        }
    }
    const auto primes = render_command(Command::Primes, build_chain_lattice(3), false);
    CHECK(primes == "{0}\n{0,1} maximal\n");
    const auto ideals = json::parse(render_command(Command::Ideals, build_zmod(4), true));
    REQUIRE(ideals["ideals"].size() == 3);
    CHECK(ideals["ideals"][0]["ideal"] == "{0}");
    CHECK(ideals["ideals"][0]["radical"] == false);
    CHECK(ideals["ideals"][1]["prime"] == true);
}
