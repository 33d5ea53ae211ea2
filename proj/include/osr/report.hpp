/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "osr/semiring.hpp"

namespace osr {

struct Verdict {
    std::string check;
    bool pass = false;
    std::string witness;  // empty on success
};

struct CheckCounts {
    std::size_t elements = 0;
    std::size_t ideals = 0;
    std::size_t radicals = 0;
    std::size_t primes = 0;
    std::size_t maximal = 0;
};

struct CheckReport {
    std::string name;
    CheckCounts counts;
    std::vector<Verdict> verdicts;
    std::vector<std::pair<std::string, double>> timings;  // phase, milliseconds

    bool all_pass() const;
};

/// Names of the verdicts produced by run_checks, in report order.
const std::vector<std::string>& check_names();

/// Runs every theorem check on one instance. Verification failures become
/// failed verdicts carrying the witness; input errors propagate.
CheckReport run_checks(const SemiringPtr& a);

/// Byte-stable JSON. Timings are included only on request.
std::string render_json(const CheckReport& report, bool with_timings = false);
std::string render_text(const CheckReport& report, bool with_timings = false);

enum class DotTarget { Idl, Rad, Spec };

/// Hasse diagram of Idl(A) or Rad(A) (cover edges, bottom to top) or the
/// specialization order of Spec(A). Nodes are named by canonical label.
std::string emit_dot(DotTarget target, const SemiringPtr& a);

enum class Command { Validate, Ideals, Radicals, Primes, Spec, Reflect, Pt };

/// Output of the listing subcommands, as text or JSON.
std::string render_command(Command command, const SemiringPtr& a, bool json);

} // namespace osr
