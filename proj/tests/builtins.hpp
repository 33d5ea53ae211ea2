/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osr/format.hpp"
#include "osr/semiring.hpp"

namespace testing {

struct Instance {
    std::string name;
    osr::SemiringPtr semiring;
};

/// The builtin instance family with at most max_size elements: every
/// named builder plus discretized and downset-lattice variants.
inline std::vector<Instance> builtins(std::size_t max_size)
{
    std::vector<Instance> out;
    auto add = [&](std::string name, osr::SemiringPtr s) {
        if (s->size() <= max_size) {
            out.push_back({std::move(name), std::move(s)});
        }
    };
    auto named = [&](const std::string& family, std::size_t from, std::size_t to) {
        for (std::size_t k = from; k <= to; ++k) {
            const std::string spec = family + ":" + std::to_string(k);
            add(spec, osr::build_named(spec));
        }
    };
    named("zmod", 1, 8);
    named("chain", 1, 8);
    named("bool", 1, 3);
    named("truncnat", 1, 7);
    named("maxplus", 1, 6);
    named("dualq", 1, 8);

    add("discrete-chain:3", osr::discretize(*osr::build_chain_lattice(3)));
    add("discrete-truncnat:2", osr::discretize(*osr::build_truncated_naturals(2)));

    osr::Relation antichain2 = osr::Relation::identity(2);
    add("downsets:antichain-2", osr::build_dlat_from_poset(antichain2));
    osr::Relation vee = osr::Relation::identity(3);
    vee.set(0, 2);
    vee.set(1, 2);
    add("downsets:vee", osr::build_dlat_from_poset(vee));
    add("downsets:antichain-3", osr::build_dlat_from_poset(osr::Relation::identity(3)));
    return out;
}

} // namespace testing
