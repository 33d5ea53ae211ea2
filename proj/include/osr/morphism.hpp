/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "osr/semiring.hpp"

namespace osr {

/// Outcome of exhaustive checks of each law over all elements or pairs.
struct MorphismFlags {
    bool monotone = false;
    bool zero_subzero = false;  // f(0) <= 0
    bool zero_strict = false;   // f(0) = 0
    bool unit_strict = false;   // f(1) = 1
    bool unit_subunit = false;  // f(1) <= 1
    bool subadditive = false;   // f(x+y) <= f(x)+f(y)
    bool additive = false;      // f(x+y) = f(x)+f(y)
    bool multiplicative = false;
    bool submultiplicative = false;

    bool subadditive_morphism() const
    {
        return monotone && zero_subzero && unit_strict && subadditive && multiplicative;
    }
    bool homomorphism() const { return subadditive_morphism() && zero_strict && additive; }
    bool subadditive_submultiplicative() const
    {
        return monotone && zero_subzero && unit_subunit && subadditive && submultiplicative;
    }

    friend bool operator==(const MorphismFlags&, const MorphismFlags&) = default;
};

struct MorphismTable {
    SemiringPtr source;
    SemiringPtr target;
    std::vector<Index> values;
    MorphismFlags flags;

    Index operator()(Index x) const { return values[x]; }
    /// f^{-1}(0): the ideal-side view of a map into 2.
    Subset kernel() const;
};

/// Selects the zero axiom used while enumerating. `strict_zero` replaces
/// f(0) <= 0 by f(0) = 0.
struct MorphismOptions {
    bool strict_zero = false;
};

/// Largest |B|^|A| the enumerators accept.
inline constexpr std::size_t max_enumeration = std::size_t{1} << 24;

/// Computes every flag exhaustively. Throws InvalidArgument if a value is
/// out of range or the table has the wrong length.
MorphismTable classify(std::vector<Index> values, SemiringPtr source, SemiringPtr target);

/// All subadditive morphisms A -> B, lexicographic by value table.
std::vector<MorphismTable> enumerate_subadditive(const SemiringPtr& a, const SemiringPtr& b,
                                                 MorphismOptions options = {});
/// All subadditive and submultiplicative morphisms A -> B.
std::vector<MorphismTable> enumerate_sub_submul(const SemiringPtr& a, const SemiringPtr& b,
                                                MorphismOptions options = {});

struct RemarkReport {
    bool target_discrete = false;        // condition (1)
    bool source_zero_least_target_join = false;  // condition (2)
    std::size_t subadditive_count = 0;
    std::size_t homomorphism_count = 0;
};

/// Evaluates both sufficient conditions for "subadditive implies
/// homomorphism" and, when either holds, confirms it on every enumerated map.
/// Throws RemarkViolation with the offending table.
RemarkReport check_remark_conditions(const SemiringPtr& a, const SemiringPtr& b);

/// g ∘ f, reclassified from scratch. Throws EndpointMismatch.
MorphismTable compose(const MorphismTable& f, const MorphismTable& g);

MorphismTable identity_morphism(const SemiringPtr& a);

/// The two-element chain 2 = ({0,1}, <=, 0, 1, join, meet), shared instance.
const SemiringPtr& two();

/// "[v0 v1 ...]" with target labels.
std::string describe_values(const MorphismTable& f);

} // namespace osr
