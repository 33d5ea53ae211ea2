/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "osr/semiring.hpp"

namespace osr {

struct SourceSpan {
    std::size_t line = 0;
    std::size_t column = 0;
};

/// A parsed `.osr` file. `spans` maps section names (and "le[i]" for pair
/// lines) to the position of their key.
struct OsrDocument {
    RawSemiringDescription description;
    std::map<std::string, SourceSpan> spans;
};

/// Parses the line-oriented `.osr` format:
///
///     name: Z4
///     elements: 0 1 2 3
///     le: discrete            # or: chain, or: lines "a <= b"
///     zero: 0
///     one: 1
///     add:
///     <n rows of n labels>
///     mul:
///     <n rows of n labels>
///
/// Throws ParseError (ErrorKind::ParseError, DuplicateLabel or
/// MissingSection) with a 1-based line and column. Labels are resolved but
/// the semiring laws are left to validate().
OsrDocument parse(std::string_view text);

/// Canonical text for a description; parse(render(d)).description == d.
std::string render(const RawSemiringDescription& desc);

/// Builds from "NAME:ARG": zmod:m, chain:k, bool:atoms, truncnat:cap,
/// maxplus:cap, dualq:k. Throws InvalidArgument.
SemiringPtr build_named(std::string_view spec);

} // namespace osr
