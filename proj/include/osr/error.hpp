/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osr {

enum class ErrorKind {
    // input errors
    AxiomViolation,
    LabelError,
    SizeLimit,
    InvalidArgument,
    NotAPartialOrder,
    NotALattice,
    NotAQuantale,
    NotIntegral,
    NotSubadditive,
    EndpointMismatch,
    OwnerMismatch,
    ParseError,
    DuplicateLabel,
    MissingSection,
    // a theorem check found a counterexample
    InternalMismatch,
    RemarkViolation,
    UniversalityFailure,
    PresentationViolation,
    CrossCheckFailure,
    LemmaViolation,
    EquivalenceViolation,
    HomeoFailure,
    IsoFailure,
    CorrespondenceFailure,
    NotSober,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds that report a failed theorem rather than bad input.
bool is_verification_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// One failed semiring law with the concrete elements that break it.
struct Violation {
    std::string axiom;
    std::vector<std::string> witness;
};

class AxiomViolation : public Error {
public:
    explicit AxiomViolation(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }
    bool violates(std::string_view axiom) const noexcept;

private:
    std::vector<Violation> violations_;
};

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace osr
