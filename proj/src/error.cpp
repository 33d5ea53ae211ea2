/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/error.hpp"

#include <algorithm>

namespace osr {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::LabelError: return "LabelError";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAQuantale: return "NotAQuantale";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotSubadditive: return "NotSubadditive";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::MissingSection: return "MissingSection";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::RemarkViolation: return "RemarkViolation";
    case ErrorKind::UniversalityFailure: return "UniversalityFailure";
    case ErrorKind::PresentationViolation: return "PresentationViolation";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::HomeoFailure: return "HomeoFailure";
    case ErrorKind::IsoFailure: return "IsoFailure";
    case ErrorKind::CorrespondenceFailure: return "CorrespondenceFailure";
    case ErrorKind::NotSober: return "NotSober";
    }
    return "Unknown";
}

bool is_verification_failure(ErrorKind kind) noexcept
{
    return kind >= ErrorKind::InternalMismatch;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

namespace {

std::string summarize(const std::vector<Violation>& violations)
{
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v.axiom + " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            out += (i ? ", " : "") + v.witness[i];
        }
        out += ")";
    }
    return out;
}

} // namespace

AxiomViolation::AxiomViolation(std::vector<Violation> violations)
    : Error(ErrorKind::AxiomViolation, summarize(violations)), violations_(std::move(violations))
{
}

bool AxiomViolation::violates(std::string_view axiom) const noexcept
{
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

} // namespace osr
