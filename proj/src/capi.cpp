/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/osr.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "osr/error.hpp"
#include "osr/format.hpp"
#include "osr/ideals.hpp"
#include "osr/radical.hpp"
#include "osr/report.hpp"
#include "osr/spectrum.hpp"

struct osr_semiring {
    osr::SemiringPtr semiring;
};

namespace {

struct LastError {
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

thread_local LastError last_error;

osr_status status_of(osr::ErrorKind kind)
{
    using K = osr::ErrorKind;
    switch (kind) {
    case K::ParseError:
    case K::DuplicateLabel:
    case K::MissingSection:
        return OSR_ERR_PARSE;
    case K::LabelError:
        return OSR_ERR_LABEL;
    case K::AxiomViolation:
        return OSR_ERR_AXIOM;
    case K::SizeLimit:
        return OSR_ERR_SIZE_LIMIT;
    case K::InternalMismatch:
        return OSR_ERR_INTERNAL;
    default:
        return osr::is_verification_failure(kind) ? OSR_ERR_VERIFICATION : OSR_ERR_INVALID_ARGUMENT;
    }
}

osr_status fail(osr_status status, std::string message, std::size_t line = 0, std::size_t column = 0)
{
    last_error = {std::move(message), line, column};
    return status;
}

/// Runs body, translating exceptions into a status and the last-error slot.
template <class F>
osr_status guarded(F&& body)
{
    try {
        last_error = {};
        return body();
    } catch (const osr::ParseError& e) {
        return fail(status_of(e.kind()), e.what(), e.line(), e.column());
    } catch (const osr::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(OSR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(OSR_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

osr_status null_argument()
{
    return fail(OSR_ERR_INVALID_ARGUMENT, "InvalidArgument: null pointer");
}

} // namespace

extern "C" {

const char* osr_version(void)
{
    return "0.1.0";
}

const char* osr_status_name(osr_status status)
{
    switch (status) {
    case OSR_OK:
        return "ok";
    case OSR_ERR_PARSE:
        return "parse error";
    case OSR_ERR_LABEL:
        return "label error";
    case OSR_ERR_AXIOM:
        return "axiom violation";
    case OSR_ERR_SIZE_LIMIT:
        return "size limit";
    case OSR_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case OSR_ERR_VERIFICATION:
        return "verification failure";
    case OSR_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* osr_last_error_message(void)
{
    return last_error.message.c_str();
}

size_t osr_last_error_line(void)
{
    return last_error.line;
}

size_t osr_last_error_column(void)
{
    return last_error.column;
}

osr_status osr_semiring_parse(const char* text, size_t length, osr_semiring** out)
{
    if (!text || !out) {
        return null_argument();
    }
    *out = nullptr;
    return guarded([&] {
        const auto doc = osr::parse(std::string_view(text, length));
        *out = new osr_semiring{osr::validate(doc.description)};
        return OSR_OK;
    });
}

osr_status osr_semiring_build(const char* builder_spec, osr_semiring** out)
{
    if (!builder_spec || !out) {
        return null_argument();
    }
    *out = nullptr;
    return guarded([&] {
        *out = new osr_semiring{osr::build_named(builder_spec)};
        return OSR_OK;
    });
}

void osr_semiring_free(osr_semiring* semiring)
{
    delete semiring;
}

size_t osr_semiring_size(const osr_semiring* semiring)
{
    return semiring ? semiring->semiring->size() : 0;
}

const char* osr_semiring_name(const osr_semiring* semiring)
{
    return semiring ? semiring->semiring->name().c_str() : "";
}

osr_status osr_semiring_render(const osr_semiring* semiring, char** out)
{
    if (!semiring || !out) {
        return null_argument();
    }
    *out = nullptr;
    return guarded([&] {
        *out = duplicate(osr::render(osr::describe(*semiring->semiring)));
        return OSR_OK;
    });
}

osr_status osr_counts_get(const osr_semiring* semiring, osr_counts* out)
{
    if (!semiring || !out) {
        return null_argument();
    }
    return guarded([&] {
        const auto idl = osr::IdealQuantale::compute(semiring->semiring);
        const auto rad = osr::RadicalFrame::compute(idl);
        *out = {semiring->semiring->size(), idl.size(), rad.size(), osr::enumerate_primes(idl).size(),
                osr::enumerate_maximal(idl).size()};
        return OSR_OK;
    });
}

osr_status osr_run(const osr_semiring* semiring, osr_command command, unsigned flags, char** out)
{
    if (!semiring || !out) {
        return null_argument();
    }
    *out = nullptr;
    const bool json = (flags & OSR_FLAG_JSON) != 0;
    const bool timings = (flags & OSR_FLAG_TIMINGS) != 0;
    const auto& a = semiring->semiring;
    return guarded([&] {
        switch (command) {
        case OSR_CMD_CHECK: {
            const auto report = osr::run_checks(a);
            *out = duplicate(json ? osr::render_json(report, timings) : osr::render_text(report, timings));
            if (!report.all_pass()) {
                return fail(OSR_ERR_VERIFICATION, "VerificationFailure: at least one verdict failed");
            }
            return OSR_OK;
        }
        case OSR_CMD_DOT_IDL:
            *out = duplicate(osr::emit_dot(osr::DotTarget::Idl, a));
            return OSR_OK;
        case OSR_CMD_DOT_RAD:
            *out = duplicate(osr::emit_dot(osr::DotTarget::Rad, a));
            return OSR_OK;
        case OSR_CMD_DOT_SPEC:
            *out = duplicate(osr::emit_dot(osr::DotTarget::Spec, a));
            return OSR_OK;
        case OSR_CMD_VALIDATE:
        case OSR_CMD_IDEALS:
        case OSR_CMD_RADICALS:
        case OSR_CMD_PRIMES:
        case OSR_CMD_SPEC:
        case OSR_CMD_REFLECT:
        case OSR_CMD_PT:
            *out = duplicate(osr::render_command(static_cast<osr::Command>(command), a, json));
            return OSR_OK;
        }
        return fail(OSR_ERR_INVALID_ARGUMENT, "InvalidArgument: unknown command");
    });
}

void osr_string_free(char* s)
{
    std::free(s);
}

} // extern "C"
