/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <set>
#include <vector>

#include "osr/error.hpp"
#include "osr/lattice.hpp"

namespace osr {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;
    std::string_view text;  // comment and trailing blanks removed
};

bool is_blank(char c)
{
    return c == ' ' || c == '\t' || c == '\r';
}

std::vector<Token> tokenize(std::string_view text, std::size_t first_column)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_blank(text[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && !is_blank(text[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back({text.substr(start, i - start), first_column + start});
        }
    }
    return out;
}

constexpr std::array<std::string_view, 7> section_order = {"name", "elements", "le", "zero", "one", "add", "mul"};

class Parser {
public:
    explicit Parser(std::string_view text)
    {
        std::size_t number = 1;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            std::string_view line = text.substr(start, end - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            while (!line.empty() && is_blank(line.back())) {
                line.remove_suffix(1);
            }
            std::size_t lead = 0;
            while (lead < line.size() && is_blank(line[lead])) {
                ++lead;
            }
            if (lead < line.size()) {
                lines_.push_back({number, line});
            }
            ++number;
            start = end + 1;
        }
        eof_line_ = number - 1;  // the position just past the last newline
    }

    OsrDocument run()
    {
        OsrDocument doc;
        auto& d = doc.description;

        const auto name = section("name", doc);
        d.name = std::string(trim(name.value));

        const auto elements = section("elements", doc);
        std::set<std::string_view> seen;
        for (const auto& t : tokenize(elements.value, elements.value_column)) {
            if (!seen.insert(t.text).second) {
                throw ParseError(ErrorKind::DuplicateLabel, elements.line, t.column,
                                 "label '" + std::string(t.text) + "' listed twice");
            }
            d.elements.emplace_back(t.text);
        }
        if (d.elements.empty()) {
            throw ParseError(ErrorKind::ParseError, elements.line, elements.value_column, "no elements listed");
        }
        elements_ = &d.elements;

        const auto le = section("le", doc);
        const auto le_tokens = tokenize(le.value, le.value_column);
        if (le_tokens.size() == 1 && le_tokens[0].text == "discrete") {
            d.le = DiscreteOrder{};
        } else if (le_tokens.size() == 1 && le_tokens[0].text == "chain") {
            d.le = ChainOrder{};
        } else if (le_tokens.empty()) {
            LePairs pairs;
            while (pos_ < lines_.size() && !is_section_line(lines_[pos_])) {
                const Line& line = lines_[pos_++];
                const auto t = tokenize(line.text, 1);
                if (t.size() != 3 || t[1].text != "<=") {
                    throw ParseError(ErrorKind::ParseError, line.number, t.empty() ? 1 : t[0].column,
                                     "expected a pair 'a <= b'");
                }
                resolve(t[0], line.number);
                resolve(t[2], line.number);
                doc.spans["le[" + std::to_string(pairs.size()) + "]"] = {line.number, t[0].column};
                pairs.emplace_back(std::string(t[0].text), std::string(t[2].text));
            }
            d.le = std::move(pairs);
        } else {
            throw ParseError(ErrorKind::ParseError, le.line, le.value_column,
                             "expected 'discrete', 'chain' or pairs on the following lines");
        }

        d.zero = single_label(section("zero", doc));
        d.one = single_label(section("one", doc));
        d.add_table = table(section("add", doc));
        d.mul_table = table(section("mul", doc));

        if (pos_ < lines_.size()) {
            throw ParseError(ErrorKind::ParseError, lines_[pos_].number, 1, "unexpected content after the mul table");
        }
        return doc;
    }

private:
    struct Section {
        std::string_view key;
        std::size_t line;
        std::string_view value;
        std::size_t value_column;
    };

    static std::string_view trim(std::string_view s)
    {
        while (!s.empty() && is_blank(s.front())) {
            s.remove_prefix(1);
        }
        return s;
    }

    static std::optional<std::string_view> section_key(const Line& line)
    {
        const auto colon = line.text.find(':');
        if (colon == std::string_view::npos) {
            return std::nullopt;
        }
        const std::string_view key = trim(line.text.substr(0, colon));
        for (auto known : section_order) {
            if (key == known) {
                return key;
            }
        }
        return std::nullopt;
    }

    static bool is_section_line(const Line& line) { return section_key(line).has_value(); }

    Section section(std::string_view expected, OsrDocument& doc)
    {
        if (pos_ >= lines_.size()) {
            throw ParseError(ErrorKind::MissingSection, eof_line_, 1,
                             "missing section '" + std::string(expected) + "'");
        }
        const Line& line = lines_[pos_];
        const auto key = section_key(line);
        if (!key) {
            throw ParseError(ErrorKind::ParseError, line.number, 1,
                             "expected section '" + std::string(expected) + ":'");
        }
        if (*key != expected) {
            throw ParseError(ErrorKind::MissingSection, line.number, 1,
                             "missing section '" + std::string(expected) + "' before '" + std::string(*key) + "'");
        }
        ++pos_;
        const auto colon = line.text.find(':');
        const std::size_t key_column = line.text.find(expected) + 1;
        doc.spans[std::string(expected)] = {line.number, key_column};
        return {expected, line.number, line.text.substr(colon + 1), colon + 2};
    }

    void resolve(const Token& t, std::size_t line) const
    {
        for (const auto& e : *elements_) {
            if (e == t.text) {
                return;
            }
        }
        throw ParseError(ErrorKind::LabelError, line, t.column, "unknown label '" + std::string(t.text) + "'");
    }

    std::string single_label(const Section& s)
    {
        const auto t = tokenize(s.value, s.value_column);
        if (t.size() != 1) {
            throw ParseError(ErrorKind::ParseError, s.line, s.value_column,
                             "section '" + std::string(s.key) + "' takes exactly one label");
        }
        resolve(t[0], s.line);
        return std::string(t[0].text);
    }

    std::vector<std::vector<std::string>> table(const Section& s)
    {
        const std::size_t n = elements_->size();
        if (!tokenize(s.value, s.value_column).empty()) {
            throw ParseError(ErrorKind::ParseError, s.line, s.value_column,
                             "table rows start on the line after '" + std::string(s.key) + ":'");
        }
        std::vector<std::vector<std::string>> rows;
        while (rows.size() < n) {
            if (pos_ >= lines_.size() || is_section_line(lines_[pos_])) {
                const std::size_t line = pos_ < lines_.size() ? lines_[pos_].number : eof_line_;
                throw ParseError(ErrorKind::ParseError, line, 1,
                                 std::string(s.key) + " table has " + std::to_string(rows.size()) +
                                     " rows, expected " + std::to_string(n));
            }
            const Line& line = lines_[pos_++];
            const auto t = tokenize(line.text, 1);
            if (t.size() != n) {
                const std::size_t column = t.size() < n ? line.text.size() + 1 : t[n].column;
                throw ParseError(ErrorKind::ParseError, line.number, column,
                                 std::string(s.key) + " row " + std::to_string(rows.size() + 1) + " has " +
                                     std::to_string(t.size()) + " entries, expected " + std::to_string(n));
            }
            std::vector<std::string> row;
            for (const auto& cell : t) {
                resolve(cell, line.number);
                row.emplace_back(cell.text);
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t eof_line_ = 0;
    const std::vector<std::string>* elements_ = nullptr;
};

} // namespace

OsrDocument parse(std::string_view text)
{
    return Parser(text).run();
}

std::string render(const RawSemiringDescription& desc)
{
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? " " : "") + v[i];
        }
        return out;
    };
    std::string out = "name: " + desc.name + "\n";
    out += "elements: " + join(desc.elements) + "\n";
    if (std::holds_alternative<DiscreteOrder>(desc.le)) {
        out += "le: discrete\n";
    } else if (std::holds_alternative<ChainOrder>(desc.le)) {
        out += "le: chain\n";
    } else {
        out += "le:\n";
        for (const auto& [x, y] : std::get<LePairs>(desc.le)) {
            out += x + " <= " + y + "\n";
        }
    }
    out += "zero: " + desc.zero + "\n";
    out += "one: " + desc.one + "\n";
    out += "add:\n";
    for (const auto& row : desc.add_table) {
        out += join(row) + "\n";
    }
    out += "mul:\n";
    for (const auto& row : desc.mul_table) {
        out += join(row) + "\n";
    }
    return out;
}

SemiringPtr build_named(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::InvalidArgument, "builder spec '" + std::string(spec) + "' is not NAME:ARG");
    }
    const std::string_view name = spec.substr(0, colon);
    const std::string_view arg = spec.substr(colon + 1);
    constexpr std::array<std::string_view, 6> known = {"zmod", "chain", "bool", "truncnat", "maxplus", "dualq"};
    if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw Error(ErrorKind::InvalidArgument, "unknown builder '" + std::string(name) + "'");
    }
    std::size_t k = 0;
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
    if (ec == std::errc::result_out_of_range || (ec == std::errc{} && k > 64)) {
        throw Error(ErrorKind::SizeLimit, "builder argument " + std::string(arg) + " is too large");
    }
    if (ec != std::errc{} || end != arg.data() + arg.size() || arg.empty()) {
        throw Error(ErrorKind::InvalidArgument, "builder argument '" + std::string(arg) + "' is not a number");
    }
    if (name == "zmod") {
        return build_zmod(k);
    }
    if (name == "chain") {
        return build_chain_lattice(k);
    }
    if (name == "bool") {
        return build_boolean_ring(k);
    }
    if (name == "truncnat") {
        return build_truncated_naturals(k);
    }
    if (name == "maxplus") {
        return build_truncated_maxplus(k);
    }
    if (name == "dualq") {
        if (k == 0) {
            throw Error(ErrorKind::InvalidArgument, "dualq needs at least one element");
        }
        const auto q = order_dual(*build_from_quantale(chain_frame_quantale(k)));
        return make_semiring("dualq-" + std::to_string(k), q->labels(), q->order(), q->zero(), q->one(),
                             q->add_table(), q->mul_table());
    }
    throw Error(ErrorKind::InvalidArgument, "unknown builder '" + std::string(name) + "'");
}

} // namespace osr
