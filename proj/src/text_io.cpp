#include "asmkey/text_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace asmkey {

std::string format_asm(const Asm& a)
{
    std::string out;
    char cell[8];
    for (int r = 1; r <= a.size(); ++r) {
        for (int c = 1; c <= a.size(); ++c) {
            std::snprintf(cell, sizeof cell, "%2d", a.at(r, c));
            if (c > 1)
                out += ' ';
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string format_permutation(const Permutation& p)
{
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1)
            out += ' ';
        out += std::to_string(p(i));
    }
    return out;
}

std::string format_triangle(const MonotoneTriangle& t)
{
    std::string out;
    for (int i = 1; i <= t.order(); ++i) {
        for (std::size_t j = 0; j < t.row(i).size(); ++j) {
            if (j > 0)
                out += ' ';
            out += std::to_string(t.row(i)[j]);
        }
        out += '\n';
    }
    return out;
}

std::string format_inversion_sequence(const InversionSequence& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.values().size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(e.values()[i]);
    }
    return out;
}

namespace {

bool blank(std::string_view line)
{
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

int parse_int_token(std::string_view token, int line_no)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected integer, got '"
                                    + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

Asm asm_from_lines(const std::vector<std::pair<int, std::string_view>>& lines)
{
    std::vector<std::vector<int>> rows;
    for (const auto& [line_no, line] : lines) {
        std::vector<int> row;
        for (std::string_view token : split_ws(line))
            row.push_back(parse_int_token(token, line_no));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        fail(errc::parse_error, "no matrix rows found");
    const std::size_t width = rows.front().size();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != width)
            fail(errc::parse_error,
                 "line " + std::to_string(lines[r].first) + ": expected "
                     + std::to_string(width) + " entries, got " + std::to_string(rows[r].size()));
    if (rows.size() != width)
        fail(errc::parse_error, "matrix is not square: " + std::to_string(rows.size())
                                    + " rows of " + std::to_string(width) + " entries");
    return Asm::from_entries(rows);
}

} // namespace

Asm parse_asm(std::string_view text)
{
    std::vector<std::pair<int, std::string_view>> content;
    int line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (blank(line)) {
            if (!content.empty())
                break; // a blank line terminates the matrix
            continue;
        }
        content.emplace_back(line_no, line);
    }
    return asm_from_lines(content);
}

std::vector<Asm> parse_asms(std::string_view text)
{
    std::vector<Asm> out;
    std::vector<std::pair<int, std::string_view>> block;
    int line_no = 0;
    auto flush = [&] {
        if (!block.empty()) {
            out.push_back(asm_from_lines(block));
            block.clear();
        }
    };
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (blank(line))
            flush();
        else
            block.emplace_back(line_no, line);
    }
    flush();
    return out;
}

namespace {

std::optional<Permutation> try_compact_permutation(std::string_view token)
{
    if (token.size() < 2)
        return std::nullopt;
    std::vector<int> images;
    for (char c : token) {
        if (c < '1' || c > '9')
            return std::nullopt;
        images.push_back(c - '0');
    }
    try {
        return Permutation(std::move(images));
    } catch (const Error&) {
        return std::nullopt;
    }
}

Permutation permutation_from_tokens(const std::vector<std::string_view>& tokens)
{
    std::vector<int> images;
    for (std::string_view t : tokens)
        images.push_back(parse_int_token(t, 1));
    return Permutation(std::move(images));
}

std::vector<std::string_view> split_on(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = s.find(sep, start);
        if (end == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Permutation parse_permutation(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        fail(errc::parse_error, "empty permutation");
    if (text.find(',') != std::string_view::npos) {
        std::vector<std::string_view> tokens;
        for (std::string_view t : split_on(text, ','))
            tokens.push_back(trim(t));
        return permutation_from_tokens(tokens);
    }
    const std::vector<std::string_view> tokens = split_ws(text);
    if (tokens.size() == 1) {
        if (auto compact = try_compact_permutation(tokens.front()))
            return *compact;
    }
    return permutation_from_tokens(tokens);
}

PatternSet parse_pattern_set(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        fail(errc::unknown_pattern, "empty pattern set");

    std::vector<Permutation> patterns;
    bool all_compact = true;
    for (std::string_view token : split_on(text, ',')) {
        token = trim(token);
        std::optional<Permutation> p = try_compact_permutation(token);
        if (!p && token.size() == 1 && token.front() == '1')
            p = Permutation({1});
        if (!p) {
            all_compact = false;
            break;
        }
        patterns.push_back(std::move(*p));
    }
    if (all_compact && !patterns.empty())
        return PatternSet(std::move(patterns));

    // Fall back to a single permutation written in comma form.
    try {
        return PatternSet({parse_permutation(text)});
    } catch (const Error& e) {
        fail(errc::unknown_pattern, "cannot parse pattern set '" + std::string(text)
                                        + "': " + e.what());
    }
}

std::string pattern_set_label(const PatternSet& set)
{
    std::string out;
    for (const Permutation& p : set.patterns()) {
        if (!out.empty())
            out += ',';
        bool compact = p.size() <= 9;
        if (compact)
            for (int i = 1; i <= p.size(); ++i)
                out += static_cast<char>('0' + p(i));
        else
            out += format_permutation(p);
    }
    return out;
}

std::vector<CountTable> parse_count_tables(std::istream& in)
{
    std::vector<CountTable> tables;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::string_view view = trim(line);
        if (view.empty())
            continue;

        const std::vector<std::string_view> fields = split_on(view, ':');
        if (fields.size() != 3)
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": expected '<mode> <patterns> : <counts> : <tag>'");

        const std::vector<std::string_view> head = split_ws(fields[0]);
        if (head.size() != 2)
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": expected '<mode> <patterns>' before ':'");

        CountTable table;
        if (head[0] == "key")
            table.mode = AvoidMode::key;
        else if (head[0] == "classical")
            table.mode = AvoidMode::classical;
        else
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": unknown mode '"
                                        + std::string(head[0]) + "'");
        table.patterns = std::string(head[1]);
        for (std::string_view token : split_ws(fields[1]))
            table.counts.push_back(parse_int_token(token, line_no));
        if (table.counts.empty())
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": no counts");
        table.tag = std::string(trim(fields[2]));
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<CountTable> load_count_tables(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(errc::parse_error, "cannot open fixture file '" + path + "'");
    return parse_count_tables(in);
}

std::string render_text(const std::vector<ReportRecord>& records)
{
    std::string out;
    for (const ReportRecord& r : records) {
        out += r.mode;
        out += " {";
        out += r.patterns;
        out += "} n=";
        out += std::to_string(r.n);
        out += " count=";
        out += std::to_string(r.count);
        if (r.expected) {
            out += " expected=";
            out += std::to_string(*r.expected);
            out += r.match() ? " match=yes" : " match=NO";
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const std::vector<ReportRecord>& records)
{
    std::string out = "mode,patterns,n,count,expected,match\n";
    for (const ReportRecord& r : records) {
        std::string patterns = r.patterns;
        for (char& c : patterns)
            if (c == ',')
                c = '+';
        out += r.mode;
        out += ',';
        out += patterns;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.count);
        out += ',';
        if (r.expected)
            out += std::to_string(*r.expected);
        out += ',';
        if (r.expected)
            out += r.match() ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<ReportRecord>& records)
{
    nlohmann::json doc;
    doc["records"] = nlohmann::json::array();
    for (const ReportRecord& r : records) {
        nlohmann::json rec;
        rec["mode"] = r.mode;
        rec["patterns"] = nlohmann::json::array();
        {
            std::string current;
            for (char c : r.patterns + std::string(",")) {
                if (c == ',') {
                    if (!current.empty())
                        rec["patterns"].push_back(current);
                    current.clear();
                } else {
                    current += c;
                }
            }
        }
        rec["n"] = r.n;
        rec["count"] = r.count;
        if (r.expected) {
            rec["expected"] = *r.expected;
            rec["match"] = r.match();
        }
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string render_records(const std::vector<ReportRecord>& records, const std::string& format)
{
    if (format == "text")
        return render_text(records);
    if (format == "csv")
        return render_csv(records);
    if (format == "json")
        return render_json(records);
    fail(errc::parse_error, "unknown format '" + format + "'");
}

} // namespace asmkey
