#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmkey/enumeration.hpp"
#include "asmkey/key_process.hpp"
#include "asmkey/monotone_triangle.hpp"

namespace asmkey {

// Matrices print with right-aligned width-2 cells so -1 columns line up.
std::string format_asm(const Asm& a);

// Space-separated one-line notation, e.g. "3 4 5 1 2".
std::string format_permutation(const Permutation& p);

std::string format_triangle(const MonotoneTriangle& t);
std::string format_inversion_sequence(const InversionSequence& e);

/// Parses one matrix: one row per line, whitespace-separated entries.
/// Throws parse_error with line information for malformed input; validation
/// errors from Asm::from_entries pass through with position information.
Asm parse_asm(std::string_view text);

/// Parses a multi-matrix file: matrices separated by blank lines.
std::vector<Asm> parse_asms(std::string_view text);

/// Accepts compact digit form ("312", sizes <= 9), comma form ("3,1,2",
/// required beyond size 9) and space-separated form ("3 1 2").
Permutation parse_permutation(std::string_view text);

/// A comma-separated list of compact patterns ("312,321"); if the tokens do
/// not all parse as compact patterns the whole argument is read as a single
/// permutation in comma form.
PatternSet parse_pattern_set(std::string_view text);

/// Compact display label, e.g. "312,321".
std::string pattern_set_label(const PatternSet& set);

/// Fixture file: one row per line, `<mode> <patterns> : <counts> : <tag>`,
/// `#` comments and blank lines ignored.
std::vector<CountTable> parse_count_tables(std::istream& in);
std::vector<CountTable> load_count_tables(const std::string& path);

/// One sweep result, optionally paired with the expected fixture value.
struct ReportRecord {
    std::string mode;
    std::string patterns;
    int n = 0;
    std::int64_t count = 0;
    std::optional<std::int64_t> expected;

    bool match() const { return expected.has_value() && *expected == count; }
    bool mismatch() const { return expected.has_value() && *expected != count; }
};

std::string render_text(const std::vector<ReportRecord>& records);
std::string render_csv(const std::vector<ReportRecord>& records);
std::string render_json(const std::vector<ReportRecord>& records);

/// Renders in the named format: "text", "csv" or "json".
std::string render_records(const std::vector<ReportRecord>& records,
                           const std::string& format);

} // namespace asmkey
