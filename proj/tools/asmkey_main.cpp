// Command-line front end for the ASM key toolkit.
//
// Single-object commands (key, triangle, gapless, invseq, dyck) read one
// matrix from a file argument or standard input. Census commands (sweep,
// per-key, identity, fixtures check) run exhaustive enumeration and can
// check their results against the fixture tables shipped in data/tables.txt.
//
// Exit codes: 0 success, 1 fixture mismatch, 2 input or usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "asmkey/enumeration.hpp"
#include "asmkey/key_process.hpp"
#include "asmkey/monotone_triangle.hpp"
#include "asmkey/patterns.hpp"
#include "asmkey/text_io.hpp"

namespace {

using namespace asmkey;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        fail(errc::parse_error, "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Asm read_asm(const std::string& path)
{
    return parse_asm(read_input(path));
}

void print_position(std::ostream& os, Position p)
{
    os << '(' << p.row << ',' << p.col << ')';
}

int cmd_key(const std::string& input, bool trace)
{
    const Asm a = read_asm(input);
    if (!trace) {
        std::cout << format_permutation(sw_key(a)) << '\n';
        return 0;
    }
    const KeyTrace chain = key_trace(a);
    for (std::size_t s = 0; s < chain.states.size(); ++s) {
        std::cout << "step " << s << ":\n" << format_asm(chain.states[s]);
        if (s < chain.removals.size()) {
            const RemovalTrace& r = chain.removals[s];
            std::cout << "remove -1 at ";
            print_position(std::cout, r.minus_one);
            std::cout << ": ones";
            for (Position p : r.staircase) {
                std::cout << ' ';
                print_position(std::cout, p);
            }
            std::cout << " -> new";
            for (Position p : r.created) {
                std::cout << ' ';
                print_position(std::cout, p);
            }
            if (r.simple)
                std::cout << " [simple]";
            std::cout << '\n';
        }
    }
    std::cout << "key: " << format_permutation(*chain.states.back().to_permutation()) << '\n';
    return 0;
}

int cmd_triangle(const std::string& input)
{
    std::cout << format_triangle(triangle_from_asm(read_asm(input)));
    return 0;
}

int cmd_gapless(const std::string& input)
{
    const MonotoneTriangle t = triangle_from_asm(read_asm(input));
    std::cout << "gapless: " << (is_gapless(t) ? "yes" : "no") << '\n';
    return 0;
}

int cmd_invseq(const std::string& input)
{
    const MonotoneTriangle t = triangle_from_asm(read_asm(input));
    std::cout << format_inversion_sequence(invseq_from_triangle(t)) << '\n';
    return 0;
}

int cmd_dyck(const std::string& input)
{
    const MonotoneTriangle t = triangle_from_asm(read_asm(input));
    std::cout << dyck_from_invseq(invseq_from_triangle(t)).steps() << '\n';
    return 0;
}

AvoidMode parse_mode(const std::string& mode)
{
    if (mode == "key")
        return AvoidMode::key;
    if (mode == "classical")
        return AvoidMode::classical;
    fail(errc::parse_error, "unknown mode '" + mode + "' (expected key or classical)");
}

// Fills `expected` for records that have a fixture row with the same mode
// and pattern label.
void attach_expected(std::vector<ReportRecord>& records, const std::vector<CountTable>& tables)
{
    for (ReportRecord& rec : records)
        for (const CountTable& table : tables) {
            if (avoid_mode_name(table.mode) != rec.mode || table.patterns != rec.patterns)
                continue;
            if (rec.n >= 1 && rec.n <= static_cast<int>(table.counts.size()))
                rec.expected = table.counts[static_cast<std::size_t>(rec.n - 1)];
        }
}

int emit_records(const std::vector<ReportRecord>& records, const std::string& format)
{
    std::cout << render_records(records, format);
    for (const ReportRecord& rec : records)
        if (rec.mismatch())
            return 1;
    return 0;
}

std::vector<Permutation> all_permutations_of_size(int k)
{
    std::vector<int> images = Permutation::identity(k).images();
    std::vector<Permutation> perms;
    do
        perms.push_back(Permutation(images));
    while (std::next_permutation(images.begin(), images.end()));
    return perms;
}

int cmd_sweep(const std::vector<std::string>& set_args, int singles, int pairs, int min_n,
              int max_n, const std::string& mode_name, const std::string& format,
              const std::string& fixtures_path, int shards, bool allow_large)
{
    const AvoidMode mode = parse_mode(mode_name);

    std::vector<PatternSet> sets;
    for (const std::string& arg : set_args)
        sets.push_back(parse_pattern_set(arg));
    if (singles > 0)
        for (const Permutation& p : all_permutations_of_size(singles))
            sets.push_back(PatternSet({p}));
    if (pairs > 0) {
        const std::vector<Permutation> perms = all_permutations_of_size(pairs);
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = i + 1; j < perms.size(); ++j)
                sets.push_back(PatternSet({perms[i], perms[j]}));
    }
    if (sets.empty())
        fail(errc::unknown_pattern, "no pattern sets given (use --set, --singles or --pairs)");
    if (min_n < 1 || max_n < min_n)
        fail(errc::bad_size, "bad n range");

    std::vector<ReportRecord> records;
    for (int n = min_n; n <= max_n; ++n) {
        const std::vector<std::int64_t> counts = sweep_avoiders(n, sets, mode, shards, allow_large);
        for (std::size_t s = 0; s < sets.size(); ++s)
            records.push_back({avoid_mode_name(mode), pattern_set_label(sets[s]), n,
                               counts[s], std::nullopt});
    }
    if (!fixtures_path.empty())
        attach_expected(records, load_count_tables(fixtures_path));
    return emit_records(records, format);
}

int cmd_fixtures_check(const std::string& path, int max_n, const std::string& format, int shards,
                       bool allow_large)
{
    const std::vector<CountTable> tables = load_count_tables(path);
    if (tables.empty())
        fail(errc::parse_error, "fixture file '" + path + "' holds no rows");

    std::vector<ReportRecord> records;
    for (AvoidMode mode : {AvoidMode::key, AvoidMode::classical}) {
        int depth = 0;
        for (const CountTable& t : tables)
            if (t.mode == mode)
                depth = std::max(depth, static_cast<int>(t.counts.size()));
        depth = std::min(depth, max_n);
        for (int n = 1; n <= depth; ++n) {
            std::vector<const CountTable*> due;
            std::vector<PatternSet> sets;
            for (const CountTable& t : tables)
                if (t.mode == mode && n <= static_cast<int>(t.counts.size())) {
                    due.push_back(&t);
                    sets.push_back(parse_pattern_set(t.patterns));
                }
            if (sets.empty())
                continue;
            const std::vector<std::int64_t> counts =
                sweep_avoiders(n, sets, mode, shards, allow_large);
            for (std::size_t s = 0; s < sets.size(); ++s)
                records.push_back({avoid_mode_name(mode), due[s]->patterns, n, counts[s],
                                   due[s]->counts[static_cast<std::size_t>(n - 1)]});
        }
    }
    return emit_records(records, format);
}

int cmd_per_key(int n, const std::string& format, bool allow_large)
{
    const std::map<Permutation, std::int64_t> census = counts_by_key(n, allow_large);
    std::int64_t total = 0;
    bool all_match = true;

    nlohmann::json doc;
    doc["n"] = n;
    doc["records"] = nlohmann::json::array();

    std::string text;
    for (const auto& [perm, count] : census) {
        total += count;
        std::optional<std::int64_t> predicted;
        try {
            predicted = predicted_count_for_key(perm);
        } catch (const Error& e) {
            if (e.code() != errc::not_in_312_321_class)
                throw;
        }
        if (predicted && *predicted != count)
            all_match = false;
        if (format == "json") {
            nlohmann::json rec;
            rec["key"] = format_permutation(perm);
            rec["count"] = count;
            if (predicted) {
                rec["predicted"] = *predicted;
                rec["match"] = (*predicted == count);
            }
            doc["records"].push_back(std::move(rec));
        } else {
            text += format_permutation(perm) + "  count=" + std::to_string(count);
            if (predicted)
                text += "  predicted=" + std::to_string(*predicted)
                        + (*predicted == count ? "  match=yes" : "  match=NO");
            text += '\n';
        }
    }
    if (format == "json") {
        doc["total"] = total;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "n=" << n << '\n' << text << "total=" << total << '\n';
    }
    return all_match ? 0 : 1;
}

int cmd_identity(int n, const std::string& format)
{
    const CatalanIdentity id = catalan_identity_check(n);
    if (format == "json") {
        nlohmann::json doc;
        doc["n"] = n;
        doc["catalan"] = id.catalan_value;
        doc["by_key"] = id.sum_by_key;
        doc["by_compositions"] = id.sum_by_compositions;
        doc["holds"] = id.holds();
        doc["breakdown"] = nlohmann::json::array();
        for (const auto& [perm, count] : id.breakdown) {
            nlohmann::json rec;
            rec["key"] = format_permutation(perm);
            rec["count"] = count;
            doc["breakdown"].push_back(std::move(rec));
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "n=" << n << ": " << id.catalan_value << " = " << id.sum_by_key << " = "
                  << id.sum_by_compositions << (id.holds() ? "" : "  MISMATCH") << '\n';
        for (const auto& [perm, count] : id.breakdown) {
            std::cout << format_permutation(perm) << "  parts=";
            const Composition parts = composition_of(perm);
            for (std::size_t i = 0; i < parts.parts().size(); ++i)
                std::cout << (i ? "," : "") << parts.parts()[i];
            std::cout << "  asms=" << count << '\n';
        }
    }
    return id.holds() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"southwest keys, pattern avoidance and exhaustive census for "
                 "alternating sign matrices"};
    app.require_subcommand(1);

    std::string input = "-";
    bool trace = false;
    std::vector<std::string> set_args;
    int singles = 0, pairs = 0;
    int min_n = 1, max_n = 6;
    std::string mode = "key";
    std::string format = "text";
    std::string fixtures_path;
    int shards = 1;
    bool allow_large = false;
    int n_arg = 0;

    auto* key = app.add_subcommand("key", "print the southwest key of a matrix");
    key->add_option("input", input, "matrix file ('-' for stdin)");
    key->add_flag("--trace", trace, "print every intermediate matrix and removal");

    auto* triangle = app.add_subcommand("triangle", "print the monotone triangle of a matrix");
    triangle->add_option("input", input, "matrix file ('-' for stdin)");

    auto* gapless = app.add_subcommand("gapless", "test whether the monotone triangle is gapless");
    gapless->add_option("input", input, "matrix file ('-' for stdin)");

    auto* invseq = app.add_subcommand(
        "invseq", "print the inversion sequence of a matrix whose triangle is gapless "
                  "with at most two values per column");
    invseq->add_option("input", input, "matrix file ('-' for stdin)");

    auto* dyck = app.add_subcommand("dyck", "print the Dyck word of such a matrix");
    dyck->add_option("input", input, "matrix file ('-' for stdin)");

    auto* sweep = app.add_subcommand("sweep", "count avoiders for pattern sets over a range of n");
    sweep->add_option("--set", set_args,
                      "pattern set: comma-separated compact patterns, e.g. 312,321 (repeatable)");
    sweep->add_option("--singles", singles, "add every single pattern of this size");
    sweep->add_option("--pairs", pairs, "add every pair of patterns of this size");
    sweep->add_option("--min-n", min_n, "smallest matrix size (default 1)");
    sweep->add_option("--max-n", max_n, "largest matrix size (default 6)");
    sweep->add_option("--mode", mode, "key or classical (default key)");
    sweep->add_option("--format", format, "text, json or csv (default text)");
    sweep->add_option("--fixtures", fixtures_path, "compare counts against this fixture file");
    sweep->add_option("--shards", shards, "worker threads for the census (default 1)");
    sweep->add_flag("--allow-large", allow_large, "lift the n <= 7 guard to n <= 8");

    auto* per_key = app.add_subcommand("per-key",
                                       "count matrices by key and compare against the "
                                       "Catalan-product prediction");
    per_key->add_option("--n", n_arg, "matrix size")->required();
    per_key->add_option("--format", format, "text or json (default text)");
    per_key->add_flag("--allow-large", allow_large, "lift the n <= 7 guard to n <= 8");

    auto* identity = app.add_subcommand("identity",
                                        "evaluate the Catalan identity: C_n as a sum of "
                                        "Catalan products over keys and over compositions");
    identity->add_option("--n", n_arg, "size, up to 14")->required();
    identity->add_option("--format", format, "text or json (default text)");

    auto* fixtures = app.add_subcommand("fixtures", "golden fixture operations");
    fixtures->require_subcommand(1);
    auto* check = fixtures->add_subcommand("check", "regenerate every fixture row and diff");
    check->add_option("--file", fixtures_path, "fixture file (default data/tables.txt)");
    check->add_option("--max-n", max_n, "cap the checked sizes (default: full rows)");
    check->add_option("--format", format, "text, json or csv (default text)");
    check->add_option("--shards", shards, "worker threads for the census (default 1)");
    check->add_flag("--allow-large", allow_large, "lift the n <= 7 guard to n <= 8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*key)
            return cmd_key(input, trace);
        if (*triangle)
            return cmd_triangle(input);
        if (*gapless)
            return cmd_gapless(input);
        if (*invseq)
            return cmd_invseq(input);
        if (*dyck)
            return cmd_dyck(input);
        if (*sweep)
            return cmd_sweep(set_args, singles, pairs, min_n, max_n, mode, format, fixtures_path,
                             shards, allow_large);
        if (*per_key)
            return cmd_per_key(n_arg, format, allow_large);
        if (*identity)
            return cmd_identity(n_arg, format);
        if (*check) {
            if (fixtures_path.empty())
                fixtures_path = "data/tables.txt";
            if (!check->count("--max-n"))
                max_n = 8;
            return cmd_fixtures_check(fixtures_path, max_n, format, shards, allow_large);
        }
    } catch (const asmkey::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
