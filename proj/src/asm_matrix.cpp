#include "asmkey/asm_matrix.hpp"

#include <algorithm>
#include <string>

namespace asmkey {

namespace {

std::string pos_str(int row, int col)
{
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

} // namespace

Permutation::Permutation(std::vector<int> images)
    : images_(std::move(images))
{
    const int n = static_cast<int>(images_.size());
    if (n < 1)
        fail(errc::bad_permutation, "permutation must have size at least 1");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n)
            fail(errc::bad_permutation,
                 "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)]++)
            fail(errc::bad_permutation, "value " + std::to_string(v) + " repeated");
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 1)
        fail(errc::bad_size, "size must be at least 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i)
        inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const
{
    std::vector<int> rev(images_.rbegin(), images_.rend());
    return Permutation(std::move(rev));
}

void Asm::validate(int n, const std::vector<std::int8_t>& entries)
{
    auto at0 = [&](int r, int c) {
        return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n)
                       + static_cast<std::size_t>(c)];
    };

    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int v = at0(r, c);
            if (v < -1 || v > 1)
                fail(errc::bad_entry,
                     "entry " + std::to_string(v) + " at " + pos_str(r + 1, c + 1)
                         + " is not one of -1, 0, 1");
        }

    for (int r = 0; r < n; ++r) {
        int sum = 0;
        for (int c = 0; c < n; ++c)
            sum += at0(r, c);
        if (sum != 1)
            fail(errc::bad_line_sum,
                 "row " + std::to_string(r + 1) + " sums to " + std::to_string(sum));
    }
    for (int c = 0; c < n; ++c) {
        int sum = 0;
        for (int r = 0; r < n; ++r)
            sum += at0(r, c);
        if (sum != 1)
            fail(errc::bad_line_sum,
                 "column " + std::to_string(c + 1) + " sums to " + std::to_string(sum));
    }

    // Nonzeros of each line must read +1, -1, +1, ..., +1.
    auto check_line = [&](bool is_row, int index) {
        int prev = 0;
        for (int k = 0; k < n; ++k) {
            const int v = is_row ? at0(index, k) : at0(k, index);
            if (v == 0)
                continue;
            if (prev == 0 && v == -1)
                fail(errc::bad_alternation,
                     std::string(is_row ? "row " : "column ") + std::to_string(index + 1)
                         + " starts with -1");
            if (prev == v)
                fail(errc::bad_alternation,
                     std::string(is_row ? "row " : "column ") + std::to_string(index + 1)
                         + " has consecutive nonzeros of equal sign");
            prev = v;
        }
        if (prev == -1)
            fail(errc::bad_alternation,
                 std::string(is_row ? "row " : "column ") + std::to_string(index + 1)
                     + " ends with -1");
    };
    for (int r = 0; r < n; ++r)
        check_line(true, r);
    for (int c = 0; c < n; ++c)
        check_line(false, c);
}

Asm Asm::from_entries(const std::vector<std::vector<int>>& rows)
{
    const int n = static_cast<int>(rows.size());
    if (n < 1)
        fail(errc::bad_size, "matrix must have size at least 1");
    std::vector<std::int8_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            fail(errc::bad_size,
                 "matrix is not square: row of length " + std::to_string(row.size())
                     + " in a " + std::to_string(n) + "-row matrix");
        for (int v : row)
            flat.push_back(static_cast<std::int8_t>(v));
    }
    validate(n, flat);
    return Asm(n, std::move(flat));
}

Asm Asm::from_permutation(const Permutation& p)
{
    const int n = p.size();
    std::vector<std::int8_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        flat[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n)
             + static_cast<std::size_t>(p(i) - 1)] = 1;
    return Asm(n, std::move(flat));
}

std::optional<Permutation> Asm::to_permutation() const
{
    std::vector<int> images(static_cast<std::size_t>(n_), 0);
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c) {
            const int v = at(r, c);
            if (v == -1)
                return std::nullopt;
            if (v == 1)
                images[static_cast<std::size_t>(r - 1)] = c;
        }
    return Permutation(std::move(images));
}

std::vector<Position> Asm::positions_of(int value) const
{
    std::vector<Position> out;
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (at(r, c) == value)
                out.push_back({r, c});
    return out;
}

int Asm::minus_count() const
{
    int k = 0;
    for (std::int8_t v : entries_)
        k += (v == -1);
    return k;
}

std::vector<std::vector<int>> Asm::entries() const
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_),
                                       std::vector<int>(static_cast<std::size_t>(n_)));
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c)
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = at(r, c);
    return rows;
}

Asm direct_sum(const Asm& a, const Asm& b)
{
    const int na = a.size(), nb = b.size(), n = na + nb;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int r = 1; r <= na; ++r)
        for (int c = 1; c <= na; ++c)
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = a.at(r, c);
    for (int r = 1; r <= nb; ++r)
        for (int c = 1; c <= nb; ++c)
            rows[static_cast<std::size_t>(na + r - 1)][static_cast<std::size_t>(na + c - 1)] =
                b.at(r, c);
    return Asm::from_entries(rows);
}

Permutation direct_sum(const Permutation& a, const Permutation& b)
{
    std::vector<int> images = a.images();
    for (int v : b.images())
        images.push_back(v + a.size());
    return Permutation(std::move(images));
}

Asm skew_sum(const Asm& a, const Asm& b)
{
    const int na = a.size(), nb = b.size(), n = na + nb;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int r = 1; r <= na; ++r)
        for (int c = 1; c <= na; ++c)
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(nb + c - 1)] =
                a.at(r, c);
    for (int r = 1; r <= nb; ++r)
        for (int c = 1; c <= nb; ++c)
            rows[static_cast<std::size_t>(na + r - 1)][static_cast<std::size_t>(c - 1)] =
                b.at(r, c);
    return Asm::from_entries(rows);
}

Permutation skew_sum(const Permutation& a, const Permutation& b)
{
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int v : a.images())
        images.push_back(v + b.size());
    for (int v : b.images())
        images.push_back(v);
    return Permutation(std::move(images));
}

Permutation w(int n)
{
    if (n < 1)
        fail(errc::bad_size, "w(n) requires n >= 1");
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 2; i <= n; ++i)
        images.push_back(i);
    images.push_back(1);
    return Permutation(std::move(images));
}

std::vector<Position> southwest_records(const Permutation& p)
{
    const int n = p.size();
    std::vector<Position> records;
    for (int i = 1; i <= n; ++i) {
        bool record = true;
        for (int j = i + 1; j <= n; ++j)
            if (p(j) < p(i)) {
                record = false;
                break;
            }
        if (record)
            records.push_back({i, p(i)});
    }
    std::sort(records.begin(), records.end(),
              [](const Position& a, const Position& b) { return a.col < b.col; });
    return records;
}

Asm reflect_antidiagonal(const Asm& a)
{
    const int n = a.size();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
                a.at(n + 1 - c, n + 1 - r);
    return Asm::from_entries(rows);
}

const char* errc_name(errc code)
{
    switch (code) {
    case errc::bad_size: return "bad_size";
    case errc::bad_entry: return "bad_entry";
    case errc::bad_line_sum: return "bad_line_sum";
    case errc::bad_alternation: return "bad_alternation";
    case errc::bad_permutation: return "bad_permutation";
    case errc::bad_triangle: return "bad_triangle";
    case errc::bad_inversion_sequence: return "bad_inversion_sequence";
    case errc::bad_dyck_word: return "bad_dyck_word";
    case errc::not_removable: return "not_removable";
    case errc::size_too_large: return "size_too_large";
    case errc::overflow: return "overflow";
    case errc::not_in_bijection_domain: return "not_in_bijection_domain";
    case errc::contains_10: return "contains_10";
    case errc::not_in_312_321_class: return "not_in_312_321_class";
    case errc::parse_error: return "parse_error";
    case errc::unknown_pattern: return "unknown_pattern";
    }
    return "unknown";
}

} // namespace asmkey
