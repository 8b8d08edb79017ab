#include "asmkey/monotone_triangle.hpp"

#include <algorithm>
#include <string>

namespace asmkey {

MonotoneTriangle MonotoneTriangle::from_rows(std::vector<std::vector<int>> rows)
{
    const int n = static_cast<int>(rows.size());
    if (n < 1)
        fail(errc::bad_triangle, "triangle must have at least one row");

    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != i)
            fail(errc::bad_triangle, "row " + std::to_string(i) + " has "
                                         + std::to_string(row.size()) + " entries, expected "
                                         + std::to_string(i));
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1)
                fail(errc::bad_triangle, "entries must be positive");
            if (j > 0 && row[j] <= row[j - 1])
                fail(errc::bad_triangle,
                     "row " + std::to_string(i) + " is not strictly increasing");
        }
    }
    for (int i = 1; i < n; ++i) {
        const auto& upper = rows[static_cast<std::size_t>(i - 1)];
        const auto& lower = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) {
            if (lower[static_cast<std::size_t>(j)] > upper[static_cast<std::size_t>(j)])
                fail(errc::bad_triangle,
                     "column " + std::to_string(j + 1)
                         + " not weakly increasing from bottom to top");
            if (upper[static_cast<std::size_t>(j)] > lower[static_cast<std::size_t>(j + 1)])
                fail(errc::bad_triangle,
                     "diagonal through row " + std::to_string(i)
                         + " not weakly increasing from top to bottom");
        }
    }
    const auto& bottom = rows.back();
    for (int j = 1; j <= n; ++j)
        if (bottom[static_cast<std::size_t>(j - 1)] != j)
            fail(errc::bad_triangle, "bottom row must be 1 2 ... n");

    return MonotoneTriangle(std::move(rows));
}

std::vector<int> MonotoneTriangle::column(int j) const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(order() - j + 1));
    for (int i = j; i <= order(); ++i)
        out.push_back(at(i, j));
    return out;
}

InversionSequence::InversionSequence(std::vector<int> values)
    : values_(std::move(values))
{
    if (values_.empty())
        fail(errc::bad_inversion_sequence, "inversion sequence must be non-empty");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] < 0 || values_[i] > static_cast<int>(i))
            fail(errc::bad_inversion_sequence,
                 "e_" + std::to_string(i + 1) + " = " + std::to_string(values_[i])
                     + " violates 0 <= e_i < i");
}

bool InversionSequence::weakly_increasing() const
{
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] < values_[i - 1])
            return false;
    return true;
}

DyckWord DyckWord::from_string(std::string steps)
{
    if (steps.size() % 2 != 0)
        fail(errc::bad_dyck_word, "odd length");
    int height = 0;
    for (char c : steps) {
        if (c == 'U')
            ++height;
        else if (c == 'D')
            --height;
        else
            fail(errc::bad_dyck_word, std::string("bad step '") + c + "'");
        if (height < 0)
            fail(errc::bad_dyck_word, "prefix with more Ds than Us");
    }
    if (height != 0)
        fail(errc::bad_dyck_word, "unbalanced word");
    return DyckWord(std::move(steps));
}

MonotoneTriangle triangle_from_asm(const Asm& a)
{
    const int n = a.size();
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(i));
        for (int j = 1; j <= n; ++j) {
            colsum[static_cast<std::size_t>(j - 1)] += a.at(i, j);
            if (colsum[static_cast<std::size_t>(j - 1)] == 1)
                row.push_back(j);
        }
        rows.push_back(std::move(row));
    }
    return MonotoneTriangle::from_rows(std::move(rows));
}

Asm asm_from_triangle(const MonotoneTriangle& t)
{
    const int n = t.order();
    std::vector<std::vector<int>> entries(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> prev(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cur(static_cast<std::size_t>(n), 0);
        for (int v : t.row(i))
            cur[static_cast<std::size_t>(v - 1)] = 1;
        for (int j = 0; j < n; ++j)
            entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] =
                cur[static_cast<std::size_t>(j)] - prev[static_cast<std::size_t>(j)];
        prev = std::move(cur);
    }
    return Asm::from_entries(entries); // re-validates
}

bool is_gapless(const MonotoneTriangle& t)
{
    // Column values weakly decrease going down, so a gap is an adjacent
    // drop of two or more.
    for (int j = 1; j <= t.order(); ++j)
        for (int i = j; i < t.order(); ++i)
            if (t.at(i, j) - t.at(i + 1, j) >= 2)
                return false;
    return true;
}

bool max_two_values_per_column(const MonotoneTriangle& t)
{
    for (int j = 1; j <= t.order(); ++j) {
        int transitions = 0;
        for (int i = j; i < t.order(); ++i)
            transitions += (t.at(i, j) != t.at(i + 1, j));
        if (transitions > 1)
            return false;
    }
    return true;
}

std::vector<BadMinusOne> bad_minus_ones(const Asm& a)
{
    const int n = a.size();
    std::vector<BadMinusOne> out;
    for (const Position& m : a.positions_of(-1)) {
        // The first 1 to the west always exists: row nonzeros alternate.
        int west_col = 0;
        for (int c = m.col - 1; c >= 1; --c)
            if (a.at(m.row, c) == 1) {
                west_col = c;
                break;
            }
        Position best{0, 0};
        for (int jp = west_col + 1; jp < m.col; ++jp) {
            for (int r = m.row + 1; r <= n; ++r) {
                const int v = a.at(r, jp);
                if (v == 0)
                    continue;
                if (v == 1) {
                    const Position cand{r, jp};
                    if (best.row == 0 || cand.row < best.row
                        || (cand.row == best.row && cand.col < best.col))
                        best = cand;
                }
                break; // only the first nonzero below row m.row matters
            }
        }
        if (best.row != 0)
            out.push_back({m, {m.row, west_col}, best});
    }
    return out;
}

InversionSequence invseq_from_triangle(const MonotoneTriangle& t)
{
    if (!is_gapless(t))
        fail(errc::not_in_bijection_domain, "triangle is not gapless");
    if (!max_two_values_per_column(t))
        fail(errc::not_in_bijection_domain,
             "a column holds more than two distinct values");
    const int n = t.order();
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int col = n + 1 - i;
        int multiplicity = 0;
        for (int r = col; r <= n; ++r)
            multiplicity += (t.at(r, col) == col);
        e.push_back(multiplicity - 1);
    }
    return InversionSequence(std::move(e));
}

MonotoneTriangle triangle_from_invseq(const InversionSequence& e)
{
    if (!e.weakly_increasing())
        fail(errc::contains_10, "inversion sequence contains the pattern 10");
    const int n = e.size();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(i));
    for (int j = 1; j <= n; ++j) {
        const int reps = e.values()[static_cast<std::size_t>(n - j)]; // e_{n+1-j}
        for (int r = j; r <= n; ++r)
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] =
                (r >= n - reps) ? j : j + 1;
    }
    return MonotoneTriangle::from_rows(std::move(rows));
}

DyckWord dyck_from_invseq(const InversionSequence& e)
{
    if (!e.weakly_increasing())
        fail(errc::contains_10, "inversion sequence contains the pattern 10");
    const int n = e.size();
    std::string steps;
    steps.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int cur = e.values()[static_cast<std::size_t>(i - 1)];
        const int next = (i < n) ? e.values()[static_cast<std::size_t>(i)] : n;
        steps.push_back('U');
        steps.append(static_cast<std::size_t>(next - cur), 'D');
    }
    return DyckWord::from_string(std::move(steps));
}

} // namespace asmkey
