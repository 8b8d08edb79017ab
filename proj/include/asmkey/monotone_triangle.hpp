#pragma once

#include <string>
#include <vector>

#include "asmkey/asm_matrix.hpp"

namespace asmkey {

/// A monotone triangle of order n: n left-aligned rows, row i holding i
/// entries, with rows strictly increasing, columns weakly increasing from
/// bottom to top, northwest-southeast diagonals weakly increasing from top
/// to bottom, and bottom row 1 2 ... n. Encodes the 1-positions of an ASM's
/// partial column-sum matrix.
class MonotoneTriangle {
public:
    static MonotoneTriangle from_rows(std::vector<std::vector<int>> rows);

    int order() const noexcept { return static_cast<int>(rows_.size()); }

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Row i, 1-based from the top.
    const std::vector<int>& row(int i) const
    {
        return rows_[static_cast<std::size_t>(i - 1)];
    }

    /// Entry in row i, column j (1-based, j <= i).
    int at(int i, int j) const
    {
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    /// Column j's values top to bottom, i.e. rows j..n. Weakly decreasing.
    std::vector<int> column(int j) const;

    friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
    friend auto operator<=>(const MonotoneTriangle&, const MonotoneTriangle&) = default;

private:
    explicit MonotoneTriangle(std::vector<std::vector<int>> rows)
        : rows_(std::move(rows)) {}

    std::vector<std::vector<int>> rows_;
};

/// Sequence e_1 ... e_n of nonnegative integers with e_i < i.
class InversionSequence {
public:
    explicit InversionSequence(std::vector<int> values);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const noexcept { return values_; }

    /// True iff the sequence avoids the pattern 10 (no later entry smaller).
    bool weakly_increasing() const;

    friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
    friend auto operator<=>(const InversionSequence&, const InversionSequence&) = default;

private:
    std::vector<int> values_;
};

/// Balanced word over {U, D} whose every prefix has at least as many Us as Ds.
class DyckWord {
public:
    static DyckWord from_string(std::string steps);

    int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }
    const std::string& steps() const noexcept { return steps_; }

    friend bool operator==(const DyckWord&, const DyckWord&) = default;
    friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

private:
    explicit DyckWord(std::string steps) : steps_(std::move(steps)) {}

    std::string steps_;
};

/// Row i of the result lists the columns whose partial sum over rows 1..i
/// equals 1.
MonotoneTriangle triangle_from_asm(const Asm& a);

/// Inverse of triangle_from_asm; the output is re-validated.
Asm asm_from_triangle(const MonotoneTriangle& t);

/// True iff each column's values form an interval of integers.
bool is_gapless(const MonotoneTriangle& t);

/// True iff no column holds more than two distinct values. Together with
/// gaplessness this forces column i's values into {i, i+1}.
bool max_two_values_per_column(const MonotoneTriangle& t);

/// A -1 with a witness: a column strictly between the -1 and the first 1 to
/// its west whose first nonzero entry below the -1's row is a +1. Such a -1
/// obstructs gaplessness.
struct BadMinusOne {
    Position minus_one;
    Position west_one; // first 1 west of the -1 in its row
    Position witness;  // topmost, then westmost witness
};

/// All bad -1s of the matrix, ordered by position.
std::vector<BadMinusOne> bad_minus_ones(const Asm& a);

/// The Catalan bijection on gapless triangles with at most two values per
/// column: e_i is one less than the multiplicity of the value n+1-i in
/// column n+1-i. The result is weakly increasing.
/// Throws not_in_bijection_domain if the triangle is outside the domain.
InversionSequence invseq_from_triangle(const MonotoneTriangle& t);

/// Inverse of invseq_from_triangle: column i holds the value i in its bottom
/// 1 + e_{n+1-i} rows and i+1 above. Throws contains_10 if e is not weakly
/// increasing.
MonotoneTriangle triangle_from_invseq(const InversionSequence& e);

/// Word encoding of the associated lattice path: with e_{n+1} = n, emit for
/// each i one U followed by e_{i+1} - e_i Ds. Bijective onto Dyck words of
/// semilength n. Throws contains_10 if e is not weakly increasing.
DyckWord dyck_from_invseq(const InversionSequence& e);

} // namespace asmkey
