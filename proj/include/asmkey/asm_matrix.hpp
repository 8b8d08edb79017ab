#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "asmkey/error.hpp"

namespace asmkey {

/// 1-based matrix position, row 1 at the top, column 1 at the left.
struct Position {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Position&, const Position&) = default;
};

/// A permutation of {1, ..., n} in one-line notation. Its matrix has a 1 in
/// row i, column images[i-1]. Doubles as a pattern and as a key.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }

    /// sigma(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    Permutation reversed() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// An n x n alternating sign matrix: entries in {-1, 0, 1}, every row and
/// column sums to 1, and the nonzero entries of every line alternate in
/// sign, beginning and ending with +1. Immutable once constructed.
class Asm {
public:
    /// Validates all three defining conditions. Throws Error with code
    /// bad_size, bad_entry, bad_line_sum or bad_alternation.
    static Asm from_entries(const std::vector<std::vector<int>>& rows);

    static Asm from_permutation(const Permutation& p);

    int size() const noexcept { return n_; }

    /// Entry at 1-based (row, col).
    int at(int row, int col) const
    {
        return entries_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_)
                        + static_cast<std::size_t>(col - 1)];
    }

    int at(Position p) const { return at(p.row, p.col); }

    /// The underlying permutation if the matrix has no -1, empty otherwise.
    std::optional<Permutation> to_permutation() const;

    /// Positions holding the given value, ordered by (row, col).
    std::vector<Position> positions_of(int value) const;

    int minus_count() const;

    std::vector<std::vector<int>> entries() const;

    friend bool operator==(const Asm&, const Asm&) = default;
    friend auto operator<=>(const Asm&, const Asm&) = default;

private:
    Asm(int n, std::vector<std::int8_t> entries)
        : n_(n), entries_(std::move(entries)) {}

    static void validate(int n, const std::vector<std::int8_t>& entries);

    int n_ = 0;
    std::vector<std::int8_t> entries_;
};

/// Block-diagonal sum: a in the top-left corner, b in the bottom-right.
Asm direct_sum(const Asm& a, const Asm& b);
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// Block-antidiagonal sum: a in the top-right corner, b in the bottom-left.
Asm skew_sum(const Asm& a, const Asm& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// The permutation 2 3 ... n 1; w(1) = 1.
Permutation w(int n);

/// The 1 entries of p's matrix with no 1 strictly to their southwest
/// (right-to-left minima), ordered by increasing column.
std::vector<Position> southwest_records(const Permutation& p);

/// Reflection across the northeast-southwest diagonal:
/// out(i, j) = in(n+1-j, n+1-i). An involution on ASMs.
Asm reflect_antidiagonal(const Asm& a);

} // namespace asmkey
