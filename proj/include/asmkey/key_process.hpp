#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "asmkey/asm_matrix.hpp"

namespace asmkey {

/// Record of one -1 removal. The affected 1s (the staircase) sit strictly
/// increasing in both row and column; the first shares its row with the
/// removed -1, the last shares its column. Each removal replaces the
/// staircase by the shifted sequence in `created`:
/// created[k] = (staircase[k+1].row, staircase[k].col).
struct RemovalTrace {
    Position minus_one;
    std::vector<Position> staircase;
    std::vector<Position> created;
    bool simple = false; // exactly two affected 1s, no inner corners
};

/// The -1 entries with no other -1 weakly to their southwest, ordered by
/// (row, col). Empty iff the matrix has no -1.
std::vector<Position> removable_positions(const Asm& a);

/// The undominated 1s weakly southwest of the removable -1 at m: those with
/// no other such 1 weakly to their northeast. Ordered top to bottom.
/// Throws not_removable if m is not a removable -1.
std::vector<Position> neighboring_ones(const Asm& a, Position m);

/// Removes the -1 at m, pushing the affected 1s toward the southwest.
/// The result has exactly one fewer +1 and one fewer -1, with all line
/// sums preserved; the returned matrix is fully re-validated.
std::pair<Asm, RemovalTrace> remove_minus_one(const Asm& a, Position m);

/// The southwest key: repeatedly remove a removable -1 until a permutation
/// matrix remains. Removal policy: largest row first, ties by smallest
/// column. The resulting key does not depend on the removal order.
Permutation sw_key(const Asm& a);

/// The full removal chain under the deterministic policy.
/// states.size() == removals.size() + 1; states.front() is the input and
/// states.back() the key's permutation matrix.
struct KeyTrace {
    std::vector<Asm> states;
    std::vector<RemovalTrace> removals;
};

KeyTrace key_trace(const Asm& a);

/// Number of n x n ASMs whose southwest key is `key`, by exhaustive
/// generation. Guard: n <= 8 (size_too_large beyond).
std::int64_t count_asms_with_key(int n, const Permutation& key);

} // namespace asmkey
