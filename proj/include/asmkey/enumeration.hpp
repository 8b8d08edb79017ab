#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asmkey/monotone_triangle.hpp"
#include "asmkey/patterns.hpp"

namespace asmkey {

/// Visits every order-n monotone triangle exactly once, built bottom-up by
/// interlacing backtracking. Deterministic order: candidate rows are tried
/// in increasing lexicographic order, so the top row varies fastest and the
/// first triangle visited is the one with row i = 1, 2, ..., i.
/// Guard: 1 <= n <= 8.
void for_each_triangle(int n, const std::function<void(const MonotoneTriangle&)>& visit);

/// for_each_triangle mapped through asm_from_triangle; every visited matrix
/// is validated.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);

/// Independent generation strategy: depth-first search over matrix rows,
/// keeping every row and column prefix sum in {0, 1}. Shares no code with
/// the triangle generator; used to cross-check it.
void for_each_asm_by_rows(int n, const std::function<void(const Asm&)>& visit);

std::int64_t count_triangles(int n);
std::int64_t count_asms_by_rows(int n);

enum class AvoidMode { key, classical };

const char* avoid_mode_name(AvoidMode mode);

/// Number of n x n ASMs avoiding every pattern in the set, in the given
/// mode. Guard: n <= 7, or n <= 8 with allow_large.
std::int64_t count_avoiders(int n, const PatternSet& set, AvoidMode mode,
                            bool allow_large = false);

/// Counts several pattern sets in one pass; each ASM's key is computed once
/// and reused across all sets. `shards` > 1 splits the generation tree by
/// its bottom rows across that many worker threads; exact integer sums make
/// the result independent of scheduling.
std::vector<std::int64_t> sweep_avoiders(int n, const std::vector<PatternSet>& sets,
                                         AvoidMode mode, int shards = 1,
                                         bool allow_large = false);

/// Key census: how many n x n ASMs have each permutation as their key.
/// Every size-n permutation appears (its own matrix is its key); counts sum
/// to the total ASM count. Ordered lexicographically by one-line notation.
std::map<Permutation, std::int64_t> counts_by_key(int n, bool allow_large = false);

/// Ordered tuple of parts; weak allows zero parts, strict requires all >= 1.
class Composition {
public:
    Composition(std::vector<int> parts, bool strict);

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool strict() const noexcept { return strict_; }
    int total() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    bool strict_;
};

/// The unique block sizes (m_1, ..., m_k) with p = w_{m_1} + ... + w_{m_k}
/// (direct sum). Defined exactly for permutations avoiding both 312 and 321;
/// throws not_in_312_321_class otherwise.
Composition composition_of(const Permutation& p);

/// Inverse of composition_of: the direct sum of w_{m_i}.
Permutation perm_from_composition(const std::vector<int>& parts);

/// Product of C_{m-1} over the blocks of p: the number of ASMs whose key
/// is p, for p avoiding 312 and 321.
std::int64_t predicted_count_for_key(const Permutation& p);

/// All weak (parts >= 0) compositions of total into k parts, lexicographic.
std::vector<Composition> weak_compositions(int total, int k);

/// All strict (parts >= 1) compositions of total into k parts, lexicographic.
std::vector<Composition> strict_compositions(int total, int k);

/// Exact nth Catalan number; guarded at n <= 30 to stay within 64 bits.
std::int64_t catalan(int n);

/// Both sides of the Catalan identity: C_n as a sum of Catalan products
/// over 312,321-avoiding keys, and as a sum over weak compositions.
struct CatalanIdentity {
    std::int64_t catalan_value = 0;       // C_n
    std::int64_t sum_by_key = 0;          // sum of predicted per-key counts
    std::int64_t sum_by_compositions = 0; // sum over weak compositions of C products
    std::vector<std::pair<Permutation, std::int64_t>> breakdown; // per key, lex order

    bool holds() const
    {
        return catalan_value == sum_by_key && catalan_value == sum_by_compositions;
    }
};

/// Evaluates the identity for 1 <= n <= 14.
CatalanIdentity catalan_identity_check(int n);

/// One row of a counts table: a pattern set, a mode, and the counts for
/// n = 1, 2, ... (tag carries a sequence label such as an OEIS id).
struct CountTable {
    AvoidMode mode = AvoidMode::key;
    std::string patterns;
    std::vector<std::int64_t> counts;
    std::string tag;
};

} // namespace asmkey
