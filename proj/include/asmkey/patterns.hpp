#pragma once

#include <vector>

#include "asmkey/asm_matrix.hpp"

namespace asmkey {

/// A non-empty set of permutation patterns; duplicates collapse.
class PatternSet {
public:
    explicit PatternSet(std::vector<Permutation> patterns);

    const std::vector<Permutation>& patterns() const noexcept { return patterns_; }

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> patterns_; // sorted, deduplicated
};

/// True iff some subsequence of sigma is order-isomorphic to pattern.
bool perm_contains(const Permutation& sigma, const Permutation& pattern);

bool perm_avoids_all(const Permutation& sigma, const PatternSet& set);

/// Classical containment: -1s are treated as 0s and the pattern must appear
/// as a submatrix, i.e. some +1 entries in strictly increasing rows realize
/// the pattern's column order.
bool classical_contains(const Asm& a, const Permutation& pattern);

bool classical_avoids_all(const Asm& a, const PatternSet& set);

/// True iff the southwest key of a avoids every pattern in the set.
bool key_avoids(const Asm& a, const PatternSet& set);

/// ((p reversed) inverted) reversed: the pattern transform matching
/// antidiagonal reflection of the matrix. An involution.
Permutation conjugate(const Permutation& p);

} // namespace asmkey
