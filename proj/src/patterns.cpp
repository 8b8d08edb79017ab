#include "asmkey/patterns.hpp"

#include <algorithm>

#include "asmkey/key_process.hpp"

namespace asmkey {

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns))
{
    if (patterns_.empty())
        fail(errc::bad_permutation, "pattern set must be non-empty");
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

namespace {

// Backtracking over candidate index subsequences, pruned by remaining length.
bool contains_from(const std::vector<int>& sigma, const std::vector<int>& pattern,
                   std::vector<int>& chosen, std::size_t start)
{
    const std::size_t k = chosen.size();
    if (k == pattern.size())
        return true;
    for (std::size_t i = start; i + (pattern.size() - k) <= sigma.size(); ++i) {
        bool consistent = true;
        for (std::size_t t = 0; t < k; ++t)
            if ((sigma[static_cast<std::size_t>(chosen[t])] < sigma[i])
                != (pattern[t] < pattern[k])) {
                consistent = false;
                break;
            }
        if (!consistent)
            continue;
        chosen.push_back(static_cast<int>(i));
        if (contains_from(sigma, pattern, chosen, i + 1))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool perm_contains(const Permutation& sigma, const Permutation& pattern)
{
    if (pattern.size() > sigma.size())
        return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.size()));
    return contains_from(sigma.images(), pattern.images(), chosen, 0);
}

bool perm_avoids_all(const Permutation& sigma, const PatternSet& set)
{
    for (const Permutation& p : set.patterns())
        if (perm_contains(sigma, p))
            return false;
    return true;
}

namespace {

// Choose +1 positions with strictly increasing rows whose columns follow the
// pattern's relative order. `points` is sorted by (row, col).
bool classical_from(const std::vector<Position>& points, const std::vector<int>& pattern,
                    std::vector<Position>& chosen, std::size_t start)
{
    const std::size_t k = chosen.size();
    if (k == pattern.size())
        return true;
    for (std::size_t i = start; i + (pattern.size() - k) <= points.size(); ++i) {
        const Position& cand = points[i];
        if (!chosen.empty() && cand.row <= chosen.back().row)
            continue;
        bool consistent = true;
        for (std::size_t t = 0; t < k; ++t)
            if ((chosen[t].col < cand.col) != (pattern[t] < pattern[k])) {
                consistent = false;
                break;
            }
        if (!consistent)
            continue;
        chosen.push_back(cand);
        if (classical_from(points, pattern, chosen, i + 1))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool classical_contains(const Asm& a, const Permutation& pattern)
{
    if (pattern.size() > a.size())
        return false;
    const std::vector<Position> ones = a.positions_of(1);
    std::vector<Position> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.size()));
    return classical_from(ones, pattern.images(), chosen, 0);
}

bool classical_avoids_all(const Asm& a, const PatternSet& set)
{
    for (const Permutation& p : set.patterns())
        if (classical_contains(a, p))
            return false;
    return true;
}

bool key_avoids(const Asm& a, const PatternSet& set)
{
    return perm_avoids_all(sw_key(a), set);
}

Permutation conjugate(const Permutation& p)
{
    return p.reversed().inverse().reversed();
}

} // namespace asmkey
