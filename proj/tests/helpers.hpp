#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here stays independent of the library code paths it checks.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "asmkey/asm_matrix.hpp"

namespace testutil {

using Grid = std::vector<std::vector<int>>;

// 5x5 matrix with two -1s whose key is 3 4 5 1 2; its removal chain is the
// worked example used throughout the suites.
inline const Grid kSample5{{0, 0, 1, 0, 0},
                           {0, 1, -1, 1, 0},
                           {1, 0, 0, -1, 1},
                           {0, 0, 1, 0, 0},
                           {0, 0, 0, 1, 0}};

// State of kSample5 after removing the -1 at (3,4).
inline const Grid kSample5Mid{{0, 0, 1, 0, 0},
                              {0, 1, -1, 1, 0},
                              {0, 0, 0, 0, 1},
                              {1, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0}};

// 5x5 example whose triangle has a gap; key 4 5 2 3 1.
inline const Grid kGappy5{{0, 0, 0, 1, 0},
                          {0, 1, 0, -1, 1},
                          {0, 0, 0, 1, 0},
                          {1, -1, 1, 0, 0},
                          {0, 1, 0, 0, 0}};

// 5x5 example with a gapless triangle; key 2 3 4 5 1.
inline const Grid kGapless5{{0, 1, 0, 0, 0},
                            {1, -1, 1, 0, 0},
                            {0, 0, 0, 1, 0},
                            {0, 1, 0, -1, 1},
                            {0, 0, 0, 1, 0}};

// The unique 3x3 matrix with a -1.
inline const Grid kCentral3{{0, 1, 0}, {1, -1, 1}, {0, 1, 0}};

inline asmkey::Permutation perm(std::vector<int> images)
{
    return asmkey::Permutation(std::move(images));
}

inline asmkey::Asm make_asm(const Grid& grid)
{
    return asmkey::Asm::from_entries(grid);
}

inline void for_each_permutation(int n, const std::function<void(const asmkey::Permutation&)>& f)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = i + 1;
    do
        f(asmkey::Permutation(images));
    while (std::next_permutation(images.begin(), images.end()));
}

inline std::vector<asmkey::Permutation> all_permutations(int n)
{
    std::vector<asmkey::Permutation> out;
    for_each_permutation(n, [&](const asmkey::Permutation& p) { out.push_back(p); });
    return out;
}

// Oracle: pattern containment by trying every index subset.
inline bool brute_contains(const asmkey::Permutation& sigma, const asmkey::Permutation& pattern)
{
    const int n = sigma.size(), k = pattern.size();
    if (k > n)
        return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
        if (pos == k) {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    if ((sigma(idx[static_cast<std::size_t>(a)]) < sigma(idx[static_cast<std::size_t>(b)]))
                        != (pattern(a + 1) < pattern(b + 1)))
                        return false;
            return true;
        }
        for (int i = start; i <= n; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            if (rec(pos + 1, i + 1))
                return true;
        }
        return false;
    };
    return rec(0, 1);
}

// Oracle: Def-style ASM test via prefix sums, written independently of
// Asm::from_entries. All row/column prefix sums in {0,1}, full sums 1.
inline bool prefix_sum_asm(const Grid& grid)
{
    const int n = static_cast<int>(grid.size());
    if (n == 0)
        return false;
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != n)
            return false;
    for (int r = 0; r < n; ++r) {
        int sum = 0;
        for (int c = 0; c < n; ++c) {
            const int v = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < -1 || v > 1)
                return false;
            sum += v;
            if (sum < 0 || sum > 1)
                return false;
        }
        if (sum != 1)
            return false;
    }
    for (int c = 0; c < n; ++c) {
        int sum = 0;
        for (int r = 0; r < n; ++r) {
            sum += grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (sum < 0 || sum > 1)
                return false;
        }
        if (sum != 1)
            return false;
    }
    return true;
}

// All Dyck words of semilength n, generated independently.
inline std::vector<std::string> all_dyck_words(int n)
{
    std::vector<std::string> out;
    std::string word;
    std::function<void(int, int)> rec = [&](int open, int height) {
        if (static_cast<int>(word.size()) == 2 * n) {
            out.push_back(word);
            return;
        }
        if (open < n) {
            word.push_back('U');
            rec(open + 1, height + 1);
            word.pop_back();
        }
        if (height > 0) {
            word.push_back('D');
            rec(open, height - 1);
            word.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// All weakly increasing inversion sequences of size n (e_i < i).
inline std::vector<std::vector<int>> all_weakly_increasing_invseqs(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> e;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.push_back(e);
            return;
        }
        const int lo = e.empty() ? 0 : e.back();
        for (int v = lo; v < i; ++v) {
            e.push_back(v);
            rec(i + 1);
            e.pop_back();
        }
    };
    rec(1);
    return out;
}

} // namespace testutil
