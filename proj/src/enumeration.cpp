#include "asmkey/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "asmkey/key_process.hpp"

namespace asmkey {

namespace {

constexpr int kGenerationLimit = 8; // hard ceiling for exhaustive generation
constexpr int kSweepLimit = 7;      // default ceiling for full sweeps

void check_generation_size(int n)
{
    if (n < 1)
        fail(errc::bad_size, "size must be at least 1");
    if (n > kGenerationLimit)
        fail(errc::size_too_large, "exhaustive generation is limited to n <= "
                                       + std::to_string(kGenerationLimit));
}

void check_sweep_size(int n, bool allow_large)
{
    if (n < 1)
        fail(errc::bad_size, "size must be at least 1");
    const int limit = allow_large ? kGenerationLimit : kSweepLimit;
    if (n > limit)
        fail(errc::size_too_large,
             "sweeps are limited to n <= " + std::to_string(limit)
                 + (allow_large ? "" : " (pass allow_large for n = 8)"));
}

// Grows a stack of rows bottom-up (stack[0] is the bottom row 1..n) until it
// holds `stop` rows, calling emit for each completed stack. Row candidates
// are tried in lexicographic order. Rows above interlace the row below:
// below[j] <= next[j] <= below[j+1], strictly increasing within the row.
template <class Emit>
void grow_rows(int stop, std::vector<std::vector<int>>& stack, const Emit& emit)
{
    if (static_cast<int>(stack.size()) == stop) {
        emit(stack);
        return;
    }
    const std::vector<int> below = stack.back();
    const int len = static_cast<int>(below.size()) - 1;
    std::vector<int> next(static_cast<std::size_t>(len));

    auto fill = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            stack.push_back(next);
            grow_rows(stop, stack, emit);
            stack.pop_back();
            return;
        }
        int lo = below[static_cast<std::size_t>(pos)];
        if (pos > 0)
            lo = std::max(lo, next[static_cast<std::size_t>(pos - 1)] + 1);
        const int hi = below[static_cast<std::size_t>(pos + 1)];
        for (int v = lo; v <= hi; ++v) {
            next[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    fill(fill, 0);
}

MonotoneTriangle triangle_from_stack(const std::vector<std::vector<int>>& stack)
{
    std::vector<std::vector<int>> rows(stack.rbegin(), stack.rend());
    return MonotoneTriangle::from_rows(std::move(rows));
}

std::vector<int> bottom_row(int n)
{
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    return row;
}

template <class Visit>
void visit_triangles(int n, const Visit& visit)
{
    std::vector<std::vector<int>> stack;
    stack.push_back(bottom_row(n));
    grow_rows(n, stack,
              [&](const std::vector<std::vector<int>>& full) { visit(triangle_from_stack(full)); });
}

} // namespace

void for_each_triangle(int n, const std::function<void(const MonotoneTriangle&)>& visit)
{
    check_generation_size(n);
    visit_triangles(n, visit);
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit)
{
    check_generation_size(n);
    visit_triangles(n, [&](const MonotoneTriangle& t) { visit(asm_from_triangle(t)); });
}

namespace {

// Row-by-row DFS over {-1, 0, 1} entries with all prefix sums kept in
// {0, 1}. After n rows every column sum is forced to 1, so each leaf is an
// ASM; construction re-validates anyway.
template <class Visit>
void row_dfs(int n, int row, std::vector<int>& colsum, std::vector<std::vector<int>>& rows,
             const Visit& visit)
{
    if (row == n) {
        visit(Asm::from_entries(rows));
        return;
    }
    auto fill = [&](auto&& self, int col, int rowsum) -> void {
        if (col == n) {
            if (rowsum == 1)
                row_dfs(n, row + 1, colsum, rows, visit);
            return;
        }
        for (int e = -1; e <= 1; ++e) {
            const int rs = rowsum + e;
            if (rs < 0 || rs > 1)
                continue;
            const int cs = colsum[static_cast<std::size_t>(col)] + e;
            if (cs < 0 || cs > 1)
                continue;
            rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = e;
            colsum[static_cast<std::size_t>(col)] = cs;
            self(self, col + 1, rs);
            colsum[static_cast<std::size_t>(col)] = cs - e;
            rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
        }
    };
    fill(fill, 0, 0);
}

} // namespace

void for_each_asm_by_rows(int n, const std::function<void(const Asm&)>& visit)
{
    check_generation_size(n);
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    row_dfs(n, 0, colsum, rows, visit);
}

std::int64_t count_triangles(int n)
{
    std::int64_t count = 0;
    for_each_triangle(n, [&](const MonotoneTriangle&) { ++count; });
    return count;
}

std::int64_t count_asms_by_rows(int n)
{
    std::int64_t count = 0;
    for_each_asm_by_rows(n, [&](const Asm&) { ++count; });
    return count;
}

const char* avoid_mode_name(AvoidMode mode)
{
    return mode == AvoidMode::key ? "key" : "classical";
}

namespace {

struct SweepPlan {
    std::vector<Permutation> distinct;          // all distinct patterns
    std::vector<std::vector<std::size_t>> sets; // per set, indices into distinct
};

SweepPlan plan_sweep(const std::vector<PatternSet>& sets)
{
    SweepPlan plan;
    for (const PatternSet& set : sets) {
        std::vector<std::size_t> indices;
        for (const Permutation& p : set.patterns()) {
            auto it = std::find(plan.distinct.begin(), plan.distinct.end(), p);
            if (it == plan.distinct.end()) {
                plan.distinct.push_back(p);
                indices.push_back(plan.distinct.size() - 1);
            } else {
                indices.push_back(static_cast<std::size_t>(it - plan.distinct.begin()));
            }
        }
        plan.sets.push_back(std::move(indices));
    }
    return plan;
}

void tally_one(const SweepPlan& plan, AvoidMode mode, const MonotoneTriangle& t,
               std::vector<std::int64_t>& acc, std::vector<char>& bits)
{
    const Asm a = asm_from_triangle(t);
    if (mode == AvoidMode::key) {
        const Permutation key = sw_key(a);
        for (std::size_t d = 0; d < plan.distinct.size(); ++d)
            bits[d] = perm_contains(key, plan.distinct[d]);
    } else {
        for (std::size_t d = 0; d < plan.distinct.size(); ++d)
            bits[d] = classical_contains(a, plan.distinct[d]);
    }
    for (std::size_t s = 0; s < plan.sets.size(); ++s) {
        bool avoids = true;
        for (std::size_t d : plan.sets[s])
            if (bits[d]) {
                avoids = false;
                break;
            }
        acc[s] += avoids;
    }
}

} // namespace

std::vector<std::int64_t> sweep_avoiders(int n, const std::vector<PatternSet>& sets,
                                         AvoidMode mode, int shards, bool allow_large)
{
    check_sweep_size(n, allow_large);
    if (sets.empty())
        return {};
    if (shards < 1)
        fail(errc::bad_size, "shards must be at least 1");

    const SweepPlan plan = plan_sweep(sets);

    if (shards == 1 || n < 3) {
        std::vector<std::int64_t> acc(sets.size(), 0);
        std::vector<char> bits(plan.distinct.size(), 0);
        visit_triangles(n, [&](const MonotoneTriangle& t) { tally_one(plan, mode, t, acc, bits); });
        return acc;
    }

    // Tasks are the partial stacks covering the bottom rows; each task
    // completes the remaining top ceil(n/2) rows.
    const int top_rows = (n + 1) / 2;
    const int prefix_size = std::max(1, n - top_rows);
    std::vector<std::vector<std::vector<int>>> tasks;
    {
        std::vector<std::vector<int>> stack;
        stack.push_back(bottom_row(n));
        grow_rows(prefix_size, stack,
                  [&](const std::vector<std::vector<int>>& prefix) { tasks.push_back(prefix); });
    }

    const int workers = std::min<int>(shards, static_cast<int>(tasks.size()));
    std::vector<std::vector<std::int64_t>> accs(
        static_cast<std::size_t>(workers), std::vector<std::int64_t>(sets.size(), 0));
    std::atomic<std::size_t> next_task{0};

    auto work = [&](int worker) {
        std::vector<char> bits(plan.distinct.size(), 0);
        for (;;) {
            const std::size_t i = next_task.fetch_add(1);
            if (i >= tasks.size())
                break;
            std::vector<std::vector<int>> stack = tasks[i];
            grow_rows(n, stack, [&](const std::vector<std::vector<int>>& full) {
                tally_one(plan, mode, triangle_from_stack(full), accs[static_cast<std::size_t>(worker)],
                          bits);
            });
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        threads.emplace_back(work, t);
    for (std::thread& t : threads)
        t.join();

    std::vector<std::int64_t> total(sets.size(), 0);
    for (const auto& acc : accs)
        for (std::size_t s = 0; s < acc.size(); ++s)
            total[s] += acc[s];
    return total;
}

std::int64_t count_avoiders(int n, const PatternSet& set, AvoidMode mode, bool allow_large)
{
    return sweep_avoiders(n, {set}, mode, 1, allow_large).front();
}

std::map<Permutation, std::int64_t> counts_by_key(int n, bool allow_large)
{
    check_sweep_size(n, allow_large);
    std::map<Permutation, std::int64_t> census;
    visit_triangles(n, [&](const MonotoneTriangle& t) {
        ++census[sw_key(asm_from_triangle(t))];
    });
    return census;
}

std::int64_t count_asms_with_key(int n, const Permutation& key)
{
    if (key.size() != n)
        fail(errc::bad_size, "key size " + std::to_string(key.size())
                                 + " does not match n = " + std::to_string(n));
    check_generation_size(n);
    std::int64_t count = 0;
    visit_triangles(n, [&](const MonotoneTriangle& t) {
        count += (sw_key(asm_from_triangle(t)) == key);
    });
    return count;
}

Composition::Composition(std::vector<int> parts, bool strict)
    : parts_(std::move(parts)), strict_(strict)
{
    if (parts_.empty())
        fail(errc::bad_size, "composition must have at least one part");
    for (int p : parts_) {
        if (p < 0)
            fail(errc::bad_size, "composition parts must be nonnegative");
        if (strict_ && p < 1)
            fail(errc::bad_size, "strict composition parts must be positive");
    }
}

int Composition::total() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition composition_of(const Permutation& p)
{
    static const Permutation pat312({3, 1, 2});
    static const Permutation pat321({3, 2, 1});
    if (perm_contains(p, pat312) || perm_contains(p, pat321))
        fail(errc::not_in_312_321_class, "permutation contains 312 or 321");

    const int n = p.size();
    std::vector<int> parts;
    int i = 1;
    while (i <= n) {
        if (p(i) == i) {
            parts.push_back(1);
            ++i;
            continue;
        }
        // Block w_m starting at i maps k to k+1 until the closing p(j) = i.
        int j = i;
        while (j <= n && p(j) == j + 1)
            ++j;
        if (j > n || p(j) != i)
            throw std::logic_error("block decomposition failed");
        parts.push_back(j - i + 1);
        i = j + 1;
    }
    return Composition(std::move(parts), true);
}

Permutation perm_from_composition(const std::vector<int>& parts)
{
    if (parts.empty())
        fail(errc::bad_size, "composition must have at least one part");
    Permutation result = w(parts.front());
    for (std::size_t k = 1; k < parts.size(); ++k)
        result = direct_sum(result, w(parts[k]));
    return result;
}

std::int64_t predicted_count_for_key(const Permutation& p)
{
    const Composition blocks = composition_of(p);
    std::int64_t product = 1;
    for (int m : blocks.parts())
        product *= catalan(m - 1);
    return product;
}

namespace {

void compositions_rec(int remaining, int k, int min_part, std::vector<int>& parts,
                      bool strict, std::vector<Composition>& out)
{
    if (k == 1) {
        if (remaining >= min_part) {
            parts.push_back(remaining);
            out.emplace_back(parts, strict);
            parts.pop_back();
        }
        return;
    }
    for (int v = min_part; v <= remaining - min_part * (k - 1); ++v) {
        parts.push_back(v);
        compositions_rec(remaining - v, k - 1, min_part, parts, strict, out);
        parts.pop_back();
    }
}

std::vector<Composition> compositions(int total, int k, int min_part, bool strict)
{
    if (total < 0)
        fail(errc::bad_size, "total must be nonnegative");
    if (k < 1)
        fail(errc::bad_size, "k must be at least 1");
    std::vector<Composition> out;
    std::vector<int> parts;
    compositions_rec(total, k, min_part, parts, strict, out);
    return out;
}

} // namespace

std::vector<Composition> weak_compositions(int total, int k)
{
    return compositions(total, k, 0, false);
}

std::vector<Composition> strict_compositions(int total, int k)
{
    return compositions(total, k, 1, true);
}

std::int64_t catalan(int n)
{
    constexpr int kCatalanLimit = 30;
    if (n < 0)
        fail(errc::bad_size, "catalan(n) requires n >= 0");
    if (n > kCatalanLimit)
        fail(errc::overflow,
             "catalan(n) is guarded at n <= " + std::to_string(kCatalanLimit));
    static const std::vector<std::int64_t> table = [] {
        std::vector<std::int64_t> c(kCatalanLimit + 1, 0);
        c[0] = 1;
        for (int m = 1; m <= kCatalanLimit; ++m)
            for (int i = 1; i <= m; ++i)
                c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i - 1)]
                    * c[static_cast<std::size_t>(m - i)];
        return c;
    }();
    return table[static_cast<std::size_t>(n)];
}

CatalanIdentity catalan_identity_check(int n)
{
    constexpr int kIdentityLimit = 14;
    if (n < 1)
        fail(errc::bad_size, "n must be at least 1");
    if (n > kIdentityLimit)
        fail(errc::size_too_large,
             "identity check is guarded at n <= " + std::to_string(kIdentityLimit));

    CatalanIdentity result;
    result.catalan_value = catalan(n);

    std::map<Permutation, std::int64_t> breakdown;
    for (int k = 1; k <= n; ++k)
        for (const Composition& c : strict_compositions(n, k)) {
            std::int64_t product = 1;
            for (int m : c.parts())
                product *= catalan(m - 1);
            breakdown.emplace(perm_from_composition(c.parts()), product);
            result.sum_by_key += product;
        }
    result.breakdown.assign(breakdown.begin(), breakdown.end());

    for (int k = 1; k <= n; ++k)
        for (const Composition& c : weak_compositions(n - k, k)) {
            std::int64_t product = 1;
            for (int m : c.parts())
                product *= catalan(m);
            result.sum_by_compositions += product;
        }

    return result;
}

} // namespace asmkey
