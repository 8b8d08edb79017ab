#include "asmkey/key_process.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace asmkey {

namespace {

bool weakly_southwest(Position p, Position of)
{
    return p.row >= of.row && p.col <= of.col;
}

bool is_removable(const std::vector<Position>& minus, Position m)
{
    for (const Position& other : minus)
        if (other != m && weakly_southwest(other, m))
            return false;
    return true;
}

} // namespace

std::vector<Position> removable_positions(const Asm& a)
{
    const std::vector<Position> minus = a.positions_of(-1);
    std::vector<Position> out;
    for (const Position& m : minus)
        if (is_removable(minus, m))
            out.push_back(m);
    return out; // positions_of order is already (row, col) ascending
}

std::vector<Position> neighboring_ones(const Asm& a, Position m)
{
    if (a.at(m) != -1)
        fail(errc::not_removable, "no -1 at (" + std::to_string(m.row) + ","
                                      + std::to_string(m.col) + ")");
    if (!is_removable(a.positions_of(-1), m))
        fail(errc::not_removable, "-1 at (" + std::to_string(m.row) + ","
                                      + std::to_string(m.col)
                                      + ") has another -1 weakly to its southwest");

    std::vector<Position> region;
    for (int r = m.row; r <= a.size(); ++r)
        for (int c = 1; c <= m.col; ++c)
            if (a.at(r, c) == 1)
                region.push_back({r, c});

    std::vector<Position> maximal;
    for (const Position& q : region) {
        bool dominated = false;
        for (const Position& u : region)
            if (u != q && u.row <= q.row && u.col >= q.col) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(q);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::pair<Asm, RemovalTrace> remove_minus_one(const Asm& a, Position m)
{
    RemovalTrace trace;
    trace.minus_one = m;
    trace.staircase = neighboring_ones(a, m);
    trace.simple = trace.staircase.size() == 2;

    auto rows = a.entries();
    auto cell = [&rows](Position p) -> int& {
        return rows[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)];
    };

    cell(m) = 0;
    for (const Position& q : trace.staircase)
        cell(q) = 0;
    for (std::size_t k = 1; k < trace.staircase.size(); ++k) {
        const Position created{trace.staircase[k].row, trace.staircase[k - 1].col};
        cell(created) = 1;
        trace.created.push_back(created);
    }

    // Any corruption of the line sums or alternation surfaces here.
    return {Asm::from_entries(rows), std::move(trace)};
}

namespace {

// Largest row first, ties by smallest column. Removable -1s always occupy
// distinct rows, so the tie-break never actually fires.
Position pick_removal(const std::vector<Position>& removable)
{
    assert(!removable.empty());
    Position best = removable.front();
    for (const Position& p : removable)
        if (p.row > best.row || (p.row == best.row && p.col < best.col))
            best = p;
    return best;
}

} // namespace

Permutation sw_key(const Asm& a)
{
    Asm current = a;
    for (;;) {
        std::vector<Position> removable = removable_positions(current);
        if (removable.empty())
            break;
        current = remove_minus_one(current, pick_removal(removable)).first;
    }
    auto perm = current.to_permutation();
    assert(perm.has_value());
    return *perm;
}

KeyTrace key_trace(const Asm& a)
{
    KeyTrace out;
    out.states.push_back(a);
    for (;;) {
        std::vector<Position> removable = removable_positions(out.states.back());
        if (removable.empty())
            break;
        auto [next, trace] = remove_minus_one(out.states.back(), pick_removal(removable));
        out.states.push_back(std::move(next));
        out.removals.push_back(std::move(trace));
    }
    return out;
}

} // namespace asmkey
