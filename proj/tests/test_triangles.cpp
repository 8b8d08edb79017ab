#include "doctest.h"

#include <set>

#include "asmkey/enumeration.hpp"
#include "asmkey/key_process.hpp"
#include "asmkey/monotone_triangle.hpp"
#include "asmkey/patterns.hpp"
#include "helpers.hpp"

using namespace asmkey;
using testutil::make_asm;
using testutil::perm;

namespace {

MonotoneTriangle tri(std::vector<std::vector<int>> rows)
{
    return MonotoneTriangle::from_rows(std::move(rows));
}

InversionSequence invseq(std::vector<int> values)
{
    return InversionSequence(std::move(values));
}

} // namespace

TEST_CASE("triangle validation")
{
    CHECK_NOTHROW(tri({{1}}));
    CHECK_NOTHROW(tri({{2}, {1, 3}, {1, 2, 3}}));
    CHECK_THROWS_AS(tri({}), Error);
    CHECK_THROWS_AS(tri({{1}, {1, 1}}), Error);            // row not strictly increasing
    CHECK_THROWS_AS(tri({{1}, {2, 3}}), Error);            // bottom row not 1..n
    CHECK_THROWS_AS(tri({{3}, {1, 2}, {1, 2, 3}}), Error); // diagonal condition broken
    CHECK_THROWS_AS(tri({{1}, {2}}), Error);               // wrong row length
}

TEST_CASE("triangles of the worked examples")
{
    CHECK(triangle_from_asm(make_asm(testutil::kGappy5))
          == tri({{4}, {2, 5}, {2, 4, 5}, {1, 3, 4, 5}, {1, 2, 3, 4, 5}}));
    CHECK(triangle_from_asm(make_asm(testutil::kGapless5))
          == tri({{2}, {1, 3}, {1, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 4, 5}}));

    const MonotoneTriangle staircase = triangle_from_asm(
        Asm::from_permutation(Permutation::identity(4)));
    CHECK(staircase == tri({{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}}));
}

TEST_CASE("triangle and matrix are mutually inverse")
{
    CHECK(asm_from_triangle(tri({{2}, {1, 3}, {1, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 4, 5}}))
          == make_asm(testutil::kGapless5));
    CHECK(asm_from_triangle(tri({{1}, {1, 2}, {1, 2, 3}}))
          == Asm::from_permutation(Permutation::identity(3)));

    for (int n = 1; n <= 5; ++n)
        for_each_triangle(n, [](const MonotoneTriangle& t) {
            CHECK(triangle_from_asm(asm_from_triangle(t)) == t);
        });
    for (int n = 1; n <= 5; ++n)
        for_each_asm(n, [](const Asm& a) {
            CHECK(asm_from_triangle(triangle_from_asm(a)) == a);
        });
}

TEST_CASE("gapless and two-value tests")
{
    const MonotoneTriangle gappy = triangle_from_asm(make_asm(testutil::kGappy5));
    const MonotoneTriangle gapless = triangle_from_asm(make_asm(testutil::kGapless5));
    CHECK_FALSE(is_gapless(gappy)); // 3 is missing in the first column
    CHECK(is_gapless(gapless));
    CHECK(is_gapless(tri({{1}, {1, 2}, {1, 2, 3}})));

    CHECK(max_two_values_per_column(gapless));
    CHECK_FALSE(max_two_values_per_column(gappy)); // first column holds {1, 2, 4}
    CHECK(max_two_values_per_column(tri({{1}, {1, 2}, {1, 2, 3}})));
}

TEST_CASE("bad -1 detection")
{
    const auto gappy_bad = bad_minus_ones(make_asm(testutil::kGappy5));
    REQUIRE(gappy_bad.size() == 1);
    CHECK(gappy_bad[0].minus_one == Position{2, 4});
    CHECK(gappy_bad[0].west_one == Position{2, 2});
    CHECK(gappy_bad[0].witness == Position{4, 3});

    CHECK(bad_minus_ones(make_asm(testutil::kGapless5)).empty());
    CHECK(bad_minus_ones(Asm::from_permutation(perm({3, 1, 2}))).empty());

    // a bad -1 always breaks gaplessness
    for (int n = 1; n <= 6; ++n)
        for_each_asm(n, [](const Asm& a) {
            if (!bad_minus_ones(a).empty())
                CHECK_FALSE(is_gapless(triangle_from_asm(a)));
        });
}

TEST_CASE("bad -1s survive the removal of other -1s")
{
    for (int n = 1; n <= 5; ++n)
        for_each_asm(n, [](const Asm& a) {
            if (a.minus_count() < 2)
                return;
            const auto bad = bad_minus_ones(a);
            if (bad.empty())
                return;
            for (Position q : removable_positions(a))
                for (const BadMinusOne& b : bad) {
                    if (b.minus_one == q)
                        continue;
                    const Asm after = remove_minus_one(a, q).first;
                    bool still_bad = false;
                    for (const BadMinusOne& b2 : bad_minus_ones(after))
                        still_bad |= (b2.minus_one == b.minus_one);
                    CHECK(still_bad);
                }
        });
}

TEST_CASE("gapless triangles are exactly the 312-key-avoiding matrices")
{
    const PatternSet s312({perm({3, 1, 2})});
    // permutations first (both notions coincide there)
    for (int n = 1; n <= 7; ++n)
        testutil::for_each_permutation(n, [&](const Permutation& p) {
            CHECK(is_gapless(triangle_from_asm(Asm::from_permutation(p)))
                  == !perm_contains(p, perm({3, 1, 2})));
        });
    for (int n = 1; n <= 5; ++n)
        for_each_asm(n, [&](const Asm& a) {
            CHECK(is_gapless(triangle_from_asm(a)) == key_avoids(a, s312));
        });
}

TEST_CASE("inversion sequence validation")
{
    CHECK_NOTHROW(invseq({0, 1, 2}));
    CHECK_THROWS_AS(invseq({}), Error);
    CHECK_THROWS_AS(invseq({1}), Error);       // e_1 must be 0
    CHECK_THROWS_AS(invseq({0, 2}), Error);    // e_2 < 2
    CHECK_THROWS_AS(invseq({0, -1}), Error);
    CHECK(invseq({0, 0, 1, 1, 3}).weakly_increasing());
    CHECK_FALSE(invseq({0, 1, 0}).weakly_increasing());
}

TEST_CASE("inversion sequence of a triangle")
{
    CHECK(invseq_from_triangle(triangle_from_asm(make_asm(testutil::kGapless5)))
          == invseq({0, 0, 1, 1, 3}));

    // order 2: both members of the domain
    CHECK(invseq_from_triangle(tri({{2}, {1, 2}})) == invseq({0, 0}));
    CHECK(invseq_from_triangle(tri({{1}, {1, 2}})) == invseq({0, 1}));

    // the staircase triangle maps to the maximal weakly increasing sequence
    CHECK(invseq_from_triangle(tri({{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}}))
          == invseq({0, 1, 2, 3}));
    // the triangle of w_n maps to the all-zero sequence
    CHECK(invseq_from_triangle(triangle_from_asm(Asm::from_permutation(w(5))))
          == invseq({0, 0, 0, 0, 0}));

    CHECK_THROWS_AS(invseq_from_triangle(triangle_from_asm(make_asm(testutil::kGappy5))),
                    Error);
}

TEST_CASE("triangle from an inversion sequence")
{
    CHECK(triangle_from_invseq(invseq({0, 0, 1, 1, 3}))
          == triangle_from_asm(make_asm(testutil::kGapless5)));
    CHECK(triangle_from_invseq(invseq({0, 0, 0}))
          == triangle_from_asm(Asm::from_permutation(w(3))));
    CHECK_THROWS_AS(triangle_from_invseq(invseq({0, 1, 0})), Error);

    // order 4: the 14 weakly increasing sequences hit the 14 domain members
    const auto seqs = testutil::all_weakly_increasing_invseqs(4);
    REQUIRE(seqs.size() == 14);
    std::set<MonotoneTriangle> images;
    for (const auto& values : seqs) {
        const MonotoneTriangle t = triangle_from_invseq(invseq(values));
        CHECK(is_gapless(t));
        CHECK(max_two_values_per_column(t));
        CHECK(invseq_from_triangle(t) == invseq(values));
        images.insert(t);
    }
    CHECK(images.size() == 14);
    int domain = 0;
    for_each_triangle(4, [&](const MonotoneTriangle& t) {
        if (is_gapless(t) && max_two_values_per_column(t)) {
            ++domain;
            CHECK(images.count(t) == 1);
        }
    });
    CHECK(domain == 14);
}

TEST_CASE("dyck words")
{
    CHECK_NOTHROW(DyckWord::from_string("UUDD"));
    CHECK_THROWS_AS(DyckWord::from_string("UDD"), Error);
    CHECK_THROWS_AS(DyckWord::from_string("DU"), Error);
    CHECK_THROWS_AS(DyckWord::from_string("UDXD"), Error);
    CHECK_THROWS_AS(DyckWord::from_string("UUDU"), Error);

    CHECK(dyck_from_invseq(invseq({0, 0, 1, 1, 3})).steps() == "UUDUUDDUDD");
    CHECK(dyck_from_invseq(invseq({0, 0, 0, 0})).steps() == "UUUUDDDD");
    CHECK(dyck_from_invseq(invseq({0, 1})).steps() == "UDUD");
    CHECK_THROWS_AS(dyck_from_invseq(invseq({0, 1, 0})), Error);

    // bijective onto all Dyck words
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> images;
        for (const auto& values : testutil::all_weakly_increasing_invseqs(n))
            images.insert(dyck_from_invseq(invseq(values)).steps());
        const auto words = testutil::all_dyck_words(n);
        CHECK(images.size() == words.size());
        for (const std::string& word : words)
            CHECK(images.count(word) == 1);
    }
}
