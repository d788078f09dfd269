#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mzvkit/index.hpp>

#include <set>

using namespace mzv;

TEST_CASE("construction and basic accessors") {
    const Index e;
    CHECK(e.is_empty());
    CHECK(e.depth() == 0);
    CHECK(e.weight() == 0);
    CHECK_FALSE(e.admissible());
    CHECK_FALSE(e.all_ones());
    CHECK_FALSE(e.has_entry_ge2());
    CHECK_THROWS_AS(e.first(), domain_error);
    CHECK_THROWS_AS(e.last(), domain_error);

    const Index k{3, 1, 2};
    CHECK(k.depth() == 3);
    CHECK(k.weight() == 6);
    CHECK(k.first() == 3);
    CHECK(k.last() == 2);
    CHECK(k.admissible());
    CHECK(k.has_entry_ge2());
    CHECK_FALSE(k.all_ones());

    CHECK(Index{1, 1}.all_ones());
    CHECK_FALSE(Index{2, 1}.admissible());
    CHECK_THROWS_AS(Index({3, 0, 1}), domain_error);
    CHECK_THROWS_AS(Index({-2}), domain_error);
}

TEST_CASE("classification by last entry") {
    CHECK(classify(Index{}) == IndexClass::Empty);
    CHECK(classify(Index{2, 1}) == IndexClass::NonAdmissible);
    CHECK(classify(Index{1, 2}) == IndexClass::Admissible);
}

TEST_CASE("structural operations") {
    const Index k{3, 1, 2};
    CHECK(k.reversed() == Index{2, 1, 3});
    CHECK(Index{}.reversed() == Index{});
    CHECK(k.prefix(0) == Index{});
    CHECK(k.prefix(2) == Index{3, 1});
    CHECK(k.suffix(1) == Index{1, 2});
    CHECK(k.suffix(3) == Index{});
    CHECK_THROWS_AS(k.prefix(4), domain_error);
    CHECK_THROWS_AS(k.suffix(-1), domain_error);
    CHECK(k.rotated() == Index{2, 3, 1});
    CHECK(Index{5}.rotated() == Index{5});
    CHECK_THROWS_AS(Index{}.rotated(), domain_error);
    CHECK(k.concat(Index{4}) == Index{3, 1, 2, 4});
    CHECK(Index{}.concat(k) == k);
    CHECK(k.concat(Index{}) == k);
}

TEST_CASE("arrows on nonempty indices") {
    const Index k{3, 1, 2};
    CHECK(right_append(k) == Index{3, 1, 2, 1});
    CHECK(left_prepend(k) == Index{1, 3, 1, 2});
    CHECK(up_last(k) == Index{3, 1, 3});
    CHECK(up_first(k) == Index{4, 1, 2});
    CHECK(down_last(k) == Index{3, 1, 1});
    CHECK(down_first(k) == Index{2, 1, 2});
    CHECK_THROWS_AS(down_last(Index{2, 1}), domain_error);
    CHECK_THROWS_AS(down_first(Index{1, 2}), domain_error);
    CHECK(drop_last(Index{7}) == Index{});
    CHECK(tail(Index{7}) == Index{});
    CHECK_THROWS_AS(drop_last(Index{}), domain_error);
    CHECK_THROWS_AS(tail(Index{}), domain_error);
}

TEST_CASE("arrow conventions on the empty index") {
    const Index e;
    CHECK(right_append(e) == Index{1});
    CHECK(left_prepend(e) == Index{1});
    CHECK(up_last(e) == e);
    CHECK(up_first(e) == e);
    CHECK(down_last(e) == e);
    CHECK(down_first(e) == e);
}

TEST_CASE("repeated arrow application") {
    CHECK(arrow_apply(Index{2}, ArrowKind::UpLast, 3) == Index{5});
    CHECK(arrow_apply(Index{}, ArrowKind::RightAppend, 2) == Index{1, 1});
    CHECK_THROWS_AS(ArrowOp(ArrowKind::UpLast, 0), domain_error);
}

TEST_CASE("arrow words encode and decode") {
    for (const Index& k : {Index{}, Index{1}, Index{3, 1, 2}, Index{2, 2}}) {
        CHECK(ArrowWord::encode(k).decode() == k);
    }
    // entry e spells RightAppend UpLast^{e-1}; the word of (2,1) is R U R
    const ArrowWord w = ArrowWord::encode(Index{2, 1});
    REQUIRE(w.letters.size() == 3);
    CHECK(w.letters[0] == ArrowKind::RightAppend);
    CHECK(w.letters[1] == ArrowKind::UpLast);
    CHECK(w.letters[2] == ArrowKind::RightAppend);
    // reversal + swap on an admissible word gives the dual's word
    CHECK(ArrowWord::encode(Index{3}).reversed_swapped().decode() == Index{1, 2});
}

TEST_CASE("parse and format round-trip") {
    CHECK(parse_index("") == Index{});
    CHECK(parse_index("∅") == Index{});
    CHECK(parse_index("()") == Index{});
    CHECK(parse_index("3,2") == Index{3, 2});
    CHECK(parse_index(" 1 , 2 ") == Index{1, 2});
    CHECK(format_index(Index{}) == "∅");
    CHECK(format_index(Index{3, 1, 2}) == "3,1,2");
    for (const Index& k : {Index{}, Index{1}, Index{2, 1, 1, 3}})
        CHECK(parse_index(format_index(k)) == k);

    CHECK_THROWS_AS(parse_index("0"), parse_error);
    CHECK_THROWS_AS(parse_index("1,,2"), parse_error);
    CHECK_THROWS_AS(parse_index("-1"), parse_error);
    CHECK_THROWS_AS(parse_index("two"), parse_error);
    CHECK_THROWS_AS(parse_index("1,2,"), parse_error);
}

TEST_CASE("cyclic classes") {
    CHECK(cyclic_class(Index{2}) == std::set<Index>{Index{2}});
    CHECK(cyclic_class(Index{1, 2}) == std::set<Index>{Index{1, 2}, Index{2, 1}});
    // all rotations of an all-equal index coincide
    CHECK(cyclic_class(Index{1, 1, 1}).size() == 1);
    // (1,2,1,2) has period 2, so only two distinct rotations
    CHECK(cyclic_class(Index{1, 2, 1, 2}).size() == 2);
    CHECK(cyclic_class(Index{1, 2, 3}).size() == 3);
    CHECK_THROWS_AS(cyclic_class(Index{}), domain_error);
}
