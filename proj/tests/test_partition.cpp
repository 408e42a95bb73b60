#include <doctest.h>

#include "cllc/errors.hpp"
#include "cllc/partition.hpp"

using namespace cllc;

TEST_CASE("partition validation") {
    CHECK(Partition({3, 1, 1}).n() == 5);
    CHECK(Partition({}).empty());
    CHECK_THROWS_AS(Partition({1, 2}), usage_error);
    CHECK_THROWS_AS(Partition({0}), usage_error);
}

TEST_CASE("unit part stripping") {
    CHECK(Partition({3, 1, 1}).without_unit_parts() == Partition({3}));
    CHECK(Partition({1, 1}).without_unit_parts().empty());
    CHECK_FALSE(Partition({2, 2}).has_unit_parts());
}

TEST_CASE("partitions of 4 in reverse-lexicographic order") {
    const auto all = partitions(4);
    REQUIRE(all.size() == 5);
    CHECK(all[0] == Partition({4}));
    CHECK(all[1] == Partition({3, 1}));
    CHECK(all[2] == Partition({2, 2}));
    CHECK(all[3] == Partition({2, 1, 1}));
    CHECK(all[4] == Partition({1, 1, 1, 1}));

    const auto no_units = partitions(4, true);
    REQUIRE(no_units.size() == 2);
    CHECK(no_units[0] == Partition({4}));
    CHECK(no_units[1] == Partition({2, 2}));
}

TEST_CASE("partition counts p(n)") {
    const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n)
        CHECK(partitions(n).size() == static_cast<std::size_t>(expected[n - 1]));
    CHECK(partitions(1) == std::vector<Partition>{Partition({1})});
}

TEST_CASE("partition parse and round trip") {
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse(" 2 , 2 ") == Partition({2, 2}));
    CHECK_THROWS_AS(Partition::parse("1,2"), parse_error);
    CHECK_THROWS_AS(Partition::parse("2,,1"), parse_error);
    CHECK_THROWS_AS(Partition::parse(""), parse_error);
    for (const auto& p : partitions(7))
        CHECK(Partition::parse(p.to_string()) == p);
}
