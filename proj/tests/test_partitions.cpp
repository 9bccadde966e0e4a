#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "partq/partitions.hpp"

using namespace partq;

namespace {

std::vector<std::vector<int>> collect(long n, const PartitionConstraint& c = {}) {
    std::vector<std::vector<int>> out;
    for_each_partition(n, c, [&](const std::vector<int>& parts) { out.push_back(parts); });
    return out;
}

} // namespace

TEST_CASE("unconstrained enumeration, documented order") {
    const auto got = collect(4);
    const std::vector<std::vector<int>> expected = {
        {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    CHECK(got == expected);

    CHECK(collect(0) == std::vector<std::vector<int>>{{}});
    CHECK(collect(5).size() == 7);
    CHECK_THROWS_AS(collect(-1), std::invalid_argument);
}

TEST_CASE("constrained enumeration") {
    const auto odd5 = collect(5, PartitionConstraint::odd());
    CHECK(odd5 == std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {3, 1, 1}, {5}});

    PartitionConstraint cap;
    cap.max_part = 2;
    CHECK(collect(4, cap) == std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}});

    // parts congruent to 2 mod 3
    const auto res = collect(7, PartitionConstraint::residue(2, 3));
    CHECK(res == std::vector<std::vector<int>>{{5, 2}});

    // odd parts distinct: 4 = 4 | 3+1 | 2+2 (2+1+1 repeats the odd part 1)
    CHECK(collect(4, PartitionConstraint::pod()).size() == 3);
    CHECK(collect(5, PartitionConstraint::pod()).size() == 4);
}

TEST_CASE("overpartition enumeration") {
    long c1 = 0;
    for_each_overpartition(1, [&](const auto&, const auto&) { ++c1; });
    CHECK(c1 == 2);
    long c0 = 0;
    for_each_overpartition(0, [&](const auto&, const auto&) { ++c0; });
    CHECK(c0 == 1);

    const auto over2 = list_overpartitions(2);
    CHECK(over2.size() == 4);
    for (const auto& o : over2) o.validate();

    CHECK_THROWS_AS(Overpartition({{3, 1}, {2}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Overpartition({{3, 1}, {3, 1}}).validate(), std::invalid_argument);
}

TEST_CASE("durfee rectangles") {
    // the 3-modular diagram of 16+14+7+5+2 has rows 6,5,3,2,1; its 3-Durfee
    // rectangle is 2 x 5
    const std::vector<int> fig1 = {6, 5, 3, 2, 1};
    const auto d = durfee(fig1, 3);
    CHECK(d.height == 2);
    CHECK(d.width == 5);

    const std::vector<int> rows = {8, 6, 6, 3, 2, 2, 1};
    const auto d2 = durfee(rows, 4);
    CHECK(d2.height == 2);
    CHECK(d2.width == 6);

    const auto empty = durfee(std::vector<int>{}, 7);
    CHECK(empty.height == 0);
    CHECK(empty.width == 7);
}

TEST_CASE("durfee maximality invariant on random diagrams") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> len(0, 12), box(1, 15), off(0, 6);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<int> rows(len(rng));
        for (auto& r : rows) r = box(rng);
        std::sort(rows.rbegin(), rows.rend());
        const int d = off(rng);
        const auto res = durfee(rows, d);
        REQUIRE(res.width == res.height + d);
        if (res.height >= 1) {
            // rows 1..h (1-indexed) all reach the width
            for (int i = 0; i < res.height; ++i) REQUIRE(rows[i] >= res.width);
        }
        // maximality: row h+1 is absent or too short for a taller rectangle
        if (res.height < static_cast<int>(rows.size()))
            REQUIRE(rows[res.height] < res.height + 1 + d);
    }
}

TEST_CASE("modular diagram round trip") {
    const Partition p({20, 17, 11, 8, 5, 2});
    const auto d = ModularDiagram::from_partition(p, 3, 2);
    CHECK(d.row_boxes == std::vector<int>{7, 6, 4, 3, 2, 1});
    CHECK(d.to_partition() == p);

    CHECK_THROWS_AS(ModularDiagram::from_partition(Partition({5, 3}), 3, 2),
                    std::invalid_argument);

    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const int m = std::uniform_int_distribution<int>(1, 5)(rng);
        const int a = std::uniform_int_distribution<int>(1, m)(rng);
        std::vector<int> parts(std::uniform_int_distribution<int>(0, 8)(rng));
        for (auto& q : parts) q = m * std::uniform_int_distribution<int>(0, 9)(rng) + a;
        std::sort(parts.rbegin(), parts.rend());
        const Partition original(parts);
        CHECK(ModularDiagram::from_partition(original, m, a).to_partition() == original);
    }
}

TEST_CASE("partition type invariants") {
    CHECK(Partition({3, 2, 2}).weight() == 7);
    CHECK(Partition().weight() == 0);
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
}
