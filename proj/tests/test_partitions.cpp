#include <doctest.h>

#include "kacpoly/errors.hpp"
#include "kacpoly/io.hpp"
#include "kacpoly/partitions.hpp"
#include "oracles.hpp"

#include <set>

using namespace kacpoly;

TEST_CASE("partition validation")
{
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    const Partition mu({3, 1, 1});
    CHECK(mu.weight() == 5);
    CHECK(mu.part(1) == 3);
    CHECK(mu.part(3) == 1);
    CHECK(mu.part(4) == 0);
}

TEST_CASE("enumerate partitions")
{
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0).front().length() == 0);
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(7).size() == 15);
    for (int n = 0; n <= 14; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<long>(all.size()) == oracle::partition_count(n));
        std::set<Partition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& p : all)
            CHECK(p.weight() == n);
    }
    const auto four = enumerate_partitions(4);
    CHECK(four.front() == Partition({4}));
    CHECK(four[1] == Partition({3, 1}));
    CHECK(four.back() == Partition({1, 1, 1, 1}));
    CHECK_THROWS_AS(enumerate_partitions(-1), DomainError);
}

TEST_CASE("multipartitions")
{
    CHECK(enumerate_multipartitions({1, 1}).size() == 1);
    CHECK(enumerate_multipartitions({2, 1}).size() == 2);
    CHECK(enumerate_multipartitions({3, 2}).size() == 6);
    CHECK(enumerate_multipartitions({0, 0}).size() == 1);
    const MultiPartition lambda{Partition({2, 1}), Partition({3}), Partition{}};
    CHECK(multipartition_size(lambda) == DimVector{3, 3, 0});
    const auto rows = multipartition_rows(lambda);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == DimVector{2, 3, 0});
    CHECK(rows[1] == DimVector{1, 0, 0});
    for (const auto& m : enumerate_multipartitions({3, 2}))
        CHECK(multipartition_size(m) == DimVector{3, 2});
}

TEST_CASE("phi functions")
{
    CHECK(phi_n(0) == Polynomial(1));
    CHECK(phi_n(1) == Polynomial{1, -1});
    CHECK(phi_n(2) == Polynomial{1, -1, -1, 1});
    CHECK(phi_partition(Partition({1}), false) == RationalFunction(Polynomial{1, -1}));
    CHECK(phi_partition(Partition({1, 1}), false) == RationalFunction(Polynomial{1, -1}));
    const Polynomial q{0, 1};
    CHECK(phi_partition(Partition({2}), true) ==
          RationalFunction((q - 1) * (q * q - 1), q * q * q));
    CHECK(phi_partition(Partition{}, true).is_one());
    // (3,1,1): differences 2, 0, 1.
    CHECK(phi_partition(Partition({3, 1, 1}), false) == RationalFunction(phi_n(2) * phi_n(1)));
}

TEST_CASE("tits statistic")
{
    const Quiver one({"1"}, std::vector<Arrow>{});
    CHECK(tits_statistic(one, {Partition({1})}) == 1);
    CHECK(tits_statistic(one, {Partition({2})}) == 4);
    CHECK(tits_statistic(one, {Partition({1, 1})}) == 2);
    const Quiver a2 = *builtin_quiver("a2");
    // rows (2,1) and (1,0): T = 4 + 1 - 2 + 1.
    CHECK(tits_statistic(a2, {Partition({2, 1}), Partition({1})}) == 4);
}
