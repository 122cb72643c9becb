#include <catch2/catch_amalgamated.hpp>

#include "lsym/partition.hpp"

using namespace lsym;

TEST_CASE("construction canonicalizes") {
    CHECK(Partition{1, 3, 2}.parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition{0, 2, 0, 1}.parts() == std::vector<int>{2, 1});
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("basic statistics") {
    Partition tau{3, 2, 2, 1};
    CHECK(tau.weight() == 8);
    CHECK(tau.length() == 4);
    CHECK(tau.distinct_entries() == 3);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{}.length() == 0);
}

TEST_CASE("z factor") {
    // z_lambda = prod_i i^{m_i} m_i!
    CHECK(Partition{}.z_factor() == 1);
    CHECK(Partition{1}.z_factor() == 1);
    CHECK(Partition{2}.z_factor() == 2);
    CHECK(Partition{1, 1}.z_factor() == 2);
    CHECK(Partition{3}.z_factor() == 3);
    CHECK(Partition{2, 1}.z_factor() == 2);
    CHECK(Partition{1, 1, 1}.z_factor() == 6);
    CHECK(Partition{2, 2, 1}.z_factor() == 8);
    CHECK(Partition{3, 2, 2, 1}.z_factor() == 24);
}

TEST_CASE("conjugate") {
    CHECK(Partition{3, 2, 2, 1}.conjugate() == Partition{4, 3, 1});
    CHECK(Partition{4, 3, 1}.conjugate() == Partition{3, 2, 2, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    for (const auto& tau : partitions_up_to(7))
        CHECK(tau.conjugate().conjugate() == tau);
}

TEST_CASE("scaled and merged") {
    CHECK(Partition{3, 1}.scaled(2) == Partition{6, 2});
    CHECK(Partition{2, 1}.merged(Partition{3, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("ordering is graded, larger-first within a degree") {
    std::vector<Partition> expect{{},      {1},    {2},       {1, 1},
                                  {3},     {2, 1}, {1, 1, 1}, {4},
                                  {3, 1},  {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    auto got = partitions_up_to(4);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
    for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i] < got[i + 1]);
}

TEST_CASE("partition counts") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
}

TEST_CASE("serialization round trip") {
    CHECK(Partition{3, 2, 2, 1}.str() == "[3,2,2,1]");
    CHECK(Partition{}.str() == "[]");
    CHECK(parse_partition("[3,2,2,1]") == Partition{3, 2, 2, 1});
    CHECK(parse_partition("[]") == Partition{});
    for (const auto& tau : partitions_up_to(8))
        CHECK(parse_partition(tau.str()) == tau);
    CHECK_THROWS(parse_partition("3,2"));
    CHECK_THROWS(parse_partition("[3,,2]"));
    CHECK_THROWS(parse_partition("[a]"));
}
