#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tmatch/compress.hpp"

using namespace tmatch;

TEST_CASE("floor_div rounds toward negative infinity") {
    CHECK(floor_div(5, 3) == 1);
    CHECK(floor_div(-1, 3) == -1);
    CHECK(floor_div(-3, 3) == -1);
    CHECK(floor_div(-4, 3) == -2);
    CHECK(floor_div(0, 7) == 0);
}

TEST_CASE("two edges six instants apart, delta 3") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {5, "a", "b"}}, TimeInterval{0, 5});
    auto c = delta_compress(s, 3);
    CHECK(c.interval() == TimeInterval{0, 1});
    REQUIRE(c.edge_count() == 2);
    CHECK(c.edges()[0].time == 0);
    CHECK(c.edges()[1].time == 1);
}

TEST_CASE("single instant collapses to one bucket") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {0, "b", "c"}, {0, "a", "c"}}, TimeInterval{0, 9});
    auto c = delta_compress(s, 2);
    CHECK(c.edge_count() == 3);
    CHECK(c.interval() == TimeInterval{0, 4});
}

TEST_CASE("delta range is enforced") {
    auto s = LinkStream::from_edges({{0, "a", "b"}}, TimeInterval{0, 5});
    CHECK_THROWS_AS(delta_compress(s, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_compress(s, 6), std::invalid_argument);
    CHECK_THROWS_AS(delta_compress(s, 0), std::invalid_argument);
    CHECK_NOTHROW(delta_compress(s, 5));
}

TEST_CASE("isolated vertices survive compression") {
    auto s = LinkStream::from_edges({{0, "a", "b"}}, TimeInterval{0, 9}, {"lonely"});
    auto c = delta_compress(s, 4);
    CHECK(c.vertex_names() == s.vertex_names());
}

TEST_CASE("a larger delta can give more edges") {
    // Activity at 3..5: delta 3 puts it in one bucket, delta 4 splits it across two.
    auto s = LinkStream::from_edges({{3, "a", "b"}, {4, "a", "b"}, {5, "a", "b"}}, TimeInterval{0, 9});
    CHECK(delta_compress(s, 3).edge_count() == 1);
    CHECK(delta_compress(s, 4).edge_count() == 2);
}

TEST_CASE("negative and offset intervals use absolute buckets") {
    auto s = LinkStream::from_edges({{-4, "a", "b"}, {-1, "a", "b"}, {2, "a", "b"}}, TimeInterval{-5, 3});
    auto c = delta_compress(s, 3);
    CHECK(c.interval() == TimeInterval{-2, 1});
    auto want = oracle::compress(s, 3);
    CHECK(oracle::edge_set(c) == want);
}

TEST_CASE("compression agrees with the set-builder oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int tau = 3 + trial % 20;
        auto s = oracle::random_stream(rng, 2 + trial % 5, tau, 0.3, 0.5);
        for (Time delta = 2; delta < tau; delta += 1 + trial % 3) {
            auto c = delta_compress(s, delta);
            CHECK(oracle::edge_set(c) == oracle::compress(s, delta));
            CHECK(c.edge_count() <= s.edge_count());
            CHECK(c.vertex_names() == s.vertex_names());
        }
    }
}
