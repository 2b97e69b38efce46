#include <doctest.h>

#include <chrono>
#include <random>

#include "oracles.hpp"
#include "tmatch/approx.hpp"
#include "tmatch/exact.hpp"
#include "tmatch/generator.hpp"

using namespace tmatch;

namespace {

bool hits(const GammaEdge& g, const std::vector<TemporalVertex>& bot) {
    for (const auto& tv : temporal_vertices_of(g))
        if (std::binary_search(bot.begin(), bot.end(), tv)) return true;
    return false;
}

GammaMatching random_maximal(const LinkStream& s, int gamma, std::mt19937_64& rng) {
    auto pool = enumerate_gamma_edges(s, gamma);
    std::shuffle(pool.begin(), pool.end(), rng);
    GammaMatching m{gamma, {}};
    for (const auto& g : pool) {
        bool ok = true;
        for (const auto& h : m.members) ok = ok && independent(g, h);
        if (ok) m.members.push_back(g);
    }
    m.normalize();
    return m;
}

}  // namespace

TEST_CASE("no γ-edges, empty matching") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {2, "a", "b"}});
    CHECK(greedy_matching(s, 2).empty());
    CHECK_THROWS_AS(greedy_matching(s, 0), std::invalid_argument);
}

TEST_CASE("factor-two instance") {
    auto s = LinkStream::from_edges(
        {{0, "b", "c"}, {1, "b", "c"}, {1, "a", "b"}, {2, "a", "b"}, {1, "c", "d"}, {2, "c", "d"}});
    auto m = greedy_matching(s, 2);
    REQUIRE(m.size() == 1);
    CHECK(m.members[0] == s.gamma_edge(0, "b", "c", 2));
    CHECK(oracle::max_matching(s, 2) == 2);
}

TEST_CASE("disjoint blocks are all taken") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {1, "a", "b"}, {2, "c", "d"}, {3, "c", "d"}});
    auto m = greedy_matching(s, 2);
    CHECK(m.members == std::vector<GammaEdge>{s.gamma_edge(0, "a", "b", 2), s.gamma_edge(2, "c", "d", 2)});
    CHECK(oracle::max_matching(s, 2) == 2);
}

TEST_CASE("bottom_vertices") {
    auto s = LinkStream::from_edges({{0, "a", "b"}});
    CHECK(bottom_vertices(GammaMatching{3, {}}).empty());
    auto a = s.id("a"), b = s.id("b");
    CHECK(bottom_vertices(GammaMatching{3, {GammaEdge{0, a, b, 3}}}) == std::vector<TemporalVertex>{{2, a}, {2, b}});
    auto two = bottom_vertices(GammaMatching{2, {GammaEdge{0, a, b, 2}, GammaEdge{2, a, b, 2}}});
    CHECK(two == std::vector<TemporalVertex>{{1, a}, {1, b}, {3, a}, {3, b}});
}

TEST_CASE("marking rejected γ-edges loses maximality") {
    // Γ(1,b,c) is rejected but blocks (2,c); Γ(2,c,d) is then rejected although it
    // is independent of the only accepted γ-edge.
    auto s = LinkStream::from_edges(
        {{0, "a", "b"}, {1, "a", "b"}, {1, "b", "c"}, {2, "b", "c"}, {2, "c", "d"}, {3, "c", "d"}});
    auto verbatim = greedy_matching(s, 2, {MarkingPolicy::MarkOnReject});
    auto standard = greedy_matching(s, 2);
    CHECK(verbatim.size() == 1);
    CHECK(standard.size() == 2);
    auto bot = bottom_vertices(verbatim);
    CHECK_FALSE(hits(s.gamma_edge(2, "c", "d", 2), bot));

    // On a chain of length 2q the verbatim variant stays at 1 while OPT grows.
    std::vector<NamedEdge> chain;
    for (int i = 0; i < 12; ++i)
        for (int t : {i, i + 1}) chain.push_back({t, "n" + std::to_string(i + 10), "n" + std::to_string(i + 11)});
    auto c = LinkStream::from_edges(chain);
    CHECK(greedy_matching(c, 2, {MarkingPolicy::MarkOnReject}).size() == 1);
    CHECK(exact_maximum(c, 2).optimum == 6);
    CHECK(greedy_matching(c, 2).size() == 6);
}

TEST_CASE("greedy is valid, maximal, within factor two, and hit by every matching") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = oracle::random_stream(rng, 3 + trial % 5, 4 + trial % 8, 0.4, 0.75);
        for (int gamma : {1, 2, 3}) {
            auto m = greedy_matching(s, gamma);
            CHECK(validate_matching(s, m).ok());
            for (const auto& g : enumerate_gamma_edges(s, gamma)) {
                bool blocked = false;
                for (const auto& h : m.members) blocked = blocked || !independent(g, h);
                CHECK(blocked);
            }
            auto bot = bottom_vertices(m);
            CHECK(bot.size() == 2 * m.size());
            auto opt = exact_maximum(s, gamma);
            CHECK(m.size() <= opt.optimum);
            CHECK(opt.optimum <= 2 * m.size());
            for (const auto& g : opt.witness.members) CHECK(hits(g, bot));
            for (const auto& g : random_maximal(s, gamma, rng).members) CHECK(hits(g, bot));
        }
    }
}

TEST_CASE("sparse occupancy gives the same result as the bitmap") {
    std::mt19937_64 rng(5);
    auto s = oracle::random_stream(rng, 9, 30, 0.4, 0.8);
    GreedyOptions sparse;
    sparse.dense_cell_limit = 0;
    CHECK(greedy_matching(s, 2, sparse) == greedy_matching(s, 2));
    CHECK(greedy_matching(s, 3, sparse) == greedy_matching(s, 3));
}

TEST_CASE("runtime grows roughly linearly in the number of timed edges") {
    GeneratorConfig small;
    small.group_count = 40;
    small.particle_count = 160;
    small.duration = 400;
    small.radius = 4.0;
    GeneratorConfig big = small;
    big.particle_count = 320;
    auto a = generate(small), b = generate(big);
    REQUIRE(b.edge_count() > a.edge_count());

    auto time_of = [](const LinkStream& s) {
        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < 5; ++i) (void)greedy_matching(s, 2);
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    double ta = time_of(a), tb = time_of(b);
    double growth = static_cast<double>(b.edge_count()) / static_cast<double>(a.edge_count());
    // Smoke level only: flags quadratic behaviour, tolerates timer noise.
    CHECK(tb <= 4.0 * growth * ta + 0.05);
}
