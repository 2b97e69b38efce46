#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tmatch/link_stream.hpp"

using namespace tmatch;

namespace {

LinkStream abc_stream() {
    return LinkStream::from_edges({{0, "a", "b"}, {1, "a", "b"}, {2, "a", "b"}, {1, "b", "c"}, {2, "b", "c"}},
                                  TimeInterval{0, 3}, {"d"});
}

}  // namespace

TEST_CASE("validate_stream reports each violated invariant") {
    SUBCASE("vacuous stream") {
        CHECK(validate_stream({TimeInterval{0, 0}, {"a"}, {}}).ok());
    }
    SUBCASE("time outside interval") {
        auto r = validate_stream({TimeInterval{0, 3}, {"a", "b"}, {{5, "a", "b"}}});
        REQUIRE_FALSE(r.ok());
        CHECK(r.has(ViolationKind::TimeOutOfInterval));
        CHECK(r.summary().find("(5,{a,b})") != std::string::npos);
    }
    SUBCASE("self-loop") {
        auto r = validate_stream({TimeInterval{0, 3}, {"a"}, {{0, "a", "a"}}});
        CHECK(r.has(ViolationKind::SelfLoop));
    }
    SUBCASE("endpoint outside vertex set") {
        auto r = validate_stream({TimeInterval{0, 3}, {"a"}, {{0, "a", "z"}}});
        CHECK(r.has(ViolationKind::UnknownVertex));
    }
    SUBCASE("nothing to infer the interval from") {
        CHECK(validate_stream({std::nullopt, {"a"}, {}}).has(ViolationKind::EmptyInterval));
    }
    CHECK_THROWS_AS(LinkStream::build({TimeInterval{0, 3}, {"a"}, {{0, "a", "a"}}}), InvalidStream);
}

TEST_CASE("construction interns names in lexicographic order and deduplicates edges") {
    auto s = LinkStream::from_edges({{1, "b", "a"}, {1, "a", "b"}, {0, "c", "a"}});
    CHECK(s.vertex_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(s.edge_count() == 2);
    CHECK(s.interval() == TimeInterval{0, 1});
    CHECK(s.has_edge(1, s.id("b"), s.id("a")));
    CHECK_FALSE(s.has_edge(0, s.id("a"), s.id("b")));
    CHECK_THROWS_AS(s.id("zz"), std::out_of_range);
}

TEST_CASE("temporal_vertices_of covers 2γ temporal vertices") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {0, "x", "y"}, {0, "u", "v"}});
    auto tv = temporal_vertices_of(s.gamma_edge(0, "a", "b", 2));
    std::vector<TemporalVertex> expected{{0, s.id("a")}, {0, s.id("b")}, {1, s.id("a")}, {1, s.id("b")}};
    std::sort(tv.begin(), tv.end());
    std::sort(expected.begin(), expected.end());
    CHECK(tv == expected);

    auto one = temporal_vertices_of(s.gamma_edge(7, "x", "y", 1));
    CHECK(one.size() == 2);
    CHECK(one[0].time == 7);
    CHECK(temporal_vertices_of(s.gamma_edge(2, "u", "v", 3)).size() == 6);
}

TEST_CASE("independent") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {0, "c", "d"}});
    auto g = [&](Time t, const char* u, const char* v) { return s.gamma_edge(t, u, v, 2); };
    CHECK(independent(g(0, "a", "b"), g(2, "a", "b")));
    CHECK_FALSE(independent(g(0, "a", "b"), g(1, "b", "c")));
    CHECK(independent(g(0, "a", "b"), g(0, "c", "d")));
    CHECK_THROWS_AS(independent(g(0, "a", "b"), s.gamma_edge(0, "c", "d", 3)), std::invalid_argument);

    // Symmetry and agreement with temporal-vertex intersection, over all small pairs.
    std::vector<GammaEdge> pool;
    for (Time t = 0; t < 4; ++t)
        for (VertexId u = 0; u < 4; ++u)
            for (VertexId v = u + 1; v < 4; ++v) pool.push_back({t, u, v, 2});
    for (const auto& x : pool)
        for (const auto& y : pool) {
            CHECK(independent(x, y) == independent(y, x));
            oracle::Window wx{x.start, x.u, x.v}, wy{y.start, y.u, y.v};
            CHECK(independent(x, y) == oracle::disjoint(wx, wy, 2));
        }
}

TEST_CASE("GammaEdge::make rejects degenerate input") {
    CHECK_THROWS_AS(GammaEdge::make(0, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(GammaEdge::make(0, 1, 2, 0), std::invalid_argument);
    auto g = GammaEdge::make(3, 5, 2, 4);
    CHECK(g.u == 2);
    CHECK(g.v == 5);
    CHECK(g.last() == 6);
}

TEST_CASE("enumerate_gamma_edges on a three-instant run") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {1, "a", "b"}, {2, "a", "b"}});
    auto edges = enumerate_gamma_edges(s, 2);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == s.gamma_edge(0, "a", "b", 2));
    CHECK(edges[1] == s.gamma_edge(1, "a", "b", 2));
    CHECK(enumerate_gamma_edges(s, 4).empty());
    CHECK_THROWS_AS(enumerate_gamma_edges(s, 0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with a window scan and is canonically ordered") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + trial % 6, tau = 1 + trial % 11;
        auto s = oracle::random_stream(rng, n, tau, 0.5, 0.7);
        for (int gamma : {1, 2, 3, 5}) {
            auto got = enumerate_gamma_edges(s, gamma);
            auto want = oracle::gamma_edges(s, gamma);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].start == want[i].start);
                CHECK(got[i].u == want[i].u);
                CHECK(got[i].v == want[i].v);
                CHECK(s.contains(got[i]));
                if (i) CHECK(got[i - 1] < got[i]);
            }
            // A γ-edge of width 2q splits into q existing 2-wide blocks.
            if (gamma % 2 == 0)
                for (const auto& g : got)
                    for (Time off = 0; off < gamma; off += 2) CHECK(s.contains(GammaEdge{g.start + off, g.u, g.v, 2}));
        }
    }
}

TEST_CASE("validate_matching") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {1, "a", "b"}, {1, "b", "c"}, {2, "b", "c"}, {0, "c", "d"}});
    CHECK(validate_matching(s, GammaMatching{2, {}}).ok());

    GammaMatching clash{2, {s.gamma_edge(0, "a", "b", 2), s.gamma_edge(1, "b", "c", 2)}};
    auto r = validate_matching(s, clash);
    CHECK(r.has(ViolationKind::SharedTemporalVertex));
    CHECK(r.summary().find("(1,b)") != std::string::npos);

    GammaMatching missing{2, {s.gamma_edge(0, "c", "d", 2)}};
    CHECK(validate_matching(s, missing).has(ViolationKind::GammaEdgeMissing));

    GammaMatching mixed{2, {s.gamma_edge(0, "a", "b", 1)}};
    CHECK(validate_matching(s, mixed).has(ViolationKind::GammaMismatch));
}

TEST_CASE("contains respects the stream interval") {
    auto s = abc_stream();
    CHECK(s.contains(s.gamma_edge(1, "a", "b", 2)));
    CHECK_FALSE(s.contains(s.gamma_edge(2, "a", "b", 2)));
    CHECK_FALSE(s.contains(s.gamma_edge(-1, "a", "b", 2)));
    CHECK(s.vertex_count() == 4);
}
