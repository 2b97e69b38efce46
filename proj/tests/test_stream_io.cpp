#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/stream_io.hpp"

using namespace tmatch;

namespace {

LinkStream round_trip(const LinkStream& s) {
    std::stringstream io;
    serialize_stream(io, s);
    return parse_stream(io).stream;
}

}  // namespace

TEST_CASE("plain body infers the interval") {
    std::istringstream in("0 a b\n1 a b\n");
    auto f = parse_stream(in);
    CHECK(f.stream.edge_count() == 2);
    CHECK(f.stream.interval() == TimeInterval{0, 1});
    CHECK(f.header.empty());
}

TEST_CASE("malformed lines report their line number") {
    std::istringstream bad("x a b\n");
    try {
        parse_stream(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    std::istringstream short_line("# comment\n0 a b\n3 a\n");
    try {
        parse_stream(short_line);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream extra("0 a b c\n");
    CHECK_THROWS_AS(parse_stream(extra), ParseError);
    std::istringstream loop("0 a a\n");
    CHECK_THROWS_AS(parse_stream(loop), ParseError);
}

TEST_CASE("header interval, isolated vertices and extra keys") {
    std::istringstream in("# t_min=-2\n# t_max=10\n# vertex=z\n# gamma=3\n# just a comment\n\n4 b a\n");
    auto f = parse_stream(in);
    CHECK(f.stream.interval() == TimeInterval{-2, 10});
    CHECK(f.stream.vertex_names() == std::vector<std::string>{"a", "b", "z"});
    CHECK(f.header.at("gamma") == "3");

    std::istringstream empty("# t_min=0\n# t_max=3\n# vertex=a\n");
    CHECK(parse_stream(empty).stream.edge_count() == 0);
    std::istringstream nothing("");
    CHECK_THROWS_AS(parse_stream(nothing), ParseError);
    std::istringstream half("# t_min=0\n0 a b\n");
    CHECK_THROWS_AS(parse_stream(half), ParseError);
    std::istringstream outside("# t_min=0\n# t_max=1\n5 a b\n");
    CHECK_THROWS_AS(parse_stream(outside), ParseError);
}

TEST_CASE("serialization is sorted and round-trips") {
    auto s = LinkStream::from_edges({{2, "b", "a"}, {0, "c", "b"}, {0, "a", "b"}}, TimeInterval{0, 5}, {"q"});
    std::ostringstream out;
    serialize_stream(out, s, {{"note", "x"}});
    CHECK(out.str() == "# t_min=0\n# t_max=5\n# vertex=q\n# note=x\n0 a b\n0 b c\n2 a b\n");
    CHECK(round_trip(s) == s);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) {
        auto r = oracle::random_stream(rng, 1 + i % 7, 1 + i % 13, 0.3, 0.6);
        CHECK(round_trip(r) == r);
    }
    GeneratorConfig c;
    c.group_count = 12;
    c.particle_count = 36;
    c.duration = 30;
    auto g = generate(c);
    CHECK(round_trip(g) == g);
}

TEST_CASE("files on disk") {
    auto dir = std::filesystem::temp_directory_path() / "tmatch_io_test";
    std::filesystem::create_directories(dir);
    auto s = LinkStream::from_edges({{0, "a", "b"}, {1, "a", "b"}});
    write_stream(dir / "s.txt", s, {{"k", "v"}});
    auto f = read_stream(dir / "s.txt");
    CHECK(f.stream == s);
    CHECK(f.header.at("k") == "v");
    CHECK_THROWS(read_stream(dir / "missing.txt"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("matching files") {
    auto s = LinkStream::from_edges({{0, "a", "b"}, {1, "a", "b"}, {2, "c", "d"}, {3, "c", "d"}});
    GammaMatching m{2, {s.gamma_edge(0, "a", "b", 2), s.gamma_edge(2, "c", "d", 2)}};
    std::stringstream io;
    serialize_matching(io, s, m);
    CHECK(parse_matching(io, s) == m);

    std::istringstream unknown("# gamma=2\n0 a zz\n");
    CHECK_THROWS_AS(parse_matching(unknown, s), ParseError);
    std::istringstream no_gamma("0 a b\n");
    CHECK_THROWS_AS(parse_matching(no_gamma, s), ParseError);
    std::istringstream given("0 a b\n");
    CHECK(parse_matching(given, s, 2).size() == 1);
}
