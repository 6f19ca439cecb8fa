#include "doctest.h"

#include <random>

#include "ioc/graph_io.hpp"
#include "test_util.hpp"

using namespace ioc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("graph-io") {
    TEST_CASE("graph6 known strings") {
        // Standard encodings: P5 with edges 0-1..3-4, and K3.
        CHECK(to_graph6(testutil::path(5)) == "DhC");
        CHECK(to_graph6(testutil::triangle()) == "Bw");
        auto g = parse_graph6(">>graph6<<DhC\n");
        CHECK(g.order() == 5);
        CHECK(g.size() == 4);
        CHECK(g.adjacent(3, 4));
    }

    TEST_CASE("graph6 round trip on random graphs") {
        std::mt19937_64 rng(3);
        for (std::size_t n : {0u, 1u, 2u, 7u, 62u, 63u, 64u, 100u}) {
            auto g = testutil::random_graph(n, 0.2, rng);
            auto back = parse_graph6(to_graph6(g));
            CHECK(back.order() == n);
            CHECK(back.edges() == g.edges());
        }
    }

    TEST_CASE("graph6 errors carry a position") {
        try {
            parse_graph6("D~");
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
        CHECK(code_of([] { parse_graph6("D\x01"); }) == ErrorCode::ParseError);
        CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::ParseError);
    }

    TEST_CASE("edge lists") {
        auto g = parse_edge_list("# comment\n0 1\n\n1 2  # trailing\n");
        CHECK(g.order() == 3);
        CHECK(g.size() == 2);
        CHECK(to_edge_list(g) == "0 1\n1 2\n");
        try {
            parse_edge_list("0 1\n1 x\n");
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }

    TEST_CASE("format detection") {
        CHECK(detect_format("DhC") == GraphFormat::Graph6);
        CHECK(detect_format("DhC\n") == GraphFormat::Graph6);
        CHECK(detect_format("0 1\n") == GraphFormat::EdgeList);
        CHECK(parse_graph("0 1\n1 2\n").size() == 2);
    }

    TEST_CASE("fixture files") {
        auto p5 = read_graph_file(testutil::fixture("p5.edges"));
        CHECK(p5.order() == 5);
        CHECK(is_tree(p5));
        auto g3 = read_graph_file(testutil::fixture("g3.g6"));
        CHECK(g3.order() == 18);
        CHECK(code_of([] { read_graph_file(testutil::fixture("missing.g6")); }) == ErrorCode::ParseError);
    }
}
