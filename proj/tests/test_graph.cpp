#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "ioc/enumerate.hpp"
#include "ioc/families.hpp"
#include "ioc/graph.hpp"
#include "test_util.hpp"

using namespace ioc;
using testutil::cycle;
using testutil::path;

TEST_SUITE("graph-core") {
    TEST_CASE("vertex set basics") {
        VertexSet s(130, {0, 64, 129});
        CHECK(s.size() == 3);
        CHECK(s.contains(64));
        CHECK_FALSE(s.contains(63));
        s.erase(64);
        CHECK(s.members() == std::vector<Vertex>{0, 129});
        CHECK_THROWS_AS(s.insert(130), Error);

        VertexSet t(130, {0, 5});
        CHECK((s | t).members() == std::vector<Vertex>{0, 5, 129});
        CHECK((s & t).members() == std::vector<Vertex>{0});
        CHECK((s - t).members() == std::vector<Vertex>{129});
        CHECK(VertexSet(130, {0}).is_subset_of(s));
        CHECK(s.intersects(t));

        VertexSet other(10);
        try {
            (void)(s | other);
            FAIL("expected UniverseMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UniverseMismatch);
        }
    }

    TEST_CASE("construction rejects bad edges") {
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
        try {
            Graph(3, {{1, 1}});
            FAIL("expected BadParam");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadParam);
        }
        Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.size() == 1);
    }

    TEST_CASE("neighbourhoods") {
        CHECK(open_neighborhood(path(3), 1).members() == std::vector<Vertex>{0, 2});
        CHECK(open_neighborhood(testutil::triangle(), 0).members() == std::vector<Vertex>{1, 2});
        auto t4 = gen_subdivided_star(4);
        CHECK(open_neighborhood(t4.graph, 0).members() == std::vector<Vertex>{1, 3, 5, 7});
        CHECK_THROWS_AS(open_neighborhood(path(3), 3), Error);
    }

    TEST_CASE("degrees") {
        CHECK(max_degree(gen_subdivided_star(4).graph) == 4);
        CHECK(max_degree(cycle(5)) == 2);
        CHECK(min_degree(cycle(5)) == 2);
        CHECK(max_degree(testutil::paw()) == 3);
        CHECK(min_degree(testutil::paw()) == 1);
    }

    TEST_CASE("open twins") {
        CHECK(find_open_twins(path(3)) == std::vector<std::pair<Vertex, Vertex>>{{0, 2}});
        CHECK(find_open_twins(cycle(4)) == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}});
        for (std::size_t d = 2; d <= 6; ++d) CHECK(find_open_twins(gen_subdivided_star(d).graph).empty());
    }

    TEST_CASE("four cycles") {
        CHECK(has_four_cycle(cycle(4)));
        CHECK_FALSE(has_four_cycle(gen_subdivided_star(5).graph));
        CHECK_FALSE(has_four_cycle(gen_subcubic_gp(3).graph));
        // K4 minus an edge contains a (non-induced) 4-cycle.
        CHECK(has_four_cycle(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
    }

    TEST_CASE("connectivity") {
        CHECK(is_connected(path(5)));
        Graph two(4, {{0, 1}, {2, 3}});
        CHECK_FALSE(is_connected(two));
        auto parts = components(two);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].to_parent == std::vector<Vertex>{0, 1});
        CHECK(parts[1].to_parent == std::vector<Vertex>{2, 3});

        auto t = gen_tight_tree_pair(3).graph;
        for (auto e : t.edges()) CHECK(components(delete_edge(t, e)).size() == 2);
    }

    TEST_CASE("vertex classes") {
        auto c = classify_vertices(path(5));
        CHECK(c[0].leaf);
        CHECK(c[4].leaf);
        CHECK(c[1].support);
        CHECK(c[3].support);
        CHECK_FALSE(c[2].support);
        CHECK(c[2].internal);

        auto reduced = gen_reduced_subdivided_star(4);
        CHECK(classify_vertices(reduced.graph)[reduced.spec.label("center")].support);
        CHECK(classify_vertices(testutil::star(3))[0].strong_support);
    }

    TEST_CASE("distances and diameter") {
        for (std::size_t d = 2; d <= 6; ++d) CHECK(diameter(gen_subdivided_star(d).graph) == 4);
        for (std::size_t n = 1; n <= 9; ++n) CHECK(diameter(path(n)) == n - 1);

        // Diameter of the tight pair by all-pairs BFS from every vertex.
        auto pair = gen_tight_tree_pair(3).graph;
        std::size_t best = 0;
        for (Vertex v = 0; v < pair.order(); ++v) {
            for (auto d : distances_from(pair, v)) best = std::max(best, d);
        }
        CHECK(best == 7);
        CHECK(diameter(pair) == 7);
        CHECK_THROWS_AS(diameter(Graph(4, {{0, 1}, {2, 3}})), Error);
    }

    TEST_CASE("longest path") {
        auto p = longest_path_in_tree(path(6));
        CHECK(p.size() == 6);
        try {
            longest_path_in_tree(cycle(5));
            FAIL("expected NotATree");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotATree);
        }
    }

    TEST_CASE("longest path length equals diameter on all trees up to 16 vertices") {
        for (std::size_t n = 2; n <= 16; ++n) {
            for_each_tree(n, [&](const Graph& t) {
                auto p = longest_path_in_tree(t);
                CHECK(p.size() - 1 == diameter(t));
                for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(t.adjacent(p[i], p[i + 1]));
                return true;
            });
        }
    }

    TEST_CASE("deletions") {
        auto p5 = delete_edge(cycle(5), {4, 0});
        CHECK(is_tree(p5));
        CHECK(diameter(p5) == 4);
        auto k3 = delete_vertex(testutil::paw(), 3);
        CHECK(k3.graph.order() == 3);
        CHECK(k3.graph.size() == 3);
        CHECK(k3.from_parent[3] == kNoVertex);
        CHECK_THROWS_AS(delete_edge(path(3), {0, 2}), Error);

        auto gp = gen_subcubic_gp(3);
        auto tree = delete_edge(gp.graph, {gp.spec.label("u1"), gp.spec.label("u3")});
        CHECK(is_tree(tree));
    }

    TEST_CASE("induced cycles") {
        CHECK(find_induced_cycle(path(5)).empty());
        auto c5 = find_induced_cycle(cycle(5));
        CHECK(c5.size() == 5);

        auto gp = gen_subcubic_gp(3);
        auto cyc = find_induced_cycle(gp.graph);
        std::set<Vertex> got(cyc.begin(), cyc.end());
        CHECK(got == std::set<Vertex>{gp.spec.label("u1"), gp.spec.label("u2"), gp.spec.label("u3")});
    }

    TEST_CASE("symmetry and handshake on random graphs") {
        std::mt19937_64 rng(11);
        for (int iter = 0; iter < 200; ++iter) {
            const std::size_t n = 1 + rng() % 12;
            auto g = testutil::random_graph(n, 0.35, rng);
            std::size_t degree_sum = 0;
            for (Vertex v = 0; v < n; ++v) {
                degree_sum += g.degree(v);
                for (Vertex u = 0; u < n; ++u) CHECK(g.neighborhood(v).contains(u) == g.neighborhood(u).contains(v));
            }
            CHECK(degree_sum == 2 * g.size());
        }
    }
}
