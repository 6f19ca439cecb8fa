#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ioc/enumerate.hpp"
#include "test_util.hpp"

using namespace ioc;

TEST_SUITE("enumerate") {
    TEST_CASE("small tree counts") {
        CHECK(enumerate_trees(4).size() == 2);
        CHECK(enumerate_trees(5).size() == 3);
        CHECK(enumerate_trees(7).size() == 11);
        CHECK_THROWS_AS(enumerate_trees(0), Error);
        CHECK_THROWS_AS(enumerate_trees(kMaxTreeOrder + 1), Error);
    }

    TEST_CASE("enumerated trees are trees and pairwise non-isomorphic") {
        for (std::size_t n = 1; n <= 11; ++n) {
            std::set<std::string> seen;
            for (const auto& t : enumerate_trees(n)) {
                CHECK(t.order() == n);
                CHECK(is_tree(t));
                std::vector<std::pair<int, int>> pairs;
                for (auto e : t.edges()) pairs.emplace_back(e.u, e.v);
                CHECK(seen.insert(oracle::tree_signature(n, pairs)).second);
            }
        }
    }

    TEST_CASE("matches Prufer generation up to 9 vertices") {
        for (int n = 2; n <= 9; ++n) CHECK(enumerate_trees(n).size() == oracle::count_trees_by_pruefer(n));
    }

    TEST_CASE("labeled graph counts") {
        std::size_t total = 0;
        for_each_labeled_graph(4, {}, [&](const Graph&) {
            ++total;
            return true;
        });
        CHECK(total == 64);

        // Connected labeled graphs on 4 vertices: 38.
        std::size_t connected = 0;
        GraphFilter f;
        f.connected = true;
        for_each_labeled_graph(4, f, [&](const Graph&) {
            ++connected;
            return true;
        });
        CHECK(connected == 38);
        CHECK(enumerate_small_graphs(3, f, true).size() == 2);
        CHECK(enumerate_small_graphs(4, f, true).size() == 6);
    }

    TEST_CASE("filtered five-vertex graphs contain the 5-cycle") {
        GraphFilter f;
        f.connected = f.twin_free = f.four_cycle_free = true;
        auto graphs = enumerate_small_graphs(5, f, true);
        const auto c5 = canonical_graph6(testutil::cycle(5));
        bool found = false;
        for (const auto& g : graphs) found = found || canonical_graph6(g) == c5;
        CHECK(found);
        for (const auto& g : graphs) {
            CHECK(is_connected(g));
            CHECK(is_open_twin_free(g));
            CHECK_FALSE(has_four_cycle(g));
        }
    }

    TEST_CASE("canonical form is invariant under relabeling") {
        std::mt19937_64 rng(4);
        for (int iter = 0; iter < 200; ++iter) {
            const std::size_t n = 1 + rng() % 12;
            auto g = testutil::random_graph(n, 0.4, rng);
            std::vector<Vertex> order(n);
            for (Vertex i = 0; i < n; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            auto h = relabel(g, order);
            CHECK(canonical_graph6(g) == canonical_graph6(h));
        }
    }

    TEST_CASE("canonical form separates non-isomorphic graphs") {
        // Nonisomorphic connected graphs on 5 vertices: 21.
        GraphFilter f;
        f.connected = true;
        std::set<std::string> ids;
        for_each_labeled_graph(5, f, [&](const Graph& g) {
            ids.insert(canonical_graph6(g));
            return true;
        });
        CHECK(ids.size() == 21);
    }

    TEST_CASE("canonical tree order") {
        for (const auto& t : enumerate_trees(9)) {
            auto order = canonical_tree_order(t);
            auto again = relabel(t, order);
            CHECK(is_tree(again));
            CHECK(canonical_graph6(again) == canonical_graph6(t));
        }
    }
}
