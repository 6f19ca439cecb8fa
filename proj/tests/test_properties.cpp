// Property groups, each runnable on its own with -ts=<suite>.

#include "doctest.h"

#include <random>

#include "ioc/enumerate.hpp"
#include "ioc/solver.hpp"
#include "ioc/verify.hpp"
#include "test_util.hpp"

using namespace ioc;

namespace {

// Random twin-free, isolate-free graph on n vertices.
Graph random_codeable(std::size_t n, std::mt19937_64& rng) {
    while (true) {
        auto g = testutil::random_graph(n, 0.3, rng);
        if (admits_io_code(g)) return g;
    }
}

}  // namespace

TEST_SUITE("property-superset-closure") {
    TEST_CASE("supersets of codes stay codes") {
        std::mt19937_64 rng(101);
        for (int iter = 0; iter < 300; ++iter) {
            const std::size_t n = 3 + rng() % 10;
            auto g = random_codeable(n, rng);
            auto code = solve(g).code;
            for (int grow = 0; grow < 5; ++grow) {
                auto bigger = code | testutil::random_subset(n, 0.3, rng);
                CHECK(is_io_code(g, bigger).ok);
            }
        }
    }

    TEST_CASE("random codes: every superset verifies") {
        std::mt19937_64 rng(102);
        int codes = 0;
        for (int iter = 0; iter < 3000 && codes < 200; ++iter) {
            const std::size_t n = 3 + rng() % 10;
            auto g = testutil::random_graph(n, 0.35, rng);
            auto s = testutil::random_subset(n, 0.7, rng);
            if (!is_io_code(g, s).ok) continue;
            ++codes;
            for (Vertex v = 0; v < n; ++v) {
                auto t = s;
                t.insert(v);
                CHECK(is_io_code(g, t).ok);
            }
        }
        CHECK(codes >= 100);
    }
}

TEST_SUITE("property-forced-supports") {
    TEST_CASE("optimal codes contain every support vertex") {
        std::mt19937_64 rng(201);
        for (int iter = 0; iter < 300; ++iter) {
            const std::size_t n = 4 + rng() % 12;
            auto g = random_codeable(n, rng);
            auto r = solve(g);
            auto classes = classify_vertices(g);
            for (Vertex v = 0; v < n; ++v) {
                if (classes[v].support) CHECK(r.code.contains(v));
            }
        }
    }

    TEST_CASE("every code of a tree contains its supports") {
        for (const auto& t : enumerate_trees(8)) {
            if (!admits_io_code(t)) continue;
            auto classes = classify_vertices(t);
            const std::size_t n = t.order();
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                VertexSet s(n);
                for (Vertex v = 0; v < n; ++v)
                    if ((mask >> v) & 1U) s.insert(v);
                if (!is_io_code(t, s).ok) continue;
                for (Vertex v = 0; v < n; ++v) {
                    if (classes[v].support) CHECK(s.contains(v));
                }
            }
        }
    }
}

TEST_SUITE("property-twin-oracle") {
    TEST_CASE("twin detection matches row comparison") {
        std::mt19937_64 rng(301);
        for (int iter = 0; iter < 2000; ++iter) {
            const std::size_t n = 1 + rng() % 12;
            const double p = 0.1 + 0.1 * static_cast<double>(rng() % 6);
            auto g = testutil::random_graph(n, p, rng);
            auto expected = oracle::open_twins(testutil::to_matrix(g));
            auto got = find_open_twins(g);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(static_cast<int>(got[i].first) == expected[i].first);
                CHECK(static_cast<int>(got[i].second) == expected[i].second);
            }
            CHECK(is_open_twin_free(g) == expected.empty());
        }
    }
}

TEST_SUITE("property-four-cycle") {
    TEST_CASE("four-cycle detection matches tuple search") {
        std::mt19937_64 rng(401);
        for (int iter = 0; iter < 1500; ++iter) {
            const std::size_t n = 1 + rng() % 12;
            const double p = 0.05 + 0.05 * static_cast<double>(rng() % 6);
            auto g = testutil::random_graph(n, p, rng);
            const bool brute = oracle::has_c4(testutil::to_matrix(g));
            CHECK(has_four_cycle(g) == brute);

            bool common_pair = false;
            for (Vertex u = 0; u < n && !common_pair; ++u)
                for (Vertex v = u + 1; v < n && !common_pair; ++v)
                    common_pair = (g.neighborhood(u) & g.neighborhood(v)).size() >= 2;
            CHECK(common_pair == brute);
        }
    }
}

TEST_SUITE("property-tree-counts") {
    TEST_CASE("free tree counts up to 12 vertices") {
        for (std::size_t n = 1; n <= 12; ++n) {
            std::size_t count = 0;
            for_each_tree(n, [&](const Graph&) {
                ++count;
                return true;
            });
            CHECK_MESSAGE(count == oracle::kFreeTreeCounts[n], "n = " << n);
        }
    }
}
