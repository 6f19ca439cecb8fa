#include "doctest.h"

#include <random>

#include "ioc/families.hpp"
#include "ioc/solver.hpp"
#include "ioc/verify.hpp"
#include "test_util.hpp"

using namespace ioc;

namespace {

void check_exact(const Graph& g) {
    auto r = solve(g);
    CHECK(is_io_code(g, r.code).ok);
    CHECK(r.code.size() == r.gamma);
    CHECK(r.gamma == static_cast<std::size_t>(oracle::min_io_code(testutil::to_matrix(g))));
}

}  // namespace

TEST_SUITE("exact-solver") {
    TEST_CASE("small base values") {
        CHECK(solve(testutil::path(2)).gamma == 2);
        CHECK(solve(testutil::triangle()).gamma == 2);
        CHECK(solve(testutil::path(4)).gamma == 4);
        CHECK(solve(testutil::path(5)).gamma == 4);
        CHECK(solve(testutil::paw()).gamma == 3);
        CHECK(solve(testutil::cycle(5)).gamma == 4);
    }

    TEST_CASE("agrees with the subset scan on small graphs") {
        check_exact(testutil::path(5));
        check_exact(testutil::paw());
        check_exact(gen_subdivided_star(3).graph);
        check_exact(gen_reduced_subdivided_star(3).graph);
        check_exact(gen_tight_tree_pair(3).graph);
    }

    TEST_CASE("subdivided stars") {
        for (std::size_t d = 3; d <= 5; ++d) {
            CHECK(solve(gen_subdivided_star(d).graph).gamma == 2 * d);
            CHECK(solve(gen_reduced_subdivided_star(d).graph).gamma == 2 * d - 1);
        }
    }

    TEST_CASE("subcubic cycle family") {
        auto r = solve(gen_subcubic_gp(3).graph);
        CHECK(r.gamma == 15);
        CHECK(r.method == SolveMethod::BranchAndBound);
    }

    TEST_CASE("budget decisions") {
        for (std::size_t d = 3; d <= 5; ++d) {
            auto t = gen_subdivided_star(d).graph;
            CHECK_FALSE(solve_with_budget(t, 2 * d - 1).has_value());
            auto s = solve_with_budget(t, 2 * d);
            REQUIRE(s.has_value());
            CHECK(is_io_code(t, *s).ok);
            CHECK(s->size() <= 2 * d);
        }
        auto p5 = testutil::path(5);
        auto all = solve_with_budget(p5, 5);
        REQUIRE(all);
        CHECK(is_io_code(p5, *all).ok);
    }

    TEST_CASE("errors") {
        auto expect = [](const std::function<void()>& f, ErrorCode code) {
            try {
                f();
                FAIL("expected an error");
            } catch (const Error& e) {
                CHECK(e.code() == code);
            }
        };
        expect([] { solve(testutil::cycle(4)); }, ErrorCode::NoCode);
        expect([] { solve(Graph(3, {{0, 1}})); }, ErrorCode::NoCode);
        expect([] { solve_oracle(testutil::cycle(4)); }, ErrorCode::NoCode);
        expect([] { solve_oracle(gen_subcubic_gp(5).graph); }, ErrorCode::TooLarge);
        expect([] { solve_oracle(gen_subcubic_gp(6).graph, 40); }, ErrorCode::TooLarge);
    }

    TEST_CASE("oracle method and determinism") {
        auto g = gen_tight_tree_pair(3).graph;
        auto a = solve_oracle(g);
        CHECK(a.method == SolveMethod::Oracle);
        CHECK(a.gamma == 10);
        auto b = solve(g);
        auto c = solve(g);
        CHECK(b.code == c.code);
        CHECK(b.nodes_explored == c.nodes_explored);
    }

    TEST_CASE("budget boundary on random twin-free graphs") {
        std::mt19937_64 rng(21);
        int checked = 0;
        while (checked < 150) {
            const std::size_t n = 4 + rng() % 9;
            auto g = testutil::random_graph(n, 0.3, rng);
            if (!admits_io_code(g)) continue;
            ++checked;
            auto r = solve(g);
            CHECK(is_io_code(g, r.code).ok);
            CHECK_FALSE(solve_with_budget(g, r.gamma - 1).has_value());
            CHECK(solve_with_budget(g, r.gamma).has_value());
            CHECK(r.gamma == static_cast<std::size_t>(oracle::min_io_code(testutil::to_matrix(g))));
        }
    }
}
