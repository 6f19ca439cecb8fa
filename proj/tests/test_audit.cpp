#include "doctest.h"

#include <map>

#include "json.hpp"

#include "ioc/audit.hpp"
#include "ioc/enumerate.hpp"
#include "ioc/families.hpp"
#include "ioc/graph_io.hpp"
#include "ioc/verify.hpp"
#include "test_util.hpp"

using namespace ioc;

namespace {

AuditOptions tree_options(std::size_t n_max, std::size_t delta) {
    AuditOptions o;
    o.n_min = 5;
    o.n_max = n_max;
    o.delta = delta;
    return o;
}

}  // namespace

TEST_SUITE("audit") {
    TEST_CASE("trees to 9 with delta 3") {
        auto report = audit_trees(tree_options(9, 3));
        CHECK(report.summary.violations == 0);
        CHECK(report.summary.constructor_failures == 0);
        const auto t3 = canonical_graph6(gen_subdivided_star(3).graph);
        bool saw_star = false;
        for (const auto& r : report.records) {
            CHECK(r.max_degree <= 3);
            if (r.id == t3) {
                saw_star = true;
                CHECK(r.bound_status == BoundStatus::ExceptionalStar);
            } else {
                CHECK(r.bound_status == BoundStatus::WithinBound);
            }
        }
        CHECK(saw_star);
        CHECK(report.summary.exceptional == 1);
    }

    TEST_CASE("tight tree pair is extremal at 12 vertices") {
        auto report = audit_trees(tree_options(12, 3));
        const auto id = canonical_graph6(gen_tight_tree_pair(3).graph);
        bool found = false;
        for (const auto& r : report.records) {
            if (r.id != id) continue;
            found = true;
            CHECK(r.gamma == 10);
            CHECK(r.is_extremal);
        }
        CHECK(found);
    }

    TEST_CASE("five-vertex trees") {
        auto report = audit_trees(tree_options(5, 3));
        REQUIRE_FALSE(report.records.empty());
        for (const auto& r : report.records) CHECK(r.gamma >= 4);
    }

    TEST_CASE("records are consistent") {
        AuditOptions o = tree_options(11, 0);
        o.oracle_max_order = 11;
        auto report = audit_trees(o);
        for (const auto& r : report.records) {
            CHECK(r.gamma <= r.constructor_size);
            CHECK(r.constructor_size <= r.n);
            auto g = parse_graph6(r.id);
            CHECK(is_io_code(g, r.witness).ok);
            CHECK(r.witness.size() == r.gamma);
            const bool equality = 2 * r.delta * r.gamma == (2 * r.delta - 1) * r.n;
            CHECK(r.is_extremal == (equality && r.bound_status != BoundStatus::ExceptionalStar));
            REQUIRE(r.oracle_agrees.has_value());
            CHECK(*r.oracle_agrees);
        }
        CHECK(report.summary.oracle_checked == report.records.size());
    }

    TEST_CASE("gamma does not depend on delta") {
        auto a = audit_trees(tree_options(10, 4));
        auto b = audit_trees(tree_options(10, 6));
        std::map<std::string, std::size_t> gamma;
        for (const auto& r : a.records) gamma[r.id] = r.gamma;
        for (const auto& r : b.records) {
            if (gamma.count(r.id)) CHECK(r.gamma <= gamma[r.id]);
        }
        CHECK(b.records.size() >= a.records.size());
    }

    TEST_CASE("summaries are byte-identical across runs and worker counts") {
        AuditOptions o = tree_options(11, 0);
        o.workers = 1;
        auto a = audit_trees(o);
        o.workers = 4;
        auto b = audit_trees(o);
        CHECK(a.summary_json() == b.summary_json());
        CHECK(a.to_csv() == b.to_csv());
    }

    TEST_CASE("graphs to 6 vertices") {
        AuditOptions o;
        o.n_min = 5;
        o.n_max = 6;
        o.delta = 3;
        o.oracle_max_order = 6;
        auto report = audit_graphs(o);
        CHECK(report.summary.violations == 0);
        CHECK(report.summary.constructor_failures == 0);
        CHECK(report.summary.oracle_mismatches == 0);
        const auto c5 = canonical_graph6(testutil::cycle(5));
        bool saw_c5 = false;
        for (const auto& r : report.records) {
            if (r.id == c5) {
                saw_c5 = true;
                CHECK(r.gamma == 4);
                CHECK(r.bound_status == BoundStatus::WithinBound);
            }
            CHECK(r.labeled_copies >= 1);
        }
        CHECK(saw_c5);
    }

    TEST_CASE("sampled graph audit records its seed") {
        AuditOptions o;
        o.n_min = 8;
        o.n_max = 9;
        o.samples_per_order = 20;
        o.seed = 42;
        auto a = audit_graphs(o);
        auto b = audit_graphs(o);
        CHECK(a.summary_json() == b.summary_json());
        auto j = nlohmann::json::parse(a.summary_json());
        CHECK(j.at("seed") == 42);
        CHECK(j.at("violations") == 0);
        CHECK_FALSE(j.contains("runtime_ms"));
        CHECK(nlohmann::json::parse(a.summary_json(true)).contains("runtime_ms"));
    }

    TEST_CASE("parameter checks") {
        AuditOptions o = tree_options(17, 3);
        CHECK_THROWS_AS(audit_trees(o), Error);
        o = tree_options(9, 2);
        CHECK_THROWS_AS(audit_trees(o), Error);
        o.delta = 3;
        o.n_min = 4;
        CHECK_THROWS_AS(audit_trees(o), Error);
    }

    TEST_CASE("tight family report") {
        TightFamilyOptions o;
        o.delta_max = 3;
        o.p_max = 3;
        auto j = nlohmann::json::parse(verify_tight_families(o));
        CHECK(j.at("ok") == true);
    }

    TEST_CASE("CSV layout") {
        auto report = audit_trees(tree_options(6, 3));
        auto csv = report.to_csv();
        CHECK(csv.rfind("id,n,m,max_degree,delta,twin_free,c4_free,gamma,constructor_size,bound_status,", 0) == 0);
        std::size_t lines = 0;
        for (char c : csv) lines += c == '\n';
        CHECK(lines == report.records.size() + 1);
    }
}
