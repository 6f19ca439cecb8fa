// Acceptance runner: `ioc_acceptance --criterion N` prints one PASS/FAIL line
// (plus detail lines) and exits 0 on PASS, 1 on FAIL.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ioc/audit.hpp"
#include "ioc/enumerate.hpp"
#include "ioc/families.hpp"
#include "ioc/graph_io.hpp"
#include "ioc/solver.hpp"
#include "ioc/verify.hpp"
#include "test_util.hpp"

using namespace ioc;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            details.push_back("mismatch: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::string str(std::size_t v) { return std::to_string(v); }

// 1. Exact values of the smallest connected cases.
Outcome criterion1() {
    Outcome out;
    const auto start = Clock::now();
    struct Case {
        const char* name;
        Graph g;
        std::size_t gamma;
    };
    const std::vector<Case> cases = {{"P2", testutil::path(2), 2},   {"K3", testutil::triangle(), 2},
                                     {"P4", testutil::path(4), 4},   {"P5", testutil::path(5), 4},
                                     {"paw", testutil::paw(), 3},    {"C5", testutil::cycle(5), 4}};
    for (const auto& c : cases) {
        const auto r = solve(c.g);
        out.require(r.gamma == c.gamma && is_io_code(c.g, r.code).ok,
                    std::string(c.name) + " gamma " + str(r.gamma) + " expected " + str(c.gamma));
    }
    const double t = ms_since(start);
    out.require(t < 1000.0, "runtime over 1 s");
    return out;
}

// 2. Subdivided stars and reduced stars, solver and canonical sets.
Outcome criterion2() {
    Outcome out;
    const auto start = Clock::now();
    for (std::size_t d = 2; d <= 6; ++d) {
        const Family star = gen_subdivided_star(d);
        const std::size_t g = solve(star.graph).gamma;
        out.require(g == 2 * d, "T_" + str(d) + " gamma " + str(g));
        const VertexSet c = canonical_set(star);
        out.require(c.size() == 2 * d && is_io_code(star.graph, c).ok, "T_" + str(d) + " canonical set");
        if (d >= 3) {
            const Family reduced = gen_reduced_subdivided_star(d);
            const std::size_t gr = solve(reduced.graph).gamma;
            out.require(gr == 2 * d - 1, "T*_" + str(d) + " gamma " + str(gr));
            const VertexSet cr = canonical_set(reduced);
            out.require(cr.size() == 2 * d - 1 && is_io_code(reduced.graph, cr).ok,
                        "T*_" + str(d) + " canonical set");
        }
    }
    out.require(ms_since(start) < 5000.0, "runtime over 5 s");
    return out;
}

// 3. Canonical sets are codes across admissible attachment vectors.
Outcome criterion3() {
    Outcome out;
    const auto start = Clock::now();
    std::size_t checked = 0;
    std::vector<std::string> failed;
    auto check = [&](const AttachmentVector& k) {
        ++checked;
        const Family f = build_family_tree(k);
        if (!is_io_code(f.graph, canonical_set(f)).ok) failed.push_back(k.to_string());
    };

    // Exhaustive: k1 in {0, 1}, sum at most 5.
    AttachmentVector k;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t type, std::uint32_t left) {
        if (type > 6) {
            if (is_admissible(k)) check(k);
            return;
        }
        const std::uint32_t cap = type == 1 ? std::min<std::uint32_t>(1, left) : left;
        for (std::uint32_t c = 0; c <= cap; ++c) {
            k[type] = c;
            rec(type + 1, left - c);
        }
        k[type] = 0;
    };
    rec(1, 5);
    const std::size_t exhaustive = checked;

    // 200 seeded admissible vectors with sum at most 12.
    std::mt19937_64 rng(2024);
    std::size_t sampled = 0;
    while (sampled < 200) {
        AttachmentVector v;
        const std::uint32_t total = 2 + static_cast<std::uint32_t>(rng() % 11);
        v[1] = static_cast<std::uint32_t>(rng() % 2);
        for (std::uint32_t i = v[1]; i < total; ++i) v[2 + rng() % 5] += 1;
        if (!is_admissible(v)) continue;
        ++sampled;
        check(v);
    }
    out.note("vectors checked: " + str(exhaustive) + " exhaustive + " + str(sampled) + " sampled");
    for (const auto& f : failed) out.require(false, "canonical set is not a code for k = " + f);
    out.require(ms_since(start) < 60000.0, "runtime over 60 s");
    return out;
}

Outcome check_report(const AuditReport& r, Outcome out) {
    const auto& s = r.summary;
    out.note("instances " + str(s.instances) + ", exceptional " + str(s.exceptional) + ", stars " +
             str(s.subdivided_stars) + ", extremal " + str(s.extremal));
    out.require(s.violations == 0, str(s.violations) + " bound violations");
    out.require(s.constructor_failures == 0, str(s.constructor_failures) + " constructor failures");
    out.require(s.exceptional_matches_stars && s.exceptional == s.subdivided_stars,
                "exceptional rows differ from subdivided-star rows");
    for (const auto& rec : r.records) {
        if (!rec.constructor_valid || rec.constructor_status == BoundStatus::Violation) {
            out.require(false, "constructor output rejected on " + rec.id);
        }
        const bool star = rec.is_subdivided_star;
        if (star) {
            out.require(rec.gamma * (2 * rec.delta + 1) == 2 * rec.delta * rec.n, "star equality on " + rec.id);
        } else {
            out.require(2 * rec.delta * rec.gamma <= (2 * rec.delta - 1) * rec.n, "bound on " + rec.id);
        }
    }
    return out;
}

// 4. Exhaustive tree audit, 5 <= n <= 14.
Outcome criterion4() {
    AuditOptions o;
    o.n_min = 5;
    o.n_max = 12;
    auto start = Clock::now();
    AuditReport low = audit_trees(o);
    const double t12 = ms_since(start);
    o.n_min = 13;
    o.n_max = 14;
    start = Clock::now();
    AuditReport high = audit_trees(o);
    const double t14 = t12 + ms_since(start);

    Outcome out = check_report(low, {});
    out = check_report(high, out);
    out.note("n <= 12 in " + str(static_cast<std::size_t>(t12)) + " ms, n <= 14 in " +
             str(static_cast<std::size_t>(t14)) + " ms");
    out.require(t12 < 3 * 60 * 1000.0, "n <= 12 over 3 min");
    out.require(t14 < 30 * 60 * 1000.0, "n <= 14 over 30 min");
    return out;
}

// 5. Exhaustive graph audit over labeled graphs, n <= 7.
Outcome criterion5() {
    AuditOptions o;
    o.n_min = 5;
    o.n_max = 7;
    const auto start = Clock::now();
    AuditReport r = audit_graphs(o);
    Outcome out = check_report(r, {});
    std::size_t labeled = 0;
    for (const auto& rec : r.records) labeled += rec.labeled_copies;
    out.note("labeled graphs passing the filter: " + str(labeled));
    out.require(ms_since(start) < 30 * 60 * 1000.0, "runtime over 30 min");
    return out;
}

// 6. Subcubic cycle family.
Outcome criterion6() {
    Outcome out;
    const std::size_t g3 = solve(gen_subcubic_gp(3).graph).gamma;
    out.require(g3 == 15, "G_3 gamma " + str(g3));
    for (std::size_t p : {5u, 6u, 7u}) {
        const Family f = gen_subcubic_gp(p);
        VertexSet s = VertexSet::full(f.graph.order());
        for (std::size_t i = 1; i <= p; ++i) s.erase(f.spec.label("z" + str(i)));
        out.require(s.size() == 5 * p && is_io_code(f.graph, s).ok, "S* on G_" + str(p));
    }
    const auto start = Clock::now();
    const bool none = !solve_with_budget(gen_subcubic_gp(5).graph, 24).has_value();
    const double t = ms_since(start);
    out.note("G_5 budget-24 decision in " + str(static_cast<std::size_t>(t)) + " ms");
    out.require(none, "G_5 admits a code of size 24");
    out.require(t < 10 * 60 * 1000.0, "decision over 10 min");
    return out;
}

// 7. Tight tree pairs.
Outcome criterion7() {
    Outcome out;
    const auto start = Clock::now();
    for (std::size_t d = 3; d <= 5; ++d) {
        const Family f = gen_tight_tree_pair(d);
        const std::size_t g = solve(f.graph).gamma;
        out.require(g == 4 * d - 2, "pair at delta " + str(d) + " gamma " + str(g));
        out.require(2 * d * g == (2 * d - 1) * f.graph.order(), "equality at delta " + str(d));
        const AuditRecord rec = audit_instance(f.graph, d, 0);
        out.require(rec.is_extremal, "audit does not mark delta " + str(d) + " extremal");
    }
    out.require(ms_since(start) < 5 * 60 * 1000.0, "runtime over 5 min");
    return out;
}

// 8. Star plus one edge.
Outcome criterion8() {
    Outcome out;
    const auto start = Clock::now();
    for (std::size_t k = 2; k <= 5; ++k) {
        for (auto v : {StarPlusEdgeVariant::SupportSupport, StarPlusEdgeVariant::LeafLeaf,
                       StarPlusEdgeVariant::CenterLeaf}) {
            const Family f = gen_star_plus_edge(v, k);
            const std::string name = std::string(to_string(v)) + " k=" + str(k);
            const VertexSet& ref = *f.spec.reference_code;
            out.require(is_io_code(f.graph, ref).ok, name + " reference code invalid");
            out.require(ref.size() <= 2 * k - 1, name + " reference size " + str(ref.size()) + " > " + str(2 * k - 1));
            const std::size_t g = solve(f.graph).gamma;
            out.require(g <= 2 * k - 1, name + " gamma " + str(g) + " > " + str(2 * k - 1));
            out.require(solve_oracle(f.graph).gamma == g, name + " oracle disagrees with solver");
            if (g > 2 * k - 1) {
                const std::size_t d = std::max<std::size_t>(3, max_degree(f.graph));
                out.require(!solve_with_budget(f.graph, g - 1).has_value(), name + " budget search found smaller");
                out.note(name + ": gamma " + str(g) + " confirmed by oracle; degree bound with D=" + str(d) + " " +
                         (2 * d * g <= (2 * d - 1) * f.graph.order() ? "holds" : "fails"));
            }
        }
    }
    out.require(ms_since(start) < 60 * 1000.0, "runtime over 1 min");
    return out;
}

// 9. Branch-and-bound against exhaustive search.
Outcome criterion9() {
    Outcome out;
    const auto start = Clock::now();
    AuditOptions o;
    o.n_min = 5;
    o.n_max = 10;
    o.oracle_max_order = 10;
    const AuditReport trees = audit_trees(o);
    o.n_max = 7;
    const AuditReport graphs = audit_graphs(o);
    std::size_t compared = 0, mismatches = 0;
    for (const auto* r : {&trees, &graphs}) {
        compared += r->summary.oracle_checked;
        mismatches += r->summary.oracle_mismatches;
    }
    out.note("audited instances compared: " + str(compared));

    std::mt19937_64 rng(9);
    std::size_t random = 0;
    while (random < 500) {
        const std::size_t n = 11 + rng() % 4;
        const double p = 0.15 + 0.05 * static_cast<double>(rng() % 5);
        const Graph g = testutil::random_graph(n, p, rng);
        if (!admits_io_code(g)) continue;
        ++random;
        const auto a = solve(g);
        const auto b = solve_oracle(g);
        if (a.gamma != b.gamma) {
            ++mismatches;
            out.require(false, "random graph " + to_graph6(g));
        }
    }
    out.note("random twin-free graphs compared: " + str(random));
    out.require(mismatches == 0, str(mismatches) + " mismatches");
    out.require(ms_since(start) < 20 * 60 * 1000.0, "runtime over 20 min");
    return out;
}

// 10. Property groups, run through doctest one suite at a time.
Outcome criterion10() {
    Outcome out;
    for (const char* suite : {"property-superset-closure", "property-forced-supports", "property-twin-oracle",
                              "property-four-cycle", "property-tree-counts"}) {
        doctest::Context ctx;
        ctx.setOption("test-suite", suite);
        ctx.setOption("minimal", true);
        const int rc = ctx.run();
        out.require(rc == 0, std::string(suite) + " failed");
        if (rc == 0) out.note(std::string(suite) + " ok");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "criterion number 1-10")->required()->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome()>> runs = {criterion1, criterion2, criterion3, criterion4,
                                                        criterion5, criterion6, criterion7, criterion8,
                                                        criterion9, criterion10};
    const auto start = Clock::now();
    Outcome out;
    try {
        out = runs[criterion - 1]();
    } catch (const std::exception& e) {
        out.pass = false;
        out.details.push_back(std::string("exception: ") + e.what());
    }
    const double t = ms_since(start);
    for (const auto& d : out.details) std::cout << "  " << d << '\n';
    std::cout << "criterion " << criterion << ": " << (out.pass ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(1) << t << " ms)" << std::endl;
    return out.pass ? 0 : 1;
}
