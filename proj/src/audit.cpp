#include "ioc/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "ioc/enumerate.hpp"
#include "ioc/families.hpp"
#include "ioc/graph_io.hpp"
#include "ioc/solver.hpp"
#include "ioc/verify.hpp"
#include "json.hpp"

namespace ioc {

unsigned default_workers() {
    if (const char* env = std::getenv("IOC_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

std::size_t effective_delta(std::size_t requested, const Graph& g) {
    return requested != 0 ? requested : std::max<std::size_t>(3, max_degree(g));
}

std::string safe_canonical(const Graph& g) {
    try {
        return canonical_graph6(g);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        return to_graph6(g);
    }
}

struct ConstructorCheck {
    bool valid = false;
    std::size_t size = 0;
    BoundStatus status = BoundStatus::Violation;
    std::string error;
};

ConstructorCheck run_constructor(const Graph& g, std::size_t delta) {
    ConstructorCheck out;
    try {
        const Construction c = is_tree(g) ? construct_tree_code(g, delta) : construct_graph_code(g, delta);
        out.valid = is_io_code(g, c.code).ok && c.trace.replay(g.order()) == c.code;
        out.size = c.code.size();
        out.status = c.bound_status;
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

void summarize(AuditReport& report) {
    AuditSummary& s = report.summary;
    s.instances = report.records.size();
    for (const AuditRecord& r : report.records) {
        const bool constructor_bad = !r.constructor_valid || r.constructor_status == BoundStatus::Violation;
        if (r.bound_status == BoundStatus::Violation || constructor_bad) ++s.violations;
        if (!r.constructor_valid) ++s.constructor_failures;
        if (r.bound_status == BoundStatus::ExceptionalStar) ++s.exceptional;
        if (r.is_subdivided_star) ++s.subdivided_stars;
        if ((r.bound_status == BoundStatus::ExceptionalStar) != r.is_subdivided_star) {
            s.exceptional_matches_stars = false;
        }
        if (r.is_extremal) ++s.extremal;
        if (r.oracle_agrees) {
            ++s.oracle_checked;
            if (!*r.oracle_agrees) ++s.oracle_mismatches;
        }
    }
}

void random_pruefer_tree_edges(std::size_t n, std::mt19937_64& rng, std::vector<Edge>& edges) {
    edges.clear();
    if (n == 2) {
        edges.push_back({0, 1});
        return;
    }
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : seq) ++degree[x];
    for (Vertex x : seq) {
        for (Vertex leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.push_back({leaf, x});
                --degree[leaf];
                --degree[x];
                break;
            }
        }
    }
    Vertex a = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (a == kNoVertex) {
                a = v;
            } else {
                edges.push_back({a, v});
                break;
            }
        }
    }
}

// Random connected, open twin-free, 4-cycle-free graph: a random tree with
// extra edges that keep it free of 4-cycles.
std::optional<Graph> sample_graph(std::size_t n, std::size_t delta, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    random_pruefer_tree_edges(n, rng, edges);
    Graph g(n, edges);
    if (delta != 0 && max_degree(g) > delta) return std::nullopt;
    std::uniform_int_distribution<std::size_t> extra_count(0, n / 2);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const std::size_t extra = extra_count(rng);
    for (std::size_t i = 0; i < extra; ++i) {
        const Vertex u = pick(rng);
        const Vertex v = pick(rng);
        if (u == v || g.adjacent(u, v)) continue;
        if (delta != 0 && (g.degree(u) >= delta || g.degree(v) >= delta)) continue;
        std::vector<Edge> trial = g.edges();
        trial.push_back({u, v});
        Graph candidate(n, trial);
        if (!has_four_cycle(candidate)) g = std::move(candidate);
    }
    if (!is_open_twin_free(g)) return std::nullopt;
    return g;
}

}  // namespace

AuditRecord audit_instance(const Graph& input, std::size_t delta_param, std::size_t oracle_max_order) {
    AuditRecord r;
    r.id = safe_canonical(input);
    // Work on the graph the id decodes to, so the witness is meaningful
    // next to the id in reports.
    const Graph g = parse_graph6(r.id);
    r.n = g.order();
    r.m = g.size();
    r.max_degree = max_degree(g);
    r.delta = effective_delta(delta_param, g);
    r.twin_free = is_open_twin_free(g);
    r.c4_free = !has_four_cycle(g);

    const SolveResult s = solve(g);
    r.gamma = s.gamma;
    r.witness = s.code;
    r.is_subdivided_star = is_subdivided_star(g) && r.n == 2 * r.delta + 1;
    r.bound_status = check_bound(r.n, r.gamma, r.delta, r.is_subdivided_star);
    r.is_extremal = r.bound_status != BoundStatus::ExceptionalStar &&
                    2 * r.delta * r.gamma == (2 * r.delta - 1) * r.n;

    const ConstructorCheck c = run_constructor(g, r.delta);
    r.constructor_valid = c.valid;
    r.constructor_size = c.size;
    r.constructor_status = c.status;
    r.error = c.error;

    if (oracle_max_order != 0 && r.n <= oracle_max_order) {
        r.oracle_agrees = solve_oracle(g, std::max(oracle_max_order, kDefaultOracleMaxOrder)).gamma == r.gamma;
    }
    return r;
}

AuditReport audit_trees(const AuditOptions& options) {
    if (options.n_min < 5 || options.n_max > 16 || options.n_min > options.n_max) {
        throw Error(ErrorCode::BadParam, "tree audit needs 5 <= n_min <= n_max <= 16");
    }
    if (options.delta != 0 && options.delta < 3) throw Error(ErrorCode::BadParam, "delta must be at least 3");
    const auto start = Clock::now();
    std::vector<Graph> trees;
    for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
        for_each_tree(n, [&](const Graph& t) {
            if (!is_open_twin_free(t)) return true;
            if (options.delta != 0 && max_degree(t) > options.delta) return true;
            trees.push_back(t);
            return true;
        });
    }
    AuditReport report;
    report.records.resize(trees.size());
    const unsigned workers = options.workers != 0 ? options.workers : default_workers();
    parallel_for(trees.size(), workers, [&](std::size_t i) {
        report.records[i] = audit_instance(trees[i], options.delta, options.oracle_max_order);
    });
    report.summary.kind = "trees";
    report.summary.n_min = options.n_min;
    report.summary.n_max = options.n_max;
    report.summary.delta = options.delta;
    summarize(report);
    report.summary.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

AuditReport audit_graphs(const AuditOptions& options) {
    if (options.n_min < 5 || options.n_min > options.n_max) {
        throw Error(ErrorCode::BadParam, "graph audit needs 5 <= n_min <= n_max");
    }
    if (options.n_max > kMaxExhaustiveGraphOrder && options.samples_per_order == 0) {
        throw Error(ErrorCode::BadParam, "orders above 7 require a sample count");
    }
    if (options.delta != 0 && options.delta < 3) throw Error(ErrorCode::BadParam, "delta must be at least 3");
    const auto start = Clock::now();
    const unsigned workers = options.workers != 0 ? options.workers : default_workers();

    GraphFilter filter;
    filter.connected = true;
    filter.twin_free = true;
    filter.four_cycle_free = true;
    if (options.delta != 0) filter.max_degree = options.delta;

    AuditReport report;
    for (std::size_t n = options.n_min; n <= std::min(options.n_max, kMaxExhaustiveGraphOrder); ++n) {
        std::vector<Graph> labeled;
        for_each_labeled_graph(n, filter, [&](const Graph& g) {
            labeled.push_back(g);
            return true;
        });
        std::vector<std::string> ids(labeled.size());
        std::vector<ConstructorCheck> checks(labeled.size());
        parallel_for(labeled.size(), workers, [&](std::size_t i) {
            ids[i] = canonical_graph6(labeled[i]);
            checks[i] = run_constructor(labeled[i], effective_delta(options.delta, labeled[i]));
        });

        // Group labeled copies by isomorphism class, in first-seen order.
        std::map<std::string, std::size_t> class_of;
        std::vector<std::size_t> representative;
        std::vector<std::vector<std::size_t>> copies;
        for (std::size_t i = 0; i < labeled.size(); ++i) {
            auto [it, inserted] = class_of.emplace(ids[i], representative.size());
            if (inserted) {
                representative.push_back(i);
                copies.emplace_back();
            }
            copies[it->second].push_back(i);
        }
        std::vector<AuditRecord> records(representative.size());
        parallel_for(representative.size(), workers, [&](std::size_t c) {
            AuditRecord r = audit_instance(labeled[representative[c]], options.delta, options.oracle_max_order);
            r.labeled_copies = copies[c].size();
            for (std::size_t i : copies[c]) {
                const ConstructorCheck& chk = checks[i];
                if (!chk.valid) {
                    r.constructor_valid = false;
                    if (r.error.empty()) r.error = chk.error.empty() ? "invalid code on a labeled copy" : chk.error;
                }
                if (chk.status == BoundStatus::Violation) r.constructor_status = BoundStatus::Violation;
                r.constructor_size = std::max(r.constructor_size, chk.size);
            }
            records[c] = std::move(r);
        });
        report.records.insert(report.records.end(), records.begin(), records.end());
    }

    if (options.n_max > kMaxExhaustiveGraphOrder) {
        report.summary.seed = options.seed;
        for (std::size_t n = std::max(options.n_min, kMaxExhaustiveGraphOrder + 1); n <= options.n_max; ++n) {
            std::mt19937_64 rng(options.seed * 1000003ULL + n);
            std::vector<Graph> samples;
            std::size_t attempts = 0;
            while (samples.size() < options.samples_per_order && attempts < 1000 * options.samples_per_order) {
                ++attempts;
                if (auto g = sample_graph(n, options.delta, rng)) samples.push_back(std::move(*g));
            }
            std::vector<AuditRecord> records(samples.size());
            parallel_for(samples.size(), workers, [&](std::size_t i) {
                records[i] = audit_instance(samples[i], options.delta, options.oracle_max_order);
            });
            report.records.insert(report.records.end(), records.begin(), records.end());
        }
    }

    report.summary.kind = "graphs";
    report.summary.n_min = options.n_min;
    report.summary.n_max = options.n_max;
    report.summary.delta = options.delta;
    summarize(report);
    report.summary.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

std::string AuditReport::to_csv() const {
    std::string out =
        "id,n,m,max_degree,delta,twin_free,c4_free,gamma,constructor_size,bound_status,constructor_status,"
        "constructor_valid,is_extremal,labeled_copies,oracle_agrees,witness\n";
    auto flag = [](bool b) { return b ? "1" : "0"; };
    for (const AuditRecord& r : records) {
        out += r.id + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.max_degree) +
               ',' + std::to_string(r.delta) + ',' + flag(r.twin_free) + ',' + flag(r.c4_free) + ',' +
               std::to_string(r.gamma) + ',' + std::to_string(r.constructor_size) + ',' +
               to_string(r.bound_status) + ',' + to_string(r.constructor_status) + ',' +
               flag(r.constructor_valid) + ',' + flag(r.is_extremal) + ',' + std::to_string(r.labeled_copies) +
               ',' + (r.oracle_agrees ? flag(*r.oracle_agrees) : "") + ',';
        bool first = true;
        r.witness.for_each([&](Vertex v) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

std::string AuditReport::summary_json(bool include_runtime) const {
    const AuditSummary& s = summary;
    nlohmann::ordered_json j;
    j["kind"] = s.kind;
    j["n_min"] = s.n_min;
    j["n_max"] = s.n_max;
    j["delta"] = s.delta == 0 ? nlohmann::ordered_json("auto") : nlohmann::ordered_json(s.delta);
    j["instances"] = s.instances;
    j["violations"] = s.violations;
    j["constructor_failures"] = s.constructor_failures;
    j["exceptional"] = s.exceptional;
    j["subdivided_stars"] = s.subdivided_stars;
    j["exceptional_matches_stars"] = s.exceptional_matches_stars;
    j["extremal"] = s.extremal;
    j["oracle_checked"] = s.oracle_checked;
    j["oracle_mismatches"] = s.oracle_mismatches;
    if (s.seed) j["seed"] = *s.seed;
    if (include_runtime) j["runtime_ms"] = s.runtime_ms;
    return j.dump(2);
}

std::string verify_tight_families(const TightFamilyOptions& options) {
    if (options.delta_max < 3 || options.p_max < 3) {
        throw Error(ErrorCode::BadParam, "tight family check needs delta_max >= 3 and p_max >= 3");
    }
    nlohmann::ordered_json report;
    bool all_ok = true;

    nlohmann::ordered_json stars = nlohmann::ordered_json::array();
    for (std::size_t d = 3; d <= options.delta_max; ++d) {
        const std::size_t star = solve(gen_subdivided_star(d).graph).gamma;
        const std::size_t reduced = solve(gen_reduced_subdivided_star(d).graph).gamma;
        const Family pair = gen_tight_tree_pair(d);
        const std::size_t pair_gamma = solve(pair.graph).gamma;
        const bool ok = star == 2 * d && reduced == 2 * d - 1 && pair_gamma == 4 * d - 2 &&
                        2 * d * pair_gamma == (2 * d - 1) * pair.graph.order();
        all_ok = all_ok && ok;
        stars.push_back({{"delta", d},
                         {"subdivided_star", star},
                         {"reduced_star", reduced},
                         {"tree_pair", pair_gamma},
                         {"tree_pair_order", pair.graph.order()},
                         {"ok", ok}});
    }
    report["stars"] = stars;

    nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
    for (std::size_t p = 3; p <= options.p_max; ++p) {
        if (p == 4) continue;
        const Family f = gen_subcubic_gp(p);
        nlohmann::ordered_json row;
        row["p"] = p;
        row["n"] = f.graph.order();
        const VertexSet& code = *f.spec.reference_code;
        const bool ref_ok = is_io_code(f.graph, code).ok && code.size() == 5 * p;
        row["reference_size"] = code.size();
        row["reference_valid"] = ref_ok;
        bool ok = ref_ok;
        if (p <= options.p_exact_max) {
            const std::size_t gamma = solve(f.graph).gamma;
            row["gamma"] = gamma;
            ok = ok && gamma == 5 * p;
        }
        if (p <= options.p_decision_max) {
            const bool none_smaller = !solve_with_budget(f.graph, 5 * p - 1).has_value();
            row["lower_bound_certified"] = none_smaller;
            ok = ok && none_smaller;
        }
        row["ok"] = ok;
        all_ok = all_ok && ok;
        cycles.push_back(row);
    }
    report["cycles"] = cycles;
    report["ok"] = all_ok;
    return report.dump(2);
}

}  // namespace ioc
