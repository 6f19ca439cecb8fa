#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ioc/constructive.hpp"
#include "ioc/graph.hpp"

namespace ioc {

struct AuditRecord {
    std::string id;  // canonical graph6
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    std::size_t delta = 0;  // bound parameter used for this row
    bool twin_free = false;
    bool c4_free = false;
    std::size_t gamma = 0;
    std::size_t constructor_size = 0;
    BoundStatus bound_status = BoundStatus::WithinBound;        // of gamma
    BoundStatus constructor_status = BoundStatus::WithinBound;  // of the constructed code
    bool constructor_valid = false;
    bool is_extremal = false;
    bool is_subdivided_star = false;  // on exactly delta arms
    std::optional<bool> oracle_agrees;
    std::size_t labeled_copies = 1;
    VertexSet witness;
    std::string error;  // non-empty when construction failed
};

struct AuditOptions {
    std::size_t n_min = 5;
    std::size_t n_max = 5;
    /// 0 selects max(3, maximum degree) per instance; otherwise instances
    /// with larger maximum degree are skipped.
    std::size_t delta = 0;
    /// Cross-check the branch-and-bound value against the exhaustive oracle
    /// for instances up to this order (0 disables).
    std::size_t oracle_max_order = 0;
    /// Graph audits above the exhaustive limit draw this many random
    /// instances per order.
    std::size_t samples_per_order = 0;
    std::uint64_t seed = 1;
    /// 0 reads IOC_WORKERS (default 1).
    unsigned workers = 0;
};

struct AuditSummary {
    std::string kind;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t delta = 0;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::size_t constructor_failures = 0;
    std::size_t exceptional = 0;
    std::size_t subdivided_stars = 0;
    bool exceptional_matches_stars = true;
    std::size_t extremal = 0;
    std::size_t oracle_checked = 0;
    std::size_t oracle_mismatches = 0;
    std::optional<std::uint64_t> seed;
    double runtime_ms = 0.0;
};

struct AuditReport {
    std::vector<AuditRecord> records;
    AuditSummary summary;

    std::string to_csv() const;
    /// Runtime is left out unless requested so that repeated runs produce
    /// identical bytes.
    std::string summary_json(bool include_runtime = false) const;
};

/// Every open twin-free free tree with n_min <= n <= n_max (n_max <= 16).
AuditReport audit_trees(const AuditOptions& options);

/// Connected, open twin-free, 4-cycle-free graphs: exhaustive over labeled
/// graphs up to 7 vertices (one record per isomorphism class, the
/// constructor run on every labeled copy), seeded samples above.
AuditReport audit_graphs(const AuditOptions& options);

/// Audit of one instance; exposed for tests and the CLI.
AuditRecord audit_instance(const Graph& g, std::size_t delta, std::size_t oracle_max_order);

struct TightFamilyOptions {
    std::size_t delta_max = 3;
    std::size_t p_max = 3;
    /// Exact solve of the cycle family up to this p.
    std::size_t p_exact_max = 3;
    /// Budget-decision lower-bound certificate up to this p.
    std::size_t p_decision_max = 3;
};

/// JSON report: solver values for the subdivided stars, reduced stars and
/// tight tree pairs, and reference-code / exact / lower-bound checks for the
/// cycle family. The top-level "ok" is true iff every check matched.
std::string verify_tight_families(const TightFamilyOptions& options);

/// Worker count from IOC_WORKERS, defaulting to 1.
unsigned default_workers();

/// Runs fn(i) for i in [0, count) on the given number of threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace ioc
