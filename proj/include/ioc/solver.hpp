#pragma once

#include <cstdint>
#include <optional>

#include "ioc/graph.hpp"

namespace ioc {

enum class SolveMethod { Oracle, BranchAndBound };
const char* to_string(SolveMethod method) noexcept;

struct SolveResult {
    std::size_t gamma = 0;
    VertexSet code;
    std::uint64_t nodes_explored = 0;
    SolveMethod method = SolveMethod::BranchAndBound;
    double wall_time_ms = 0.0;
};

inline constexpr std::size_t kDefaultOracleMaxOrder = 24;

/// Exhaustive search over vertex subsets in order of increasing cardinality;
/// the first identifying open code found is optimal. Refuses graphs above
/// max_order (TooLarge, hard ceiling 30) and graphs without a code (NoCode).
SolveResult solve_oracle(const Graph& g, std::size_t max_order = kDefaultOracleMaxOrder);

/// Exact minimum identifying open code by branch-and-bound.
///
/// The problem is treated as a hitting set: a code must meet N(v) for every v
/// and the symmetric difference N(u) Δ N(v) for every pair u, v. Pairs without
/// a common neighbour are implied by domination and dropped, as is any
/// requirement containing another. Support vertices are placed in the code up
/// front; requirements left with a single admissible vertex force it, and
/// requirements left with none fail the branch. The lower bound packs
/// pairwise-disjoint open requirements. Single-threaded and deterministic.
SolveResult solve(const Graph& g);

/// Exact decision: some code of size at most max_size, or nullopt if none
/// exists.
std::optional<VertexSet> solve_with_budget(const Graph& g, std::size_t max_size);

}  // namespace ioc
