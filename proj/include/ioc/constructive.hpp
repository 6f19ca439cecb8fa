#pragma once

#include <string>
#include <vector>

#include "ioc/graph.hpp"

namespace ioc {

enum class BoundStatus { WithinBound, ExceptionalStar, Violation };
const char* to_string(BoundStatus status) noexcept;

/// Integer test of 2*delta*size <= (2*delta-1)*n. When the caller asserts
/// the instance is the subdivided star on delta arms, the exact exceptional
/// size (size*(2*delta+1) == 2*delta*n) reports ExceptionalStar instead.
BoundStatus check_bound(std::size_t n, std::size_t size, std::size_t delta, bool is_subdivided_star);

/// One reduction or base step of a construction. Vertices are indices into
/// the caller's input graph.
struct TraceStep {
    std::string rule;
    std::string detail;
    std::size_t depth = 0;
    std::size_t order = 0;  // of the sub-instance handled at this step
    std::size_t size = 0;
    std::vector<Vertex> contributed;
};

struct ConstructionTrace {
    std::vector<TraceStep> steps;

    /// Union of all contributed vertices.
    VertexSet replay(std::size_t n) const;
    std::string to_json() const;
};

struct Construction {
    VertexSet code;
    ConstructionTrace trace;
    BoundStatus bound_status = BoundStatus::WithinBound;
    /// Input is the subdivided star on delta arms.
    bool exceptional = false;
};

/// IO-code of an open twin-free tree on n >= 5 vertices with maximum degree at
/// most delta (delta >= 3), within the (2*delta-1)/(2*delta) bound unless the
/// tree is the subdivided star on delta arms.
///
/// Errors: EmptyGraph, Disconnected, NotATree, TooSmall (n < 5), BadParam
/// (delta < 3), DegreeExceeded, NoCode (open twins). An output that fails
/// verification raises Internal with the trace in the message.
Construction construct_tree_code(const Graph& t, std::size_t delta);

/// Same guarantee for connected, open twin-free graphs without 4-cycles.
/// Additionally raises FourCyclePresent.
Construction construct_graph_code(const Graph& g, std::size_t delta);

}  // namespace ioc
