#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ioc/graph.hpp"

namespace ioc {

/// Outcome of a code predicate. When a check fails, the witness is the
/// lowest-index undominated vertex or the lexicographically smallest pair with
/// equal signatures.
struct Verdict {
    bool ok = true;
    std::optional<Vertex> undominated;
    std::optional<std::pair<Vertex, Vertex>> collision;
};

/// N(v) ∩ S, the identifier of v under the candidate code S.
VertexSet signature(const Graph& g, const VertexSet& code, Vertex v);

Verdict is_total_dominating(const Graph& g, const VertexSet& code);
Verdict is_separating_open_code(const Graph& g, const VertexSet& code);

/// Total domination is checked first; only the first failing predicate is
/// reported.
Verdict is_io_code(const Graph& g, const VertexSet& code);

/// True iff g is isolate-free and open twin-free.
bool admits_io_code(const Graph& g);

}  // namespace ioc
