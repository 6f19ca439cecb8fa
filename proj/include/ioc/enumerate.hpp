#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ioc/graph.hpp"

namespace ioc {

inline constexpr std::size_t kMaxTreeOrder = 20;
inline constexpr std::size_t kMaxExhaustiveGraphOrder = 7;

/// Calls visit once per unlabeled free tree on n vertices (1 <= n <=
/// kMaxTreeOrder), using the canonical level-sequence successor method.
/// Returning false from visit stops the walk.
void for_each_tree(std::size_t n, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_trees(std::size_t n);

struct GraphFilter {
    bool connected = false;
    bool twin_free = false;
    bool four_cycle_free = false;
    std::optional<std::size_t> max_degree;
};

/// Every labeled graph on n <= kMaxExhaustiveGraphOrder vertices (all edge
/// subsets, in increasing bitmask order) that passes the filter.
void for_each_labeled_graph(std::size_t n, const GraphFilter& filter,
                            const std::function<bool(const Graph&)>& visit);

/// Filtered graphs on n vertices, optionally one per isomorphism class (the
/// first labeled representative in enumeration order).
std::vector<Graph> enumerate_small_graphs(std::size_t n, const GraphFilter& filter, bool dedup);

/// An isomorphism-invariant graph6 string. Trees use rooted-tree codes at the
/// center; other graphs minimise the adjacency bit string over vertex orders
/// compatible with a refined degree partition. Throws TooLarge when that
/// search would be too big (roughly n > 16 with large symmetric classes).
std::string canonical_graph6(const Graph& g);

/// Relabels a tree into canonical order: old vertex order[i] becomes i.
std::vector<Vertex> canonical_tree_order(const Graph& t);

/// Applies a vertex permutation: vertex order[i] of g becomes vertex i.
Graph relabel(const Graph& g, const std::vector<Vertex>& order);

}  // namespace ioc
