#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ioc/error.hpp"

namespace ioc {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of vertex indices drawn from the universe {0, ..., universe-1},
/// stored as a packed array of 64-bit words.
///
/// Binary operations require both operands to share a universe and throw
/// ErrorCode::UniverseMismatch otherwise.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    /// Members in increasing order.
    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    /// Total order on equal-universe sets; used to sort signatures.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

private:
    void check_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// are rejected with BadParam and out-of-range endpoints with InvalidVertex.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return lists_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Neighbors of v in increasing order.
    std::span<const Vertex> neighbors(Vertex v) const;
    const VertexSet& neighborhood(Vertex v) const;

    /// All edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;

private:
    void check_vertex(Vertex v) const;

    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> lists_;
    std::vector<VertexSet> sets_;
};

/// A graph derived from a parent graph together with translation tables:
/// to_parent[new] = old and from_parent[old] = new (or kNoVertex).
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> from_parent;
};

struct VertexClass {
    bool leaf = false;
    bool support = false;
    bool strong_support = false;
    bool internal = false;
};

VertexSet open_neighborhood(const Graph& g, Vertex v);
std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

/// Unordered pairs {u, v} (u < v) with equal open neighborhoods, sorted.
std::vector<std::pair<Vertex, Vertex>> find_open_twins(const Graph& g);
bool is_open_twin_free(const Graph& g);

/// True iff some two distinct vertices have at least two common neighbors.
bool has_four_cycle(const Graph& g);

bool is_connected(const Graph& g);
std::vector<Subgraph> components(const Graph& g);
bool is_tree(const Graph& g);

std::vector<VertexClass> classify_vertices(const Graph& g);

/// BFS distances from source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);
std::size_t diameter(const Graph& g);

/// Endpoint-to-endpoint vertex sequence of a longest path, found by two
/// breadth-first sweeps (start at 0, then from the farthest vertex). Ties go
/// to the lowest index.
std::vector<Vertex> longest_path_in_tree(const Graph& t);

Graph delete_edge(const Graph& g, Edge e);
Subgraph delete_vertex(const Graph& g, Vertex v);
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// A chordless cycle: the shortest cycle through the lowest-index vertex that
/// lies on any cycle, starting at that vertex. Empty for forests.
std::vector<Vertex> find_induced_cycle(const Graph& g);

}  // namespace ioc
