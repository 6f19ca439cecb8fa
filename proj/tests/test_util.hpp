#pragma once

#include <random>
#include <string>
#include <vector>

#include "ioc/graph.hpp"
#include "oracles.hpp"

namespace testutil {

inline ioc::Graph from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<ioc::Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({static_cast<ioc::Vertex>(u), static_cast<ioc::Vertex>(v)});
    return ioc::Graph(n, edges);
}

inline oracle::AdjMatrix to_matrix(const ioc::Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (auto e : g.edges()) pairs.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
    return oracle::matrix(g.order(), pairs);
}

inline ioc::Graph path(std::size_t n) {
    std::vector<ioc::Edge> edges;
    for (ioc::Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return ioc::Graph(n, edges);
}

inline ioc::Graph cycle(std::size_t n) {
    std::vector<ioc::Edge> edges;
    for (ioc::Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<ioc::Vertex>((i + 1) % n)});
    return ioc::Graph(n, edges);
}

inline ioc::Graph star(std::size_t leaves) {
    std::vector<ioc::Edge> edges;
    for (ioc::Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return ioc::Graph(leaves + 1, edges);
}

inline ioc::Graph triangle() { return ioc::Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Triangle 0-1-2 with pendant 3 on vertex 0.
inline ioc::Graph paw() { return ioc::Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

inline ioc::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    return from_pairs(n, oracle::random_edges(n, p, rng));
}

inline ioc::VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    ioc::VertexSet s(n);
    for (ioc::Vertex v = 0; v < n; ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

inline std::uint64_t mask_of(const ioc::VertexSet& s) {
    std::uint64_t m = 0;
    s.for_each([&](ioc::Vertex v) { m |= std::uint64_t{1} << v; });
    return m;
}

inline std::string fixture(const std::string& name) { return std::string(IOC_FIXTURE_DIR) + "/" + name; }

}  // namespace testutil
