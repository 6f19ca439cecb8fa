#include "ioc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace ioc {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotPresent: return "NotPresent";
        case ErrorCode::UniverseMismatch: return "UniverseMismatch";
        case ErrorCode::NoCode: return "NoCode";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadParam: return "BadParam";
        case ErrorCode::NotInFamily: return "NotInFamily";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::DegreeExceeded: return "DegreeExceeded";
        case ErrorCode::FourCyclePresent: return "FourCyclePresent";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (const std::size_t tail = universe % 64; tail != 0) {
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    }
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += static_cast<std::size_t>(__builtin_popcountll(w));
    return count;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " outside universe of size " +
                        std::to_string(universe_));
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " outside universe of size " +
                        std::to_string(universe_));
    }
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) {
        throw Error(ErrorCode::UniverseMismatch,
                    "vertex sets over universes " + std::to_string(universe_) + " and " +
                        std::to_string(other.universe_));
    }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t VertexSet::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (std::uint64_t w : words_) {
        h ^= static_cast<std::size_t>(w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
    return h;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : lists_(n) {
    sets_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) sets_.emplace_back(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw Error(ErrorCode::InvalidVertex,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." + std::to_string(n) + "-1");
        }
        if (e.u == e.v) {
            throw Error(ErrorCode::BadParam, "self-loop at vertex " + std::to_string(e.u));
        }
        if (sets_[e.u].contains(e.v)) continue;
        sets_[e.u].insert(e.v);
        sets_[e.v].insert(e.u);
        ++edge_count_;
    }
    for (std::size_t v = 0; v < n; ++v) lists_[v] = sets_[v].members();
}

void Graph::check_vertex(Vertex v) const {
    if (v >= lists_.size()) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " not in graph of order " +
                        std::to_string(lists_.size()));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return sets_[u].contains(v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return lists_[v];
}

const VertexSet& Graph::neighborhood(Vertex v) const {
    check_vertex(v);
    return sets_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < lists_.size(); ++u) {
        for (Vertex v : lists_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural queries

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighborhood(v); }

std::size_t max_degree(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "max_degree of the empty graph");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "min_degree of the empty graph");
    std::size_t best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

std::vector<std::pair<Vertex, Vertex>> find_open_twins(const Graph& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const auto c = g.neighborhood(a) <=> g.neighborhood(b);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<std::pair<Vertex, Vertex>> twins;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && g.neighborhood(order[j]) == g.neighborhood(order[i])) ++j;
        for (std::size_t a = i; a < j; ++a) {
            for (std::size_t b = a + 1; b < j; ++b) twins.emplace_back(order[a], order[b]);
        }
        i = j;
    }
    std::sort(twins.begin(), twins.end());
    return twins;
}

bool is_open_twin_free(const Graph& g) { return find_open_twins(g).empty(); }

bool has_four_cycle(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) < 2) continue;
        for (Vertex v = u + 1; v < n; ++v) {
            if ((g.neighborhood(u) & g.neighborhood(v)).size() >= 2) return true;
        }
    }
    return false;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.order(), kInf);
    std::deque<Vertex> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kInf) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == static_cast<std::size_t>(-1); });
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order()) {
        throw Error(ErrorCode::UniverseMismatch, "induced_subgraph: vertex set universe mismatch");
    }
    Subgraph sub;
    sub.from_parent.assign(g.order(), kNoVertex);
    keep.for_each([&](Vertex v) {
        sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    });
    std::vector<Edge> edges;
    for (Vertex nu = 0; nu < sub.to_parent.size(); ++nu) {
        for (Vertex w : g.neighbors(sub.to_parent[nu])) {
            const Vertex nw = sub.from_parent[w];
            if (nw != kNoVertex && nu < nw) edges.push_back({nu, nw});
        }
    }
    sub.graph = Graph(sub.to_parent.size(), edges);
    return sub;
}

std::vector<Subgraph> components(const Graph& g) {
    std::vector<Subgraph> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet part(g.order());
        std::deque<Vertex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            part.insert(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push_back(induced_subgraph(g, part));
    }
    return out;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::vector<VertexClass> classify_vertices(const Graph& g) {
    std::vector<VertexClass> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        out[v].leaf = g.degree(v) == 1;
        out[v].internal = g.degree(v) >= 2;
        std::size_t leaves = 0;
        for (Vertex w : g.neighbors(v)) {
            if (g.degree(w) == 1) ++leaves;
        }
        out[v].support = leaves >= 1;
        out[v].strong_support = leaves >= 2;
    }
    return out;
}

std::size_t diameter(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "diameter of the empty graph");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        for (std::size_t d : distances_from(g, v)) {
            if (d == static_cast<std::size_t>(-1)) {
                throw Error(ErrorCode::Disconnected, "diameter of a disconnected graph");
            }
            best = std::max(best, d);
        }
    }
    return best;
}

namespace {

Vertex farthest_lowest(const std::vector<std::size_t>& dist) {
    Vertex best = 0;
    for (Vertex v = 1; v < dist.size(); ++v) {
        if (dist[v] > dist[best]) best = v;
    }
    return best;
}

}  // namespace

std::vector<Vertex> longest_path_in_tree(const Graph& t) {
    if (t.order() == 0) throw Error(ErrorCode::EmptyGraph, "longest path of the empty graph");
    if (!is_connected(t)) throw Error(ErrorCode::Disconnected, "longest path of a disconnected graph");
    if (t.size() + 1 != t.order()) throw Error(ErrorCode::NotATree, "longest_path_in_tree on a cyclic graph");

    const Vertex a = farthest_lowest(distances_from(t, 0));
    const auto dist = distances_from(t, a);
    const Vertex b = farthest_lowest(dist);

    // Walk back from b towards a along strictly decreasing distance.
    std::vector<Vertex> path{b};
    Vertex cur = b;
    while (cur != a) {
        for (Vertex w : t.neighbors(cur)) {
            if (dist[w] + 1 == dist[cur]) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Graph delete_edge(const Graph& g, Edge e) {
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
        throw Error(ErrorCode::NotPresent,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not present");
    }
    std::vector<Edge> edges = g.edges();
    const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    edges.erase(std::find(edges.begin(), edges.end(), key));
    return Graph(g.order(), edges);
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw Error(ErrorCode::NotPresent, "vertex " + std::to_string(v) + " not present");
    }
    VertexSet keep = VertexSet::full(g.order());
    keep.erase(v);
    return induced_subgraph(g, keep);
}

std::vector<Vertex> find_induced_cycle(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> branch(n);
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) < 2) continue;
        std::fill(dist.begin(), dist.end(), static_cast<std::size_t>(-1));
        std::fill(branch.begin(), branch.end(), kNoVertex);
        dist[s] = 0;
        parent[s] = kNoVertex;
        std::deque<Vertex> queue;
        for (Vertex w : g.neighbors(s)) {
            dist[w] = 1;
            parent[w] = s;
            branch[w] = w;
            queue.push_back(w);
        }
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == static_cast<std::size_t>(-1)) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    branch[w] = branch[u];
                    queue.push_back(w);
                }
            }
        }
        // A non-tree edge joining two different branches closes a cycle
        // through s of length dist[x] + dist[y] + 1.
        std::size_t best_len = static_cast<std::size_t>(-1);
        Edge best{};
        for (Vertex x = 0; x < n; ++x) {
            if (x == s || dist[x] == static_cast<std::size_t>(-1)) continue;
            for (Vertex y : g.neighbors(x)) {
                if (y <= x || y == s || branch[y] == branch[x]) continue;
                const std::size_t len = dist[x] + dist[y] + 1;
                if (len < best_len) {
                    best_len = len;
                    best = {x, y};
                }
            }
        }
        if (best_len == static_cast<std::size_t>(-1)) continue;

        std::vector<Vertex> left;
        for (Vertex cur = best.u; cur != s; cur = parent[cur]) left.push_back(cur);
        std::vector<Vertex> right;
        for (Vertex cur = best.v; cur != s; cur = parent[cur]) right.push_back(cur);
        std::vector<Vertex> cycle{s};
        cycle.insert(cycle.end(), left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end());
        return cycle;
    }
    return {};
}

}  // namespace ioc
