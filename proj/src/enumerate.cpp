#include "ioc/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "ioc/graph_io.hpp"

namespace ioc {

namespace {

using Layout = std::vector<int>;

// Successor of a rooted level sequence; p is the position to advance.
std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = std::nullopt) {
    std::size_t p;
    if (start) {
        p = *start;
    } else {
        p = pred.size() - 1;
        while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout result = pred;
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

// Splits a level sequence into the first subtree of the root (levels
// shifted down by one) and the remainder.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
    bool one_found = false;
    std::size_t m = layout.size();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    Layout left;
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    Layout rest{0};
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

// Returns the candidate if it is the canonical (centre-rooted) layout of a
// free tree, otherwise the next candidate to test.
std::optional<Layout> next_tree(const Layout& candidate) {
    const auto [left, rest] = split_tree(candidate);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) {
            valid = false;
        } else if (left.size() == rest.size() && left > rest) {
            valid = false;
        }
    }
    if (valid) return candidate;

    const std::size_t p = left.size();
    auto next = next_rooted_tree(candidate, p);
    if (!next) return std::nullopt;
    if (candidate[p] > 2) {
        const auto [new_left, new_rest] = split_tree(*next);
        const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
        const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
        for (std::size_t i = 0; i < len; ++i) {
            (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
        }
    }
    return next;
}

Graph layout_to_graph(const Layout& layout) {
    std::vector<Edge> edges;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (!stack.empty()) {
            while (layout[stack.back()] >= layout[i]) stack.pop_back();
            edges.push_back({static_cast<Vertex>(stack.back()), static_cast<Vertex>(i)});
        }
        stack.push_back(i);
    }
    return Graph(layout.size(), edges);
}

// ---- tree canonical form ----

std::vector<Vertex> tree_centers(const Graph& t) {
    const std::size_t n = t.order();
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : t.neighbors(v)) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Graph& t, Vertex v, Vertex parent, std::vector<std::string>& codes) {
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v)) {
        if (w != parent) kids.push_back(rooted_code(t, w, v, codes));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    codes[v] = s;
    return s;
}

std::vector<Vertex> bfs_order(const Graph& t, Vertex root, const std::vector<std::string>& codes) {
    std::vector<Vertex> order{root};
    std::vector<bool> seen(t.order(), false);
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::vector<Vertex> kids;
        for (Vertex w : t.neighbors(order[head])) {
            if (!seen[w]) {
                seen[w] = true;
                kids.push_back(w);
            }
        }
        std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return codes[a] < codes[b]; });
        order.insert(order.end(), kids.begin(), kids.end());
    }
    return order;
}

// ---- general canonical form ----

std::vector<int> refine_colors(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(v));
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (Vertex v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        }
        if (uniq.size() == classes) break;
        classes = uniq.size();
    }
    return color;
}

class MinAdjacencySearch {
public:
    MinAdjacencySearch(const Graph& g, std::vector<int> color) : g_(g), color_(std::move(color)) {
        const std::size_t n = g.order();
        slot_color_.resize(n);
        std::vector<int> sorted = color_;
        std::sort(sorted.begin(), sorted.end());
        slot_color_ = sorted;
        perm_.resize(n);
        used_.assign(n, false);
        best_.assign(n * (n > 0 ? n - 1 : 0) / 2, 2);
        current_.resize(best_.size());
    }

    std::vector<Vertex> run() {
        descend(0);
        return best_perm_;
    }

private:
    static constexpr std::uint64_t kNodeLimit = 20'000'000;

    void descend(std::size_t pos) {
        if (++nodes_ > kNodeLimit) {
            throw Error(ErrorCode::TooLarge, "canonical form search exceeded its node limit");
        }
        const std::size_t n = g_.order();
        if (pos == n) {
            if (current_ < best_) {
                best_ = current_;
                best_perm_ = perm_;
            }
            return;
        }
        const std::size_t base = pos * (pos - (pos > 0 ? 1 : 0)) / 2;
        const std::size_t end = base + pos;
        for (Vertex v = 0; v < n; ++v) {
            if (used_[v] || color_[v] != slot_color_[pos]) continue;
            for (std::size_t i = 0; i < pos; ++i) current_[base + i] = g_.adjacent(perm_[i], v) ? 1 : 0;
            // Prune once the prefix exceeds the best string found so far.
            if (std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(end),
                                             current_.begin(),
                                             current_.begin() + static_cast<std::ptrdiff_t>(end))) {
                continue;
            }
            used_[v] = true;
            perm_[pos] = v;
            descend(pos + 1);
            used_[v] = false;
        }
    }

    const Graph& g_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<Vertex> perm_;
    std::vector<bool> used_;
    std::vector<std::uint8_t> best_;
    std::vector<std::uint8_t> current_;
    std::vector<Vertex> best_perm_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

void for_each_tree(std::size_t n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > kMaxTreeOrder) {
        throw Error(ErrorCode::BadParam, "tree order must be between 1 and " + std::to_string(kMaxTreeOrder));
    }
    if (n == 1) {
        visit(Graph(1, {}));
        return;
    }
    Layout layout;
    for (int i = 0; i <= static_cast<int>(n / 2); ++i) layout.push_back(i);
    for (int i = 1; i < static_cast<int>((n + 1) / 2); ++i) layout.push_back(i);

    std::optional<Layout> current = layout;
    while (current) {
        current = next_tree(*current);
        if (!current) break;
        if (!visit(layout_to_graph(*current))) return;
        current = next_rooted_tree(*current);
    }
}

std::vector<Graph> enumerate_trees(std::size_t n) {
    std::vector<Graph> out;
    for_each_tree(n, [&](const Graph& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

void for_each_labeled_graph(std::size_t n, const GraphFilter& filter,
                            const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > kMaxExhaustiveGraphOrder) {
        throw Error(ErrorCode::BadParam, "exhaustive graph enumeration supports 1 to " +
                                             std::to_string(kMaxExhaustiveGraphOrder) + " vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    }
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::array<std::uint32_t, kMaxExhaustiveGraphOrder> adj{};
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        adj.fill(0);
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if ((mask >> b) & 1U) {
                adj[slots[b].first] |= 1U << slots[b].second;
                adj[slots[b].second] |= 1U << slots[b].first;
            }
        }
        if (filter.max_degree) {
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) {
                ok = static_cast<std::size_t>(__builtin_popcount(adj[v])) <= *filter.max_degree;
            }
            if (!ok) continue;
        }
        if (filter.connected) {
            std::uint32_t seen = 1;
            std::uint32_t frontier = 1;
            while (frontier != 0) {
                std::uint32_t next = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    if ((frontier >> v) & 1U) next |= adj[v];
                }
                frontier = next & ~seen;
                seen |= next;
            }
            if (seen != (1U << n) - 1) continue;
        }
        bool rejected = false;
        for (std::size_t u = 0; u < n && !rejected; ++u) {
            for (std::size_t v = u + 1; v < n && !rejected; ++v) {
                if (filter.twin_free && adj[u] == adj[v]) rejected = true;
                if (filter.four_cycle_free && __builtin_popcount(adj[u] & adj[v]) >= 2) rejected = true;
            }
        }
        if (rejected) continue;
        edges.clear();
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if ((mask >> b) & 1U) edges.push_back({slots[b].first, slots[b].second});
        }
        if (!visit(Graph(n, edges))) return;
    }
}

std::vector<Graph> enumerate_small_graphs(std::size_t n, const GraphFilter& filter, bool dedup) {
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for_each_labeled_graph(n, filter, [&](const Graph& g) {
        if (!dedup || seen.insert(canonical_graph6(g)).second) out.push_back(g);
        return true;
    });
    return out;
}

std::vector<Vertex> canonical_tree_order(const Graph& t) {
    if (!is_tree(t)) throw Error(ErrorCode::NotATree, "canonical tree order needs a tree");
    std::vector<std::string> best_codes;
    Vertex best_root = 0;
    std::string best;
    for (Vertex c : tree_centers(t)) {
        std::vector<std::string> codes(t.order());
        std::string code = rooted_code(t, c, kNoVertex, codes);
        if (best.empty() || code < best) {
            best = std::move(code);
            best_codes = std::move(codes);
            best_root = c;
        }
    }
    return bfs_order(t, best_root, best_codes);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({pos[e.u], pos[e.v]});
    return Graph(g.order(), edges);
}

std::string canonical_graph6(const Graph& g) {
    if (g.order() == 0) return to_graph6(g);
    if (is_tree(g)) return to_graph6(relabel(g, canonical_tree_order(g)));
    MinAdjacencySearch search(g, refine_colors(g));
    return to_graph6(relabel(g, search.run()));
}

}  // namespace ioc
