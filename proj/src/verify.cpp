#include "ioc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ioc {

namespace {

void check_universe(const Graph& g, const VertexSet& code) {
    if (code.universe() != g.order()) {
        throw Error(ErrorCode::UniverseMismatch,
                    "code built for " + std::to_string(code.universe()) +
                        " vertices, graph has " + std::to_string(g.order()));
    }
}

}  // namespace

VertexSet signature(const Graph& g, const VertexSet& code, Vertex v) {
    check_universe(g, code);
    return g.neighborhood(v) & code;
}

Verdict is_total_dominating(const Graph& g, const VertexSet& code) {
    check_universe(g, code);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!g.neighborhood(v).intersects(code)) return {false, v, std::nullopt};
    }
    return {};
}

Verdict is_separating_open_code(const Graph& g, const VertexSet& code) {
    check_universe(g, code);
    const std::size_t n = g.order();
    std::vector<VertexSet> sigs;
    sigs.reserve(n);
    for (Vertex v = 0; v < n; ++v) sigs.push_back(g.neighborhood(v) & code);

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const auto c = sigs[a] <=> sigs[b];
        return c != 0 ? c < 0 : a < b;
    });

    // Within a group of equal signatures the two lowest indices form the
    // smallest pair; the overall witness is the smallest across groups.
    std::optional<std::pair<Vertex, Vertex>> best;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sigs[order[i]] == sigs[order[i + 1]] && (i == 0 || sigs[order[i - 1]] != sigs[order[i]])) {
            const std::pair<Vertex, Vertex> pair{order[i], order[i + 1]};
            if (!best || pair < *best) best = pair;
        }
    }
    if (best) return {false, std::nullopt, best};
    return {};
}

Verdict is_io_code(const Graph& g, const VertexSet& code) {
    if (Verdict td = is_total_dominating(g, code); !td.ok) return td;
    return is_separating_open_code(g, code);
}

bool admits_io_code(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) return false;
    }
    return is_open_twin_free(g);
}

}  // namespace ioc
