#include "ioc/constructive.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "json.hpp"

#include "ioc/families.hpp"
#include "ioc/solver.hpp"
#include "ioc/verify.hpp"

namespace ioc {

const char* to_string(BoundStatus status) noexcept {
    switch (status) {
        case BoundStatus::WithinBound: return "within_bound";
        case BoundStatus::ExceptionalStar: return "exceptional_star";
        case BoundStatus::Violation: return "violation";
    }
    return "unknown";
}

BoundStatus check_bound(std::size_t n, std::size_t size, std::size_t delta, bool is_subdivided_star) {
    const std::uint64_t two_delta = 2 * static_cast<std::uint64_t>(delta);
    if (two_delta * size <= (two_delta - 1) * n) return BoundStatus::WithinBound;
    if (is_subdivided_star && static_cast<std::uint64_t>(size) * (two_delta + 1) == two_delta * n) {
        return BoundStatus::ExceptionalStar;
    }
    return BoundStatus::Violation;
}

VertexSet ConstructionTrace::replay(std::size_t n) const {
    VertexSet s(n);
    for (const TraceStep& step : steps) {
        for (Vertex v : step.contributed) s.insert(v);
    }
    return s;
}

std::string ConstructionTrace::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const TraceStep& step : steps) {
        out.push_back({{"rule", step.rule},
                       {"detail", step.detail},
                       {"depth", step.depth},
                       {"n", step.order},
                       {"m", step.size},
                       {"contributed", step.contributed}});
    }
    return out.dump();
}

namespace {

struct Instance {
    Graph g;
    std::vector<Vertex> to_top;
};

struct Child {
    Instance inst;
    std::vector<Vertex> to_parent;
};

Child sub_instance(const Instance& parent, const VertexSet& keep) {
    Subgraph s = induced_subgraph(parent.g, keep);
    Child c;
    c.inst.g = std::move(s.graph);
    for (Vertex v : s.to_parent) c.inst.to_top.push_back(parent.to_top[v]);
    c.to_parent = std::move(s.to_parent);
    return c;
}

VertexSet lift(const Child& child, const VertexSet& code, std::size_t parent_order) {
    VertexSet out(parent_order);
    code.for_each([&](Vertex v) { out.insert(child.to_parent[v]); });
    return out;
}

Vertex other_neighbor(const Graph& g, Vertex v, Vertex not_this) {
    for (Vertex w : g.neighbors(v)) {
        if (w != not_this) return w;
    }
    return kNoVertex;
}

bool has_leaf_neighbor(const Graph& g, Vertex v) {
    return std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                       [&](Vertex w) { return g.degree(w) == 1; });
}

Vertex leaf_of(const Graph& g, Vertex support) {
    for (Vertex w : g.neighbors(support)) {
        if (g.degree(w) == 1) return w;
    }
    return kNoVertex;
}

std::string edge_text(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

class Builder {
public:
    Builder(std::size_t delta, std::size_t depth_limit) : delta_(delta), depth_limit_(depth_limit) {}

    ConstructionTrace trace;

    VertexSet tree(const Instance& in, std::size_t depth) {
        check_depth(depth);
        const Graph& t = in.g;
        const std::size_t n = t.order();
        if (n <= 4 || !is_open_twin_free(t)) return fallback(in, depth, "small or twinned sub-instance");

        if (auto rec = recognize_family(t)) {
            VertexSet c = canonical_set(t, *rec);
            if (!is_io_code(t, c).ok) return fallback(in, depth, "canonical set does not verify");
            record("family-canonical",
                   "root " + std::to_string(in.to_top[rec->root]) + " k=" + rec->vector.to_string(), depth, in, c);
            return c;
        }

        const std::vector<Vertex> path = longest_path_in_tree(t);
        if (path.size() == 5) {
            if (auto rec = recognize_family_at(t, path[2])) {
                VertexSet c = canonical_set(t, *rec);
                if (is_io_code(t, c).ok) {
                    record("diameter-four", "center " + std::to_string(in.to_top[path[2]]), depth, in, c);
                    return c;
                }
            }
            return fallback(in, depth, "diameter four tree outside the family");
        }

        if (auto s = pendant_star_split(in, depth)) return *s;
        return longest_path_case(in, path, depth);
    }

    VertexSet graph(const Instance& in, std::size_t depth) {
        check_depth(depth);
        const Graph& g = in.g;
        if (is_tree(g)) return tree(in, depth);

        const std::vector<Vertex> cycle = find_induced_cycle(g);
        const std::size_t len = cycle.size();
        if (g.size() == 5) {
            for (std::size_t i = 0; i < len; ++i) {
                const Edge e{cycle[i], cycle[(i + 1) % len]};
                const Graph rest = delete_edge(g, e);
                Vertex center = kNoVertex;
                if (is_subdivided_star(rest, &center)) {
                    if (auto s = star_plus_edge(in, rest, e, center, depth)) return *s;
                }
            }
            return fallback(in, depth, "five-edge cyclic graph not matched");
        }

        for (std::size_t i = 0; i < len; ++i) {
            const Edge e{cycle[i], cycle[(i + 1) % len]};
            Graph rest = delete_edge(g, e);
            if (!is_open_twin_free(rest)) continue;
            Vertex center = kNoVertex;
            if (is_subdivided_star(rest, &center) && rest.order() == 2 * delta_ + 1) {
                if (auto s = star_plus_edge(in, rest, e, center, depth)) return *s;
                return fallback(in, depth, "star plus edge pattern did not verify");
            }
            record("cycle-edge-deletion", "edge " + edge_text(in.to_top[e.u], in.to_top[e.v]), depth, in,
                   VertexSet(g.order()));
            return graph(Instance{std::move(rest), in.to_top}, depth + 1);
        }

        // Every cycle edge creates twins: alternate supports and degree-2
        // vertices around the cycle.
        Vertex v0 = kNoVertex;
        for (std::size_t i = 0; i < len; ++i) {
            const Vertex v = cycle[i];
            const Vertex a = cycle[(i + len - 1) % len];
            const Vertex b = cycle[(i + 1) % len];
            if (g.degree(v) == 2 && has_leaf_neighbor(g, a) && has_leaf_neighbor(g, b)) v0 = std::min(v0, v);
        }
        if (v0 == kNoVertex) return fallback(in, depth, "no deletable cycle vertex");
        VertexSet keep = VertexSet::full(g.order());
        keep.erase(v0);
        Child child = sub_instance(in, keep);
        if (child.inst.g.order() < 5 || !is_open_twin_free(child.inst.g)) {
            return fallback(in, depth, "vertex deletion leaves an unusable graph");
        }
        record("cycle-vertex-deletion", "vertex " + std::to_string(in.to_top[v0]), depth, in,
               VertexSet(g.order()));
        return lift(child, graph(child.inst, depth + 1), g.order());
    }

private:
    void check_depth(std::size_t depth) const {
        if (depth > depth_limit_) throw Error(ErrorCode::Internal, "construction recursion exceeded its depth bound");
    }

    void record(std::string rule, std::string detail, std::size_t depth, const Instance& in, const VertexSet& part) {
        TraceStep step;
        step.rule = std::move(rule);
        step.detail = std::move(detail);
        step.depth = depth;
        step.order = in.g.order();
        step.size = in.g.size();
        part.for_each([&](Vertex v) { step.contributed.push_back(in.to_top[v]); });
        std::sort(step.contributed.begin(), step.contributed.end());
        trace.steps.push_back(std::move(step));
    }

    VertexSet fallback(const Instance& in, std::size_t depth, const std::string& why) {
        SolveResult r;
        try {
            r = solve(in.g);
        } catch (const Error& e) {
            throw Error(ErrorCode::Internal, "fallback on a sub-instance without a code (" + why + "): " + e.what());
        }
        record("fallback-exact", "warning: " + why, depth, in, r.code);
        return r.code;
    }

    // Code of the subdivided star `rest` plus the edge e, by the role of e's
    // endpoints in the star.
    std::optional<VertexSet> star_plus_edge(const Instance& in, const Graph& rest, Edge e, Vertex center,
                                            std::size_t depth) {
        const Graph& g = in.g;
        const std::size_t k = rest.degree(center);
        auto role = [&](Vertex v) {
            if (v == center) return 0;
            return rest.degree(v) == 2 ? 1 : 2;
        };
        const int ru = role(e.u);
        const int rv = role(e.v);
        VertexSet code = VertexSet::full(g.order());
        std::string variant;
        if (ru == 1 && rv == 1) {
            variant = "support-support";
            code.erase(leaf_of(rest, e.u));
            code.erase(leaf_of(rest, e.v));
        } else if (ru == 2 && rv == 2) {
            variant = "leaf-leaf";
            const Vertex a = std::min(e.u, e.v);
            code.erase(a);
            if (k >= 3) code.erase(rest.neighbors(a).front());
        } else if (std::min(ru, rv) == 0 && std::max(ru, rv) == 2) {
            variant = "center-leaf";
            Vertex excluded = kNoVertex;
            for (Vertex v = 0; v < g.order(); ++v) {
                if (rest.degree(v) == 1 && v != e.u && v != e.v) {
                    excluded = v;
                    break;
                }
            }
            if (excluded == kNoVertex) return std::nullopt;
            code.erase(excluded);
        } else {
            return std::nullopt;
        }
        if (!is_io_code(g, code).ok) return std::nullopt;
        record("star-plus-edge", variant + " k=" + std::to_string(k) + " edge " +
                                     edge_text(in.to_top[e.u], in.to_top[e.v]),
               depth, in, code);
        return code;
    }

    std::optional<VertexSet> pendant_star_split(const Instance& in, std::size_t depth) {
        const Graph& t = in.g;
        const std::size_t n = t.order();

        // Smallest pendant subdivided star, then lowest edge.
        std::optional<std::pair<Vertex, Vertex>> best;
        std::size_t best_n1 = 0;
        for (const Edge& e : t.edges()) {
            for (int side = 0; side < 2; ++side) {
                const Vertex v1 = side == 0 ? e.u : e.v;
                const Vertex v2 = side == 0 ? e.v : e.u;
                const std::size_t k = t.degree(v1) - 1;
                if (k < 2) continue;
                bool ok = true;
                for (Vertex s : t.neighbors(v1)) {
                    if (s == v2) continue;
                    if (t.degree(s) != 2 || t.degree(other_neighbor(t, s, v1)) != 1) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const std::size_t n1 = 2 * k + 1;
                if (!best || n1 < best_n1) {
                    best = std::make_pair(v1, v2);
                    best_n1 = n1;
                }
            }
        }
        if (!best) return std::nullopt;
        const auto [v1, v2] = *best;
        const std::size_t k = t.degree(v1) - 1;

        VertexSet f1(n);
        f1.insert(v1);
        Vertex u1 = kNoVertex;
        for (Vertex s : t.neighbors(v1)) {
            if (s == v2) continue;
            f1.insert(s);
            const Vertex leaf = other_neighbor(t, s, v1);
            f1.insert(leaf);
            if (u1 == kNoVertex) u1 = leaf;  // neighbors are sorted, so this is the lowest support's leaf
        }
        VertexSet s1 = f1;
        s1.erase(u1);
        const std::size_t n2 = n - f1.size();
        if (n2 <= 4) return fallback(in, depth, "pendant star leaves a remainder of order at most four");

        const Child f2 = sub_instance(in, VertexSet::full(n) - f1);
        const Graph& g2 = f2.inst.g;
        Vertex v2_local = kNoVertex;
        for (Vertex v = 0; v < g2.order(); ++v) {
            if (f2.to_parent[v] == v2) v2_local = v;
        }
        const std::string where = "edge " + edge_text(in.to_top[v1], in.to_top[v2]) + " k=" + std::to_string(k);
        const bool star_component = k + 1 == delta_;

        if (is_open_twin_free(g2)) {
            Vertex center2 = kNoVertex;
            if (is_subdivided_star(g2, &center2) && g2.order() == 2 * delta_ + 1) {
                VertexSet s2 = VertexSet::full(g2.order());
                std::string rule;
                if (g2.degree(v2_local) == 2) {
                    rule = "pendant-star-split/star-support";
                    const Vertex own = leaf_of(g2, v2_local);
                    s2.erase(own);
                    for (Vertex v = 0; v < g2.order(); ++v) {
                        if (g2.degree(v) == 1 && v != own) {
                            s2.erase(v);
                            break;
                        }
                    }
                } else {
                    rule = "pendant-star-split/star-leaf";
                    for (Vertex v = 0; v < g2.order(); ++v) {
                        if (g2.degree(v) == 1 && v != v2_local) {
                            s2.erase(v);
                            break;
                        }
                    }
                }
                VertexSet s = s1 | lift(f2, s2, n);
                if (!is_io_code(t, s).ok) return fallback(in, depth, "star remainder pattern did not verify");
                record(rule, where, depth, in, s);
                return s;
            }
            record(star_component ? "pendant-star-split/star-component" : "pendant-star-split/recurse", where,
                   depth, in, s1);
            return s1 | lift(f2, tree(f2.inst, depth + 1), n);
        }

        // The remainder has twins; they must be v2 and another leaf.
        const auto twins = find_open_twins(g2);
        Vertex twin_center = kNoVertex;
        for (const auto& [a, b] : twins) {
            if ((a == v2_local || b == v2_local) && g2.degree(v2_local) == 1) {
                twin_center = g2.neighbors(v2_local).front();
            }
        }
        if (twins.size() != 1 || twin_center == kNoVertex) {
            return fallback(in, depth, "remainder twins do not involve the split vertex");
        }
        if (n2 - 1 <= 4) return fallback(in, depth, "twin repair leaves order at most four");
        VertexSet keep = VertexSet::full(g2.order());
        keep.erase(v2_local);
        const Child reduced = sub_instance(f2.inst, keep);
        const Graph& g3 = reduced.inst.g;
        std::vector<Vertex> to_t(g3.order());
        for (Vertex v = 0; v < g3.order(); ++v) to_t[v] = f2.to_parent[reduced.to_parent[v]];

        Vertex center3 = kNoVertex;
        if (is_subdivided_star(g3, &center3) && g3.order() == 2 * delta_ + 1) {
            VertexSet s(n);
            s |= s1;
            const Vertex v_t = f2.to_parent[twin_center];
            for (Vertex v = 0; v < g3.order(); ++v) s.insert(to_t[v]);
            // Drop the leaf of the twin's support inside the reduced tree.
            for (Vertex v = 0; v < g3.order(); ++v) {
                if (g3.degree(v) == 1 && to_t[g3.neighbors(v).front()] == v_t) {
                    s.erase(to_t[v]);
                    break;
                }
            }
            if (!is_io_code(t, s).ok) return fallback(in, depth, "twin star pattern did not verify");
            record("pendant-star-split/twin-star", where, depth, in, s);
            return s;
        }
        record("pendant-star-split/twin-repair", where, depth, in, s1);
        const VertexSet s3 = tree(reduced.inst, depth + 1);
        VertexSet s = s1;
        s3.for_each([&](Vertex v) { s.insert(to_t[v]); });
        return s;
    }

    VertexSet longest_path_case(const Instance& in, const std::vector<Vertex>& path, std::size_t depth) {
        const Graph& t = in.g;
        const std::size_t n = t.order();
        if (path.size() < 6) return fallback(in, depth, "short longest path");
        const Vertex root = path.back();

        std::vector<Vertex> parent(n, kNoVertex);
        std::vector<Vertex> order{root};
        std::vector<bool> seen(n, false);
        seen[root] = true;
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (Vertex w : t.neighbors(order[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = order[head];
                    order.push_back(w);
                }
            }
        }
        std::vector<std::size_t> height(n, 0);
        for (std::size_t i = order.size(); i-- > 1;) {
            const Vertex v = order[i];
            height[parent[v]] = std::max(height[parent[v]], height[v] + 1);
        }

        auto pick = [&](std::size_t h, std::size_t min_degree) {
            if (t.degree(path[h]) >= min_degree && height[path[h]] == h) return path[h];
            for (Vertex v = 0; v < n; ++v) {
                if (height[v] == h && t.degree(v) >= min_degree && v != root) return v;
            }
            return kNoVertex;
        };
        Vertex c = pick(2, 4);
        std::string rule = "pendant-family-subtree";
        std::string detail = "height 2";
        if (c == kNoVertex) {
            c = pick(3, 3);
            detail = "height 3";
        }
        if (c == kNoVertex) {
            c = pick(4, 3);
            detail = "height 4";
        }
        if (c == kNoVertex) {
            c = path[4];
            detail = "terminal";
        }

        VertexSet below(n);
        below.insert(c);
        for (Vertex v : order) {
            if (v != c && parent[v] != kNoVertex && below.contains(parent[v])) below.insert(v);
        }
        const Child sub = sub_instance(in, below);
        Vertex c_local = kNoVertex;
        for (Vertex v = 0; v < sub.inst.g.order(); ++v) {
            if (sub.to_parent[v] == c) c_local = v;
        }
        const auto rec = recognize_family_at(sub.inst.g, c_local);
        if (!rec) return fallback(in, depth, "subtree below " + std::to_string(in.to_top[c]) + " not in the family");
        if (detail == "terminal") {
            rule = rec->vector[4] == 1 ? "terminal-path" : "terminal-reduced-star";
        }
        const VertexSet cset = lift(sub, canonical_set(sub.inst.g, *rec), n);
        detail += " at " + std::to_string(in.to_top[c]) + " k=" + rec->vector.to_string();

        const Vertex p = parent[c];
        const std::size_t n1 = n - below.size();
        if (n1 <= 4) return fallback(in, depth, "remainder of order at most four");
        const Child rest = sub_instance(in, VertexSet::full(n) - below);
        if (is_open_twin_free(rest.inst.g)) {
            record(rule, detail, depth, in, cset);
            return cset | lift(rest, tree(rest.inst, depth + 1), n);
        }

        Vertex p_local = kNoVertex;
        for (Vertex v = 0; v < rest.inst.g.order(); ++v) {
            if (rest.to_parent[v] == p) p_local = v;
        }
        if (rest.inst.g.degree(p_local) != 1 || n1 - 1 <= 4) {
            return fallback(in, depth, "twins after removing the subtree are not repairable");
        }
        VertexSet keep = VertexSet::full(n) - below;
        keep.erase(p);
        const Child rest2 = sub_instance(in, keep);
        if (!is_open_twin_free(rest2.inst.g)) return fallback(in, depth, "twin repair left twins");
        record(rule, detail + " drop " + std::to_string(in.to_top[p]), depth, in, cset);
        return cset | lift(rest2, tree(rest2.inst, depth + 1), n);
    }

    std::size_t delta_;
    std::size_t depth_limit_;
};

void check_common(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
}

void check_rest(const Graph& g, std::size_t delta) {
    if (g.order() < 5) throw Error(ErrorCode::TooSmall, "construction needs at least 5 vertices");
    if (delta < 3) throw Error(ErrorCode::BadParam, "delta must be at least 3");
    if (max_degree(g) > delta) {
        throw Error(ErrorCode::DegreeExceeded, "maximum degree " + std::to_string(max_degree(g)) +
                                                   " exceeds delta " + std::to_string(delta));
    }
    if (!admits_io_code(g)) {
        const auto twins = find_open_twins(g);
        throw Error(ErrorCode::NoCode, "vertices " + std::to_string(twins.front().first) + " and " +
                                           std::to_string(twins.front().second) + " are open twins");
    }
}

Construction finish(const Graph& g, std::size_t delta, VertexSet code, ConstructionTrace trace) {
    Construction out;
    out.trace = std::move(trace);
    if (!is_io_code(g, code).ok) {
        throw Error(ErrorCode::Internal, "constructed set is not an IO-code; trace: " + out.trace.to_json());
    }
    Vertex center = kNoVertex;
    out.exceptional = is_subdivided_star(g, &center) && g.order() == 2 * delta + 1;
    out.bound_status = check_bound(g.order(), code.size(), delta, out.exceptional);
    out.code = std::move(code);
    return out;
}

Instance identity_instance(const Graph& g) {
    Instance in{g, std::vector<Vertex>(g.order())};
    for (Vertex v = 0; v < g.order(); ++v) in.to_top[v] = v;
    return in;
}

}  // namespace

Construction construct_tree_code(const Graph& t, std::size_t delta) {
    check_common(t);
    if (!is_tree(t)) throw Error(ErrorCode::NotATree, "input has a cycle");
    check_rest(t, delta);
    Builder b(delta, t.order() + t.size());
    VertexSet code = b.tree(identity_instance(t), 0);
    return finish(t, delta, std::move(code), std::move(b.trace));
}

Construction construct_graph_code(const Graph& g, std::size_t delta) {
    check_common(g);
    if (has_four_cycle(g)) throw Error(ErrorCode::FourCyclePresent, "graph contains a 4-cycle");
    check_rest(g, delta);
    Builder b(delta, g.order() + g.size());
    VertexSet code = b.graph(identity_instance(g), 0);
    return finish(g, delta, std::move(code), std::move(b.trace));
}

}  // namespace ioc
