#include "ioc/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ioc {

namespace {

constexpr std::array<std::size_t, 6> kAttachmentSize = {1, 2, 3, 4, 4, 5};

// Attachment vertex offsets, by role, that become edges to the previous role
// (-1 marks the link, which joins the root).
constexpr std::array<std::array<int, 5>, 6> kParentRole = {{
    {-1, 0, 0, 0, 0},
    {-1, 0, 0, 0, 0},
    {-1, 0, 1, 0, 0},
    {-1, 0, 1, 2, 0},
    {-1, 0, 0, 2, 0},
    {-1, 0, 1, 1, 3},
}};

void add_arm(std::vector<Edge>& edges, Vertex center, Vertex support, Vertex leaf) {
    edges.push_back({center, support});
    edges.push_back({support, leaf});
}

std::vector<std::pair<std::string, Vertex>> star_labels(std::size_t delta, Vertex first_support) {
    std::vector<std::pair<std::string, Vertex>> labels;
    for (std::size_t i = 1; i <= delta; ++i) {
        const Vertex s = first_support + static_cast<Vertex>(2 * (i - 1));
        labels.emplace_back("s" + std::to_string(i), s);
        labels.emplace_back("l" + std::to_string(i), s + 1);
    }
    return labels;
}

VertexSet all_but(std::size_t n, std::initializer_list<Vertex> excluded) {
    VertexSet s = VertexSet::full(n);
    for (Vertex v : excluded) s.erase(v);
    return s;
}

}  // namespace

std::size_t AttachmentVector::total() const { return std::accumulate(k.begin(), k.end(), std::size_t{0}); }

std::size_t AttachmentVector::order() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < 6; ++i) n += kAttachmentSize[i] * k[i];
    return n;
}

std::string AttachmentVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 6; ++i) {
        if (i > 0) s += ',';
        s += std::to_string(k[i]);
    }
    return s + ")";
}

bool is_admissible(const AttachmentVector& k) {
    if (k[1] > 1) return false;
    static const std::array<AttachmentVector, 4> kExcluded = {{
        {{1, 0, 0, 0, 0, 0}},
        {{0, 1, 0, 0, 0, 0}},
        {{0, 0, 1, 0, 0, 0}},
        {{1, 1, 0, 0, 0, 0}},
    }};
    if (k.total() == 0) return false;
    return std::find(kExcluded.begin(), kExcluded.end(), k) == kExcluded.end();
}

const char* to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::SubdividedStar: return "subdivided-star";
        case FamilyKind::ReducedSubdividedStar: return "reduced-subdivided-star";
        case FamilyKind::FamilyTree: return "family-tree";
        case FamilyKind::TightTreePair: return "tight-tree-pair";
        case FamilyKind::SubcubicCycle: return "subcubic-cycle";
        case FamilyKind::StarPlusEdge: return "star-plus-edge";
    }
    return "unknown";
}

const char* to_string(StarPlusEdgeVariant variant) noexcept {
    switch (variant) {
        case StarPlusEdgeVariant::SupportSupport: return "G1";
        case StarPlusEdgeVariant::LeafLeaf: return "G2";
        case StarPlusEdgeVariant::CenterLeaf: return "G3";
    }
    return "unknown";
}

std::string FamilySpec::name() const {
    std::string s = to_string(kind);
    if (kind == FamilyKind::FamilyTree && vector) return s + vector->to_string();
    if (kind == FamilyKind::StarPlusEdge) s += std::string("-") + to_string(variant);
    return s + "(" + std::to_string(param) + ")";
}

Vertex FamilySpec::label(std::string_view name) const {
    for (const auto& [key, v] : labels) {
        if (key == name) return v;
    }
    throw Error(ErrorCode::BadParam, "no vertex labelled '" + std::string(name) + "'");
}

Family build_family_tree(const AttachmentVector& k) {
    if (!is_admissible(k)) {
        throw Error(ErrorCode::NotInFamily, "attachment vector " + k.to_string() + " is not admissible");
    }
    Family f;
    FamilySpec& spec = f.spec;
    spec.kind = FamilyKind::FamilyTree;
    spec.vector = k;
    spec.root = 0;
    spec.labels.emplace_back("r", 0);

    std::vector<Edge> edges;
    Vertex next = 1;
    for (int type = 1; type <= 6; ++type) {
        const std::size_t size = kAttachmentSize[static_cast<std::size_t>(type - 1)];
        for (std::uint32_t copy = 0; copy < k[static_cast<std::size_t>(type)]; ++copy) {
            Attachment a;
            a.type = type;
            for (std::size_t role = 0; role < size; ++role) {
                const Vertex v = next++;
                a.vertices.push_back(v);
                const int parent = kParentRole[static_cast<std::size_t>(type - 1)][role];
                edges.push_back({parent < 0 ? Vertex{0} : a.vertices[static_cast<std::size_t>(parent)], v});
            }
            spec.labels.emplace_back("t" + std::to_string(type) + "." + std::to_string(copy + 1) + ".link",
                                     a.link());
            spec.attachments.push_back(std::move(a));
        }
    }
    f.graph = Graph(next, edges);
    spec.reference_code = canonical_set(f.graph.order(), 0, k, spec.attachments);
    return f;
}

Family gen_subdivided_star(std::size_t delta) {
    if (delta < 2) throw Error(ErrorCode::BadParam, "subdivided star needs at least 2 arms");
    AttachmentVector k;
    k[2] = static_cast<std::uint32_t>(delta);
    Family f = build_family_tree(k);
    f.spec.kind = FamilyKind::SubdividedStar;
    f.spec.param = delta;
    f.spec.labels = {{"center", 0}};
    const auto arms = star_labels(delta, 1);
    f.spec.labels.insert(f.spec.labels.end(), arms.begin(), arms.end());
    return f;
}

Family gen_reduced_subdivided_star(std::size_t delta) {
    if (delta < 2) throw Error(ErrorCode::BadParam, "reduced subdivided star needs at least 2 arms");
    Family f;
    if (delta == 2) {
        f.graph = Graph(4, {{0, 1}, {0, 2}, {2, 3}});
        f.spec.reference_code = VertexSet::full(4);
    } else {
        AttachmentVector k;
        k[1] = 1;
        k[2] = static_cast<std::uint32_t>(delta - 1);
        f = build_family_tree(k);
    }
    f.spec.kind = FamilyKind::ReducedSubdividedStar;
    f.spec.param = delta;
    f.spec.labels = {{"center", 0}, {"x", 1}};
    const auto arms = star_labels(delta - 1, 2);
    f.spec.labels.insert(f.spec.labels.end(), arms.begin(), arms.end());
    return f;
}

Family gen_tight_tree_pair(std::size_t delta) {
    if (delta < 3) throw Error(ErrorCode::BadParam, "tight tree pair needs delta >= 3");
    const Family half = gen_reduced_subdivided_star(delta);
    const Vertex offset = static_cast<Vertex>(2 * delta);
    std::vector<Edge> edges;
    for (const Edge& e : half.graph.edges()) {
        edges.push_back(e);
        edges.push_back({e.u + offset, e.v + offset});
    }
    edges.push_back({1, offset + 1});

    Family f;
    f.graph = Graph(4 * delta, edges);
    f.spec.kind = FamilyKind::TightTreePair;
    f.spec.param = delta;
    f.spec.labels = {{"center1", 0}, {"x1", 1}, {"center2", offset}, {"x2", offset + 1}};
    f.spec.reference_code = all_but(4 * delta, {3, offset + 3});
    return f;
}

Family gen_subcubic_gp(std::size_t p) {
    if (p < 3 || p == 4) throw Error(ErrorCode::BadParam, "cycle length must be at least 3 and not 4");
    std::vector<Edge> edges;
    Family f;
    f.spec.kind = FamilyKind::SubcubicCycle;
    f.spec.param = p;
    VertexSet code = VertexSet::full(6 * p);
    static constexpr const char* kNames[] = {"u", "v", "w", "x", "y", "z"};
    for (std::size_t i = 0; i < p; ++i) {
        const Vertex b = static_cast<Vertex>(6 * i);
        edges.push_back({b, b + 1});
        edges.push_back({b + 1, b + 2});
        edges.push_back({b + 2, b + 3});
        edges.push_back({b + 3, b + 4});
        edges.push_back({b + 2, b + 5});
        edges.push_back({b, static_cast<Vertex>(6 * ((i + 1) % p))});
        for (Vertex r = 0; r < 6; ++r) f.spec.labels.emplace_back(kNames[r] + std::to_string(i + 1), b + r);
        code.erase(b + 5);
    }
    f.graph = Graph(6 * p, edges);
    f.spec.reference_code = std::move(code);
    return f;
}

Family gen_star_plus_edge(StarPlusEdgeVariant variant, std::size_t k) {
    if (k < 2) throw Error(ErrorCode::BadParam, "star-plus-edge needs k >= 2");
    const std::size_t n = 2 * k + 1;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= k; ++i) {
        add_arm(edges, 0, static_cast<Vertex>(2 * i - 1), static_cast<Vertex>(2 * i));
    }
    Family f;
    f.spec.kind = FamilyKind::StarPlusEdge;
    f.spec.param = k;
    f.spec.variant = variant;
    f.spec.labels = {{"center", 0}};
    const auto arms = star_labels(k, 1);
    f.spec.labels.insert(f.spec.labels.end(), arms.begin(), arms.end());

    Edge extra;
    switch (variant) {
        case StarPlusEdgeVariant::SupportSupport:
            extra = {1, 3};
            f.spec.reference_code = all_but(n, {2, 4});
            break;
        case StarPlusEdgeVariant::LeafLeaf:
            extra = {2, 4};
            f.spec.reference_code = k == 2 ? all_but(n, {2}) : all_but(n, {1, 2});
            break;
        case StarPlusEdgeVariant::CenterLeaf:
            extra = {0, static_cast<Vertex>(2 * k)};
            f.spec.reference_code = all_but(n, {2});
            break;
    }
    edges.push_back(extra);
    f.spec.labels.emplace_back("edge_u", extra.u);
    f.spec.labels.emplace_back("edge_v", extra.v);
    f.graph = Graph(n, edges);
    return f;
}

VertexSet canonical_set(std::size_t n, Vertex root, const AttachmentVector& k,
                        std::span<const Attachment> attachments) {
    if (!is_admissible(k)) {
        throw Error(ErrorCode::NotInFamily, "attachment vector " + k.to_string() + " is not admissible");
    }
    VertexSet c(n);
    const AttachmentVector path_plus_leaf{{1, 0, 1, 0, 0, 0}};
    const AttachmentVector leaf_plus_support{{1, 0, 0, 0, 1, 0}};
    if (k == path_plus_leaf || k == leaf_plus_support) {
        c.insert(root);
        for (const Attachment& a : attachments) {
            for (Vertex v : a.vertices) c.insert(v);
        }
        for (const Attachment& a : attachments) {
            if (a.type == 3) c.erase(a.vertices[2]);
            if (a.type == 5) c.erase(a.vertices[1]);
        }
        return c;
    }

    c.insert(root);
    bool skipped_type2_leaf = false;
    for (const Attachment& a : attachments) {
        switch (a.type) {
            case 1:
                break;
            case 2:
                c.insert(a.vertices[0]);
                if (k[1] == 0 && !skipped_type2_leaf) {
                    skipped_type2_leaf = true;
                } else {
                    c.insert(a.vertices[1]);
                }
                break;
            case 3:
                c.insert(a.vertices[0]);
                c.insert(a.vertices[1]);
                break;
            case 4:
                for (std::size_t i = 0; i < 3; ++i) c.insert(a.vertices[i]);
                break;
            case 5:
                c.insert(a.vertices[0]);
                c.insert(a.vertices[2]);
                c.insert(a.vertices[3]);
                break;
            case 6:
                c.insert(a.vertices[0]);
                c.insert(a.vertices[1]);
                c.insert(a.vertices[3]);
                c.insert(a.vertices[4]);
                break;
            default:
                throw Error(ErrorCode::Internal, "unknown attachment type");
        }
    }
    return c;
}

VertexSet canonical_set(const Family& family) {
    const FamilySpec& spec = family.spec;
    if (!spec.vector) {
        throw Error(ErrorCode::NotInFamily, spec.name() + " is not built as a family tree");
    }
    return canonical_set(family.graph.order(), spec.root, *spec.vector, spec.attachments);
}

namespace {

// Matches the branch hanging from `link` (away from `root`) against the six
// attachment shapes.
std::optional<Attachment> match_attachment(const Graph& t, Vertex root, Vertex link) {
    auto children = [&](Vertex v, Vertex parent) {
        std::vector<Vertex> out;
        for (Vertex w : t.neighbors(v)) {
            if (w != parent) out.push_back(w);
        }
        return out;
    };
    auto is_leaf_child = [&](Vertex v) { return t.degree(v) == 1; };

    const auto c0 = children(link, root);
    if (c0.empty()) return Attachment{1, {link}};
    if (c0.size() == 1) {
        const Vertex a = c0[0];
        const auto c1 = children(a, link);
        if (c1.empty()) return Attachment{2, {link, a}};
        if (c1.size() == 1) {
            const Vertex b = c1[0];
            const auto c2 = children(b, a);
            if (c2.empty()) return Attachment{3, {link, a, b}};
            if (c2.size() == 1 && is_leaf_child(c2[0])) return Attachment{4, {link, a, b, c2[0]}};
            return std::nullopt;
        }
        if (c1.size() == 2) {
            // Degree-3 centre with one leaf and one path of length two.
            for (int flip = 0; flip < 2; ++flip) {
                const Vertex leaf = c1[flip];
                const Vertex mid = c1[1 - flip];
                if (!is_leaf_child(leaf)) continue;
                const auto c2 = children(mid, a);
                if (c2.size() == 1 && is_leaf_child(c2[0])) return Attachment{6, {link, a, leaf, mid, c2[0]}};
            }
        }
        return std::nullopt;
    }
    if (c0.size() == 2) {
        for (int flip = 0; flip < 2; ++flip) {
            const Vertex leaf = c0[flip];
            const Vertex other = c0[1 - flip];
            if (!is_leaf_child(leaf)) continue;
            const auto c1 = children(other, link);
            if (c1.size() == 1 && is_leaf_child(c1[0])) return Attachment{5, {link, leaf, other, c1[0]}};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Recognition> recognize_family_at(const Graph& t, Vertex root) {
    if (root >= t.order() || !is_tree(t)) return std::nullopt;
    Recognition rec;
    rec.root = root;
    for (Vertex link : t.neighbors(root)) {
        auto a = match_attachment(t, root, link);
        if (!a) return std::nullopt;
        ++rec.vector[static_cast<std::size_t>(a->type)];
        rec.attachments.push_back(std::move(*a));
    }
    if (!is_admissible(rec.vector)) return std::nullopt;
    std::stable_sort(rec.attachments.begin(), rec.attachments.end(),
                     [](const Attachment& a, const Attachment& b) { return a.type < b.type; });
    return rec;
}

std::optional<Recognition> recognize_family(const Graph& t) {
    if (t.order() == 0 || !is_tree(t)) return std::nullopt;
    for (Vertex r = 0; r < t.order(); ++r) {
        if (auto rec = recognize_family_at(t, r)) return rec;
    }
    return std::nullopt;
}

VertexSet canonical_set(const Graph& t, const Recognition& rec) {
    return canonical_set(t.order(), rec.root, rec.vector, rec.attachments);
}

bool is_subdivided_star(const Graph& g, Vertex* center) {
    const std::size_t n = g.order();
    if (n < 5 || n % 2 == 0 || g.size() != n - 1) return false;
    const std::size_t delta = (n - 1) / 2;
    for (Vertex c = 0; c < n; ++c) {
        if (g.degree(c) != delta) continue;
        bool ok = true;
        for (Vertex s : g.neighbors(c)) {
            if (g.degree(s) != 2) {
                ok = false;
                break;
            }
            const Vertex l = g.neighbors(s)[0] == c ? g.neighbors(s)[1] : g.neighbors(s)[0];
            if (g.degree(l) != 1) {
                ok = false;
                break;
            }
        }
        if (ok && is_connected(g)) {
            if (center != nullptr) *center = c;
            return true;
        }
    }
    return false;
}

Family rebuild(const Recognition& rec) { return build_family_tree(rec.vector); }

}  // namespace ioc
