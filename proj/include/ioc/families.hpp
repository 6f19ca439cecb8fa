#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ioc/graph.hpp"

namespace ioc {

/// Attachment counts (k1, ..., k6) for the rooted tree family T(r; k).
struct AttachmentVector {
    std::array<std::uint32_t, 6> k{};

    std::uint32_t& operator[](std::size_t type) { return k.at(type - 1); }
    std::uint32_t operator[](std::size_t type) const { return k.at(type - 1); }

    /// Degree of the root.
    std::size_t total() const;
    /// 1 + k1 + 2k2 + 3k3 + 4k4 + 4k5 + 5k6.
    std::size_t order() const;
    std::string to_string() const;

    friend bool operator==(const AttachmentVector&, const AttachmentVector&) = default;
};

/// k1 in {0, 1} and k is none of the four vectors that would produce P2, P3
/// or P4.
bool is_admissible(const AttachmentVector& k);

/// One attachment hung from the root. Vertices are listed by role:
///   type 1: link
///   type 2: link, leaf
///   type 3: link, middle, leaf
///   type 4: link, second, third, leaf
///   type 5: link (a support), its leaf, its other neighbour, that neighbour's leaf
///   type 6: link, degree-3 centre, centre's leaf, subdivision vertex, far leaf
struct Attachment {
    int type = 0;
    std::vector<Vertex> vertices;

    Vertex link() const { return vertices.front(); }
};

enum class FamilyKind {
    SubdividedStar,
    ReducedSubdividedStar,
    FamilyTree,
    TightTreePair,
    SubcubicCycle,
    StarPlusEdge,
};

enum class StarPlusEdgeVariant {
    SupportSupport,  // G1: edge between two support vertices
    LeafLeaf,        // G2: edge between two leaves
    CenterLeaf,      // G3: edge from the center to a leaf
};

const char* to_string(FamilyKind kind) noexcept;
const char* to_string(StarPlusEdgeVariant variant) noexcept;

struct FamilySpec {
    FamilyKind kind = FamilyKind::FamilyTree;
    /// Delta for the stars and the tight pair, p for the cycle family, k for
    /// star-plus-edge graphs. Unused for FamilyTree.
    std::size_t param = 0;
    StarPlusEdgeVariant variant = StarPlusEdgeVariant::SupportSupport;
    /// Set for trees built as T(r; k).
    std::optional<AttachmentVector> vector;
    Vertex root = 0;
    std::vector<Attachment> attachments;
    /// Named vertices, in a fixed order per kind.
    std::vector<std::pair<std::string, Vertex>> labels;
    /// A known IO-code for the instance where one is documented.
    std::optional<VertexSet> reference_code;

    std::string name() const;
    Vertex label(std::string_view name) const;
};

struct Family {
    Graph graph;
    FamilySpec spec;
};

/// T(r; k). Root is vertex 0; attachments are laid out in type order, then
/// creation order. Throws NotInFamily unless is_admissible(k).
Family build_family_tree(const AttachmentVector& k);

/// K_{1,delta} with every edge subdivided. Center 0, support 2i-1 and leaf
/// 2i for arm i = 1..delta. Throws BadParam for delta < 2.
Family gen_subdivided_star(std::size_t delta);

/// The subdivided star with one leaf removed. For delta >= 3 this is
/// T(r; 1, delta-1, 0, 0, 0, 0): center 0, its leaf 1, then arms. For delta
/// = 2 it is the path 1-0-2-3 (center 0, leaf 1).
Family gen_reduced_subdivided_star(std::size_t delta);

/// Two reduced subdivided stars joined by an edge between the leaves of their
/// centers; order 4*delta. Throws BadParam for delta < 3.
Family gen_tight_tree_pair(std::size_t delta);

/// A p-cycle u_1..u_p where each u_i ends the path u_i v_i w_i x_i y_i and w_i
/// carries a pendant z_i. Gadget i (0-based) occupies 6i..6i+5 in the order
/// u, v, w, x, y, z. Throws BadParam unless p >= 3 and p != 4.
Family gen_subcubic_gp(std::size_t p);

/// The subdivided star on k arms plus one edge. Throws BadParam for k < 2.
Family gen_star_plus_edge(StarPlusEdgeVariant variant, std::size_t k);

/// Canonical IO-code candidate of a tree T(r; k) laid out by the given
/// attachments on n vertices. Throws NotInFamily for inadmissible k.
VertexSet canonical_set(std::size_t n, Vertex root, const AttachmentVector& k,
                        std::span<const Attachment> attachments);

/// Canonical set of a generated family tree (FamilyTree, SubdividedStar, or
/// ReducedSubdividedStar with delta >= 3). Throws NotInFamily otherwise.
VertexSet canonical_set(const Family& family);

struct Recognition {
    Vertex root = 0;
    AttachmentVector vector;
    /// Sorted by type, then by link index.
    std::vector<Attachment> attachments;
};

/// Decomposition of t as T(root; k) with admissible k, if one exists.
std::optional<Recognition> recognize_family_at(const Graph& t, Vertex root);

/// First root (lowest index) at which t decomposes as a family tree.
std::optional<Recognition> recognize_family(const Graph& t);

VertexSet canonical_set(const Graph& t, const Recognition& rec);

/// True iff g is a subdivided star with at least two arms. On success the
/// center is written to *center when non-null.
bool is_subdivided_star(const Graph& g, Vertex* center = nullptr);

/// Rebuilds the family tree described by rec; isomorphic to the recognised
/// tree.
Family rebuild(const Recognition& rec);

}  // namespace ioc
