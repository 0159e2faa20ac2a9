#pragma once
/// \file web.hpp
/// Planar trivalent webs stored as rotation systems, with local rewrites,
/// face tracing, bridges, Tait colorings and skein reduction.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foamlab/algebra.hpp"

namespace foamlab {

/// Attachment point of an edge end: vertex id and rotation slot.
struct Port {
    int vertex = -1;
    int slot = -1;
    bool operator==(const Port& o) const { return vertex == o.vertex && slot == o.slot; }
    bool operator!=(const Port& o) const { return !(*this == o); }
};

/// Half-edge: edge id plus end (0 = tail, 1 = head), pointing away from
/// the vertex it is attached to.
struct Dart {
    int edge = -1;
    int end = 0;
    bool operator==(const Dart& o) const { return edge == o.edge && end == o.end; }
    bool operator!=(const Dart& o) const { return !(*this == o); }
    bool operator<(const Dart& o) const { return edge != o.edge ? edge < o.edge : end < o.end; }
};

struct WebVertex {
    int id = -1;
    int degree = 3;         ///< 3 for internal vertices, 1 for boundary points
    bool boundary = false;
    int sign = 0;           ///< +1/-1 on boundary points
    std::vector<Dart> slots;  ///< counterclockwise; edge = -1 when empty
};

struct WebEdge {
    int id = -1;
    Port tail, head;
    bool oriented = false;  ///< when set, the edge points tail -> head
    int thickness = 1;
    const Port& end(int e) const { return e == 0 ? tail : head; }
    Port& end(int e) { return e == 0 ? tail : head; }
    bool operator==(const WebEdge& o) const {
        return id == o.id && tail == o.tail && head == o.head && oriented == o.oriented && thickness == o.thickness;
    }
};

struct WebCircle {
    int id = -1;
    bool oriented = false;
    int thickness = 1;
    bool operator==(const WebCircle& o) const {
        return id == o.id && oriented == o.oriented && thickness == o.thickness;
    }
};

struct VertexRecord {
    int id = -1;
    int degree = 3;
    bool boundary = false;
    int sign = 0;
    bool operator==(const VertexRecord& o) const {
        return id == o.id && degree == o.degree && boundary == o.boundary && sign == o.sign;
    }
};

class Web {
public:
    const std::map<int, WebVertex>& vertices() const { return vertices_; }
    const std::map<int, WebEdge>& edges() const { return edges_; }
    const std::map<int, WebCircle>& circles() const { return circles_; }

    void add_vertex(const VertexRecord& r);
    void remove_vertex(int id);
    void add_edge(const WebEdge& e);
    void remove_edge(int id);
    void add_circle(const WebCircle& c);
    void remove_circle(int id);

    const WebVertex& vertex(int id) const;
    const WebEdge& edge(int id) const;
    bool has_vertex(int id) const { return vertices_.count(id) > 0; }
    bool has_edge(int id) const { return edges_.count(id) > 0; }
    bool has_circle(int id) const { return circles_.count(id) > 0; }
    bool empty() const { return vertices_.empty() && edges_.empty() && circles_.empty(); }

    /// Fresh ids (edges and circles share one id space).
    int next_vertex_id() const;
    int next_edge_id() const;

    Port port(const Dart& d) const { return edge(d.edge).end(d.end); }
    Dart dart_at(const Port& p) const;
    /// The dart that follows \p d around its face.
    Dart face_next(const Dart& d) const;
    int vertex_of(const Dart& d) const { return port(d).vertex; }

    /// Structural checks: filled slots, trivalence, orientation rule.
    /// Throws DomainError describing the first problem.
    void check() const;
    bool is_oriented() const;
    bool has_boundary() const;
    /// Boundary points in id order.
    std::vector<int> boundary_points() const;
    /// Signs of the boundary points in id order.
    std::vector<int> boundary_signs() const;

    bool operator==(const Web& o) const;

private:
    std::map<int, WebVertex> vertices_;
    std::map<int, WebEdge> edges_;
    std::map<int, WebCircle> circles_;
};

// ------------------------------------------------------------ rewrites

enum class RewriteKind { Birth, Death, Saddle, Zip, Unzip, Collapse, Expand };

std::string rewrite_kind_name(RewriteKind k);
RewriteKind rewrite_kind_from_name(const std::string& s);
RewriteKind inverse_kind(RewriteKind k);

/// A local change of a web slice. Removed records must match the current
/// web exactly; the inverse swaps removed and added parts. Edge lists are
/// ordered by role: for Zip the added edges are [legs..., digon a, digon m]
/// (two legs, or one when a circle is zipped); for Unzip the removed edges
/// use the same order. For Collapse the removed edges are
/// [leg1, leg2, leg3, tri_a, tri_b, tri_c] and the added edges are the three
/// re-attached legs; Expand is the inverse.
struct WebRewrite {
    RewriteKind kind = RewriteKind::Birth;
    std::vector<WebEdge> rm_edges;
    std::vector<WebCircle> rm_circles;
    std::vector<VertexRecord> rm_vertices;
    std::vector<VertexRecord> add_vertices;
    std::vector<WebEdge> add_edges;
    std::vector<WebCircle> add_circles;
    bool operator==(const WebRewrite& o) const;
};

WebRewrite inverse(const WebRewrite& r);
/// Checks the shape required by the rewrite kind; throws on mismatch.
void check_rewrite_shape(const WebRewrite& r);
/// Applies \p r; throws DomainError if the pattern does not match.
void apply_rewrite(Web& w, const WebRewrite& r);

WebRewrite make_birth(const Web& w, int thickness = 1);
WebRewrite make_death(const Web& w, int circle);
/// Saddle joining two edges traversed along the darts \p a and \p b
/// (each dart gives the traversal start). For circles pass end 0.
WebRewrite make_saddle(const Web& w, const Dart& a, const Dart& b);
/// Digon creation on an edge or circle.
WebRewrite make_zip(const Web& w, int edge_or_circle);
/// Digon removal; \p face_dart is a dart on the 2-sided face.
WebRewrite make_unzip(const Web& w, const Dart& face_dart);
/// Triangle contraction; \p face_dart is a dart on the 3-sided face.
WebRewrite make_collapse(const Web& w, const Dart& face_dart);
/// Vertex expansion into a triangle.
WebRewrite make_expand(const Web& w, int vertex);

// ------------------------------------------------------------ text format

Web parse_web(const std::string& text);
std::string serialize_web(const Web& w);
Web load_web(const std::string& path);

// ------------------------------------------------------------ structure

struct Region {
    std::vector<Dart> darts;  ///< empty for the two regions of a free circle
    int sides = 0;
    bool touches_boundary = false;
    int circle = -1;          ///< circle id for circle regions
};

/// Face tracing per connected component, plus two 0-sided regions per
/// free circle. Throws if a component fails the Euler check V - E + F = 2.
std::vector<Region> regions(const Web& w);
/// Darts of the face containing \p start, in tracing order.
std::vector<Dart> trace_face(const Web& w, const Dart& start);
std::vector<int> find_bridges(const Web& w);
std::optional<int> find_bridge(const Web& w);
std::int64_t count_tait_colorings_web(const Web& w);
bool is_nonelliptic(const Web& w);
bool is_balanced(const std::vector<int>& signs);
/// Disjoint union; ids of \p b are shifted past those of \p a.
Web disjoint_union(const Web& a, const Web& b);

// ------------------------------------------------------------ reduction

enum class StepKind { Circle, Digon, Triangle };

struct ReductionStep {
    StepKind kind;
    WebRewrite rewrite;  ///< Death, Unzip or Collapse applied to the web
    int target = -1;     ///< circle id (Circle) or first digon edge (Digon) for dot placement
};

/// One node of the reduction tree: linear steps, then an end state.
struct ReductionNode {
    enum class End { Empty, Zero, Branch, Irreducible };
    std::vector<ReductionStep> steps;
    End end = End::Empty;
    std::string reason;  ///< "loop" or "bridge" for Zero
    /// For Branch: rewrites turning the square web into each smoothing,
    /// followed by the child reductions. Index 0 keeps the legs along the
    /// first edge of the square face together.
    std::vector<std::vector<WebRewrite>> branch_rewrites;
    std::vector<ReductionNode> children;
};

struct ReductionOutcome {
    bool reduced = false;  ///< false: irreducible
    std::string reason;    ///< "", "loop", "bridge" or "irreducible"
    std::int64_t t = 0;
    LaurentQ grk;
    ReductionNode trace;
};

ReductionOutcome reduce(const Web& w);

/// Kuperberg bracket of a closed oriented web. \p seed = 0 selects the
/// deterministic region order; other seeds pick reducible regions at random.
LaurentQ kuperberg_poly(const Web& w, std::uint64_t seed = 0);

/// Closure of two webs with the same boundary: the mirror of \p top glued
/// to \p bottom along boundary points in id order.
Web closure(const Web& top, const Web& bottom);
/// q^{|eps|} times the graded rank of the closure.
LaurentQ hom_space_dim(const Web& a, const Web& b);

}  // namespace foamlab
