#include "foamlab/web.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "foamlab/errors.hpp"

namespace foamlab {

namespace {

std::string port_str(const Port& p) { return std::to_string(p.vertex) + ":" + std::to_string(p.slot); }

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        int r = find(it->second);
        parent[x] = r;
        return r;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// ------------------------------------------------------------------ Web

void Web::add_vertex(const VertexRecord& r) {
    if (vertices_.count(r.id)) throw DomainError("duplicate vertex id " + std::to_string(r.id));
    if (r.degree < 1) throw DomainError("vertex " + std::to_string(r.id) + " has no slots");
    WebVertex v;
    v.id = r.id;
    v.degree = r.degree;
    v.boundary = r.boundary;
    v.sign = r.sign;
    v.slots.assign(r.degree, Dart{});
    vertices_[r.id] = v;
}

void Web::remove_vertex(int id) {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw DomainError("no vertex " + std::to_string(id));
    for (const Dart& d : it->second.slots)
        if (d.edge >= 0) throw DomainError("vertex " + std::to_string(id) + " still has edges");
    vertices_.erase(it);
}

void Web::add_edge(const WebEdge& e) {
    if (edges_.count(e.id) || circles_.count(e.id)) throw DomainError("duplicate edge id " + std::to_string(e.id));
    if (e.thickness < 1) throw DomainError("edge " + std::to_string(e.id) + " has thickness < 1");
    for (int end = 0; end < 2; ++end) {
        const Port& p = e.end(end);
        auto it = vertices_.find(p.vertex);
        if (it == vertices_.end())
            throw DomainError("edge " + std::to_string(e.id) + " refers to missing vertex " + std::to_string(p.vertex));
        if (p.slot < 0 || p.slot >= it->second.degree)
            throw DomainError("edge " + std::to_string(e.id) + " uses bad slot " + port_str(p));
        if (it->second.slots[p.slot].edge >= 0) throw DomainError("slot " + port_str(p) + " is already used");
    }
    if (e.tail == e.head) throw DomainError("edge " + std::to_string(e.id) + " uses one slot twice");
    vertices_[e.tail.vertex].slots[e.tail.slot] = Dart{e.id, 0};
    vertices_[e.head.vertex].slots[e.head.slot] = Dart{e.id, 1};
    edges_[e.id] = e;
}

void Web::remove_edge(int id) {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw DomainError("no edge " + std::to_string(id));
    vertices_[it->second.tail.vertex].slots[it->second.tail.slot] = Dart{};
    vertices_[it->second.head.vertex].slots[it->second.head.slot] = Dart{};
    edges_.erase(it);
}

void Web::add_circle(const WebCircle& c) {
    if (edges_.count(c.id) || circles_.count(c.id)) throw DomainError("duplicate circle id " + std::to_string(c.id));
    if (c.thickness < 1) throw DomainError("circle " + std::to_string(c.id) + " has thickness < 1");
    circles_[c.id] = c;
}

void Web::remove_circle(int id) {
    if (!circles_.erase(id)) throw DomainError("no circle " + std::to_string(id));
}

const WebVertex& Web::vertex(int id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw DomainError("no vertex " + std::to_string(id));
    return it->second;
}

const WebEdge& Web::edge(int id) const {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw DomainError("no edge " + std::to_string(id));
    return it->second;
}

int Web::next_vertex_id() const { return vertices_.empty() ? 0 : vertices_.rbegin()->first + 1; }

int Web::next_edge_id() const {
    int m = 0;
    if (!edges_.empty()) m = std::max(m, edges_.rbegin()->first + 1);
    if (!circles_.empty()) m = std::max(m, circles_.rbegin()->first + 1);
    return m;
}

Dart Web::dart_at(const Port& p) const {
    const WebVertex& v = vertex(p.vertex);
    if (p.slot < 0 || p.slot >= v.degree) throw DomainError("bad slot " + port_str(p));
    return v.slots[p.slot];
}

Dart Web::face_next(const Dart& d) const {
    const Port& o = edge(d.edge).end(1 - d.end);
    const WebVertex& w = vertex(o.vertex);
    return w.slots[(o.slot + 1) % w.degree];
}

void Web::check() const {
    bool any_oriented = false, any_plain = false;
    for (const auto& [id, e] : edges_) (e.oriented ? any_oriented : any_plain) = true;
    for (const auto& [id, c] : circles_) (c.oriented ? any_oriented : any_plain) = true;
    if (any_oriented && any_plain) throw DomainError("web mixes oriented and unoriented edges");
    for (const auto& [id, v] : vertices_) {
        if (v.boundary && v.degree != 1) throw DomainError("boundary point " + std::to_string(id) + " must have one edge");
        if (!v.boundary && v.degree != 3) throw DomainError("vertex " + std::to_string(id) + " is not trivalent");
        if (v.boundary && v.sign != 1 && v.sign != -1)
            throw DomainError("boundary point " + std::to_string(id) + " needs a sign");
        for (int s = 0; s < v.degree; ++s)
            if (v.slots[s].edge < 0)
                throw DomainError("dangling half-edge at vertex " + std::to_string(id) + " slot " + std::to_string(s));
        if (!any_oriented) continue;
        if (v.boundary) {
            const Dart& d = v.slots[0];
            bool head_here = d.end == 1;
            if (head_here != (v.sign > 0))
                throw DomainError("boundary point " + std::to_string(id) + " sign disagrees with its edge orientation");
        } else {
            int heads = 0;
            for (const Dart& d : v.slots) heads += d.end == 1;
            if (heads != 0 && heads != 3)
                throw DomainError("vertex " + std::to_string(id) + " is neither a source nor a sink");
        }
    }
}

bool Web::is_oriented() const {
    for (const auto& [id, e] : edges_)
        if (e.oriented) return true;
    for (const auto& [id, c] : circles_)
        if (c.oriented) return true;
    return false;
}

bool Web::has_boundary() const {
    for (const auto& [id, v] : vertices_)
        if (v.boundary) return true;
    return false;
}

std::vector<int> Web::boundary_points() const {
    std::vector<int> out;
    for (const auto& [id, v] : vertices_)
        if (v.boundary) out.push_back(id);
    return out;
}

std::vector<int> Web::boundary_signs() const {
    std::vector<int> out;
    for (const auto& [id, v] : vertices_)
        if (v.boundary) out.push_back(v.sign);
    return out;
}

bool Web::operator==(const Web& o) const {
    if (edges_ != o.edges_ || circles_ != o.circles_ || vertices_.size() != o.vertices_.size()) return false;
    for (const auto& [id, v] : vertices_) {
        auto it = o.vertices_.find(id);
        if (it == o.vertices_.end()) return false;
        const WebVertex& w = it->second;
        if (v.degree != w.degree || v.boundary != w.boundary || v.sign != w.sign || v.slots != w.slots) return false;
    }
    return true;
}

// ------------------------------------------------------------------ rewrites

std::string rewrite_kind_name(RewriteKind k) {
    switch (k) {
        case RewriteKind::Birth: return "birth";
        case RewriteKind::Death: return "death";
        case RewriteKind::Saddle: return "saddle";
        case RewriteKind::Zip: return "zip";
        case RewriteKind::Unzip: return "unzip";
        case RewriteKind::Collapse: return "collapse";
        case RewriteKind::Expand: return "expand";
    }
    return "?";
}

RewriteKind rewrite_kind_from_name(const std::string& s) {
    for (RewriteKind k : {RewriteKind::Birth, RewriteKind::Death, RewriteKind::Saddle, RewriteKind::Zip,
                          RewriteKind::Unzip, RewriteKind::Collapse, RewriteKind::Expand})
        if (rewrite_kind_name(k) == s) return k;
    throw DomainError("unknown event kind '" + s + "'");
}

RewriteKind inverse_kind(RewriteKind k) {
    switch (k) {
        case RewriteKind::Birth: return RewriteKind::Death;
        case RewriteKind::Death: return RewriteKind::Birth;
        case RewriteKind::Saddle: return RewriteKind::Saddle;
        case RewriteKind::Zip: return RewriteKind::Unzip;
        case RewriteKind::Unzip: return RewriteKind::Zip;
        case RewriteKind::Collapse: return RewriteKind::Expand;
        case RewriteKind::Expand: return RewriteKind::Collapse;
    }
    return k;
}

bool WebRewrite::operator==(const WebRewrite& o) const {
    return kind == o.kind && rm_edges == o.rm_edges && rm_circles == o.rm_circles && rm_vertices == o.rm_vertices &&
           add_vertices == o.add_vertices && add_edges == o.add_edges && add_circles == o.add_circles;
}

WebRewrite inverse(const WebRewrite& r) {
    WebRewrite s;
    s.kind = inverse_kind(r.kind);
    s.rm_edges = r.add_edges;
    s.rm_circles = r.add_circles;
    s.rm_vertices = r.add_vertices;
    s.add_edges = r.rm_edges;
    s.add_circles = r.rm_circles;
    s.add_vertices = r.rm_vertices;
    return s;
}

namespace {

std::multiset<std::pair<int, int>> ports_of(const std::vector<WebEdge>& es) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& e : es) {
        out.insert({e.tail.vertex, e.tail.slot});
        out.insert({e.head.vertex, e.head.slot});
    }
    return out;
}

void shape_fail(const WebRewrite& r, const std::string& why) {
    throw DomainError(rewrite_kind_name(r.kind) + " has the wrong shape: " + why);
}

void check_forward_shape(const WebRewrite& r, bool inverted) {
    // Zip/Collapse are checked in their forward direction; \p inverted means
    // the caller passed the inverse record.
    const auto& rm_e = inverted ? r.add_edges : r.rm_edges;
    const auto& rm_c = inverted ? r.add_circles : r.rm_circles;
    const auto& rm_v = inverted ? r.add_vertices : r.rm_vertices;
    const auto& ad_e = inverted ? r.rm_edges : r.add_edges;
    const auto& ad_c = inverted ? r.rm_circles : r.add_circles;
    const auto& ad_v = inverted ? r.rm_vertices : r.add_vertices;
    RewriteKind k = inverted ? inverse_kind(r.kind) : r.kind;
    if (k == RewriteKind::Zip) {
        if (!rm_v.empty() || !ad_c.empty()) shape_fail(r, "unexpected vertices or circles");
        if (ad_v.size() != 2) shape_fail(r, "needs two new vertices");
        if (rm_e.size() == 1 && rm_c.empty()) {
            if (ad_e.size() != 4) shape_fail(r, "an edge zip creates four edges");
        } else if (rm_e.empty() && rm_c.size() == 1) {
            if (ad_e.size() != 3) shape_fail(r, "a circle zip creates three edges");
        } else {
            shape_fail(r, "zips act on one edge or circle");
        }
    } else if (k == RewriteKind::Collapse) {
        if (!rm_c.empty() || !ad_c.empty()) shape_fail(r, "unexpected circles");
        if (rm_v.size() != 3 || ad_v.size() != 1) shape_fail(r, "three vertices become one");
        if (rm_e.size() != 6 || ad_e.size() != 3) shape_fail(r, "six edges become three");
        for (int i = 0; i < 3; ++i)
            if (rm_e[i].id != ad_e[i].id) shape_fail(r, "legs must keep their ids");
    }
}

}  // namespace

void check_rewrite_shape(const WebRewrite& r) {
    switch (r.kind) {
        case RewriteKind::Birth:
            if (r.add_circles.size() != 1 || !r.add_edges.empty() || !r.add_vertices.empty() || !r.rm_edges.empty() ||
                !r.rm_circles.empty() || !r.rm_vertices.empty())
                shape_fail(r, "a birth adds exactly one circle");
            return;
        case RewriteKind::Death:
            if (r.rm_circles.size() != 1 || !r.add_edges.empty() || !r.add_vertices.empty() || !r.rm_edges.empty() ||
                !r.add_circles.empty() || !r.rm_vertices.empty())
                shape_fail(r, "a death removes exactly one circle");
            return;
        case RewriteKind::Saddle: {
            if (!r.rm_vertices.empty() || !r.add_vertices.empty()) shape_fail(r, "saddles keep vertices");
            std::size_t in = r.rm_edges.size() + r.rm_circles.size(), out = r.add_edges.size() + r.add_circles.size();
            bool two_edges = r.rm_edges.size() == 2 && r.add_edges.size() == 2 && in == 2 && out == 2;
            if (!two_edges && (in < 1 || in > 2 || out < 1 || out > 2 || in + out != 3))
                shape_fail(r, "saddles turn 1 strand into 2, 2 into 1, or reconnect two edges");
            if (r.rm_edges.size() == 2 && r.add_edges.size() != 2 && in == 2 && out == 1)
                shape_fail(r, "two edges cannot merge into one strand");
            if (ports_of(r.rm_edges) != ports_of(r.add_edges)) shape_fail(r, "edge ends must be preserved");
            return;
        }
        case RewriteKind::Zip:
        case RewriteKind::Collapse: check_forward_shape(r, false); return;
        case RewriteKind::Unzip:
        case RewriteKind::Expand: check_forward_shape(r, true); return;
    }
}

void apply_rewrite(Web& w, const WebRewrite& r) {
    check_rewrite_shape(r);
    for (const auto& e : r.rm_edges) {
        if (!w.has_edge(e.id)) throw DomainError("pattern mismatch: edge " + std::to_string(e.id) + " is absent");
        if (!(w.edge(e.id) == e)) throw DomainError("pattern mismatch: edge " + std::to_string(e.id) + " differs");
    }
    for (const auto& c : r.rm_circles) {
        if (!w.has_circle(c.id) || !(w.circles().at(c.id) == c))
            throw DomainError("pattern mismatch: circle " + std::to_string(c.id) + " is absent or differs");
    }
    for (const auto& e : r.rm_edges) w.remove_edge(e.id);
    for (const auto& c : r.rm_circles) w.remove_circle(c.id);
    for (const auto& v : r.rm_vertices) {
        if (!w.has_vertex(v.id)) throw DomainError("pattern mismatch: vertex " + std::to_string(v.id) + " is absent");
        const WebVertex& cur = w.vertex(v.id);
        if (cur.degree != v.degree || cur.boundary != v.boundary || cur.sign != v.sign)
            throw DomainError("pattern mismatch: vertex " + std::to_string(v.id) + " differs");
        w.remove_vertex(v.id);
    }
    for (const auto& v : r.add_vertices) w.add_vertex(v);
    for (const auto& e : r.add_edges) w.add_edge(e);
    for (const auto& c : r.add_circles) w.add_circle(c);
}

namespace {

VertexRecord record_of(const WebVertex& v) { return VertexRecord{v.id, v.degree, v.boundary, v.sign}; }

// Traversal of an edge starting at dart d: start port, end port, and whether
// the traversal follows the edge orientation (always true when unoriented).
struct Traversal {
    Port t, h;
    bool with = true;
};

Traversal traverse(const Web& w, const Dart& d) {
    const WebEdge& e = w.edge(d.edge);
    return Traversal{e.end(d.end), e.end(1 - d.end), !e.oriented || d.end == 0};
}

WebEdge directed_edge(int id, const Port& from, const Port& to, bool with, const WebEdge& like) {
    WebEdge e = like;
    e.id = id;
    if (with) {
        e.tail = from;
        e.head = to;
    } else {
        e.tail = to;
        e.head = from;
    }
    return e;
}

std::vector<Dart> face_of(const Web& w, const Dart& start) {
    std::vector<Dart> out;
    Dart d = start;
    do {
        out.push_back(d);
        d = w.face_next(d);
        if (out.size() > 4 * w.edges().size() + 4) throw DomainError("face tracing does not terminate");
    } while (d != start);
    return out;
}

int leg_at(const Web& w, int v, int e1, int e2) {
    const WebVertex& vx = w.vertex(v);
    int leg = -1;
    int used1 = 0, used2 = 0;
    for (const Dart& d : vx.slots) {
        if (d.edge == e1 && used1 == 0) {
            ++used1;
            continue;
        }
        if (d.edge == e2 && used2 == 0) {
            ++used2;
            continue;
        }
        leg = d.edge;
    }
    if (used1 != 1 || used2 != 1 || leg < 0) throw DomainError("vertex " + std::to_string(v) + " is not a simple corner");
    return leg;
}

Port far_port(const Web& w, int edge, int v) {
    const WebEdge& e = w.edge(edge);
    return e.tail.vertex == v ? e.head : e.tail;
}

bool points_into(const Web& w, int edge, int v) { return w.edge(edge).head.vertex == v; }

}  // namespace

WebRewrite make_birth(const Web& w, int thickness) {
    WebRewrite r;
    r.kind = RewriteKind::Birth;
    r.add_circles.push_back(WebCircle{w.next_edge_id(), false, thickness});
    return r;
}

WebRewrite make_death(const Web& w, int circle) {
    auto it = w.circles().find(circle);
    if (it == w.circles().end()) throw DomainError("no circle " + std::to_string(circle));
    WebRewrite r;
    r.kind = RewriteKind::Death;
    r.rm_circles.push_back(it->second);
    return r;
}

WebRewrite make_saddle(const Web& w, const Dart& a, const Dart& b) {
    WebRewrite r;
    r.kind = RewriteKind::Saddle;
    int fresh = w.next_edge_id();
    bool ca = w.has_circle(a.edge), cb = w.has_circle(b.edge);
    if (!ca && !w.has_edge(a.edge)) throw DomainError("saddle: no strand " + std::to_string(a.edge));
    if (!cb && !w.has_edge(b.edge)) throw DomainError("saddle: no strand " + std::to_string(b.edge));
    if (ca && cb) {
        const WebCircle& c = w.circles().at(a.edge);
        if (a.edge == b.edge) {
            r.rm_circles.push_back(c);
            r.add_circles.push_back(WebCircle{fresh, c.oriented, c.thickness});
            r.add_circles.push_back(WebCircle{fresh + 1, c.oriented, c.thickness});
        } else {
            r.rm_circles.push_back(c);
            r.rm_circles.push_back(w.circles().at(b.edge));
            r.add_circles.push_back(WebCircle{fresh, c.oriented, c.thickness});
        }
        return r;
    }
    if (ca || cb) {
        const Dart& ed = ca ? b : a;
        const WebCircle& c = w.circles().at(ca ? a.edge : b.edge);
        const WebEdge& e = w.edge(ed.edge);
        r.rm_edges.push_back(e);
        r.rm_circles.push_back(c);
        WebEdge n = e;
        n.id = fresh;
        r.add_edges.push_back(n);
        return r;
    }
    const WebEdge& ea = w.edge(a.edge);
    if (a.edge == b.edge) {
        r.rm_edges.push_back(ea);
        WebEdge n = ea;
        n.id = fresh;
        r.add_edges.push_back(n);
        r.add_circles.push_back(WebCircle{fresh + 1, ea.oriented, ea.thickness});
        return r;
    }
    Traversal ta = traverse(w, a), tb = traverse(w, b);
    if (ta.with != tb.with) throw DomainError("saddle: strand orientations are incompatible");
    r.rm_edges.push_back(ea);
    r.rm_edges.push_back(w.edge(b.edge));
    r.add_edges.push_back(directed_edge(fresh, ta.t, tb.h, ta.with, ea));
    r.add_edges.push_back(directed_edge(fresh + 1, tb.t, ta.h, ta.with, w.edge(b.edge)));
    return r;
}

WebRewrite make_zip(const Web& w, int id) {
    WebRewrite r;
    r.kind = RewriteKind::Zip;
    int p = w.next_vertex_id(), q = p + 1;
    int fresh = w.next_edge_id();
    r.add_vertices = {VertexRecord{p, 3, false, 0}, VertexRecord{q, 3, false, 0}};
    bool oriented;
    int thick;
    if (w.has_circle(id)) {
        const WebCircle& c = w.circles().at(id);
        r.rm_circles.push_back(c);
        oriented = c.oriented;
        thick = c.thickness;
        WebEdge leg{fresh, Port{q, 0}, Port{p, 0}, oriented, thick};
        r.add_edges.push_back(leg);
    } else {
        const WebEdge& e = w.edge(id);
        r.rm_edges.push_back(e);
        oriented = e.oriented;
        thick = e.thickness;
        r.add_edges.push_back(WebEdge{fresh, e.tail, Port{p, 0}, oriented, thick});
        r.add_edges.push_back(WebEdge{fresh + 1, Port{q, 0}, e.head, oriented, thick});
        fresh += 1;
    }
    // p receives the flow, so in the oriented case the digon edges run q -> p
    WebEdge a{fresh + 1, Port{p, 1}, Port{q, 2}, oriented, thick};
    WebEdge m{fresh + 2, Port{p, 2}, Port{q, 1}, oriented, thick};
    if (oriented) {
        std::swap(a.tail, a.head);
        std::swap(m.tail, m.head);
    }
    r.add_edges.push_back(a);
    r.add_edges.push_back(m);
    return r;
}

WebRewrite make_unzip(const Web& w, const Dart& face_dart) {
    std::vector<Dart> f = face_of(w, face_dart);
    if (f.size() != 2) throw DomainError("unzip: face is not a digon");
    int u = w.vertex_of(f[0]), v = w.vertex_of(f[1]);
    int ea = f[0].edge, em = f[1].edge;
    if (u == v || ea == em || w.vertex(u).boundary || w.vertex(v).boundary)
        throw DomainError("unzip: degenerate digon");
    int lu = leg_at(w, u, ea, em), lv = leg_at(w, v, ea, em);
    WebRewrite r;
    r.kind = RewriteKind::Unzip;
    r.rm_vertices = {record_of(w.vertex(u)), record_of(w.vertex(v))};
    const WebEdge& Lu = w.edge(lu);
    if (lu == lv) {
        r.rm_edges = {Lu, w.edge(ea), w.edge(em)};
        r.add_circles.push_back(WebCircle{w.next_edge_id(), Lu.oriented, Lu.thickness});
        return r;
    }
    r.rm_edges = {Lu, w.edge(lv), w.edge(ea), w.edge(em)};
    Port fu = far_port(w, lu, u), fv = far_port(w, lv, v);
    bool with = !Lu.oriented || points_into(w, lu, u);
    r.add_edges.push_back(directed_edge(w.next_edge_id(), fu, fv, with, Lu));
    return r;
}

WebRewrite make_collapse(const Web& w, const Dart& face_dart) {
    std::vector<Dart> f = face_of(w, face_dart);
    if (f.size() != 3) throw DomainError("collapse: face is not a triangle");
    int t[3], tri[3], leg[3];
    for (int i = 0; i < 3; ++i) {
        t[i] = w.vertex_of(f[i]);
        tri[i] = f[i].edge;
    }
    std::set<int> tv(t, t + 3), te(tri, tri + 3);
    if (tv.size() != 3 || te.size() != 3) throw DomainError("collapse: degenerate triangle");
    for (int i = 0; i < 3; ++i) {
        if (w.vertex(t[i]).boundary) throw DomainError("collapse: triangle touches the boundary");
        leg[i] = leg_at(w, t[i], tri[(i + 2) % 3], tri[i]);
    }
    std::set<int> le(leg, leg + 3);
    if (le.size() != 3) throw DomainError("collapse: degenerate triangle");
    for (int i = 0; i < 3; ++i)
        if (te.count(leg[i]) || tv.count(far_port(w, leg[i], t[i]).vertex))
            throw DomainError("collapse: degenerate triangle");
    WebRewrite r;
    r.kind = RewriteKind::Collapse;
    int nv = w.next_vertex_id();
    for (int i = 0; i < 3; ++i) r.rm_vertices.push_back(record_of(w.vertex(t[i])));
    for (int i = 0; i < 3; ++i) r.rm_edges.push_back(w.edge(leg[i]));
    for (int i = 0; i < 3; ++i) r.rm_edges.push_back(w.edge(tri[i]));
    r.add_vertices.push_back(VertexRecord{nv, 3, false, 0});
    const int slot_of[3] = {0, 2, 1};
    for (int i = 0; i < 3; ++i) {
        WebEdge e = w.edge(leg[i]);
        Port& p = e.tail.vertex == t[i] ? e.tail : e.head;
        p = Port{nv, slot_of[i]};
        r.add_edges.push_back(e);
    }
    return r;
}

WebRewrite make_expand(const Web& w, int vid) {
    const WebVertex& v = w.vertex(vid);
    if (v.boundary) throw DomainError("expand: boundary point");
    int o[3] = {v.slots[0].edge, v.slots[2].edge, v.slots[1].edge};
    if (o[0] == o[1] || o[1] == o[2] || o[0] == o[2]) throw DomainError("expand: vertex carries a loop");
    WebRewrite r;
    r.kind = RewriteKind::Expand;
    r.rm_vertices.push_back(record_of(v));
    int t0 = w.next_vertex_id();
    int fresh = w.next_edge_id();
    bool oriented = w.edge(o[0]).oriented;
    for (int i = 0; i < 3; ++i) r.rm_edges.push_back(w.edge(o[i]));
    for (int i = 0; i < 3; ++i) r.add_vertices.push_back(VertexRecord{t0 + i, 3, false, 0});
    for (int i = 0; i < 3; ++i) {
        WebEdge e = w.edge(o[i]);
        Port& p = e.tail.vertex == vid ? e.tail : e.head;
        p = Port{t0 + i, 0};
        r.add_edges.push_back(e);
    }
    // triangle edge i joins t_i (slot 2) to t_{i+1} (slot 1)
    for (int i = 0; i < 3; ++i)
        r.add_edges.push_back(WebEdge{fresh + i, Port{t0 + i, 2}, Port{t0 + (i + 1) % 3, 1}, oriented, 1});
    return r;
}

// ------------------------------------------------------------------ text format

namespace {

struct Tok {
    std::string s;
    int col;
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        out.push_back(Tok{line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_int(const Tok& t, int line, const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("x");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, t.col, "expected an integer, got '" + s + "'");
    }
}

Port parse_port(const Tok& t, int line) {
    auto c = t.s.find(':');
    if (c == std::string::npos) throw ParseError(line, t.col, "expected vertex:slot, got '" + t.s + "'");
    return Port{parse_int(t, line, t.s.substr(0, c)), parse_int(t, line, t.s.substr(c + 1))};
}

}  // namespace

Web parse_web(const std::string& text) {
    Web w;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    bool header = false;
    std::map<int, int> vertex_line;
    struct PendingEdge {
        WebEdge e;
        int line, col;
    };
    std::vector<PendingEdge> pending;
    while (std::getline(in, line)) {
        ++ln;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks[0].s != "web" || toks.size() != 1) throw ParseError(ln, toks[0].col, "expected 'web' header");
            header = true;
            continue;
        }
        const std::string& kw = toks[0].s;
        if (kw == "vertex") {
            if (toks.size() < 2 || toks.size() > 3) throw ParseError(ln, toks[0].col, "vertex <id> [boundary=+|-]");
            VertexRecord r;
            r.id = parse_int(toks[1], ln, toks[1].s);
            if (toks.size() == 3) {
                if (toks[2].s == "boundary=+") r.sign = 1;
                else if (toks[2].s == "boundary=-") r.sign = -1;
                else throw ParseError(ln, toks[2].col, "unknown vertex attribute '" + toks[2].s + "'");
                r.boundary = true;
                r.degree = 1;
            }
            try {
                w.add_vertex(r);
            } catch (const DomainError& e) {
                throw ParseError(ln, toks[1].col, e.what());
            }
            vertex_line[r.id] = ln;
        } else if (kw == "edge") {
            if (toks.size() < 4) throw ParseError(ln, toks[0].col, "edge <id> <v>:<slot> <v>:<slot> [oriented] [thick=k]");
            WebEdge e;
            e.id = parse_int(toks[1], ln, toks[1].s);
            e.tail = parse_port(toks[2], ln);
            e.head = parse_port(toks[3], ln);
            for (std::size_t i = 4; i < toks.size(); ++i) {
                if (toks[i].s == "oriented") e.oriented = true;
                else if (toks[i].s.rfind("thick=", 0) == 0) e.thickness = parse_int(toks[i], ln, toks[i].s.substr(6));
                else throw ParseError(ln, toks[i].col, "unknown edge attribute '" + toks[i].s + "'");
            }
            pending.push_back({e, ln, toks[0].col});
        } else if (kw == "circle") {
            if (toks.size() < 2) throw ParseError(ln, toks[0].col, "circle <id> [oriented] [thick=k]");
            WebCircle c;
            c.id = parse_int(toks[1], ln, toks[1].s);
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (toks[i].s == "oriented") c.oriented = true;
                else if (toks[i].s.rfind("thick=", 0) == 0) c.thickness = parse_int(toks[i], ln, toks[i].s.substr(6));
                else throw ParseError(ln, toks[i].col, "unknown circle attribute '" + toks[i].s + "'");
            }
            try {
                w.add_circle(c);
            } catch (const DomainError& e) {
                throw ParseError(ln, toks[1].col, e.what());
            }
        } else {
            throw ParseError(ln, toks[0].col, "unknown keyword '" + kw + "'");
        }
    }
    if (!header) throw ParseError(ln == 0 ? 1 : ln, 1, "missing 'web' header");
    for (const auto& pe : pending) {
        try {
            w.add_edge(pe.e);
        } catch (const DomainError& e) {
            throw ParseError(pe.line, pe.col, e.what());
        }
    }
    try {
        w.check();
    } catch (const DomainError& e) {
        int l = 1;
        // point at the offending vertex declaration when one is named
        for (const auto& [id, vl] : vertex_line) {
            std::string tag = "vertex " + std::to_string(id) + " ";
            std::string tag2 = "point " + std::to_string(id) + " ";
            std::string msg = std::string(e.what()) + " ";
            if (msg.find(tag) != std::string::npos || msg.find(tag2) != std::string::npos) l = vl;
        }
        throw ParseError(l, 1, e.what());
    }
    return w;
}

std::string serialize_web(const Web& w) {
    std::ostringstream out;
    out << "web\n";
    for (const auto& [id, v] : w.vertices()) {
        out << "vertex " << id;
        if (v.boundary) out << " boundary=" << (v.sign > 0 ? '+' : '-');
        out << "\n";
    }
    for (const auto& [id, e] : w.edges()) {
        out << "edge " << id << " " << port_str(e.tail) << " " << port_str(e.head);
        if (e.oriented) out << " oriented";
        if (e.thickness != 1) out << " thick=" << e.thickness;
        out << "\n";
    }
    for (const auto& [id, c] : w.circles()) {
        out << "circle " << id;
        if (c.oriented) out << " oriented";
        if (c.thickness != 1) out << " thick=" << c.thickness;
        out << "\n";
    }
    return out.str();
}

Web load_web(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_web(ss.str());
}

// ------------------------------------------------------------------ structure

std::vector<Dart> trace_face(const Web& w, const Dart& start) { return face_of(w, start); }

std::vector<Region> regions(const Web& w) {
    std::vector<Region> out;
    std::set<Dart> seen;
    UnionFind uf;
    for (const auto& [id, v] : w.vertices()) uf.find(id);
    for (const auto& [id, e] : w.edges()) uf.unite(e.tail.vertex, e.head.vertex);
    std::map<int, int> comp_v, comp_e, comp_f;
    for (const auto& [id, v] : w.vertices()) ++comp_v[uf.find(id)];
    for (const auto& [id, e] : w.edges()) ++comp_e[uf.find(e.tail.vertex)];
    for (const auto& [id, e] : w.edges()) {
        for (int end = 0; end < 2; ++end) {
            Dart d0{id, end};
            if (seen.count(d0)) continue;
            Region r;
            Dart d = d0;
            do {
                if (!seen.insert(d).second) throw DomainError("inconsistent rotation system");
                r.darts.push_back(d);
                if (w.vertex(w.vertex_of(d)).boundary) r.touches_boundary = true;
                d = w.face_next(d);
            } while (d != d0);
            r.sides = static_cast<int>(r.darts.size());
            ++comp_f[uf.find(e.tail.vertex)];
            out.push_back(std::move(r));
        }
    }
    for (const auto& [c, nv] : comp_v) {
        int f = comp_f[c], e = comp_e[c];
        if (e == 0) continue;  // isolated vertex
        if (nv - e + f != 2)
            throw DomainError("rotation system is not planar (V - E + F = " + std::to_string(nv - e + f) + ")");
    }
    for (const auto& [id, c] : w.circles()) {
        for (int k = 0; k < 2; ++k) {
            Region r;
            r.circle = id;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<int> find_bridges(const Web& w) {
    // iterative low-link over the multigraph; parallel edges are never bridges
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbour, edge)
    for (const auto& [id, v] : w.vertices()) adj[id];
    for (const auto& [id, e] : w.edges()) {
        if (e.tail.vertex == e.head.vertex) continue;
        adj[e.tail.vertex].push_back({e.head.vertex, id});
        adj[e.head.vertex].push_back({e.tail.vertex, id});
    }
    std::map<int, int> disc, low;
    std::vector<int> bridges;
    int timer = 0;
    for (const auto& [root, nb] : adj) {
        if (disc.count(root)) continue;
        struct Frame {
            int v, parent_edge;
            std::size_t next;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            auto& list = adj[fr.v];
            if (fr.next < list.size()) {
                auto [u, eid] = list[fr.next++];
                if (eid == fr.parent_edge) continue;
                if (disc.count(u)) {
                    low[fr.v] = std::min(low[fr.v], disc[u]);
                } else {
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, eid, 0});
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p]) bridges.push_back(done.parent_edge);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

std::optional<int> find_bridge(const Web& w) {
    auto b = find_bridges(w);
    if (b.empty()) return std::nullopt;
    return b.front();
}

std::int64_t count_tait_colorings_web(const Web& w) {
    // edges ordered by a breadth-first sweep so constraints bite early
    std::vector<int> order;
    std::set<int> placed, visited;
    for (const auto& [root, v0] : w.vertices()) {
        if (visited.count(root)) continue;
        std::vector<int> queue{root};
        visited.insert(root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (const Dart& d : w.vertex(queue[qi]).slots) {
                if (d.edge < 0) continue;
                if (placed.insert(d.edge).second) order.push_back(d.edge);
                int u = far_port(w, d.edge, queue[qi]).vertex;
                if (visited.insert(u).second) queue.push_back(u);
            }
        }
    }
    for (const auto& [id, e] : w.edges())
        if (e.tail.vertex == e.head.vertex && !w.vertex(e.tail.vertex).boundary) return 0;
    std::map<int, int> mask;
    std::function<std::int64_t(std::size_t)> rec = [&](std::size_t i) -> std::int64_t {
        if (i == order.size()) return 1;
        const WebEdge& e = w.edge(order[i]);
        int a = e.tail.vertex, b = e.head.vertex;
        bool ia = !w.vertex(a).boundary, ib = !w.vertex(b).boundary;
        std::int64_t total = 0;
        for (int c = 0; c < 3; ++c) {
            int bit = 1 << c;
            if ((ia && (mask[a] & bit)) || (ib && (mask[b] & bit))) continue;
            if (ia) mask[a] |= bit;
            if (ib) mask[b] |= bit;
            total = detail::add_checked(total, rec(i + 1));
            if (ia) mask[a] &= ~bit;
            if (ib) mask[b] &= ~bit;
        }
        return total;
    };
    std::int64_t t = rec(0);
    for (std::size_t i = 0; i < w.circles().size(); ++i) t = detail::mul_checked(t, 3);
    return t;
}

bool is_nonelliptic(const Web& w) {
    if (!w.circles().empty()) return false;
    for (const Region& r : regions(w))
        if (!r.touches_boundary && r.sides < 6) return false;
    return true;
}

bool is_balanced(const std::vector<int>& signs) {
    int s = 0;
    for (int x : signs) s += x;
    return ((s % 3) + 3) % 3 == 0;
}

Web disjoint_union(const Web& a, const Web& b) {
    Web out = a;
    int dv = a.next_vertex_id(), de = a.next_edge_id();
    for (const auto& [id, v] : b.vertices()) out.add_vertex(VertexRecord{id + dv, v.degree, v.boundary, v.sign});
    for (const auto& [id, e] : b.edges()) {
        WebEdge n = e;
        n.id += de;
        n.tail.vertex += dv;
        n.head.vertex += dv;
        out.add_edge(n);
    }
    for (const auto& [id, c] : b.circles()) {
        WebCircle n = c;
        n.id += de;
        out.add_circle(n);
    }
    return out;
}

// ------------------------------------------------------------------ reduction

namespace {

bool has_loop(const Web& w) {
    for (const auto& [id, e] : w.edges())
        if (e.tail.vertex == e.head.vertex) return true;
    return false;
}

// First region of the requested size, scanning darts in ascending order.
std::optional<Dart> find_face(const Web& w, int sides) {
    std::set<Dart> seen;
    for (const auto& [id, e] : w.edges()) {
        for (int end = 0; end < 2; ++end) {
            Dart d0{id, end};
            if (seen.count(d0)) continue;
            auto f = face_of(w, d0);
            for (const Dart& d : f) seen.insert(d);
            if (static_cast<int>(f.size()) != sides) continue;
            bool inner = true;
            for (const Dart& d : f)
                if (w.vertex(w.vertex_of(d)).boundary) inner = false;
            if (inner) return *std::min_element(f.begin(), f.end());
        }
    }
    return std::nullopt;
}

std::vector<Dart> all_faces_of_size(const Web& w, int sides) {
    std::vector<Dart> out;
    std::set<Dart> seen;
    for (const auto& [id, e] : w.edges()) {
        for (int end = 0; end < 2; ++end) {
            Dart d0{id, end};
            if (seen.count(d0)) continue;
            auto f = face_of(w, d0);
            for (const Dart& d : f) seen.insert(d);
            if (static_cast<int>(f.size()) == sides) out.push_back(*std::min_element(f.begin(), f.end()));
        }
    }
    return out;
}

Dart digon_dart_on(const Web& w, int edge) {
    for (int end = 0; end < 2; ++end) {
        Dart d{edge, end};
        if (face_of(w, d).size() == 2) return d;
    }
    throw DomainError("square smoothing did not produce a digon");
}

// Rewrites turning the square face at \p d0 into one of its two smoothings.
// branch 0 joins the legs at the two ends of the face's first edge.
std::vector<WebRewrite> square_branch(const Web& w, const Dart& d0, int branch) {
    auto f = face_of(w, d0);
    if (f.size() != 4) throw DomainError("not a square face");
    std::vector<WebRewrite> out;
    Web cur = w;
    WebRewrite s = branch == 0 ? make_saddle(cur, f[1], f[3]) : make_saddle(cur, f[0], f[2]);
    apply_rewrite(cur, s);
    out.push_back(s);
    for (int k = 0; k < 2; ++k) {
        WebRewrite u = make_unzip(cur, digon_dart_on(cur, s.add_edges[k].id));
        apply_rewrite(cur, u);
        out.push_back(u);
    }
    return out;
}

void reduce_node(Web w, ReductionNode& node, std::int64_t& t, LaurentQ& grk) {
    std::int64_t tf = 1;
    LaurentQ gf = LaurentQ::constant(1);
    auto finish_zero = [&](const std::string& why) {
        node.end = ReductionNode::End::Zero;
        node.reason = why;
        t = 0;
        grk = LaurentQ();
    };
    while (true) {
        if (has_loop(w)) return finish_zero("loop");
        if (find_bridge(w)) return finish_zero("bridge");
        if (!w.circles().empty()) {
            int c = w.circles().begin()->first;
            ReductionStep st{StepKind::Circle, make_death(w, c), c};
            apply_rewrite(w, st.rewrite);
            node.steps.push_back(st);
            tf = detail::mul_checked(tf, 3);
            gf *= quantum_integer(3);
            continue;
        }
        if (w.vertices().empty()) {
            node.end = ReductionNode::End::Empty;
            t = tf;
            grk = gf;
            return;
        }
        regions(w);  // planarity check
        if (auto d = find_face(w, 2)) {
            WebRewrite u = make_unzip(w, *d);
            int target = u.rm_edges[u.rm_edges.size() - 2].id;
            apply_rewrite(w, u);
            node.steps.push_back(ReductionStep{StepKind::Digon, u, target});
            tf = detail::mul_checked(tf, 2);
            gf *= quantum_integer(2);
            continue;
        }
        if (auto d = find_face(w, 3)) {
            WebRewrite c = make_collapse(w, *d);
            apply_rewrite(w, c);
            node.steps.push_back(ReductionStep{StepKind::Triangle, c, -1});
            continue;
        }
        if (auto d = find_face(w, 4)) {
            node.end = ReductionNode::End::Branch;
            std::int64_t tsum = 0;
            LaurentQ gsum;
            for (int b = 0; b < 2; ++b) {
                auto rw = square_branch(w, *d, b);
                Web child = w;
                for (const auto& r : rw) apply_rewrite(child, r);
                node.branch_rewrites.push_back(rw);
                node.children.emplace_back();
                std::int64_t ct;
                LaurentQ cg;
                reduce_node(child, node.children.back(), ct, cg);
                if (node.children.back().end == ReductionNode::End::Irreducible) {
                    node.end = ReductionNode::End::Irreducible;
                    t = 0;
                    grk = LaurentQ();
                    return;
                }
                tsum = detail::add_checked(tsum, ct);
                gsum += cg;
            }
            t = detail::mul_checked(tf, tsum);
            grk = gf * gsum;
            return;
        }
        node.end = ReductionNode::End::Irreducible;
        t = 0;
        grk = LaurentQ();
        return;
    }
}

bool tree_irreducible(const ReductionNode& n) {
    if (n.end == ReductionNode::End::Irreducible) return true;
    for (const auto& c : n.children)
        if (tree_irreducible(c)) return true;
    return false;
}

}  // namespace

ReductionOutcome reduce(const Web& w0) {
    w0.check();
    if (w0.has_boundary()) throw DomainError("reduce requires a closed web");
    ReductionOutcome out;
    std::int64_t t;
    LaurentQ g;
    reduce_node(w0, out.trace, t, g);
    if (tree_irreducible(out.trace)) {
        out.reduced = false;
        out.reason = "irreducible";
        return out;
    }
    out.reduced = true;
    out.t = t;
    out.grk = g;
    if (out.trace.end == ReductionNode::End::Zero) out.reason = out.trace.reason;
    return out;
}

namespace {

LaurentQ kuperberg_rec(Web w, std::mt19937_64* rng) {
    LaurentQ factor = LaurentQ::constant(1);
    while (true) {
        if (w.vertices().empty()) return factor * quantum_integer(3).pow(static_cast<int>(w.circles().size()));
        std::vector<std::pair<int, Dart>> cands;  // (sides, dart); sides 0 marks a circle
        if (rng) {
            for (const auto& [id, c] : w.circles()) cands.push_back({0, Dart{id, 0}});
            for (int s : {2, 4})
                for (const Dart& d : all_faces_of_size(w, s)) cands.push_back({s, d});
        } else {
            if (!w.circles().empty()) cands.push_back({0, Dart{w.circles().begin()->first, 0}});
            else if (auto d = find_face(w, 2)) cands.push_back({2, *d});
            else if (auto d4 = find_face(w, 4)) cands.push_back({4, *d4});
        }
        if (cands.empty()) throw DomainError("oriented web is not reducible by the Kuperberg relations");
        auto [sides, d] = rng ? cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(*rng)]
                              : cands.front();
        if (sides == 0) {
            apply_rewrite(w, make_death(w, d.edge));
            factor *= quantum_integer(3);
        } else if (sides == 2) {
            apply_rewrite(w, make_unzip(w, d));
            factor *= quantum_integer(2);
        } else {
            LaurentQ sum;
            for (int b = 0; b < 2; ++b) {
                Web child = w;
                for (const auto& r : square_branch(w, d, b)) apply_rewrite(child, r);
                sum += kuperberg_rec(child, rng);
            }
            return factor * sum;
        }
    }
}

}  // namespace

LaurentQ kuperberg_poly(const Web& w, std::uint64_t seed) {
    w.check();
    if (w.has_boundary()) throw DomainError("kuperberg_poly requires a closed web");
    if (!w.is_oriented() && !w.vertices().empty()) throw DomainError("kuperberg_poly requires an oriented web");
    regions(w);
    if (seed == 0) return kuperberg_rec(w, nullptr);
    std::mt19937_64 rng(seed);
    return kuperberg_rec(w, &rng);
}

Web closure(const Web& top, const Web& bottom) {
    top.check();
    bottom.check();
    if (top.boundary_signs() != bottom.boundary_signs())
        throw DomainError("webs do not share a boundary sign sequence");
    // mirrored copy of top: rotations reversed and orientations flipped
    Web u;
    for (const auto& [id, v] : top.vertices()) u.add_vertex(VertexRecord{id, v.degree, v.boundary, v.sign});
    auto mirror_port = [&](const Port& p) { return Port{p.vertex, (top.vertex(p.vertex).degree - p.slot) % top.vertex(p.vertex).degree}; };
    for (const auto& [id, e] : top.edges()) {
        WebEdge n = e;
        n.tail = mirror_port(e.tail);
        n.head = mirror_port(e.head);
        if (n.oriented) std::swap(n.tail, n.head);
        u.add_edge(n);
    }
    for (const auto& [id, c] : top.circles()) u.add_circle(c);
    int dv = u.next_vertex_id();
    Web both = disjoint_union(u, bottom);
    auto tb = top.boundary_points(), bb = bottom.boundary_points();
    std::map<int, int> partner;
    for (std::size_t i = 0; i < tb.size(); ++i) {
        partner[tb[i]] = bb[i] + dv;
        partner[bb[i] + dv] = tb[i];
    }
    Web out;
    for (const auto& [id, v] : both.vertices())
        if (!v.boundary) out.add_vertex(VertexRecord{id, v.degree, false, 0});
    for (const auto& [id, c] : both.circles()) out.add_circle(c);
    int fresh = both.next_edge_id();
    std::set<int> used;
    auto is_b = [&](int v) { return both.vertex(v).boundary; };
    // walk from an internal port through boundary junctions to the next internal port
    for (const auto& [id, e] : both.edges()) {
        if (used.count(id)) continue;
        int start_end = -1;
        if (!is_b(e.tail.vertex)) start_end = 0;
        else if (!is_b(e.head.vertex)) start_end = 1;
        if (start_end < 0) continue;
        Port start = e.end(start_end);
        bool with = !e.oriented || start_end == 0;
        int cur = id, cur_end = start_end;
        while (true) {
            used.insert(cur);
            Port far = both.edge(cur).end(1 - cur_end);
            if (!is_b(far.vertex)) {
                WebEdge n = e;
                n.id = fresh++;
                n.tail = with ? start : far;
                n.head = with ? far : start;
                out.add_edge(n);
                break;
            }
            int pv = partner.at(far.vertex);
            Dart nd = both.vertex(pv).slots[0];
            cur = nd.edge;
            cur_end = nd.end;
        }
    }
    // remaining unused edges join boundary points only: they close into circles
    for (const auto& [id, e] : both.edges()) {
        if (used.count(id)) continue;
        int cur = id, cur_end = 0;
        while (!used.count(cur)) {
            used.insert(cur);
            Port far = both.edge(cur).end(1 - cur_end);
            Dart nd = both.vertex(partner.at(far.vertex)).slots[0];
            cur = nd.edge;
            cur_end = nd.end;
        }
        out.add_circle(WebCircle{fresh++, e.oriented, e.thickness});
    }
    out.check();
    return out;
}

LaurentQ hom_space_dim(const Web& a, const Web& b) {
    Web c = closure(a, b);
    LaurentQ g;
    if (c.is_oriented()) {
        g = kuperberg_poly(c);
    } else {
        ReductionOutcome r = reduce(c);
        if (!r.reduced) throw DomainError("not computable by reduction");
        g = r.grk;
    }
    return g * LaurentQ::monomial(static_cast<int>(a.boundary_points().size()));
}

}  // namespace foamlab
