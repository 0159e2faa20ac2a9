#include <algorithm>
#include <functional>

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"

namespace foamlab {

TheoryTag sl3u() { return TheoryTag{Theory::Sl3Unoriented, 3}; }
TheoryTag sl3o() { return TheoryTag{Theory::Sl3Oriented, 3}; }
TheoryTag gl(int N) { return TheoryTag{Theory::GlN, N}; }

namespace {

Facet make_facet(int id, int chi, int dots = 0, int thickness = 1) {
    Facet f;
    f.id = id;
    f.euler_open = chi;
    f.dots = dots;
    f.thickness = thickness;
    return f;
}

Seam circle_seam(int id, int a, int b, int c, bool orient = true) {
    Seam s;
    s.id = id;
    s.circle = true;
    s.sides = {a, b, c};
    s.orient = orient;
    return s;
}

Seam interval_seam(int id, int a, int b, int c, int v0, int v1, bool orient = true) {
    Seam s = circle_seam(id, a, b, c, orient);
    s.circle = false;
    s.ends = {v0, v1};
    return s;
}

}  // namespace

Foam surface_foam(int genus, int dots, TheoryTag t, int thickness) {
    Foam f;
    f.theory = t;
    f.facets[0] = make_facet(0, 2 - 2 * genus, dots, thickness);
    return f;
}

Foam sphere_foam(int dots, TheoryTag t, int thickness) { return surface_foam(0, dots, t, thickness); }

Foam theta_foam(const std::array<int, 3>& dots, TheoryTag t) {
    Foam f;
    f.theory = t;
    for (int i = 0; i < 3; ++i) f.facets[i] = make_facet(i, 1, dots[i]);
    f.seams[0] = circle_seam(0, 0, 1, 2);
    return f;
}

Foam gl_theta_foam(int N, int a, int b, const std::array<std::vector<SymPoly>, 3>& labels,
                   const std::array<int, 3>& genera, bool orient) {
    Foam f;
    f.theory = gl(N);
    int th[3] = {a, b, a + b};
    for (int i = 0; i < 3; ++i) {
        f.facets[i] = make_facet(i, 1 - 2 * genera[i], 0, th[i]);
        f.facets[i].labels = labels[i];
    }
    f.seams[0] = circle_seam(0, 0, 1, 2, orient);
    return f;
}

Foam torus_with_disks() { return torus_lattice(1, 1); }

Foam torus_lattice(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("torus lattice needs n, m >= 1");
    Foam f;
    auto sq = [&](int i, int j) { return ((i % n + n) % n) * m + ((j % m + m) % m); };
    int mdisk = n * m, ldisk = n * m + n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) f.facets[sq(i, j)] = make_facet(sq(i, j), 1);
    for (int i = 0; i < n; ++i) f.facets[mdisk + i] = make_facet(mdisk + i, 1);
    for (int j = 0; j < m; ++j) f.facets[ldisk + j] = make_facet(ldisk + j, 1);
    auto vtx = [&](int i, int j) { return ((i % n + n) % n) * m + ((j % m + m) % m); };
    // meridian i runs along j; longitude j runs along i
    auto mseg = [&](int i, int j) { return vtx(i, j); };
    auto lseg = [&](int i, int j) { return n * m + vtx(i, j); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            f.seams[mseg(i, j)] = interval_seam(mseg(i, j), sq(i - 1, j), sq(i, j), mdisk + i, vtx(i, j), vtx(i, j + 1));
            f.seams[lseg(i, j)] = interval_seam(lseg(i, j), sq(i, j - 1), sq(i, j), ldisk + j, vtx(i, j), vtx(i + 1, j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            FoamVertex v;
            v.id = vtx(i, j);
            v.ends = {SeamEnd{mseg(i, j - 1), 1}, SeamEnd{mseg(i, j), 0}, SeamEnd{lseg(i - 1, j), 1}, SeamEnd{lseg(i, j), 0}};
            v.corners = std::array<int, 6>{mdisk + i,        sq(i - 1, j - 1), sq(i, j - 1),
                                           sq(i - 1, j), sq(i, j),         ldisk + j};
            f.vertices[v.id] = v;
        }
    return f;
}

Foam k4_suspension(int N, int a, int b, int c, bool flip) {
    Foam f;
    f.theory = gl(N);
    // facets: a, b, c, ab, bc, abc
    int th[6] = {a, b, c, a + b, b + c, a + b + c};
    for (int i = 0; i < 6; ++i) f.facets[i] = make_facet(i, 1, 0, th[i]);
    // Planar web: merges v1 (a,b->ab), v2 (ab,c->abc); splits v3 (bc->b,c),
    // v4 (abc->a,bc). Drawn with v4 inside the triangle v1 v2 v3, the
    // stored side orders are counterclockwise seen from above at v1, v2 and
    // clockwise at v3, v4. Suspension points: N = vertex 0 above, S = 1.
    // Seams are oriented as boundaries of their thin facets: downwards at
    // merges and upwards at splits.
    struct Spec {
        int a, b, c;
        bool ccw_from_above;
        bool merge;
    };
    Spec spec[4] = {{0, 1, 3, true, true}, {3, 2, 5, true, true}, {1, 2, 4, false, false}, {0, 4, 5, false, false}};
    for (int s = 0; s < 4; ++s) {
        bool down = spec[s].merge != flip;
        // looking along a downward seam is looking from above
        bool orient = down ? spec[s].ccw_from_above : !spec[s].ccw_from_above;
        f.seams[s] = interval_seam(s, spec[s].a, spec[s].b, spec[s].c, down ? 0 : 1, down ? 1 : 0, orient);
    }
    for (int v = 0; v < 2; ++v) {
        FoamVertex x;
        x.id = v;
        for (int s = 0; s < 4; ++s) {
            int end = f.seams[s].ends[0] == v ? 0 : 1;
            x.ends[s] = SeamEnd{s, end};
        }
        // corner (i,j) is the edge shared by web vertices i and j
        x.corners = std::array<int, 6>{3, 1, 0, 2, 5, 4};
        f.vertices[v] = x;
    }
    return f;
}

Foam two_seam_oriented_foam() {
    Foam f;
    f.theory = sl3o();
    // P, R and T, S are disks; Q has genus one and two boundary circles
    f.facets[0] = make_facet(0, 1, 1);
    f.facets[1] = make_facet(1, -2);
    f.facets[2] = make_facet(2, 1);
    f.facets[3] = make_facet(3, 1, 1);
    f.facets[4] = make_facet(4, 1);
    f.seams[0] = circle_seam(0, 0, 1, 2);
    f.seams[1] = circle_seam(1, 4, 1, 3);
    return f;
}

Foam add_bubble(const Foam& f, int facet, int upper_dots, int lower_dots) {
    if (f.theory.kind == Theory::GlN) throw DomainError("bubbles are built on SL(3) foams");
    Foam g = f;
    auto it = g.facets.find(facet);
    if (it == g.facets.end()) throw DomainError("add_bubble: no facet " + std::to_string(facet));
    it->second.euler_open -= 1;
    int next = g.facets.rbegin()->first + 1;
    g.facets[next] = make_facet(next, 1, upper_dots);
    g.facets[next + 1] = make_facet(next + 1, 1, lower_dots);
    int sid = g.seams.empty() ? 0 : g.seams.rbegin()->first + 1;
    g.seams[sid] = circle_seam(sid, facet, next, next + 1);
    g.cell_euler.reset();
    return g;
}

Movie cup_movie(int dots, TheoryTag t) {
    Movie m;
    m.theory = t;
    WebRewrite b = make_birth(m.bottom);
    b.add_circles[0].oriented = t.kind == Theory::Sl3Oriented;
    m.events.push_back(rewrite_event(b));
    if (dots > 0) m.events.push_back(dot_event(b.add_circles[0].id, dots));
    return m;
}

Movie theta_cup_movie(const std::array<int, 3>& dots, TheoryTag t) {
    Movie m = cup_movie(0, t);
    Web w = m.top();
    WebRewrite z = make_zip(w, w.circles().begin()->first);
    m.events.push_back(rewrite_event(z));
    // strands: the leg, then the two digon edges
    for (int i = 0; i < 3; ++i)
        if (dots[i] > 0) m.events.push_back(dot_event(z.add_edges[i].id, dots[i]));
    return m;
}

// ------------------------------------------------------------ random movies

namespace {

std::vector<int> strand_ids(const Web& w) {
    std::vector<int> ids;
    for (const auto& [id, e] : w.edges()) ids.push_back(id);
    for (const auto& [id, c] : w.circles()) ids.push_back(id);
    return ids;
}

int pick(Rng& rng, const std::vector<int>& v) { return v[uniform(rng, 0, static_cast<int>(v.size()) - 1)]; }

struct Recorder {
    Movie& m;
    Web w;
    void apply(const WebRewrite& r) {
        apply_rewrite(w, r);
        m.events.push_back(rewrite_event(r));
    }
    void maybe_dot(Rng& rng, int max_dots) {
        if (max_dots <= 0 || uniform(rng, 0, 2) != 0) return;
        auto ids = strand_ids(w);
        if (ids.empty()) return;
        m.events.push_back(dot_event(pick(rng, ids), uniform(rng, 1, max_dots)));
    }
};

// a saddle between two darts on one face, if the result is a valid web
bool try_saddle(Recorder& rec, Rng& rng) {
    std::vector<Dart> darts;
    for (const auto& [id, e] : rec.w.edges())
        for (int end = 0; end < 2; ++end) darts.push_back(Dart{id, end});
    if (darts.size() < 2) return false;
    for (int tries = 0; tries < 8; ++tries) {
        Dart a = darts[uniform(rng, 0, static_cast<int>(darts.size()) - 1)];
        auto face = trace_face(rec.w, a);
        Dart b = face[uniform(rng, 0, static_cast<int>(face.size()) - 1)];
        if (a.edge == b.edge) continue;
        try {
            WebRewrite r = make_saddle(rec.w, a, b);
            Web test = rec.w;
            apply_rewrite(test, r);
            test.check();
            regions(test);
            rec.apply(r);
            return true;
        } catch (const DomainError&) {
        }
    }
    return false;
}

// closes the slice by replaying a reduction, picking random square branches
bool close_by_reduction(Recorder& rec, Rng& rng) {
    ReductionOutcome out = reduce(rec.w);
    std::vector<MovieEvent> events;
    Web w = rec.w;
    std::function<bool(const ReductionNode&)> walk = [&](const ReductionNode& n) {
        for (const auto& s : n.steps) {
            apply_rewrite(w, s.rewrite);
            events.push_back(rewrite_event(s.rewrite));
        }
        if (n.end == ReductionNode::End::Empty) return true;
        if (n.end != ReductionNode::End::Branch) return false;
        int i = uniform(rng, 0, static_cast<int>(n.children.size()) - 1);
        for (const auto& r : n.branch_rewrites[i]) {
            apply_rewrite(w, r);
            events.push_back(rewrite_event(r));
        }
        return walk(n.children[i]);
    };
    if (!out.reduced || !walk(out.trace)) return false;
    for (auto& e : events) rec.m.events.push_back(e);
    rec.w = w;
    return true;
}

}  // namespace

Movie random_closed_movie(Rng& rng, TheoryTag t, int max_vertices, int max_dots, bool allow_vertices) {
    if (t.kind == Theory::GlN) throw DomainError("random closed movies are SL(3) movies");
    bool oriented = t.kind == Theory::Sl3Oriented;
    Movie m;
    m.theory = t;
    Recorder rec{m, Web{}};
    auto birth = [&]() {
        WebRewrite b = make_birth(rec.w);
        b.add_circles[0].oriented = oriented;
        rec.apply(b);
    };
    birth();
    rec.maybe_dot(rng, max_dots);
    int steps = uniform(rng, 1, 7);
    for (int s = 0; s < steps; ++s) {
        int room = max_vertices - static_cast<int>(rec.w.vertices().size());
        int move = uniform(rng, 0, 5);
        if (move == 0 && rec.w.circles().size() < 2) {
            birth();
        } else if (move <= 2 && room >= 2) {
            rec.apply(make_zip(rec.w, pick(rng, strand_ids(rec.w))));
        } else if (move == 3 && room >= 2 && allow_vertices && !rec.w.vertices().empty()) {
            std::vector<int> vs;
            for (const auto& [id, v] : rec.w.vertices()) vs.push_back(id);
            try {
                rec.apply(make_expand(rec.w, pick(rng, vs)));
            } catch (const DomainError&) {
            }
        } else if (move == 4) {
            try_saddle(rec, rng);
        }
        rec.maybe_dot(rng, max_dots);
    }
    std::size_t forward = m.events.size();
    bool closed = false;
    if (!oriented && allow_vertices && uniform(rng, 0, 1) == 0) closed = close_by_reduction(rec, rng);
    if (!closed) {
        m.events.resize(forward);
        std::vector<MovieEvent> back;
        for (std::size_t i = forward; i-- > 0;) {
            const MovieEvent& e = m.events[i];
            if (e.kind == MovieEvent::Kind::Rewrite) back.push_back(rewrite_event(inverse(e.rewrite)));
            else if (uniform(rng, 0, 1) == 0) back.push_back(e);
        }
        for (auto& e : back) m.events.push_back(e);
    }
    // a few dots on the middle slice keep the pairing nontrivial
    return m;
}

Foam random_sl3_foam(Rng& rng, int max_vertices, int max_dots) {
    Foam f = movie_to_foam(random_closed_movie(rng, sl3u(), max_vertices, max_dots));
    if (uniform(rng, 0, 3) == 0) {
        int facet = uniform(rng, 0, static_cast<int>(f.facets.size()) - 1);
        f = add_bubble(f, facet, uniform(rng, 0, 1), uniform(rng, 0, 1));
    }
    return f;
}

// ------------------------------------------------------------ GL(N)

SymPoly random_label(Rng& rng, int arity, int degree) {
    // integer combination of products of elementary symmetric polynomials
    SymPoly p(arity);
    int terms = uniform(rng, 1, 3);
    std::function<void(int, int, SymPoly)> parts;
    std::vector<SymPoly> monomials;
    parts = [&](int left, int max_part, SymPoly acc) {
        if (left == 0) {
            monomials.push_back(acc);
            return;
        }
        for (int k = std::min(left, std::min(max_part, arity)); k >= 1; --k)
            parts(left - k, k, acc * elementary_symmetric(k, arity));
    };
    parts(degree, degree, SymPoly::constant(1, arity));
    if (monomials.empty()) return SymPoly::constant(uniform(rng, 1, 3), arity);
    for (int i = 0; i < terms; ++i) {
        int c = uniform(rng, -2, 2);
        if (c == 0) c = 1;
        p += monomials[uniform(rng, 0, static_cast<int>(monomials.size()) - 1)].scaled(c);
    }
    if (p.is_zero()) p = monomials.front();
    return p;
}

Foam random_gln_foam(Rng& rng, int max_facets, int max_N, int max_label_degree) {
    int N = uniform(rng, 2, std::max(2, max_N));
    auto labels_for = [&](int thickness) {
        std::vector<SymPoly> out;
        int n = uniform(rng, 0, 2);
        for (int i = 0; i < n; ++i) out.push_back(random_label(rng, thickness, uniform(rng, 0, max_label_degree)));
        return out;
    };
    auto piece = [&](int budget) -> Foam {
        int kind = uniform(rng, 0, 3);
        if (kind == 3 && budget >= 6 && N >= 3) {
            int a = uniform(rng, 1, N - 2), b = uniform(rng, 1, N - 1 - a), c = uniform(rng, 1, N - a - b);
            Foam f = k4_suspension(N, a, b, c);
            for (auto& [id, x] : f.facets) x.labels = labels_for(x.thickness);
            return f;
        }
        if (kind >= 1 && budget >= 3) {
            int a = uniform(rng, 1, N - 1), b = uniform(rng, 1, N - a);
            std::array<std::vector<SymPoly>, 3> labels{labels_for(a), labels_for(b), labels_for(a + b)};
            std::array<int, 3> genera{uniform(rng, 0, 3) == 0, 0, uniform(rng, 0, 3) == 0};
            return gl_theta_foam(N, a, b, labels, genera, uniform(rng, 0, 1) == 1);
        }
        int th = uniform(rng, 1, N);
        Foam f = surface_foam(uniform(rng, 0, 4) == 0 ? 1 : 0, 0, gl(N), th);
        f.facets[0].labels = labels_for(th);
        return f;
    };
    Foam f = piece(max_facets);
    while (uniform(rng, 0, 2) == 0) {
        int left = max_facets - static_cast<int>(f.facets.size());
        if (left < 1) break;
        Foam g = piece(left);
        if (static_cast<int>(g.facets.size()) > left) break;
        f = disjoint_union(f, g);
    }
    return f;
}

std::vector<std::pair<std::string, Foam>> foam_corpus() {
    std::vector<std::pair<std::string, Foam>> out;
    for (int n = 0; n <= 4; ++n) out.push_back({"sphere " + std::to_string(n), sphere_foam(n)});
    for (int g = 1; g <= 2; ++g) out.push_back({"genus " + std::to_string(g), surface_foam(g, 0)});
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 1; ++c) out.push_back({"theta", theta_foam({a, b, c})});
    out.push_back({"torus with disks", torus_with_disks()});
    out.push_back({"torus lattice 2x1", torus_lattice(2, 1)});
    out.push_back({"torus lattice 2x2", torus_lattice(2, 2)});
    out.push_back({"bubble on sphere", add_bubble(sphere_foam(3), 0, 1, 0)});
    out.push_back({"bubble on theta", add_bubble(theta_foam({2, 1, 0}), 1, 1, 0)});
    out.push_back({"two spheres", disjoint_union(sphere_foam(2), sphere_foam(3))});
    out.push_back({"glued theta cups", glue(theta_cup_movie({1, 0, 0}), theta_cup_movie({1, 1, 0}))});
    Rng rng(2024);
    for (int i = 0; i < 12; ++i) out.push_back({"random movie", random_sl3_foam(rng, 8, 2)});
    return out;
}

}  // namespace foamlab
