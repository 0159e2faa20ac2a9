#include <algorithm>
#include <set>

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"

namespace foamlab {

int uniform(Rng& rng, int lo, int hi) {
    if (hi <= lo) return lo;
    // modulo draw keeps the stream identical across standard libraries
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Web circle_web() { return parse_web("web\ncircle 0\n"); }

Web theta_web() { return parse_web("web\nvertex 0\nvertex 1\nedge 0 0:0 1:0\nedge 1 0:1 1:2\nedge 2 0:2 1:1\n"); }

Web k4_web() {
    return parse_web(
        "web\nvertex 0\nvertex 1\nvertex 2\nvertex 3\n"
        "edge 0 0:2 1:2\nedge 1 0:0 2:1\nedge 2 0:1 3:1\nedge 3 1:1 2:2\nedge 4 1:0 3:0\nedge 5 2:0 3:2\n");
}

Web dodecahedron_web() {
    static const char* text =
        "web\n"
        "vertex 0\n"
        "vertex 1\n"
        "vertex 2\n"
        "vertex 3\n"
        "vertex 4\n"
        "vertex 5\n"
        "vertex 6\n"
        "vertex 7\n"
        "vertex 8\n"
        "vertex 9\n"
        "vertex 10\n"
        "vertex 11\n"
        "vertex 12\n"
        "vertex 13\n"
        "vertex 14\n"
        "vertex 15\n"
        "vertex 16\n"
        "vertex 17\n"
        "vertex 18\n"
        "vertex 19\n"
        "edge 0 0:2 1:2\n"
        "edge 1 0:1 10:0\n"
        "edge 2 0:0 19:0\n"
        "edge 3 1:1 2:2\n"
        "edge 4 1:0 8:0\n"
        "edge 5 2:1 3:2\n"
        "edge 6 2:0 6:0\n"
        "edge 7 3:0 4:2\n"
        "edge 8 3:1 19:1\n"
        "edge 9 4:0 5:2\n"
        "edge 10 4:1 17:1\n"
        "edge 11 5:0 6:2\n"
        "edge 12 5:1 15:1\n"
        "edge 13 6:1 7:2\n"
        "edge 14 7:0 8:2\n"
        "edge 15 7:1 14:1\n"
        "edge 16 8:1 9:2\n"
        "edge 17 9:0 10:2\n"
        "edge 18 9:1 13:1\n"
        "edge 19 10:1 11:2\n"
        "edge 20 11:1 12:2\n"
        "edge 21 11:0 18:0\n"
        "edge 22 12:1 13:2\n"
        "edge 23 12:0 16:0\n"
        "edge 24 13:0 14:2\n"
        "edge 25 14:0 15:2\n"
        "edge 26 15:0 16:2\n"
        "edge 27 16:1 17:2\n"
        "edge 28 17:0 18:2\n"
        "edge 29 18:1 19:2\n";
    return parse_web(text);
}

namespace {

// faces as lists of darts, in ascending order of their smallest dart
std::vector<std::vector<Dart>> all_faces(const Web& w) {
    std::vector<std::vector<Dart>> out;
    std::set<Dart> seen;
    for (const auto& [id, e] : w.edges())
        for (int end = 0; end < 2; ++end) {
            Dart d{id, end};
            if (seen.count(d)) continue;
            auto f = trace_face(w, d);
            for (const auto& x : f) seen.insert(x);
            out.push_back(f);
        }
    return out;
}

// two darts of distinct edges on one random face
bool pick_face_pair(const Web& w, Rng& rng, Dart& a, Dart& b) {
    auto faces = all_faces(w);
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::set<int> es;
        for (const auto& d : faces[i]) es.insert(d.edge);
        if (es.size() >= 2) ok.push_back(i);
    }
    if (ok.empty()) return false;
    const auto& f = faces[ok[uniform(rng, 0, static_cast<int>(ok.size()) - 1)]];
    int n = static_cast<int>(f.size());
    for (int tries = 0; tries < 64; ++tries) {
        int i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
        if (f[i].edge != f[j].edge) {
            a = f[i];
            b = f[j];
            return true;
        }
    }
    return false;
}

int random_strand(const Web& w, Rng& rng, bool circles_too) {
    std::vector<int> ids;
    for (const auto& [id, e] : w.edges()) ids.push_back(id);
    if (circles_too)
        for (const auto& [id, c] : w.circles()) ids.push_back(id);
    if (ids.empty()) return -1;
    return ids[uniform(rng, 0, static_cast<int>(ids.size()) - 1)];
}

bool try_expand(Web& w, Rng& rng) {
    std::vector<int> ids;
    for (const auto& [id, v] : w.vertices())
        if (!v.boundary) ids.push_back(id);
    if (ids.empty()) return false;
    int v = ids[uniform(rng, 0, static_cast<int>(ids.size()) - 1)];
    try {
        apply_rewrite(w, make_expand(w, v));
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

}  // namespace

bool insert_square(Web& w, Rng& rng) {
    Dart a, b;
    if (!pick_face_pair(w, rng, a, b)) return false;
    Web cur = w;
    WebRewrite z1 = make_zip(cur, a.edge);
    apply_rewrite(cur, z1);
    WebRewrite z2 = make_zip(cur, b.edge);
    apply_rewrite(cur, z2);
    auto sides = [](const WebRewrite& z) {
        std::size_t n = z.add_edges.size();
        return std::set<int>{z.add_edges[n - 2].id, z.add_edges[n - 1].id};
    };
    std::set<int> s1 = sides(z1), s2 = sides(z2);
    for (const auto& f : all_faces(cur)) {
        std::optional<Dart> d1, d2;
        for (const auto& d : f) {
            if (s1.count(d.edge)) d1 = d;
            if (s2.count(d.edge)) d2 = d;
        }
        if (d1 && d2) {
            apply_rewrite(cur, make_saddle(cur, *d1, *d2));
            w = cur;
            return true;
        }
    }
    return false;
}

Web random_reducible_web(Rng& rng, int max_vertices) {
    Web w = circle_web();
    int target = uniform(rng, 2, std::max(2, max_vertices));
    int guard = 0;
    while (static_cast<int>(w.vertices().size()) < target && ++guard < 200) {
        int room = max_vertices - static_cast<int>(w.vertices().size());
        int move = uniform(rng, 0, 9);
        if (move == 0 && w.circles().size() < 2) {
            apply_rewrite(w, make_birth(w));
        } else if (move <= 3 || w.vertices().empty()) {
            int s = random_strand(w, rng, true);
            if (s >= 0 && room >= 2) apply_rewrite(w, make_zip(w, s));
        } else if (move <= 6) {
            if (room >= 2) try_expand(w, rng);
        } else if (room >= 4) {
            insert_square(w, rng);
        }
        if (room < 2) break;
    }
    return w;
}

Web random_web(Rng& rng, int max_vertices) {
    Web w = uniform(rng, 0, 3) == 0 && max_vertices >= 20 ? dodecahedron_web() : circle_web();
    int steps = uniform(rng, 1, 8);
    for (int s = 0; s < steps; ++s) {
        int room = max_vertices - static_cast<int>(w.vertices().size());
        int move = uniform(rng, 0, 4);
        if (move == 0 && room >= 2) {
            int e = random_strand(w, rng, true);
            if (e >= 0) apply_rewrite(w, make_zip(w, e));
        } else if (move == 1 && room >= 2) {
            try_expand(w, rng);
        } else if (move == 2 && room >= 4) {
            insert_square(w, rng);
        } else if (move == 3) {
            Dart a, b;
            if (pick_face_pair(w, rng, a, b)) apply_rewrite(w, make_saddle(w, a, b));
        } else if (room >= 2) {
            int e = random_strand(w, rng, true);
            if (e >= 0) apply_rewrite(w, make_zip(w, e));
        }
    }
    return w;
}

std::vector<int> random_braid_word(Rng& rng, int strands, int length) {
    std::vector<int> word;
    if (strands < 2) return word;
    for (int i = 0; i < length; ++i) {
        int g = uniform(rng, 1, strands - 1);
        word.push_back(uniform(rng, 0, 1) ? g : -g);
    }
    return word;
}

MovePair random_move_pair(Rng& rng, int max_strands, int max_length) {
    int n = uniform(rng, 2, std::max(2, max_strands));
    std::vector<int> w = random_braid_word(rng, n, uniform(rng, 0, max_length));
    int at = uniform(rng, 0, static_cast<int>(w.size()));
    auto with = [&](std::vector<int> mid) {
        std::vector<int> out(w.begin(), w.begin() + at);
        out.insert(out.end(), mid.begin(), mid.end());
        out.insert(out.end(), w.begin() + at, w.end());
        return out;
    };
    int sg = uniform(rng, 0, 1) ? 1 : -1;
    int kind = uniform(rng, 0, 4);
    if (kind == 1 && n < 3) kind = 0;
    if (kind == 2 && n < 4) kind = 3;
    MovePair m;
    switch (kind) {
        case 0: {
            int i = uniform(rng, 1, n - 1);
            m.move = "cancelling pair";
            m.before = braid_closure(n, w);
            m.after = braid_closure(n, with({sg * i, -sg * i}));
            break;
        }
        case 1: {
            int i = uniform(rng, 1, n - 2);
            m.move = "braid relation";
            m.before = braid_closure(n, with({sg * i, sg * (i + 1), sg * i}));
            m.after = braid_closure(n, with({sg * (i + 1), sg * i, sg * (i + 1)}));
            break;
        }
        case 2: {
            int i = uniform(rng, 1, n - 3);
            int j = uniform(rng, i + 2, n - 1);
            int sj = uniform(rng, 0, 1) ? 1 : -1;
            m.move = "far commutation";
            m.before = braid_closure(n, with({sg * i, sj * j}));
            m.after = braid_closure(n, with({sj * j, sg * i}));
            break;
        }
        case 3: {
            int g = uniform(rng, 1, n - 1) * sg;
            std::vector<int> c{g};
            c.insert(c.end(), w.begin(), w.end());
            c.push_back(-g);
            m.move = "conjugation";
            m.before = braid_closure(n, w);
            m.after = braid_closure(n, c);
            break;
        }
        default: {
            std::vector<int> s = w;
            s.push_back(sg * n);
            m.move = "stabilisation";
            m.before = braid_closure(n, w);
            m.after = braid_closure(n + 1, s);
            break;
        }
    }
    return m;
}

LinkDiagram random_link(Rng& rng, int max_crossings) {
    int n = uniform(rng, 2, 4);
    return braid_closure(n, random_braid_word(rng, n, uniform(rng, 1, max_crossings)));
}

Web random_oriented_web(Rng& rng, int max_vertices) {
    int strands = uniform(rng, 2, 3);
    int len = uniform(rng, 1, 8);
    LinkDiagram d = braid_closure(strands, random_braid_word(rng, strands, len));
    int budget = max_vertices / 2;
    std::vector<int> choice(d.crossings.size(), 0);
    for (auto& c : choice)
        if (budget > 0 && uniform(rng, 0, 1)) {
            c = 1;
            --budget;
        }
    return resolution_web(d, choice);
}

Web unoriented(const Web& w) {
    Web out;
    for (const auto& [id, v] : w.vertices()) out.add_vertex(VertexRecord{id, v.degree, v.boundary, v.sign});
    for (const auto& [id, e] : w.edges()) {
        WebEdge n = e;
        n.oriented = false;
        out.add_edge(n);
    }
    for (const auto& [id, c] : w.circles()) {
        WebCircle n = c;
        n.oriented = false;
        out.add_circle(n);
    }
    return out;
}

}  // namespace foamlab
