#include "foamlab/foam.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "foamlab/errors.hpp"

namespace foamlab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char c) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == c) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s, int line, int col) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, col, "expected an integer, got '" + s + "'");
    }
}

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

// column of the i-th token on a line (1-based)
int token_col(const std::string& line, std::size_t index) {
    std::size_t i = 0, n = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        if (n == index) return static_cast<int>(i) + 1;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        ++n;
    }
    return static_cast<int>(line.size()) + 1;
}

TheoryTag parse_theory(const std::string& name, int N, int line) {
    TheoryTag t;
    if (name == "sl3u") t.kind = Theory::Sl3Unoriented;
    else if (name == "sl3o") t.kind = Theory::Sl3Oriented;
    else if (name == "gl") t.kind = Theory::GlN;
    else throw ParseError(line, 1, "unknown theory '" + name + "'");
    t.N = t.kind == Theory::GlN ? N : 3;
    if (t.N < 1) throw ParseError(line, 1, "N must be positive");
    return t;
}

std::string theory_header(const TheoryTag& t) {
    std::string s = "theory=" + theory_name(t);
    if (t.kind == Theory::GlN) s += " N=" + std::to_string(t.N);
    return s;
}

}  // namespace

std::string theory_name(const TheoryTag& t) {
    switch (t.kind) {
        case Theory::Sl3Unoriented: return "sl3u";
        case Theory::Sl3Oriented: return "sl3o";
        case Theory::GlN: return "gl";
    }
    return "?";
}

bool Facet::operator==(const Facet& o) const {
    return id == o.id && thickness == o.thickness && euler_open == o.euler_open && dots == o.dots && labels == o.labels;
}

const Facet& Foam::facet(int id) const {
    auto it = facets.find(id);
    if (it == facets.end()) throw DomainError("no facet " + std::to_string(id));
    return it->second;
}

int Foam::total_dots() const {
    int d = 0;
    for (const auto& [id, f] : facets) d += f.dots;
    return d;
}

bool Foam::operator==(const Foam& o) const {
    return theory == o.theory && facets == o.facets && seams == o.seams && vertices == o.vertices && closed == o.closed;
}

// ------------------------------------------------------------ labels

SymPoly parse_label(const std::string& text, int arity) {
    std::size_t i = 0;
    auto fail = [&](const std::string& m) {
        throw ParseError(1, static_cast<int>(i) + 1, "label '" + text + "': " + m);
    };
    auto peek = [&]() -> char {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        return i < text.size() ? text[i] : '\0';
    };
    auto number = [&]() {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail("expected a number");
        long long v = std::stoll(text.substr(i, j - i));
        i = j;
        return v;
    };
    std::function<SymPoly()> expr;
    auto atom = [&]() -> SymPoly {
        char c = peek();
        if (c == '(') {
            ++i;
            SymPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++i;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SymPoly::constant(number(), arity);
        if (c == 'y' || c == 'x' || c == 'e' || c == 'h') {
            ++i;
            long long k = number();
            if (c == 'e') {
                if (k < 0 || k > arity) fail("e" + std::to_string(k) + " exceeds the facet thickness");
                return elementary_symmetric(static_cast<int>(k), arity);
            }
            if (c == 'h') return complete_homogeneous(static_cast<int>(k), arity);
            if (k < 1 || k > arity) fail("variable index out of range");
            return SymPoly::variable(static_cast<int>(k) - 1, arity);
        }
        fail("unexpected character");
        return SymPoly();
    };
    auto factor = [&]() {
        SymPoly b = atom();
        if (peek() == '^') {
            ++i;
            peek();
            b = b.pow(static_cast<int>(number()));
        }
        return b;
    };
    auto term = [&]() {
        SymPoly t = factor();
        while (peek() == '*') {
            ++i;
            t = t * factor();
        }
        return t;
    };
    expr = [&]() {
        SymPoly acc(arity);
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i;
        }
        SymPoly t = term();
        acc = neg ? -t : t;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++i;
            SymPoly u = term();
            acc = c == '+' ? acc + u : acc - u;
        }
        return acc;
    };
    if (arity < 1) fail("arity must be positive");
    SymPoly p = expr();
    if (peek() != '\0') fail("trailing input");
    return p;
}

std::string format_label(const SymPoly& p) {
    std::string s = p.to_string("y");
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

// ------------------------------------------------------------ foam checks

int euler_characteristic(const Foam& f) {
    int chi = 0;
    for (const auto& [id, x] : f.facets) chi += x.euler_open;
    for (const auto& [id, s] : f.seams)
        if (!s.circle) chi -= 1;
    chi += static_cast<int>(f.vertices.size());
    return chi;
}

int boundary_circle_count(const Foam& f, int facet) {
    int n = 0;
    for (const auto& [id, s] : f.seams)
        for (int x : s.sides) n += x == facet;
    return n;
}

namespace {

std::multiset<int> side_set(const Seam& s) { return {s.sides.begin(), s.sides.end()}; }

bool corners_consistent(const Foam& f, const FoamVertex& v, const std::array<int, 6>& c) {
    for (int e = 0; e < 4; ++e) {
        std::multiset<int> got;
        for (int p = 0; p < 6; ++p)
            if (kCornerPairs[p][0] == e || kCornerPairs[p][1] == e) got.insert(c[p]);
        if (got != side_set(f.seams.at(v.ends[e].seam))) return false;
    }
    return true;
}

bool infer_corners(const Foam& f, const FoamVertex& v) {
    std::array<std::vector<int>, 6> cand;
    for (int p = 0; p < 6; ++p) {
        auto a = side_set(f.seams.at(v.ends[kCornerPairs[p][0]].seam));
        auto b = side_set(f.seams.at(v.ends[kCornerPairs[p][1]].seam));
        std::set<int> both;
        for (int x : a)
            if (b.count(x)) both.insert(x);
        cand[p].assign(both.begin(), both.end());
    }
    std::array<int, 6> cur{};
    std::function<bool(int)> go = [&](int p) {
        if (p == 6) return corners_consistent(f, v, cur);
        for (int x : cand[p]) {
            cur[p] = x;
            if (go(p + 1)) return true;
        }
        return false;
    };
    return go(0);
}

}  // namespace

ValidationReport validate(const Foam& f) {
    ValidationReport r;
    auto bad = [&](const std::string& m) { r.problems.push_back(m); };
    bool sl3 = f.theory.kind != Theory::GlN;
    for (const auto& [id, x] : f.facets) {
        std::string name = "facet " + std::to_string(id);
        if (x.thickness < 1) bad(name + ": thickness must be positive");
        if (sl3 && x.thickness != 1) bad(name + ": SL(3) facets have thickness 1");
        if (!sl3 && x.thickness > f.theory.N) bad(name + ": thickness exceeds N");
        if (x.dots < 0) bad(name + ": negative dot count");
        if (x.dots > 0 && x.thickness != 1) bad(name + ": plain dots need thickness 1");
        if (sl3 && !x.labels.empty()) bad(name + ": SL(3) facets carry plain dots only");
        for (const auto& l : x.labels) {
            if (l.nvars() != x.thickness) bad(name + ": label arity differs from the thickness");
            else if (!is_symmetric(l)) bad(name + ": label is not symmetric");
            else if (!l.is_homogeneous()) bad(name + ": label is not homogeneous");
        }
    }
    std::map<std::pair<int, int>, int> end_refs;
    for (const auto& [id, s] : f.seams) {
        std::string name = "seam " + std::to_string(id);
        bool sides_ok = true;
        for (int x : s.sides)
            if (!f.facets.count(x)) {
                bad(name + ": unknown facet " + std::to_string(x));
                sides_ok = false;
            }
        if (sides_ok && !sl3) {
            int a = f.facets.at(s.sides[0]).thickness, b = f.facets.at(s.sides[1]).thickness;
            int c = f.facets.at(s.sides[2]).thickness;
            if (a + b != c)
                bad(name + ": thickness additivity fails (" + std::to_string(a) + "+" + std::to_string(b) +
                    "!=" + std::to_string(c) + ")");
        }
        if (s.circle) {
            if (s.ends[0] != -1 || s.ends[1] != -1) bad(name + ": circle seams have no ends");
        } else {
            for (int e = 0; e < 2; ++e) {
                if (s.ends[e] == -1) {
                    if (f.closed) bad(name + ": dangling end " + std::to_string(e));
                    continue;
                }
                if (!f.vertices.count(s.ends[e])) bad(name + ": end at unknown vertex " + std::to_string(s.ends[e]));
                end_refs[{id, e}] += 0;
            }
        }
    }
    for (const auto& [id, v] : f.vertices) {
        std::string name = "vertex " + std::to_string(id);
        bool ends_ok = true;
        for (const auto& se : v.ends) {
            auto it = f.seams.find(se.seam);
            if (it == f.seams.end() || it->second.circle || se.end < 0 || se.end > 1) {
                bad(name + ": bad seam end " + std::to_string(se.seam) + ":" + std::to_string(se.end));
                ends_ok = false;
                continue;
            }
            if (it->second.ends[se.end] != id) {
                bad(name + ": seam " + std::to_string(se.seam) + " end " + std::to_string(se.end) +
                    " does not point back");
                ends_ok = false;
            }
            ++end_refs[{se.seam, se.end}];
        }
        if (!ends_ok) continue;
        bool sides_known = true;
        for (const auto& se : v.ends)
            for (int x : f.seams.at(se.seam).sides) sides_known = sides_known && f.facets.count(x);
        if (!sides_known) continue;
        if (v.corners) {
            if (!corners_consistent(f, v, *v.corners))
                bad(name + ": corners do not match the seams' facets");
        } else if (!infer_corners(f, v)) {
            bad(name + ": no corner assignment is consistent with the seams");
        }
    }
    for (const auto& [key, n] : end_refs) {
        const Seam& s = f.seams.at(key.first);
        if (s.ends[key.second] == -1) continue;
        if (n == 0) bad("seam " + std::to_string(key.first) + ": dangling end " + std::to_string(key.second));
        if (n > 1) bad("seam " + std::to_string(key.first) + ": end used by several vertex slots");
    }
    return r;
}

// ------------------------------------------------------------ foam text

Foam parse_foam(const std::string& text) {
    Foam f;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = strip_comment(raw);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok[0] != "foam") throw ParseError(ln, token_col(line, 0), "expected 'foam' header");
            std::string th = "sl3u";
            int N = 3;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (tok[i].rfind("theory=", 0) == 0) th = tok[i].substr(7);
                else if (tok[i].rfind("N=", 0) == 0) N = to_int(tok[i].substr(2), ln, token_col(line, i) + 2);
                else if (tok[i] == "open") f.closed = false;
                else throw ParseError(ln, token_col(line, i), "unknown header field '" + tok[i] + "'");
            }
            f.theory = parse_theory(th, N, ln);
            header = true;
            continue;
        }
        if (tok.size() < 2) throw ParseError(ln, token_col(line, 0), "missing id");
        int id = to_int(tok[1], ln, token_col(line, 1));
        auto field = [&](std::size_t i, std::string& key, std::string& val) {
            auto p = tok[i].find('=');
            if (p == std::string::npos) throw ParseError(ln, token_col(line, i), "expected key=value");
            key = tok[i].substr(0, p);
            val = tok[i].substr(p + 1);
        };
        if (tok[0] == "FACET") {
            Facet x;
            x.id = id;
            bool have_chi = false;
            std::vector<std::string> label_text;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                std::string k, v;
                field(i, k, v);
                int col = token_col(line, i) + static_cast<int>(k.size()) + 1;
                if (k == "thickness") x.thickness = to_int(v, ln, col);
                else if (k == "chi_open") {
                    x.euler_open = to_int(v, ln, col);
                    have_chi = true;
                } else if (k == "dots") x.dots = to_int(v, ln, col);
                else if (k == "labels") label_text = split_on(v, ';');
                else throw ParseError(ln, token_col(line, i), "unknown facet field '" + k + "'");
            }
            if (!have_chi) throw ParseError(ln, token_col(line, 0), "facet needs chi_open");
            for (const auto& s : label_text) {
                try {
                    x.labels.push_back(parse_label(s, x.thickness));
                } catch (const ParseError& e) {
                    throw ParseError(ln, token_col(line, 0), e.what());
                }
            }
            if (f.facets.count(id)) throw ParseError(ln, token_col(line, 1), "duplicate facet id");
            f.facets[id] = x;
        } else if (tok[0] == "SEAM") {
            Seam s;
            s.id = id;
            bool have_sides = false, have_kind = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                std::string k, v;
                field(i, k, v);
                int col = token_col(line, i) + static_cast<int>(k.size()) + 1;
                if (k == "kind") {
                    if (v == "circle") s.circle = true;
                    else if (v == "interval") s.circle = false;
                    else throw ParseError(ln, col, "kind must be circle or interval");
                    have_kind = true;
                } else if (k == "sides") {
                    auto parts = split_on(v, ',');
                    if (parts.size() != 3) throw ParseError(ln, col, "a seam has exactly three facet sides");
                    for (int j = 0; j < 3; ++j) s.sides[j] = to_int(parts[j], ln, col);
                    have_sides = true;
                } else if (k == "ends") {
                    auto parts = split_on(v, ',');
                    if (parts.size() != 2) throw ParseError(ln, col, "an interval seam has two ends");
                    for (int j = 0; j < 2; ++j) s.ends[j] = to_int(parts[j], ln, col);
                } else if (k == "orient") {
                    if (v != "+" && v != "-") throw ParseError(ln, col, "orient must be + or -");
                    s.orient = v == "+";
                } else {
                    throw ParseError(ln, token_col(line, i), "unknown seam field '" + k + "'");
                }
            }
            if (!have_sides || !have_kind) throw ParseError(ln, token_col(line, 0), "seam needs kind and sides");
            if (f.seams.count(id)) throw ParseError(ln, token_col(line, 1), "duplicate seam id");
            f.seams[id] = s;
        } else if (tok[0] == "VERTEX") {
            FoamVertex v;
            v.id = id;
            bool have = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                std::string k, val;
                field(i, k, val);
                int col = token_col(line, i) + static_cast<int>(k.size()) + 1;
                if (k == "seams") {
                    auto parts = split_on(val, ',');
                    if (parts.size() != 4) throw ParseError(ln, col, "a vertex has exactly four seam ends");
                    for (int j = 0; j < 4; ++j) {
                        auto se = split_on(parts[j], ':');
                        if (se.size() != 2) throw ParseError(ln, col, "seam end must be seam:end");
                        v.ends[j] = SeamEnd{to_int(se[0], ln, col), to_int(se[1], ln, col)};
                    }
                    have = true;
                } else if (k == "corners") {
                    auto parts = split_on(val, ',');
                    if (parts.size() != 6) throw ParseError(ln, col, "a vertex has six corners");
                    std::array<int, 6> c{};
                    for (int j = 0; j < 6; ++j) c[j] = to_int(parts[j], ln, col);
                    v.corners = c;
                } else {
                    throw ParseError(ln, token_col(line, i), "unknown vertex field '" + k + "'");
                }
            }
            if (!have) throw ParseError(ln, token_col(line, 0), "vertex needs seams");
            if (f.vertices.count(id)) throw ParseError(ln, token_col(line, 1), "duplicate vertex id");
            f.vertices[id] = v;
        } else {
            throw ParseError(ln, token_col(line, 0), "unknown record '" + tok[0] + "'");
        }
    }
    if (!header) throw ParseError(ln + 1, 1, "empty foam file");
    return f;
}

std::string serialize_foam(const Foam& f) {
    std::ostringstream out;
    out << "foam " << theory_header(f.theory);
    if (!f.closed) out << " open";
    out << "\n";
    for (const auto& [id, x] : f.facets) {
        out << "FACET " << id << " thickness=" << x.thickness << " chi_open=" << x.euler_open << " dots=" << x.dots;
        if (!x.labels.empty()) {
            out << " labels=";
            for (std::size_t i = 0; i < x.labels.size(); ++i) out << (i ? ";" : "") << format_label(x.labels[i]);
        }
        out << "\n";
    }
    for (const auto& [id, s] : f.seams) {
        out << "SEAM " << id << " kind=" << (s.circle ? "circle" : "interval") << " sides=" << s.sides[0] << ","
            << s.sides[1] << "," << s.sides[2];
        if (!s.circle) out << " ends=" << s.ends[0] << "," << s.ends[1];
        out << " orient=" << (s.orient ? "+" : "-") << "\n";
    }
    for (const auto& [id, v] : f.vertices) {
        out << "VERTEX " << id << " seams=";
        for (int j = 0; j < 4; ++j) out << (j ? "," : "") << v.ends[j].seam << ":" << v.ends[j].end;
        if (v.corners) {
            out << " corners=";
            for (int j = 0; j < 6; ++j) out << (j ? "," : "") << (*v.corners)[j];
        }
        out << "\n";
    }
    return out.str();
}

Foam load_foam(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_foam(ss.str());
}

Foam add_dot(const Foam& f, int facet, int count) {
    Foam g = f;
    auto it = g.facets.find(facet);
    if (it == g.facets.end()) throw DomainError("add_dot: no facet " + std::to_string(facet));
    if (it->second.thickness != 1) throw DomainError("add_dot: plain dots need a thickness-1 facet");
    if (count < 0) throw DomainError("add_dot: negative dot count");
    it->second.dots += count;
    return g;
}

Foam add_dot(const Foam& f, int facet, const SymPoly& label) {
    Foam g = f;
    auto it = g.facets.find(facet);
    if (it == g.facets.end()) throw DomainError("add_dot: no facet " + std::to_string(facet));
    if (label.nvars() != it->second.thickness)
        throw DomainError("add_dot: label has " + std::to_string(label.nvars()) + " variables but the facet has thickness " +
                          std::to_string(it->second.thickness));
    if (!is_symmetric(label)) throw DomainError("add_dot: label is not symmetric");
    it->second.labels.push_back(label);
    return g;
}

Foam disjoint_union(const Foam& a, const Foam& b) {
    if (!(a.theory == b.theory)) throw DomainError("disjoint union of foams from different theories");
    Foam u = a;
    int fo = a.facets.empty() ? 0 : a.facets.rbegin()->first + 1;
    int so = a.seams.empty() ? 0 : a.seams.rbegin()->first + 1;
    int vo = a.vertices.empty() ? 0 : a.vertices.rbegin()->first + 1;
    for (auto [id, x] : b.facets) {
        x.id += fo;
        u.facets[x.id] = x;
    }
    for (auto [id, s] : b.seams) {
        s.id += so;
        for (int& x : s.sides) x += fo;
        for (int& e : s.ends)
            if (e >= 0) e += vo;
        u.seams[s.id] = s;
    }
    for (auto [id, v] : b.vertices) {
        v.id += vo;
        for (auto& se : v.ends) se.seam += so;
        if (v.corners)
            for (int& c : *v.corners) c += fo;
        u.vertices[v.id] = v;
    }
    u.closed = a.closed && b.closed;
    if (a.cell_euler && b.cell_euler) u.cell_euler = *a.cell_euler + *b.cell_euler;
    else u.cell_euler.reset();
    return u;
}

std::vector<Foam> connected_components(const Foam& f) {
    std::map<int, int> index;
    UnionFind uf;
    for (const auto& [id, x] : f.facets) index[id] = uf.add();
    for (const auto& [id, s] : f.seams) {
        uf.unite(index.at(s.sides[0]), index.at(s.sides[1]));
        uf.unite(index.at(s.sides[0]), index.at(s.sides[2]));
    }
    std::map<int, Foam> parts;  // keyed by root, in order of the smallest facet id
    std::map<int, int> root_of;
    for (const auto& [id, x] : f.facets) {
        int r = uf.find(index[id]);
        root_of[id] = r;
        Foam& p = parts[r];
        p.theory = f.theory;
        p.closed = f.closed;
        p.facets[id] = x;
    }
    for (const auto& [id, s] : f.seams) parts[root_of[s.sides[0]]].seams[id] = s;
    for (const auto& [id, v] : f.vertices) parts[root_of[f.seams.at(v.ends[0].seam).sides[0]]].vertices[id] = v;
    std::vector<Foam> out;
    for (auto& [r, p] : parts) out.push_back(std::move(p));
    return out;
}

// ------------------------------------------------------------ movies

bool MovieEvent::operator==(const MovieEvent& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Rewrite) return rewrite == o.rewrite;
    if (kind == Kind::Dot) return strand == o.strand && count == o.count && label == o.label;
    return true;
}

bool Movie::operator==(const Movie& o) const { return theory == o.theory && bottom == o.bottom && events == o.events; }

MovieEvent rewrite_event(const WebRewrite& r) {
    MovieEvent e;
    e.kind = MovieEvent::Kind::Rewrite;
    e.rewrite = r;
    return e;
}

MovieEvent dot_event(int strand, int count) {
    MovieEvent e;
    e.kind = MovieEvent::Kind::Dot;
    e.strand = strand;
    e.count = count;
    return e;
}

MovieEvent label_event(int strand, const SymPoly& label) {
    MovieEvent e;
    e.kind = MovieEvent::Kind::Dot;
    e.strand = strand;
    e.label = label;
    return e;
}

namespace {

int strand_thickness(const Web& w, int strand) {
    if (w.has_edge(strand)) return w.edge(strand).thickness;
    if (w.has_circle(strand)) return w.circles().at(strand).thickness;
    throw DomainError("no edge or circle " + std::to_string(strand));
}

void apply_event(Web& w, const MovieEvent& e) {
    if (e.kind == MovieEvent::Kind::Rewrite) {
        apply_rewrite(w, e.rewrite);
    } else if (e.kind == MovieEvent::Kind::Dot) {
        int th = strand_thickness(w, e.strand);
        if (e.label && e.label->nvars() != th) throw DomainError("dot label arity differs from the strand thickness");
        if (!e.label && th != 1) throw DomainError("plain dots need a thickness-1 strand");
    }
}

}  // namespace

Web Movie::top() const {
    Web w = bottom;
    for (std::size_t i = 0; i < events.size(); ++i) {
        try {
            apply_event(w, events[i]);
        } catch (const DomainError& e) {
            throw DomainError("event " + std::to_string(i) + ": " + e.what());
        }
    }
    return w;
}

namespace {

std::string port_text(const Port& p) { return std::to_string(p.vertex) + "." + std::to_string(p.slot); }

std::string vertex_item(char sign, const VertexRecord& v) {
    std::string s = std::string(1, sign) + "v:" + std::to_string(v.id);
    if (v.boundary) s += std::string(":b") + (v.sign > 0 ? "+" : "-");
    return s;
}

std::string edge_item(char sign, const WebEdge& e) {
    return std::string(1, sign) + "e:" + std::to_string(e.id) + ":" + port_text(e.tail) + ":" + port_text(e.head) + ":" +
           (e.oriented ? "o" : "u") + ":" + std::to_string(e.thickness);
}

std::string circle_item(char sign, const WebCircle& c) {
    return std::string(1, sign) + "c:" + std::to_string(c.id) + ":" + (c.oriented ? "o" : "u") + ":" +
           std::to_string(c.thickness);
}

Port parse_port_text(const std::string& s, int ln, int col) {
    auto p = split_on(s, '.');
    if (p.size() != 2) throw ParseError(ln, col, "port must be vertex.slot");
    return Port{to_int(p[0], ln, col), to_int(p[1], ln, col)};
}

void parse_item(const std::string& tok, WebRewrite& r, int ln, int col) {
    if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-') || tok[2] != ':')
        throw ParseError(ln, col, "bad record item '" + tok + "'");
    bool add = tok[0] == '+';
    auto parts = split_on(tok.substr(3), ':');
    char what = tok[1];
    if (what == 'v') {
        VertexRecord v;
        v.id = to_int(parts[0], ln, col);
        if (parts.size() == 2) {
            if (parts[1] != "b+" && parts[1] != "b-") throw ParseError(ln, col, "bad vertex flag");
            v.boundary = true;
            v.degree = 1;
            v.sign = parts[1] == "b+" ? 1 : -1;
        } else if (parts.size() != 1) {
            throw ParseError(ln, col, "bad vertex item");
        }
        (add ? r.add_vertices : r.rm_vertices).push_back(v);
    } else if (what == 'e') {
        if (parts.size() != 5) throw ParseError(ln, col, "edge item needs id:tail:head:o|u:thickness");
        WebEdge e;
        e.id = to_int(parts[0], ln, col);
        e.tail = parse_port_text(parts[1], ln, col);
        e.head = parse_port_text(parts[2], ln, col);
        if (parts[3] != "o" && parts[3] != "u") throw ParseError(ln, col, "orientation flag must be o or u");
        e.oriented = parts[3] == "o";
        e.thickness = to_int(parts[4], ln, col);
        (add ? r.add_edges : r.rm_edges).push_back(e);
    } else if (what == 'c') {
        if (parts.size() != 3) throw ParseError(ln, col, "circle item needs id:o|u:thickness");
        WebCircle c;
        c.id = to_int(parts[0], ln, col);
        if (parts[1] != "o" && parts[1] != "u") throw ParseError(ln, col, "orientation flag must be o or u");
        c.oriented = parts[1] == "o";
        c.thickness = to_int(parts[2], ln, col);
        (add ? r.add_circles : r.rm_circles).push_back(c);
    } else {
        throw ParseError(ln, col, "bad record item '" + tok + "'");
    }
}

Dart parse_dart_text(const std::string& s, int ln, int col) {
    auto p = split_on(s, ':');
    if (p.size() != 2) throw ParseError(ln, col, "dart must be edge:end");
    return Dart{to_int(p[0], ln, col), to_int(p[1], ln, col)};
}

}  // namespace

Movie parse_movie(const std::string& text, const std::string& base_dir) {
    Movie m;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    bool header = false, have_slice = false;
    Web cur;
    std::optional<TheoryTag> theory;
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = strip_comment(raw);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok[0] != "movie") throw ParseError(ln, token_col(line, 0), "expected 'movie' header");
            std::string th;
            int N = 3;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (tok[i].rfind("theory=", 0) == 0) th = tok[i].substr(7);
                else if (tok[i].rfind("N=", 0) == 0) N = to_int(tok[i].substr(2), ln, token_col(line, i) + 2);
                else throw ParseError(ln, token_col(line, i), "unknown header field '" + tok[i] + "'");
            }
            if (!th.empty()) theory = parse_theory(th, N, ln);
            header = true;
            continue;
        }
        if (!have_slice) {
            if (tok[0] != "SLICE" || tok.size() != 2) throw ParseError(ln, token_col(line, 0), "expected 'SLICE <webfile>'");
            if (tok[1] == "empty") {
                m.bottom = Web{};
            } else if (tok[1] == "inline") {
                std::string body;
                int start = ln;
                bool closed = false;
                while (std::getline(in, raw)) {
                    ++ln;
                    if (split_ws(strip_comment(raw)) == std::vector<std::string>{"END"}) {
                        closed = true;
                        break;
                    }
                    body += raw + "\n";
                }
                if (!closed) throw ParseError(start, 1, "inline slice without END");
                try {
                    m.bottom = parse_web(body);
                } catch (const ParseError& e) {
                    throw ParseError(start + e.line(), e.col(), e.what());
                }
            } else {
                std::filesystem::path p(tok[1]);
                if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
                m.bottom = load_web(p.string());
            }
            cur = m.bottom;
            have_slice = true;
            continue;
        }
        std::size_t index = m.events.size();
        MovieEvent ev;
        try {
            const std::string& k = tok[0];
            if (k == "id") {
                ev.kind = MovieEvent::Kind::Identity;
            } else if (k == "dot") {
                if (tok.size() != 3) throw ParseError(ln, token_col(line, 0), "dot needs a strand and a count or label");
                int strand = to_int(tok[1], ln, token_col(line, 1));
                if (tok[2].rfind("label=", 0) == 0) {
                    int th = strand_thickness(cur, strand);
                    ev = label_event(strand, parse_label(tok[2].substr(6), th));
                } else {
                    ev = dot_event(strand, to_int(tok[2], ln, token_col(line, 2)));
                }
            } else {
                RewriteKind rk;
                try {
                    rk = rewrite_kind_from_name(k);
                } catch (const DomainError&) {
                    throw ParseError(ln, token_col(line, 0), "unknown event '" + k + "'");
                }
                bool explicit_form = tok.size() > 1 && (tok[1][0] == '+' || tok[1][0] == '-') && tok[1].size() > 2 &&
                                     tok[1][2] == ':';
                WebRewrite r;
                if (explicit_form) {
                    r.kind = rk;
                    for (std::size_t i = 1; i < tok.size(); ++i) parse_item(tok[i], r, ln, token_col(line, i));
                } else {
                    auto need = [&](std::size_t n) {
                        if (tok.size() != n + 1)
                            throw ParseError(ln, token_col(line, 0), k + " takes " + std::to_string(n) + " argument(s)");
                    };
                    switch (rk) {
                        case RewriteKind::Birth:
                            if (tok.size() > 2) need(1);
                            r = make_birth(cur, tok.size() == 2 ? to_int(tok[1], ln, token_col(line, 1)) : 1);
                            break;
                        case RewriteKind::Death: need(1); r = make_death(cur, to_int(tok[1], ln, token_col(line, 1))); break;
                        case RewriteKind::Saddle:
                            need(2);
                            r = make_saddle(cur, parse_dart_text(tok[1], ln, token_col(line, 1)),
                                            parse_dart_text(tok[2], ln, token_col(line, 2)));
                            break;
                        case RewriteKind::Zip: need(1); r = make_zip(cur, to_int(tok[1], ln, token_col(line, 1))); break;
                        case RewriteKind::Unzip:
                            need(1);
                            r = make_unzip(cur, parse_dart_text(tok[1], ln, token_col(line, 1)));
                            break;
                        case RewriteKind::Collapse:
                            need(1);
                            r = make_collapse(cur, parse_dart_text(tok[1], ln, token_col(line, 1)));
                            break;
                        case RewriteKind::Expand: need(1); r = make_expand(cur, to_int(tok[1], ln, token_col(line, 1))); break;
                    }
                }
                ev = rewrite_event(r);
            }
            apply_event(cur, ev);
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& e) {
            throw ParseError(ln, 1, "event " + std::to_string(index) + ": " + e.what());
        }
        m.events.push_back(ev);
    }
    if (!header || !have_slice) throw ParseError(ln + 1, 1, "movie needs a header and a SLICE line");
    if (theory) {
        m.theory = *theory;
    } else {
        bool oriented = m.bottom.is_oriented();
        for (const auto& e : m.events)
            if (e.kind == MovieEvent::Kind::Rewrite)
                for (const auto& x : e.rewrite.add_edges) oriented = oriented || x.oriented;
        m.theory.kind = oriented ? Theory::Sl3Oriented : Theory::Sl3Unoriented;
    }
    return m;
}

std::string serialize_movie(const Movie& m) {
    std::ostringstream out;
    out << "movie " << theory_header(m.theory) << "\n";
    if (m.bottom.empty()) {
        out << "SLICE empty\n";
    } else {
        out << "SLICE inline\n" << serialize_web(m.bottom) << "END\n";
    }
    for (const auto& e : m.events) {
        if (e.kind == MovieEvent::Kind::Identity) {
            out << "id\n";
        } else if (e.kind == MovieEvent::Kind::Dot) {
            out << "dot " << e.strand << " ";
            if (e.label) out << "label=" << format_label(*e.label);
            else out << e.count;
            out << "\n";
        } else {
            const WebRewrite& r = e.rewrite;
            out << rewrite_kind_name(r.kind);
            for (const auto& v : r.rm_vertices) out << " " << vertex_item('-', v);
            for (const auto& x : r.rm_edges) out << " " << edge_item('-', x);
            for (const auto& c : r.rm_circles) out << " " << circle_item('-', c);
            for (const auto& v : r.add_vertices) out << " " << vertex_item('+', v);
            for (const auto& x : r.add_edges) out << " " << edge_item('+', x);
            for (const auto& c : r.add_circles) out << " " << circle_item('+', c);
            out << "\n";
        }
    }
    return out.str();
}

Movie load_movie(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_movie(ss.str(), std::filesystem::path(path).parent_path().string());
}

Movie reflect(const Movie& m) {
    Movie r;
    r.theory = m.theory;
    r.bottom = m.top();
    for (auto it = m.events.rbegin(); it != m.events.rend(); ++it) {
        MovieEvent e = *it;
        if (e.kind == MovieEvent::Kind::Rewrite) e.rewrite = inverse(e.rewrite);
        r.events.push_back(e);
    }
    return r;
}

std::string web_difference(const Web& a, const Web& b) {
    for (const auto& [id, e] : a.edges()) {
        if (!b.has_edge(id)) return "edge " + std::to_string(id) + " is missing on the right";
        if (!(b.edge(id) == e)) return "edge " + std::to_string(id) + " differs";
    }
    for (const auto& [id, e] : b.edges())
        if (!a.has_edge(id)) return "edge " + std::to_string(id) + " is missing on the left";
    for (const auto& [id, c] : a.circles()) {
        if (!b.has_circle(id)) return "circle " + std::to_string(id) + " is missing on the right";
        if (!(b.circles().at(id) == c)) return "circle " + std::to_string(id) + " differs";
    }
    for (const auto& [id, c] : b.circles())
        if (!a.has_circle(id)) return "circle " + std::to_string(id) + " is missing on the left";
    for (const auto& [id, v] : a.vertices()) {
        if (!b.has_vertex(id)) return "vertex " + std::to_string(id) + " is missing on the right";
        const WebVertex& u = b.vertex(id);
        if (u.boundary != v.boundary || u.sign != v.sign || u.degree != v.degree)
            return "vertex " + std::to_string(id) + " differs";
    }
    for (const auto& [id, v] : b.vertices())
        if (!a.has_vertex(id)) return "vertex " + std::to_string(id) + " is missing on the left";
    return "";
}

Movie glue_movies(const Movie& f1, const Movie& f2) {
    if (!(f1.theory == f2.theory)) throw DomainError("glue: movies use different theories");
    Web t1 = f1.top(), t2 = f2.top();
    std::string diff = web_difference(t1, t2);
    if (!diff.empty()) throw DomainError("glue: boundary webs differ: " + diff);
    Movie g = f2;
    Movie r = reflect(f1);
    g.events.insert(g.events.end(), r.events.begin(), r.events.end());
    return g;
}

Foam glue(const Movie& f1, const Movie& f2) { return movie_to_foam(glue_movies(f1, f2)); }

Movie add_dot(const Movie& m, int strand, int count) {
    Movie r = m;
    MovieEvent e = dot_event(strand, count);
    Web t = m.top();
    apply_event(t, e);
    r.events.push_back(e);
    return r;
}

// ------------------------------------------------------------ compilation

namespace {

// Tracks of strands and vertices through the slices, glued by union-find.
struct Compiler {
    const Movie& m;
    std::vector<Web> slices;
    UnionFind sheets, tracks;
    std::map<std::pair<int, int>, int> sheet_of, track_of;
    std::vector<int> sheet_cells, track_cells;
    std::vector<int> sheet_dots;
    std::vector<std::vector<SymPoly>> sheet_labels;
    std::vector<int> sheet_thickness;
    int vertex_cells = 0;
    int other_cells = 0;  // cells of circle annuli, net zero
    struct Corner {
        std::array<int, 4> tracks;  // triangle corners then the centre
        std::array<int, 6> sheets;
    };
    std::vector<Corner> foam_vertices;
    std::map<int, std::vector<std::pair<int, int>>> track_ends;  // track -> (foam vertex, position)

    explicit Compiler(const Movie& mv) : m(mv) {}

    int sheet(int k, int strand) {
        auto key = std::make_pair(k, strand);
        auto it = sheet_of.find(key);
        if (it != sheet_of.end()) return it->second;
        int id = sheets.add();
        sheet_of[key] = id;
        sheet_cells.push_back(0);
        sheet_dots.push_back(0);
        sheet_labels.emplace_back();
        sheet_thickness.push_back(strand_thickness(slices[k], strand));
        return id;
    }
    int track(int k, int v) {
        auto key = std::make_pair(k, v);
        auto it = track_of.find(key);
        if (it != track_of.end()) return it->second;
        int id = tracks.add();
        track_of[key] = id;
        track_cells.push_back(0);
        return id;
    }
    bool internal(const Web& w, int v) const { return !w.vertex(v).boundary; }

    void slice_cells(int k) {
        const Web& w = slices[k];
        for (const auto& [id, e] : w.edges()) sheet_cells[sheet(k, id)] += 1;
        for (const auto& [id, c] : w.circles()) {
            sheet(k, id);
            other_cells += 1 - 1;
        }
        for (const auto& [id, v] : w.vertices())
            if (!v.boundary) track_cells[track(k, id)] -= 1;
    }

    void carry_unchanged(int k, const WebRewrite* r) {
        std::set<int> rm_e, rm_c, rm_v;
        if (r) {
            for (const auto& e : r->rm_edges) rm_e.insert(e.id);
            for (const auto& c : r->rm_circles) rm_c.insert(c.id);
            for (const auto& v : r->rm_vertices) rm_v.insert(v.id);
        }
        const Web& w = slices[k];
        for (const auto& [id, e] : w.edges()) {
            if (rm_e.count(id)) continue;
            sheet_cells[sheet(k, id)] -= 1;
            sheets.unite(sheet(k, id), sheet(k + 1, id));
        }
        for (const auto& [id, c] : w.circles()) {
            if (rm_c.count(id)) continue;
            sheets.unite(sheet(k, id), sheet(k + 1, id));
        }
        for (const auto& [id, v] : w.vertices()) {
            if (v.boundary || rm_v.count(id)) continue;
            track_cells[track(k, id)] += 1;
            tracks.unite(track(k, id), track(k + 1, id));
        }
    }

    // critical level of a saddle: the removed strands with two points identified
    int saddle_level(const WebRewrite& r) const {
        int strands = static_cast<int>(r.rm_edges.size() + r.rm_circles.size());
        int arcs = 0;
        int points_each = strands == 1 ? 2 : 1;
        for (std::size_t i = 0; i < r.rm_edges.size(); ++i) arcs += points_each + 1;
        for (std::size_t i = 0; i < r.rm_circles.size(); ++i) arcs += points_each;
        return 1 - arcs;
    }

    void rewrite_cells(int k, const WebRewrite& r) {
        switch (r.kind) {
            case RewriteKind::Birth: sheet_cells[sheet(k + 1, r.add_circles[0].id)] += 1; break;
            case RewriteKind::Death: sheet_cells[sheet(k, r.rm_circles[0].id)] += 1; break;
            case RewriteKind::Saddle: {
                int root = -1;
                auto join = [&](int s) {
                    if (root < 0) root = s;
                    sheets.unite(root, s);
                };
                for (const auto& e : r.rm_edges) join(sheet(k, e.id));
                for (const auto& c : r.rm_circles) join(sheet(k, c.id));
                for (const auto& e : r.add_edges) join(sheet(k + 1, e.id));
                for (const auto& c : r.add_circles) join(sheet(k + 1, c.id));
                sheet_cells[root] += saddle_level(r);
                break;
            }
            case RewriteKind::Zip:
            case RewriteKind::Unzip: {
                bool zip = r.kind == RewriteKind::Zip;
                // the strand that carries the digon, on the side without it
                int plain_k = zip ? k : k + 1;
                int digon_k = zip ? k + 1 : k;
                const auto& plain_e = zip ? r.rm_edges : r.add_edges;
                const auto& plain_c = zip ? r.rm_circles : r.add_circles;
                const auto& digon_e = zip ? r.add_edges : r.rm_edges;
                const auto& digon_v = zip ? r.add_vertices : r.rm_vertices;
                int plain;
                std::size_t legs;
                if (!plain_e.empty()) {
                    plain = sheet(plain_k, plain_e[0].id);
                    sheet_cells[plain] -= 2;
                    legs = 2;
                } else {
                    plain = sheet(plain_k, plain_c[0].id);
                    sheet_cells[plain] -= 1;
                    legs = 1;
                }
                for (std::size_t i = 0; i < legs; ++i) sheets.unite(plain, sheet(digon_k, digon_e[i].id));
                for (std::size_t i = legs; i < digon_e.size(); ++i) sheet(digon_k, digon_e[i].id);
                int p = track(digon_k, digon_v[0].id), q = track(digon_k, digon_v[1].id);
                track_cells[p] += 1;
                tracks.unite(p, q);
                break;
            }
            case RewriteKind::Collapse:
            case RewriteKind::Expand: {
                bool collapse = r.kind == RewriteKind::Collapse;
                int tri_k = collapse ? k : k + 1;
                int mid_k = collapse ? k + 1 : k;
                const auto& tri_v = collapse ? r.rm_vertices : r.add_vertices;
                const auto& mid_v = collapse ? r.add_vertices : r.rm_vertices;
                const auto& tri_e = collapse ? r.rm_edges : r.add_edges;
                std::set<int> tv;
                for (const auto& v : tri_v) tv.insert(v.id);
                Corner c{};
                for (int i = 0; i < 3; ++i) c.tracks[i] = track(tri_k, tri_v[i].id);
                c.tracks[3] = track(mid_k, mid_v[0].id);
                for (int p = 0; p < 6; ++p) c.sheets[p] = -1;
                for (const auto& e : tri_e) {
                    bool t_in = tv.count(e.tail.vertex) > 0, h_in = tv.count(e.head.vertex) > 0;
                    int pos_t = -1, pos_h = -1;
                    for (int i = 0; i < 3; ++i) {
                        if (tri_v[i].id == e.tail.vertex) pos_t = i;
                        if (tri_v[i].id == e.head.vertex) pos_h = i;
                    }
                    int s = sheet(tri_k, e.id);
                    int a, b;
                    if (t_in && h_in) {
                        a = std::min(pos_t, pos_h);
                        b = std::max(pos_t, pos_h);
                    } else {
                        // a leg: keeps its sheet through the vertex
                        a = t_in ? pos_t : pos_h;
                        b = 3;
                        sheet_cells[s] -= 1;
                        sheets.unite(s, sheet(mid_k, e.id));
                    }
                    for (int p = 0; p < 6; ++p)
                        if (kCornerPairs[p][0] == a && kCornerPairs[p][1] == b) c.sheets[p] = s;
                }
                int fv = static_cast<int>(foam_vertices.size());
                foam_vertices.push_back(c);
                for (int i = 0; i < 4; ++i) track_ends[c.tracks[i]].push_back({fv, i});
                vertex_cells += 1;
                break;
            }
        }
    }

    Foam run() {
        int n = static_cast<int>(m.events.size());
        bool gl = m.theory.kind == Theory::GlN;
        slices.push_back(m.bottom);
        for (int k = 0; k < n; ++k) {
            const MovieEvent& e = m.events[k];
            Web next = slices.back();
            try {
                if (gl && e.kind == MovieEvent::Kind::Rewrite) {
                    RewriteKind rk = e.rewrite.kind;
                    if (rk != RewriteKind::Birth && rk != RewriteKind::Death && rk != RewriteKind::Saddle)
                        throw DomainError("GL movies support births, deaths, saddles and dots only");
                    std::set<int> th;
                    for (const auto& x : e.rewrite.rm_edges) th.insert(x.thickness);
                    for (const auto& x : e.rewrite.rm_circles) th.insert(x.thickness);
                    for (const auto& x : e.rewrite.add_edges) th.insert(x.thickness);
                    for (const auto& x : e.rewrite.add_circles) th.insert(x.thickness);
                    if (th.size() > 1) throw DomainError("a saddle joins strands of one thickness");
                }
                if (!gl && e.kind == MovieEvent::Kind::Rewrite) {
                    for (const auto& x : e.rewrite.add_edges)
                        if (x.thickness != 1) throw DomainError("SL(3) movies use thickness 1");
                    for (const auto& x : e.rewrite.add_circles)
                        if (x.thickness != 1) throw DomainError("SL(3) movies use thickness 1");
                }
                apply_event(next, e);
            } catch (const DomainError& ex) {
                throw DomainError("event " + std::to_string(k) + ": " + ex.what());
            }
            slices.push_back(next);
        }
        for (int k = 0; k <= n; ++k) slice_cells(k);
        for (int k = 0; k < n; ++k) {
            const MovieEvent& e = m.events[k];
            if (e.kind == MovieEvent::Kind::Rewrite) {
                carry_unchanged(k, &e.rewrite);
                rewrite_cells(k, e.rewrite);
            } else {
                carry_unchanged(k, nullptr);
                if (e.kind == MovieEvent::Kind::Dot) {
                    int s = sheet(k, e.strand);
                    if (e.label) sheet_labels[s].push_back(*e.label);
                    else sheet_dots[s] += e.count;
                }
            }
        }
        return assemble();
    }

    Foam assemble() {
        Foam f;
        f.theory = m.theory;
        f.closed = slices.front().empty() && slices.back().empty();
        // facets in order of first appearance
        std::map<int, int> facet_id;
        std::vector<std::pair<std::pair<int, int>, int>> order(sheet_of.begin(), sheet_of.end());
        for (const auto& [key, s] : order) {
            int root = sheets.find(s);
            if (!facet_id.count(root)) {
                int id = static_cast<int>(facet_id.size());
                facet_id[root] = id;
                Facet x;
                x.id = id;
                x.thickness = sheet_thickness[s];
                f.facets[id] = x;
            }
            Facet& x = f.facets[facet_id[root]];
            x.euler_open += sheet_cells[s];
            x.dots += sheet_dots[s];
            for (const auto& l : sheet_labels[s]) x.labels.push_back(l);
            if (x.thickness != sheet_thickness[s]) throw DomainError("facet thickness changes along the movie");
        }
        auto facet_of = [&](int k, int strand) { return facet_id.at(sheets.find(sheet_of.at({k, strand}))); };
        // seams
        bool oriented = m.theory.kind == Theory::Sl3Oriented;
        std::map<int, int> seam_id;
        std::map<int, std::vector<std::pair<int, int>>> seam_members;  // root -> (k, v)
        std::vector<std::pair<std::pair<int, int>, int>> torder(track_of.begin(), track_of.end());
        for (const auto& [key, t] : torder) {
            int root = tracks.find(t);
            if (!seam_id.count(root)) {
                int id = static_cast<int>(seam_id.size());
                seam_id[root] = id;
            }
            seam_members[root].push_back(key);
        }
        int last = static_cast<int>(slices.size()) - 1;
        for (const auto& [root, members] : seam_members) {
            Seam s;
            s.id = seam_id[root];
            auto cyclic = [&](int k, int v) {
                const WebVertex& wv = slices[k].vertex(v);
                std::array<int, 3> sides;
                for (int i = 0; i < 3; ++i) sides[i] = facet_of(k, wv.slots[i].edge);
                bool flag = true;
                if (oriented) {
                    flag = wv.slots[0].end == 1;  // sink
                }
                return std::make_pair(sides, flag);
            };
            auto [k0, v0] = members.front();
            auto [sides, flag] = cyclic(k0, v0);
            s.sides = sides;
            s.orient = flag;
            auto normal = [](std::array<int, 3> a, bool fl) {
                if (!fl) std::swap(a[1], a[2]);
                std::array<int, 3> best = a;
                for (int r = 1; r < 3; ++r) {
                    std::array<int, 3> b{a[r], a[(r + 1) % 3], a[(r + 2) % 3]};
                    best = std::min(best, b);
                }
                return best;
            };
            auto want = normal(sides, flag);
            std::multiset<int> want_set(sides.begin(), sides.end());
            for (const auto& [k, v] : members) {
                auto [sd, fl] = cyclic(k, v);
                if (std::multiset<int>(sd.begin(), sd.end()) != want_set)
                    throw DomainError("internal: seam facets change along a seam");
                if (oriented && normal(sd, fl) != want)
                    throw DomainError("internal: seam orientation is inconsistent along a seam");
            }
            bool touches = false;
            for (const auto& [k, v] : members)
                if (k == 0 || k == last) touches = touches || (k == 0 ? !slices.front().empty() : !slices.back().empty());
            std::vector<int> ends;
            for (std::size_t fv = 0; fv < foam_vertices.size(); ++fv)
                for (int i = 0; i < 4; ++i)
                    if (tracks.find(foam_vertices[fv].tracks[i]) == root) ends.push_back(static_cast<int>(fv));
            if (ends.empty() && !touches) {
                s.circle = true;
            } else {
                s.circle = false;
                if (ends.size() > 2 || (ends.size() < 2 && !touches))
                    throw DomainError("internal: seam with " + std::to_string(ends.size()) + " vertex ends");
                for (std::size_t i = 0; i < ends.size(); ++i) s.ends[i] = ends[i];
            }
            f.seams[s.id] = s;
        }
        for (std::size_t fv = 0; fv < foam_vertices.size(); ++fv) {
            FoamVertex v;
            v.id = static_cast<int>(fv);
            std::array<int, 6> corners{};
            for (int i = 0; i < 4; ++i) {
                int root = tracks.find(foam_vertices[fv].tracks[i]);
                const Seam& s = f.seams.at(seam_id.at(root));
                // the end index counts earlier positions of the same seam at this vertex
                int end = 0;
                if (s.ends[0] != static_cast<int>(fv)) end = 1;
                else
                    for (int j = 0; j < i; ++j)
                        if (tracks.find(foam_vertices[fv].tracks[j]) == root) end = 1;
                v.ends[i] = SeamEnd{s.id, end};
            }
            for (int p = 0; p < 6; ++p) corners[p] = facet_id.at(sheets.find(foam_vertices[fv].sheets[p]));
            v.corners = corners;
            f.vertices[v.id] = v;
        }
        int total = other_cells + vertex_cells;
        for (int c : sheet_cells) total += c;
        for (int c : track_cells) total += c;
        f.cell_euler = total;
        return f;
    }
};

}  // namespace

Foam movie_to_foam(const Movie& m) { return Compiler(m).run(); }

}  // namespace foamlab
