#include "foamlab/link.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "foamlab/errors.hpp"
#include "foamlab/parallel.hpp"

namespace foamlab {

namespace {

// positions (0..3) carrying incoming ends
bool is_incoming(int sign, int pos) { return sign > 0 ? (pos == 0 || pos == 3) : (pos == 0 || pos == 1); }

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    LinkDiagram d;
    std::size_t i = 0;
    auto err = [&](const std::string& m) { throw ParseError(1, static_cast<int>(i) + 1, m); };
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    auto read_int = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) err("expected an arc label");
        int v = std::stoi(text.substr(i, j - i));
        i = j;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        return v;
    };
    skip();
    while (i < text.size()) {
        if (text[i] == 'O') {
            ++d.free_loops;
            ++i;
        } else if (text[i] == 'X') {
            ++i;
            if (i >= text.size() || text[i] != '[') err("expected '['");
            ++i;
            Crossing c;
            for (int k = 0; k < 4; ++k) {
                c.arcs[k] = read_int();
                if (k < 3) {
                    if (i >= text.size() || text[i] != ',') err("expected ','");
                    ++i;
                }
            }
            if (i >= text.size() || text[i] != ']') err("expected ']'");
            ++i;
            if (i >= text.size() || (text[i] != '+' && text[i] != '-')) err("crossing needs a sign '+' or '-'");
            c.sign = text[i] == '+' ? 1 : -1;
            ++i;
            d.crossings.push_back(c);
        } else {
            err(std::string("unexpected character '") + text[i] + "'");
        }
        skip();
    }
    try {
        validate_pd(d);
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(1, 1, e.what());
    }
    return d;
}

std::string format_pd(const LinkDiagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& c : d.crossings) {
        if (!first) out << ",";
        first = false;
        out << "X[" << c.arcs[0] << "," << c.arcs[1] << "," << c.arcs[2] << "," << c.arcs[3] << "]"
            << (c.sign > 0 ? '+' : '-');
    }
    for (int k = 0; k < d.free_loops; ++k) {
        if (!first) out << ",";
        first = false;
        out << "O";
    }
    return out.str();
}

void validate_pd(const LinkDiagram& d) {
    std::map<int, int> ins, outs;
    for (const auto& c : d.crossings)
        for (int p = 0; p < 4; ++p) ++(is_incoming(c.sign, p) ? ins : outs)[c.arcs[p]];
    std::set<int> labels;
    for (auto& [l, n] : ins) labels.insert(l);
    for (auto& [l, n] : outs) labels.insert(l);
    for (int l : labels)
        if (ins[l] != 1 || outs[l] != 1)
            throw DomainError("arc " + std::to_string(l) + " must occur once incoming and once outgoing");
}

const SkeinConstants& skein_constants() {
    // Crossing expansion of the quantum sl(3) invariant with the circle
    // normalised to [3]: positive crossing = q^2 * smoothing - q^3 * H.
    static const SkeinConstants k{2, 3, -1};
    return k;
}

Web resolution_web(const LinkDiagram& d, const std::vector<int>& choice) {
    if (choice.size() != d.crossings.size()) throw DomainError("one resolution choice per crossing is required");
    // node = 4 * crossing + position; each node is tied to an arc and to
    // either a smoothing partner or a vertex port
    int n = static_cast<int>(d.crossings.size());
    std::map<int, std::vector<int>> arc_nodes;
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 4; ++p) arc_nodes[d.crossings[i].arcs[p]].push_back(4 * i + p);
    std::vector<int> partner(4 * n, -1);
    std::vector<Port> vport(4 * n, Port{});
    Web w;
    int eid = 0;
    for (int i = 0; i < n; ++i) {
        const Crossing& c = d.crossings[i];
        int b = 4 * i;
        if (choice[i] == 0) {
            if (c.sign > 0) {
                partner[b + 3] = b + 2;
                partner[b + 2] = b + 3;
                partner[b + 0] = b + 1;
                partner[b + 1] = b + 0;
            } else {
                partner[b + 0] = b + 3;
                partner[b + 3] = b + 0;
                partner[b + 1] = b + 2;
                partner[b + 2] = b + 1;
            }
        } else {
            int A = 2 * i, B = 2 * i + 1;  // A is a sink, B a source
            w.add_vertex(VertexRecord{A, 3, false, 0});
            w.add_vertex(VertexRecord{B, 3, false, 0});
            if (c.sign > 0) {
                vport[b + 0] = Port{A, 0};
                vport[b + 3] = Port{A, 2};
                vport[b + 1] = Port{B, 0};
                vport[b + 2] = Port{B, 1};
                w.add_edge(WebEdge{eid++, Port{B, 2}, Port{A, 1}, true, 1});
            } else {
                vport[b + 1] = Port{A, 0};
                vport[b + 0] = Port{A, 2};
                vport[b + 2] = Port{B, 1};
                vport[b + 3] = Port{B, 2};
                w.add_edge(WebEdge{eid++, Port{B, 0}, Port{A, 1}, true, 1});
            }
        }
    }
    auto arc_other = [&](int node) {
        const auto& v = arc_nodes.at(d.crossings[node / 4].arcs[node % 4]);
        return v[0] == node ? v[1] : v[0];
    };
    auto incoming = [&](int node) { return is_incoming(d.crossings[node / 4].sign, node % 4); };
    std::vector<char> used(4 * n, 0);
    // chains starting at a vertex port; the node's arc is entered from the vertex
    for (int s = 0; s < 4 * n; ++s) {
        if (vport[s].vertex < 0 || used[s]) continue;
        int cur = s;
        bool forward = !incoming(s);  // leaving the vertex along the orientation
        while (true) {
            used[cur] = 1;
            int nx = arc_other(cur);
            used[nx] = 1;
            if (vport[nx].vertex >= 0) {
                Port from = vport[s], to = vport[nx];
                if (!forward) std::swap(from, to);
                w.add_edge(WebEdge{eid++, from, to, true, 1});
                break;
            }
            cur = partner[nx];
        }
    }
    for (int s = 0; s < 4 * n; ++s) {
        if (used[s]) continue;
        int cur = s;
        while (!used[cur]) {
            used[cur] = 1;
            int nx = arc_other(cur);
            used[nx] = 1;
            cur = partner[nx];
        }
        w.add_circle(WebCircle{eid++, true, 1});
    }
    for (int k = 0; k < d.free_loops; ++k) w.add_circle(WebCircle{eid++, true, 1});
    w.check();
    return w;
}

LaurentQ link_invariant(const LinkDiagram& d) {
    validate_pd(d);
    int n = static_cast<int>(d.crossings.size());
    if (n > 24) throw DomainError("too many crossings");
    const SkeinConstants& k = skein_constants();
    std::size_t states = std::size_t(1) << n;
    std::vector<LaurentQ> partial(states);
    parallel_for(states, [&](std::size_t s) {
        std::vector<int> choice(n);
        int qexp = 0;
        std::int64_t coeff = 1;
        for (int i = 0; i < n; ++i) {
            choice[i] = (s >> i) & 1;
            int sg = d.crossings[i].sign;
            if (choice[i] == 0) {
                qexp += sg * k.smooth_exp;
            } else {
                qexp += sg * k.h_exp;
                coeff *= k.h_coeff;
            }
        }
        partial[s] = LaurentQ::monomial(qexp, coeff) * kuperberg_poly(resolution_web(d, choice));
    });
    LaurentQ total;
    for (const auto& p : partial) total += p;
    return total;
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram m = d;
    for (auto& c : m.crossings) {
        if (c.sign > 0) c.arcs = {c.arcs[3], c.arcs[0], c.arcs[1], c.arcs[2]};
        else c.arcs = {c.arcs[1], c.arcs[2], c.arcs[3], c.arcs[0]};
        c.sign = -c.sign;
    }
    return m;
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw DomainError("a braid needs at least one strand");
    std::vector<int> label(strands);
    for (int p = 0; p < strands; ++p) label[p] = p + 1;
    int next = strands + 1;
    LinkDiagram d;
    for (int g : word) {
        int i = std::abs(g);
        if (g == 0 || i >= strands) throw DomainError("braid generator out of range");
        int x = label[i - 1], y = label[i];
        int u = next++, v = next++;  // new labels at positions i-1 and i
        Crossing c;
        if (g > 0) {
            c.arcs = {y, v, u, x};
            c.sign = 1;
        } else {
            c.arcs = {x, y, v, u};
            c.sign = -1;
        }
        d.crossings.push_back(c);
        label[i - 1] = u;
        label[i] = v;
    }
    std::map<int, int> rename;
    for (int p = 0; p < strands; ++p) {
        if (label[p] == p + 1) ++d.free_loops;
        else rename[label[p]] = p + 1;
    }
    for (auto& c : d.crossings)
        for (int& a : c.arcs) {
            auto it = rename.find(a);
            if (it != rename.end()) a = it->second;
        }
    return d;
}

}  // namespace foamlab
