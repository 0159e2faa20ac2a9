#include "foamlab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "foamlab/errors.hpp"

namespace foamlab {

namespace {

// Facets in id order, with the seams that become fully colored once a
// facet is assigned.
struct Schedule {
    std::vector<int> facet_ids;
    std::map<int, int> position;
    std::vector<std::vector<std::array<int, 3>>> checks;  // positions of (thin1, thin2, thick)

    explicit Schedule(const Foam& f) {
        for (const auto& [id, x] : f.facets) {
            position[id] = static_cast<int>(facet_ids.size());
            facet_ids.push_back(id);
        }
        checks.resize(facet_ids.size());
        for (const auto& [id, s] : f.seams) {
            std::array<int, 3> p{};
            for (int k = 0; k < 3; ++k) {
                auto it = position.find(s.sides[k]);
                if (it == position.end()) throw DomainError("seam " + std::to_string(id) + " names an unknown facet");
                p[k] = it->second;
            }
            checks[*std::max_element(p.begin(), p.end())].push_back(p);
        }
    }
};

}  // namespace

void for_each_sl3_coloring(const Foam& f, const std::function<bool(const Sl3Coloring&)>& sink) {
    Schedule sch(f);
    std::size_t n = sch.facet_ids.size();
    std::vector<int> col(n, 0);
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (stop) return;
        if (k == n) {
            Sl3Coloring c;
            for (std::size_t i = 0; i < n; ++i) c[sch.facet_ids[i]] = col[i];
            if (!sink(c)) stop = true;
            return;
        }
        for (int color = 1; color <= 3 && !stop; ++color) {
            col[k] = color;
            bool ok = true;
            for (const auto& p : sch.checks[k]) {
                int a = col[p[0]], b = col[p[1]], d = col[p[2]];
                if (a == b || a == d || b == d) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(k + 1);
        }
        col[k] = 0;
    };
    go(0);
}

std::vector<Sl3Coloring> sl3_colorings(const Foam& f) {
    std::vector<Sl3Coloring> out;
    for_each_sl3_coloring(f, [&](const Sl3Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::int64_t count_tait_colorings_foam(const Foam& f) {
    std::int64_t n = 0;
    for_each_sl3_coloring(f, [&](const Sl3Coloring&) {
        ++n;
        return true;
    });
    return n;
}

bool is_tait_coloring(const Foam& f, const Sl3Coloring& c) {
    for (const auto& [id, x] : f.facets) {
        auto it = c.find(id);
        if (it == c.end() || it->second < 1 || it->second > 3) return false;
    }
    for (const auto& [id, s] : f.seams) {
        int a = c.at(s.sides[0]), b = c.at(s.sides[1]), d = c.at(s.sides[2]);
        if (a == b || a == d || b == d) return false;
    }
    return true;
}

void for_each_gln_coloring(const Foam& f, int N, const std::function<bool(const GlColoring&)>& sink) {
    if (N < 1 || N > 31) throw DomainError("N must lie in 1..31");
    Schedule sch(f);
    std::size_t n = sch.facet_ids.size();
    std::vector<std::vector<std::uint32_t>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        int th = f.facets.at(sch.facet_ids[i]).thickness;
        if (th > N) return;
        for (std::uint32_t m = 0; m < (1u << N); ++m)
            if (std::popcount(m) == th) choices[i].push_back(m);
    }
    std::vector<std::uint32_t> col(n, 0);
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (stop) return;
        if (k == n) {
            GlColoring c;
            for (std::size_t i = 0; i < n; ++i) c[sch.facet_ids[i]] = col[i];
            if (!sink(c)) stop = true;
            return;
        }
        for (std::uint32_t m : choices[k]) {
            if (stop) break;
            col[k] = m;
            bool ok = true;
            for (const auto& p : sch.checks[k]) {
                std::uint32_t a = col[p[0]], b = col[p[1]], d = col[p[2]];
                if ((a & b) != 0 || (a | b) != d) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(k + 1);
        }
    };
    go(0);
}

std::vector<GlColoring> gln_colorings(const Foam& f, int N) {
    std::vector<GlColoring> out;
    for_each_gln_coloring(f, N, [&](const GlColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool is_gln_coloring(const Foam& f, int N, const GlColoring& c) {
    for (const auto& [id, x] : f.facets) {
        auto it = c.find(id);
        if (it == c.end() || std::popcount(it->second) != x.thickness || (it->second >> N) != 0) return false;
    }
    for (const auto& [id, s] : f.seams) {
        std::uint32_t a = c.at(s.sides[0]), b = c.at(s.sides[1]), d = c.at(s.sides[2]);
        if ((a & b) != 0 || (a | b) != d) return false;
    }
    return true;
}

// ------------------------------------------------------------ surfaces

SurfaceSummary surface_of(const Foam& f, const std::function<bool(int)>& included) {
    SurfaceSummary out;
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [id, x] : f.facets)
        if (included(id)) {
            out.facets.push_back(id);
            parent[id] = id;
        }
    std::map<int, int> euler;  // root -> partial Euler characteristic, filled below
    std::vector<std::pair<int, int>> contributions;  // (facet in component, amount)
    for (int id : out.facets) contributions.push_back({id, f.facets.at(id).euler_open});
    std::map<int, int> seam_facet;
    for (const auto& [id, s] : f.seams) {
        std::vector<int> in;
        for (int x : s.sides)
            if (parent.count(x)) in.push_back(x);
        if (in.empty()) continue;
        if (in.size() != 2)
            throw DomainError("not embeddable/invalid foam: seam " + std::to_string(id) + " has " +
                              std::to_string(in.size()) + " included sides");
        int a = find(in[0]), b = find(in[1]);
        parent[std::max(a, b)] = std::min(a, b);
        seam_facet[id] = in[0];
        if (!s.circle) contributions.push_back({in[0], -1});
    }
    for (const auto& [id, v] : f.vertices) {
        for (const auto& se : v.ends) {
            auto it = seam_facet.find(se.seam);
            if (it != seam_facet.end()) {
                contributions.push_back({it->second, 1});
                break;
            }
        }
    }
    for (int id : out.facets) {
        int root = find(id);
        out.component[id] = root;
        out.component_euler[root] += 0;
    }
    for (const auto& [facet, amount] : contributions) {
        out.component_euler[find(facet)] += amount;
        out.euler += amount;
    }
    for (const auto& [root, chi] : out.component_euler)
        if (chi % 2 != 0)
            throw DomainError("not embeddable/invalid foam: surface component has odd Euler characteristic " +
                              std::to_string(chi));
    return out;
}

SurfaceSummary bicolored_surface(const Foam& f, const Sl3Coloring& c, int i, int j) {
    if (!(1 <= i && i < j && j <= 3)) throw DomainError("bicolored surface needs 1 <= i < j <= 3");
    return surface_of(f, [&](int id) {
        int x = c.at(id);
        return x == i || x == j;
    });
}

SurfaceSummary bicolored_surface(const Foam& f, const GlColoring& c, int i, int j) {
    if (!(1 <= i && i < j)) throw DomainError("bicolored surface needs 1 <= i < j");
    std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    return surface_of(f, [&](int id) {
        std::uint32_t x = c.at(id);
        return ((x & bi) != 0) != ((x & bj) != 0);
    });
}

SurfaceSummary unicolored_surface(const Foam& f, const GlColoring& c, int i) {
    if (i < 1) throw DomainError("colors start at 1");
    std::uint32_t bi = 1u << (i - 1);
    return surface_of(f, [&](int id) { return (c.at(id) & bi) != 0; });
}

// ------------------------------------------------------------ singular circles

int positive_circle_count(const Foam& f, const GlColoring& c, int i, int j) {
    if (!(1 <= i && i < j)) throw DomainError("positive circles need 1 <= i < j");
    std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    auto only = [&](int facet, std::uint32_t yes, std::uint32_t no) {
        std::uint32_t x = c.at(facet);
        return (x & yes) != 0 && (x & no) == 0;
    };
    // +1 positive, -1 negative, 0 not singular
    auto local = [&](const Seam& s) {
        bool i_first = only(s.sides[0], bi, bj) && only(s.sides[1], bj, bi);
        bool j_first = only(s.sides[0], bj, bi) && only(s.sides[1], bi, bj);
        if (!i_first && !j_first) return 0;
        return i_first == s.orient ? 1 : -1;
    };
    int count = 0;
    std::map<int, std::vector<SeamEnd>> at_vertex;
    std::set<int> pending;
    for (const auto& [id, s] : f.seams) {
        int sign = local(s);
        if (sign == 0) continue;
        if (s.circle) {
            count += sign > 0;
            continue;
        }
        pending.insert(id);
        for (int e = 0; e < 2; ++e) at_vertex[s.ends[e]].push_back(SeamEnd{id, e});
    }
    for (const auto& [v, ends] : at_vertex)
        if (ends.size() != 2)
            throw DomainError("vertex " + std::to_string(v) + " has " + std::to_string(ends.size()) +
                              " singular seam ends");
    while (!pending.empty()) {
        int start = *pending.begin();
        int sign = local(f.seams.at(start));
        int cur = start;
        do {
            pending.erase(cur);
            const Seam& s = f.seams.at(cur);
            if (local(s) != sign) throw DomainError("orientation data inconsistent");
            const auto& ends = at_vertex.at(s.ends[1]);
            // the other singular end at the head vertex must be an outgoing end
            SeamEnd next = ends[0].seam == cur && ends[0].end == 1 ? ends[1] : ends[0];
            if (next.end != 0) throw DomainError("orientation data inconsistent");
            cur = next.seam;
        } while (cur != start);
        count += sign > 0;
    }
    return count;
}

// ------------------------------------------------------------ Kempe moves

Sl3Coloring kempe_move(const Foam& f, const Sl3Coloring& c, int i, int j, int component) {
    SurfaceSummary s = bicolored_surface(f, c, i, j);
    if (!s.component_euler.count(component))
        throw DomainError("no component " + std::to_string(component) + " of the bicolored surface");
    Sl3Coloring out = c;
    for (const auto& [facet, root] : s.component)
        if (root == component) out[facet] = out[facet] == i ? j : i;
    return out;
}

}  // namespace foamlab
