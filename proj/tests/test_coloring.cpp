#include "doctest.h"

#include <bit>
#include <set>

#include "foamlab/coloring.hpp"
#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"

using namespace foamlab;

namespace {

// every map facet -> {1,2,3}, filtered by the seam rule
std::vector<Sl3Coloring> brute_sl3(const Foam& f) {
    std::vector<int> ids;
    for (const auto& [id, x] : f.facets) ids.push_back(id);
    std::vector<Sl3Coloring> out;
    std::int64_t total = 1;
    for (std::size_t i = 0; i < ids.size(); ++i) total *= 3;
    for (std::int64_t code = 0; code < total; ++code) {
        Sl3Coloring c;
        std::int64_t r = code;
        for (int id : ids) {
            c[id] = static_cast<int>(r % 3) + 1;
            r /= 3;
        }
        bool ok = true;
        for (const auto& [sid, s] : f.seams) {
            std::set<int> cs{c[s.sides[0]], c[s.sides[1]], c[s.sides[2]]};
            ok = ok && cs.size() == 3;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

std::int64_t brute_gl_count(const Foam& f, int N) {
    std::vector<int> ids;
    for (const auto& [id, x] : f.facets) ids.push_back(id);
    std::int64_t count = 0;
    std::map<int, std::uint32_t> c;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == ids.size()) {
            for (const auto& [sid, s] : f.seams) {
                std::uint32_t a = c[s.sides[0]], b = c[s.sides[1]], d = c[s.sides[2]];
                if ((a & b) || (a | b) != d) return;
            }
            ++count;
            return;
        }
        for (std::uint32_t m = 0; m < (1u << N); ++m)
            if (std::popcount(m) == f.facets.at(ids[k]).thickness) {
                c[ids[k]] = m;
                go(k + 1);
            }
    };
    go(0);
    return count;
}

Sl3Coloring permute(const Sl3Coloring& c, const std::array<int, 3>& p) {
    Sl3Coloring out;
    for (const auto& [id, x] : c) out[id] = p[x - 1];
    return out;
}

}  // namespace

TEST_CASE("Tait colorings of standard foams") {
    CHECK(count_tait_colorings_foam(sphere_foam(0)) == 3);
    CHECK(count_tait_colorings_foam(disjoint_union(sphere_foam(0), surface_foam(1, 0))) == 9);
    CHECK(count_tait_colorings_foam(theta_foam({0, 0, 0})) == 6);
    CHECK(count_tait_colorings_foam(torus_with_disks()) == 0);
    CHECK(count_tait_colorings_foam(torus_lattice(1, 1)) == 0);
    auto cs = sl3_colorings(theta_foam({0, 0, 0}));
    REQUIRE(cs.size() == 6);
    CHECK(cs.front() == Sl3Coloring{{0, 1}, {1, 2}, {2, 3}});
    CHECK(cs.back() == Sl3Coloring{{0, 3}, {1, 2}, {2, 1}});
}

TEST_CASE("torus lattices against brute force") {
    // frozen from the brute-force enumeration
    std::map<std::pair<int, int>, std::int64_t> expected{{{1, 1}, 0}, {{1, 2}, 0}, {{2, 1}, 0}, {{2, 2}, 6},
                                                        {{1, 3}, 0}, {{3, 1}, 0}, {{2, 3}, 0}, {{3, 2}, 0}, {{2, 4}, 6}};
    for (const auto& [nm, count] : expected) {
        Foam f = torus_lattice(nm.first, nm.second);
        INFO(nm.first << "x" << nm.second);
        CHECK(static_cast<std::int64_t>(brute_sl3(f).size()) == count);
        CHECK(count_tait_colorings_foam(f) == count);
    }
}

TEST_CASE("GL(N) colorings") {
    CHECK(gln_colorings(sphere_foam(0, gl(2)), 2).size() == 2);
    CHECK(gln_colorings(sphere_foam(0, gl(4), 4), 4).size() == 1);
    CHECK(gln_colorings(gl_theta_foam(3, 1, 1), 3).size() == 6);
    CHECK(gln_colorings(gl_theta_foam(5, 2, 1), 5).size() == 30);
    CHECK(gln_colorings(k4_suspension(3, 1, 1, 1), 3).size() == 6);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Foam f = random_gln_foam(rng, 8, 4, 2);
        auto cs = gln_colorings(f, f.theory.N);
        CHECK(static_cast<std::int64_t>(cs.size()) == brute_gl_count(f, f.theory.N));
        for (const auto& c : cs) CHECK(is_gln_coloring(f, f.theory.N, c));
    }
}

TEST_CASE("bicolored and unicolored surfaces") {
    Foam s = sphere_foam(0);
    Sl3Coloring one{{0, 1}};
    CHECK(bicolored_surface(s, one, 1, 2).euler == 2);
    CHECK(bicolored_surface(s, one, 2, 3).euler == 0);
    CHECK(bicolored_surface(s, one, 2, 3).facets.empty());
    Foam t = theta_foam({0, 0, 0});
    for (const auto& c : sl3_colorings(t))
        for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            SurfaceSummary x = bicolored_surface(t, c, i, j);
            CHECK(x.euler == 2);
            CHECK(x.components() == 1);
        }
    Foam g = sphere_foam(0, gl(2));
    CHECK(unicolored_surface(g, GlColoring{{0, 1u}}, 1).euler == 2);
    CHECK(unicolored_surface(g, GlColoring{{0, 1u}}, 2).euler == 0);
    Foam th = gl_theta_foam(2, 1, 1);
    GlColoring c{{0, 1u}, {1, 2u}, {2, 3u}};
    CHECK(unicolored_surface(th, c, 1).euler == 2);
    CHECK(bicolored_surface(th, c, 1, 2).euler == 2);
    // a seam with only one side in the surface is not a surface
    Foam bad = theta_foam({0, 0, 0});
    bad.seams[0].sides = {0, 0, 1};
    CHECK_THROWS_AS(bicolored_surface(bad, Sl3Coloring{{0, 1}, {1, 2}, {2, 3}}, 1, 3), DomainError);
}

TEST_CASE("positive singular circles") {
    CHECK(positive_circle_count(sphere_foam(0, gl(2)), GlColoring{{0, 1u}}, 1, 2) == 0);
    GlColoring c{{0, 1u}, {1, 2u}, {2, 3u}};
    CHECK(positive_circle_count(gl_theta_foam(2, 1, 1, {}, {0, 0, 0}, true), c, 1, 2) == 1);
    Foam swapped = gl_theta_foam(2, 1, 1, {}, {0, 0, 0}, true);
    swapped.seams[0].sides = {1, 0, 2};
    CHECK(positive_circle_count(swapped, c, 1, 2) == 0);
    CHECK(positive_circle_count(gl_theta_foam(2, 1, 1, {}, {0, 0, 0}, false), c, 1, 2) == 0);

    // suspension: every singular circle runs through both suspension points
    Foam k = k4_suspension(3, 1, 1, 1);
    for (const auto& col : gln_colorings(k, 3))
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) CHECK_NOTHROW(positive_circle_count(k, col, i, j));
    Foam broken = k;
    broken.seams[0].orient = !broken.seams[0].orient;
    bool threw = false;
    for (const auto& col : gln_colorings(broken, 3))
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                try {
                    positive_circle_count(broken, col, i, j);
                } catch (const DomainError& e) {
                    threw = true;
                    CHECK(std::string(e.what()) == "orientation data inconsistent");
                }
            }
    CHECK(threw);
}

TEST_CASE("Kempe moves") {
    Foam s = sphere_foam(0);
    CHECK(kempe_move(s, Sl3Coloring{{0, 1}}, 1, 2, 0) == Sl3Coloring{{0, 2}});
    CHECK_THROWS_AS(kempe_move(s, Sl3Coloring{{0, 1}}, 1, 2, 5), DomainError);
    Foam t = theta_foam({0, 0, 0});
    for (const auto& c : sl3_colorings(t))
        for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            Sl3Coloring m = kempe_move(t, c, i, j, bicolored_surface(t, c, i, j).component.begin()->second);
            std::array<int, 3> tau{1, 2, 3};
            std::swap(tau[i - 1], tau[j - 1]);
            CHECK(m == permute(c, tau));
            CHECK(kempe_move(t, m, i, j, bicolored_surface(t, m, i, j).component.begin()->second) == c);
        }
}

TEST_CASE("property: colorings of random foams") {
    Rng rng(17);
    for (int it = 0; it < 25; ++it) {
        Foam f = random_sl3_foam(rng, 8, 2);
        auto cs = sl3_colorings(f);
        std::set<Sl3Coloring> unique(cs.begin(), cs.end());
        CHECK(unique.size() == cs.size());
        if (f.facets.size() <= 9) CHECK(brute_sl3(f).size() == cs.size());
        for (const auto& c : cs) {
            CHECK(is_tait_coloring(f, c));
            std::array<int, 3> chi{};
            int k = 0;
            for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
                SurfaceSummary s = bicolored_surface(f, c, i, j);
                CHECK(s.euler % 2 == 0);
                chi[k++] = s.euler;
            }
            // relabeling colors by (1 2) exchanges chi_13 and chi_23
            Sl3Coloring p = permute(c, {2, 1, 3});
            CHECK(bicolored_surface(f, p, 1, 2).euler == chi[0]);
            CHECK(bicolored_surface(f, p, 1, 3).euler == chi[2]);
            CHECK(bicolored_surface(f, p, 2, 3).euler == chi[1]);
        }
    }
}

TEST_CASE("property: Kempe classes have size 2^k") {
    Rng rng(18);
    for (int it = 0; it < 12; ++it) {
        Foam f = random_sl3_foam(rng, 8, 1);
        auto cs = sl3_colorings(f);
        if (cs.size() > 200) continue;
        for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            std::set<Sl3Coloring> seen;
            for (const auto& c : cs) {
                if (seen.count(c)) continue;
                SurfaceSummary s = bicolored_surface(f, c, i, j);
                int spheres = 0;
                for (const auto& [root, chi] : s.component_euler) spheres += chi == 2;
                // orbit under moves on sphere components
                std::set<Sl3Coloring> orbit{c};
                std::vector<Sl3Coloring> todo{c};
                while (!todo.empty()) {
                    Sl3Coloring x = todo.back();
                    todo.pop_back();
                    SurfaceSummary sx = bicolored_surface(f, x, i, j);
                    for (const auto& [root, chi] : sx.component_euler) {
                        if (chi != 2) continue;
                        Sl3Coloring y = kempe_move(f, x, i, j, root);
                        CHECK(is_tait_coloring(f, y));
                        if (orbit.insert(y).second) todo.push_back(y);
                    }
                }
                CHECK(orbit.size() == (std::size_t{1} << spheres));
                seen.insert(orbit.begin(), orbit.end());
            }
        }
    }
}
