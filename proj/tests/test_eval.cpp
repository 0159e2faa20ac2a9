#include "doctest.h"

#include <algorithm>
#include <set>

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"
#include "foamlab/eval.hpp"

using namespace foamlab;

namespace {

// GF(2^8) with x^8 + x^4 + x^3 + x + 1
struct GF256 {
    static std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
        std::uint32_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            a <<= 1;
            if (a & 0x100) a ^= 0x11B;
            b >>= 1;
        }
        return r;
    }
    static std::uint32_t pow(std::uint32_t a, int e) {
        std::uint32_t r = 1;
        for (int i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    static std::uint32_t inv(std::uint32_t a) { return pow(a, 254); }
};

constexpr std::int64_t kP = 1000000007;

std::int64_t mulp(std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>((__int128)a * b % kP); }
std::int64_t powp(std::int64_t a, std::int64_t e) {
    std::int64_t r = 1;
    a = ((a % kP) + kP) % kP;
    while (e > 0) {
        if (e & 1) r = mulp(r, a);
        a = mulp(a, a);
        e >>= 1;
    }
    return r;
}
std::int64_t invp(std::int64_t a) { return powp(a, kP - 2); }

std::uint32_t value_gf256(const SymPoly& p, const std::vector<std::uint32_t>& x) {
    std::uint32_t s = 0;
    for (const auto& [e, c] : p.terms()) {
        std::uint32_t m = 1;
        for (std::size_t i = 0; i < e.size(); ++i) m = GF256::mul(m, GF256::pow(x[i], e[i]));
        if (c % 2 != 0) s ^= m;
    }
    return s;
}

std::int64_t value_p(const SymPoly& p, const std::vector<std::int64_t>& x) {
    std::int64_t s = 0;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t m = ((c % kP) + kP) % kP;
        for (std::size_t i = 0; i < e.size(); ++i) m = mulp(m, powp(x[i], e[i]));
        s = (s + m) % kP;
    }
    return s;
}

// Sum over Tait colorings of x^d / prod (x_i + x_j)^{chi_ij / 2}, in GF(2^8).
std::uint32_t sl3_oracle(const Foam& f, const std::vector<std::uint32_t>& x) {
    std::uint32_t total = 0;
    for (const auto& c : sl3_colorings(f)) {
        std::uint32_t v = 1;
        for (const auto& [id, facet] : f.facets) v = GF256::mul(v, GF256::pow(x[c.at(id) - 1], facet.dots));
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                int e = bicolored_surface(f, c, i, j).euler / 2;
                std::uint32_t base = x[i - 1] ^ x[j - 1];
                v = GF256::mul(v, e >= 0 ? GF256::inv(GF256::pow(base, e)) : GF256::pow(base, -e));
            }
        total ^= v;
    }
    return total;
}

// Same for GL(N) over GF(p): labels are evaluated at the colors' variables.
std::int64_t gl_oracle(const Foam& f, int N, const std::vector<std::int64_t>& x) {
    std::int64_t total = 0;
    for (const auto& c : gln_colorings(f, N)) {
        std::int64_t v = 1;
        std::vector<std::int64_t> mine;
        for (const auto& [id, facet] : f.facets) {
            mine.clear();
            for (int k = 0; k < N; ++k)
                if (c.at(id) & (1u << k)) mine.push_back(x[k]);
            if (facet.dots) v = mulp(v, powp(mine[0], facet.dots));
            for (const auto& l : facet.labels) v = mulp(v, value_p(l, mine));
        }
        int s = 0;
        for (int j = 1; j <= N; ++j) s += j * (unicolored_surface(f, c, j).euler / 2);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                int e = bicolored_surface(f, c, i, j).euler / 2;
                std::int64_t base = ((x[i - 1] - x[j - 1]) % kP + kP) % kP;
                v = mulp(v, e >= 0 ? invp(powp(base, e)) : powp(base, -e));
                s += positive_circle_count(f, c, i, j);
            }
        if (s % 2 != 0) v = (kP - v) % kP;
        total = (total + v) % kP;
    }
    return total;
}

std::vector<std::uint32_t> points256(Rng& rng) {
    std::vector<std::uint32_t> x;
    while (x.size() < 3) {
        std::uint32_t v = static_cast<std::uint32_t>(uniform(rng, 1, 255));
        if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    return x;
}

std::vector<std::int64_t> points_p(Rng& rng, int N) {
    std::vector<std::int64_t> x;
    while (static_cast<int>(x.size()) < N) {
        std::int64_t v = uniform(rng, 1, 1000000);
        if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    return x;
}

SymPoly h_mod2(int k) { return k < 0 ? SymPoly(3, Coeffs::Mod2) : complete_homogeneous(k, 3, Coeffs::Mod2); }

SymPoly y_power(int k) { return SymPoly::variable(0, 1).pow(k); }

}  // namespace

TEST_CASE("coloring terms") {
    ColoringTerm t = eval_sl3_term(sphere_foam(3), Sl3Coloring{{0, 1}});
    CHECK(t.numerator == SymPoly::monomial({3, 0, 0}, 1, Coeffs::Mod2));
    CHECK(t.denominator == std::map<std::pair<int, int>, int>{{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 0}});
    Foam th = theta_foam({3, 1, 0});
    ColoringTerm u = eval_sl3_term(th, Sl3Coloring{{0, 2}, {1, 3}, {2, 1}});
    CHECK(u.numerator == SymPoly::monomial({0, 3, 1}, 1, Coeffs::Mod2));
    for (const auto& [p, e] : u.denominator) CHECK(e == 1);
    ColoringTerm v = eval_sl3_term(surface_foam(1, 0), Sl3Coloring{{0, 1}});
    for (const auto& [p, e] : v.denominator) CHECK(e == 0);
}

TEST_CASE("unoriented sphere and theta evaluations") {
    for (int n = 0; n <= 6; ++n) CHECK(eval_sl3_unoriented(sphere_foam(n)) == h_mod2(n - 2));
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= n1; ++n2)
            for (int n3 = 0; n3 <= n2; ++n3) {
                SymPoly got = eval_sl3_unoriented(theta_foam({n1, n2, n3}));
                INFO(n1 << n2 << n3);
                if (n1 == n2 || n2 == n3)
                    CHECK(got.is_zero());
                else
                    CHECK(got == reduce_mod2(schur({n1 - 2, n2 - 1, n3}, 3)));
            }
    CHECK(eval_sl3_unoriented(torus_with_disks()).is_zero());
    CHECK(eval_sl3_unoriented(surface_foam(1, 0)) == SymPoly::constant(1, 3, Coeffs::Mod2).scaled(3));
    CHECK(eval0(sphere_foam(2)) == 1);
    CHECK(eval0(sphere_foam(3)) == 0);
    CHECK(eval0(theta_foam({2, 1, 0})) == 1);
}

TEST_CASE("unoriented evaluation against a pointwise oracle") {
    Rng rng(23);
    int nonzero = 0;
    for (int it = 0; it < 30; ++it) {
        Foam f = random_sl3_foam(rng, 6, 2);
        SymPoly p = eval_sl3_unoriented(f);
        nonzero += !p.is_zero();
        for (int k = 0; k < 3; ++k) {
            auto x = points256(rng);
            CHECK(value_gf256(p, x) == sl3_oracle(f, x));
        }
    }
    CHECK(nonzero > 5);
}

TEST_CASE("GL(N) small values") {
    CHECK(eval_gln(sphere_foam(0, gl(2))).is_zero());
    Foam s = sphere_foam(0, gl(2));
    s.facets[0].labels = {y_power(1)};
    CHECK(eval_gln(s) == SymPoly::constant(-1, 2));
    s.facets[0].labels = {y_power(2)};
    CHECK(eval_gln(s) == -(SymPoly::variable(0, 2) + SymPoly::variable(1, 2)));
    // plain dots on thickness-1 facets act as y
    Foam d = sphere_foam(1, gl(2));
    CHECK(eval_gln(d) == SymPoly::constant(-1, 2));
    Foam bad = sphere_foam(0, gl(3), 2);
    bad.facets[0].labels = {y_power(1)};
    CHECK_THROWS_AS(eval_gln(bad), DomainError);
}

TEST_CASE("GL(N) evaluation against a pointwise oracle") {
    Rng rng(29);
    for (int it = 0; it < 40; ++it) {
        Foam f = random_gln_foam(rng, 8, 4, 3);
        int N = f.theory.N;
        SymPoly p = eval_gln(f);
        CHECK(is_symmetric(p));
        auto x = points_p(rng, N);
        CHECK(value_p(p, x) == gl_oracle(f, N, x));
    }
}

TEST_CASE("suspension foams are integral") {
    for (bool flip : {false, true})
        for (auto [N, a, b, c] : {std::array<int, 4>{3, 1, 1, 1}, {4, 1, 2, 1}, {4, 1, 1, 1}, {5, 2, 1, 2}}) {
            INFO(flip << " " << N << a << b << c);
            Foam f = k4_suspension(N, a, b, c, flip);
            CHECK_NOTHROW(eval_gln(f));
            Rng rng(N * 10 + a);
            for (auto& [id, x] : f.facets) x.labels = {random_label(rng, x.thickness, 2)};
            CHECK_NOTHROW(eval_gln(f));
        }
}

TEST_CASE("oriented evaluator") {
    CHECK(eval_oriented_sl3(surface_foam(1, 0, sl3o())) == 3);
    CHECK(eval_oriented_sl3(sphere_foam(2, sl3o())) == -1);
    CHECK(eval_oriented_sl3(sphere_foam(1, sl3o())) == 0);
    CHECK(eval_oriented_sl3(theta_foam({0, 1, 2}, sl3o())) == 1);
    CHECK(eval_oriented_sl3(theta_foam({0, 2, 1}, sl3o())) == -1);
    CHECK(eval_oriented_sl3(theta_foam({2, 0, 1}, sl3o())) == 1);
    CHECK(eval_oriented_sl3(theta_foam({1, 1, 1}, sl3o())) == 0);
    Foam reversed = theta_foam({0, 1, 2}, sl3o());
    reversed.seams[0].orient = false;
    CHECK(eval_oriented_sl3(reversed) == -1);
    CHECK(eval_oriented_sl3(two_seam_oriented_foam()) == -3);
    CHECK(eval_oriented_sl3(disjoint_union(surface_foam(1, 0, sl3o()), sphere_foam(2, sl3o()))) == -3);
    CHECK_THROWS_WITH(eval_oriented_sl3(torus_with_disks()), "oriented evaluator requires vertex-free foam");
}

TEST_CASE("neck cutting a torus into a sphere") {
    // cut the neck: sum over k of -(sphere with d + k + (2 - k) dots)
    for (int d = 0; d <= 2; ++d) {
        std::int64_t cut = 0;
        for (int k = 0; k <= 2; ++k) cut += -eval_oriented_sl3(sphere_foam(d + k + (2 - k), sl3o()));
        CHECK(eval_oriented_sl3(surface_foam(1, d, sl3o())) == cut);
    }
}

TEST_CASE("degrees") {
    CHECK(foam_degree(sphere_foam(0)) == -4);
    CHECK(foam_degree(theta_foam({0, 0, 0})) == -6);
    CHECK(foam_degree(sphere_foam(2)) == 0);
    CHECK(!foam_degree(torus_with_disks()).has_value());
    CHECK(topological_degree(sphere_foam(0)) == -4);
    CHECK(topological_degree(theta_foam({0, 0, 0})) == -6);
    // chi(F) = 1 - 2 + 3, chi(s(F)) = 1 - 2
    CHECK(topological_degree(torus_with_disks()) == -3);
    CHECK(foam_degree(sphere_foam(0, gl(3), 1)) == -4);
    CHECK(foam_degree(sphere_foam(0, gl(4), 2)) == -8);
}

TEST_CASE("property: homogeneity and symmetry over the corpus") {
    for (const auto& [name, f] : foam_corpus()) {
        INFO(name);
        SymPoly p = f.theory.kind == Theory::GlN ? eval_gln(f) : eval_sl3_unoriented(f);
        CHECK(is_symmetric(p));
        if (p.is_zero()) continue;
        auto deg = foam_degree(f);
        REQUIRE(deg.has_value());
        CHECK(p.is_homogeneous());
        CHECK(p.internal_degree() == *deg);
        if (f.theory.kind != Theory::GlN) CHECK(topological_degree(f) == *deg);
    }
}

TEST_CASE("property: multiplicativity") {
    Rng rng(31);
    for (int it = 0; it < 10; ++it) {
        Foam a = random_sl3_foam(rng, 4, 3), b = random_sl3_foam(rng, 4, 3);
        CHECK(eval_sl3_unoriented(disjoint_union(a, b), false) == eval_sl3_unoriented(a) * eval_sl3_unoriented(b));
    }
    for (int it = 0; it < 10; ++it) {
        int N = uniform(rng, 2, 4);
        Foam a = sphere_foam(0, gl(N), uniform(rng, 1, N - 1));
        a.facets[0].labels = {random_label(rng, a.facets[0].thickness, uniform(rng, 0, 4))};
        Foam b = gl_theta_foam(N, 1, 1, {std::vector<SymPoly>{y_power(uniform(rng, 0, 3))}, {}, {}});
        CHECK(eval_gln(disjoint_union(a, b), 0, false) == eval_gln(a) * eval_gln(b));
    }
    for (int d1 = 0; d1 <= 2; ++d1)
        for (int g = 0; g <= 2; ++g) {
            Foam a = surface_foam(g, d1, sl3o()), b = theta_foam({d1, 2, 0}, sl3o());
            CHECK(eval_oriented_sl3(disjoint_union(a, b)) == eval_oriented_sl3(a) * eval_oriented_sl3(b));
        }
}

TEST_CASE("property: S3 symmetry of coloring sums") {
    Rng rng(37);
    for (int it = 0; it < 10; ++it) {
        Foam f = random_sl3_foam(rng, 6, 2);
        std::vector<ColoringTerm> terms;
        for (const auto& c : sl3_colorings(f)) terms.push_back(eval_sl3_term(f, c));
        Fraction fr = sum_terms(terms, 3, Coeffs::Mod2);
        CHECK(fr.denominator.empty());
        for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2}, {0, 2, 1}, {2, 0, 1}})
            CHECK(fr.numerator.permuted(perm) == fr.numerator);
    }
}

TEST_CASE("bubble relations") {
    Rng rng(41);
    for (int it = 0; it < 6; ++it) {
        Foam f = it < 2 ? sphere_foam(it + 2) : random_sl3_foam(rng, 4, 2);
        int facet = f.facets.begin()->first;
        SymPoly base = eval_sl3_unoriented(f);
        CHECK(eval_sl3_unoriented(add_bubble(f, facet, 1, 0)) == base);
        CHECK(eval_sl3_unoriented(add_bubble(f, facet, 0, 1)) == base);
        CHECK(eval_sl3_unoriented(add_bubble(f, facet, 0, 0)).is_zero());
        CHECK(eval_sl3_unoriented(add_bubble(f, facet, 1, 1)).is_zero());
    }
}

TEST_CASE("property: mod 2 agrees with GL(3) on thickness-1 foams") {
    Rng rng(43);
    for (int it = 0; it < 20; ++it) {
        Foam g;
        g.theory = gl(3);
        Foam s;
        int pieces = uniform(rng, 1, 3);
        for (int k = 0; k < pieces; ++k) {
            int genus = uniform(rng, 0, 1), dots = uniform(rng, 0, 5);
            Foam pg = surface_foam(genus, 0, gl(3));
            pg.facets[0].labels = {y_power(dots)};
            Foam ps = surface_foam(genus, dots);
            g = k == 0 ? pg : disjoint_union(g, pg);
            s = k == 0 ? ps : disjoint_union(s, ps);
        }
        CHECK(reduce_mod2(eval_gln(g)) == eval_sl3_unoriented(s));
    }
}

TEST_CASE("property: Kempe class sums clear their own denominator") {
    Rng rng(47);
    for (int it = 0; it < 8; ++it) {
        Foam f = random_sl3_foam(rng, 6, 2);
        auto cs = sl3_colorings(f);
        for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            std::set<Sl3Coloring> seen;
            for (const auto& c : cs) {
                if (seen.count(c)) continue;
                std::vector<Sl3Coloring> orbit{c};
                seen.insert(c);
                for (std::size_t k = 0; k < orbit.size(); ++k)
                    for (const auto& [root, chi] : bicolored_surface(f, orbit[k], i, j).component_euler)
                        if (chi == 2) {
                            Sl3Coloring y = kempe_move(f, orbit[k], i, j, root);
                            if (seen.insert(y).second) orbit.push_back(y);
                        }
                std::vector<ColoringTerm> terms;
                for (const auto& x : orbit) terms.push_back(eval_sl3_term(f, x));
                Fraction fr = sum_terms(terms, 3, Coeffs::Mod2);
                CHECK(fr.denominator.count({i, j}) == 0);
            }
        }
    }
}

TEST_CASE("oriented and GL(3) values agree up to sign on closed surfaces") {
    for (int genus = 0; genus <= 2; ++genus)
        for (int d = 0; d <= 4; ++d) {
            INFO(genus << " " << d);
            std::int64_t o = eval_oriented_sl3(surface_foam(genus, d, sl3o()));
            Foam g = surface_foam(genus, 0, gl(3));
            g.facets[0].labels = {SymPoly::variable(0, 1).pow(d)};
            std::int64_t c = eval_gln(g).coeff({0, 0, 0});
            CHECK(std::llabs(o) == std::llabs(c));
            MESSAGE("genus " << genus << " dots " << d << ": oriented " << o << ", GL(3) at 0 " << c);
        }
}
