#include "foamlab/selftest.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"
#include "foamlab/eval.hpp"
#include "foamlab/statespace.hpp"

namespace foamlab {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream notes;
    int failures = 0;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures++ < 3) notes << what << "; ";
    }
};

// Plain edge-by-edge search, kept apart from the library's counter.
std::int64_t tait_brute(const Web& w) {
    std::vector<int> edges;
    for (const auto& [id, e] : w.edges()) edges.push_back(id);
    std::map<int, int> color;
    std::int64_t count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == edges.size()) {
            ++count;
            return;
        }
        const WebEdge& e = w.edge(edges[k]);
        for (int c = 1; c <= 3; ++c) {
            bool ok = true;
            for (int v : {e.tail.vertex, e.head.vertex})
                for (const Dart& d : w.vertex(v).slots)
                    if (d.edge != e.id && color.count(d.edge) && color[d.edge] == c) ok = false;
            if (e.tail.vertex == e.head.vertex) ok = false;
            if (!ok) continue;
            color[e.id] = c;
            go(k + 1);
            color.erase(e.id);
        }
    };
    go(0);
    for (std::size_t i = 0; i < w.circles().size(); ++i) count *= 3;
    return count;
}

LaurentQ Q(int n) { return quantum_integer(n); }

void sphere_criterion(Check& c) {
    for (int n = 0; n <= 6; ++n) {
        SymPoly want = n < 2 ? SymPoly(3, Coeffs::Mod2) : complete_homogeneous(n - 2, 3, Coeffs::Mod2);
        c.expect(eval_sl3_unoriented(sphere_foam(n)) == want, "sphere with " + std::to_string(n) + " dots");
    }
}

void theta_criterion(Check& c) {
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= n1; ++n2)
            for (int n3 = 0; n3 <= n2; ++n3) {
                SymPoly got = eval_sl3_unoriented(theta_foam({n1, n2, n3}));
                bool ok = n1 == n2 || n2 == n3 ? got.is_zero() : got == reduce_mod2(schur({n1 - 2, n2 - 1, n3}, 3));
                c.expect(ok, "theta " + std::to_string(n1) + std::to_string(n2) + std::to_string(n3));
            }
}

void oriented_criterion(Check& c) {
    auto expect = [&](const Foam& f, std::int64_t want, const std::string& name) {
        std::int64_t got = eval_oriented_sl3(f);
        c.expect(got == want, name + " gave " + std::to_string(got));
    };
    expect(surface_foam(1, 0, sl3o()), 3, "torus");
    expect(sphere_foam(2, sl3o()), -1, "2-dot sphere");
    expect(theta_foam({0, 1, 2}, sl3o()), 1, "theta 012");
    expect(theta_foam({0, 2, 1}, sl3o()), -1, "theta 021");
    expect(two_seam_oriented_foam(), -3, "two-seam foam");
}

void kuperberg_criterion(Check& c) {
    WebRewrite b = make_birth(Web{});
    b.add_circles[0].oriented = true;
    Web circle;
    apply_rewrite(circle, b);
    c.expect(kuperberg_poly(circle) == Q(3), "circle");
    std::vector<Movie> th{theta_cup_movie({0, 0, 0}, sl3o())};
    c.expect(kuperberg_poly(th[0].top()) == Q(3) * Q(2), "theta");
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        Web w = random_oriented_web(rng, 16);
        c.expect(kuperberg_poly(w).at_one() == tait_brute(w), "random oriented web " + std::to_string(i));
    }
}

void reduce_criterion(Check& c) {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Web w = random_reducible_web(rng, 16);
        ReductionOutcome out = reduce(w);
        c.expect(out.reduced, "web " + std::to_string(i) + " not reduced");
        c.expect(out.grk.at_one() == tait_brute(w), "web " + std::to_string(i) + " grk(1) != t");
        c.expect(out.grk.is_palindromic(), "web " + std::to_string(i) + " grk not palindromic");
    }
    ReductionOutcome d = reduce(dodecahedron_web());
    c.expect(!d.reduced && d.reason == "irreducible", "dodecahedron");
}

void gl_criterion(Check& c) {
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        Foam f = random_gln_foam(rng, 8, 5, 4);
        try {
            SymPoly p = eval_gln(f);
            c.expect(is_symmetric(p), "foam " + std::to_string(i) + " not symmetric");
        } catch (const DomainError& e) {
            c.expect(false, "foam " + std::to_string(i) + ": " + e.what());
        }
    }
    for (int i = 0; i < 30; ++i) {
        Foam g, s;
        int pieces = uniform(rng, 1, 3);
        for (int k = 0; k < pieces; ++k) {
            int genus = uniform(rng, 0, 1), dots = uniform(rng, 0, 5);
            Foam pg = surface_foam(genus, 0, gl(3));
            pg.facets[0].labels = {SymPoly::variable(0, 1).pow(dots)};
            Foam ps = surface_foam(genus, dots);
            g = k == 0 ? pg : disjoint_union(g, pg);
            s = k == 0 ? ps : disjoint_union(s, ps);
        }
        c.expect(reduce_mod2(eval_gln(g)) == eval_sl3_unoriented(s), "mod-2 bridge " + std::to_string(i));
    }
}

void statespace_criterion(Check& c) {
    std::vector<Movie> cups{cup_movie(0), cup_movie(1), cup_movie(2)};
    c.expect(graded_dimension_f2(circle_web(), cups) == Q(3), "circle over f2");
    std::vector<Movie> ocups{cup_movie(0, sl3o()), cup_movie(1, sl3o()), cup_movie(2, sl3o())};
    auto [rc, fc] = graded_rank_z(ocups[0].top(), ocups);
    c.expect(rc == Q(3) && fc, "circle over z");
    Web th = theta_web();
    c.expect(graded_dimension_f2(th, generators_for_reducible(th)) == Q(3) * Q(2), "theta over f2");
    std::vector<Movie> tcups;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 1; ++b) tcups.push_back(theta_cup_movie({a, b, 0}, sl3o()));
    auto [rt, ft] = graded_rank_z(tcups[0].top(), tcups);
    c.expect(rt == Q(3) * Q(2) && ft, "theta over z");
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        Web w = random_reducible_web(rng, 10);
        InequalityReport r = check_inequality(w);
        c.expect(r.ok && r.equal, "web " + std::to_string(i) + ": " + std::to_string(r.dim0) + " vs " +
                                      std::to_string(r.t));
    }
}

void degree_criterion(Check& c) {
    for (const auto& [name, f] : foam_corpus()) {
        SymPoly p = f.theory.kind == Theory::GlN ? eval_gln(f) : eval_sl3_unoriented(f);
        if (p.is_zero()) continue;
        auto deg = foam_degree(f);
        c.expect(deg && p.is_homogeneous() && p.internal_degree() == *deg, name);
    }
}

void kempe_criterion(Check& c) {
    Rng rng(9);
    for (int it = 0; it < 30; ++it) {
        Foam f = random_sl3_foam(rng, 6, 2);
        auto cs = sl3_colorings(f);
        for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            std::set<Sl3Coloring> seen;
            for (const auto& col : cs) {
                if (seen.count(col)) continue;
                std::vector<Sl3Coloring> cls{col};
                seen.insert(col);
                for (std::size_t k = 0; k < cls.size(); ++k)
                    for (const auto& [root, chi] : bicolored_surface(f, cls[k], i, j).component_euler)
                        if (chi == 2) {
                            Sl3Coloring y = kempe_move(f, cls[k], i, j, root);
                            if (seen.insert(y).second) cls.push_back(y);
                        }
                std::vector<ColoringTerm> terms;
                for (const auto& x : cls) terms.push_back(eval_sl3_term(f, x));
                Fraction fr = sum_terms(terms, 3, Coeffs::Mod2);
                c.expect(!fr.denominator.count({i, j}), "foam " + std::to_string(it) + " pair " +
                                                            std::to_string(i) + std::to_string(j));
            }
        }
    }
}

void link_criterion(Check& c) {
    c.expect(link_invariant(parse_pd("O")) == Q(3), "unknot");
    c.expect(link_invariant(braid_closure(2, {1})) == Q(3), "kinked unknot");
    for (int k = 1; k <= 4; ++k) {
        LinkDiagram d;
        d.free_loops = k;
        c.expect(link_invariant(d) == Q(3).pow(k), std::to_string(k) + "-unlink");
    }
    c.expect(link_invariant(braid_closure(2, {1, -1})) == Q(3).pow(2), "two-crossing unlink");
    Rng rng(10);
    for (int i = 0; i < 20; ++i) {
        LinkDiagram d = random_link(rng, 6);
        c.expect(link_invariant(mirror(d)) == link_invariant(d).mirror(), "mirror " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
        MovePair m = random_move_pair(rng, 4, 6);
        c.expect(link_invariant(m.before) == link_invariant(m.after), m.move + " pair " + std::to_string(i));
    }
}

void binomial_criterion(Check& c) {
    for (auto [N, a] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
        LaurentQ got = gl_circle_dimension(N, a);
        c.expect(got == quantum_binomial(N, a), "N=" + std::to_string(N) + " a=" + std::to_string(a) + " gave " +
                                                    got.to_string());
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& progress) {
    struct Entry {
        const char* name;
        double limit;
        void (*run)(Check&);
    };
    const Entry entries[] = {
        {"sphere evaluations", 1, sphere_criterion},
        {"theta evaluations", 1, theta_criterion},
        {"oriented evaluator", 1, oriented_criterion},
        {"Kuperberg bracket", 30, kuperberg_criterion},
        {"unoriented reducibility", 30, reduce_criterion},
        {"GL(N) integrality", 120, gl_criterion},
        {"state spaces", 60, statespace_criterion},
        {"degree homogeneity", 0, degree_criterion},
        {"Kempe cancellation", 0, kempe_criterion},
        {"link invariant", 60, link_criterion},
        {"quantum binomials", 30, binomial_criterion},
    };
    std::vector<CriterionResult> out;
    int id = 0;
    for (const auto& e : entries) {
        CriterionResult r;
        r.id = ++id;
        r.name = e.name;
        r.limit_seconds = e.limit;
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.limit > 0 && r.seconds > e.limit) c.expect(false, "time limit exceeded");
        r.pass = c.ok;
        r.detail = c.notes.str();
        if (progress) progress(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace foamlab
