#include "doctest.h"

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"
#include "foamlab/foam.hpp"

using namespace foamlab;

namespace {

bool has_problem(const ValidationReport& r, const std::string& needle) {
    for (const auto& p : r.problems)
        if (p.find(needle) != std::string::npos) return true;
    return false;
}

Movie movie_of(const std::string& text) { return parse_movie(text); }

}  // namespace

TEST_CASE("foam files round-trip") {
    const char* text =
        "foam theory=gl N=3\n"
        "# a theta foam with labels\n"
        "FACET 0 thickness=1 chi_open=1 dots=0 labels=y1^2\n"
        "FACET 1 thickness=1 chi_open=1 dots=0\n"
        "FACET 2 thickness=2 chi_open=-1 dots=0 labels=y1+y2;y1*y2\n"
        "SEAM 0 kind=circle sides=0,1,2 orient=-\n";
    Foam f = parse_foam(text);
    CHECK(f.theory == gl(3));
    CHECK(f.facets.size() == 3);
    CHECK(f.facet(2).labels.size() == 2);
    CHECK(f.facet(2).labels[1] == elementary_symmetric(2, 2));
    CHECK_FALSE(f.seams.at(0).orient);
    CHECK(validate(f).ok());
    std::string once = serialize_foam(f);
    CHECK(serialize_foam(parse_foam(once)) == once);
    CHECK(parse_foam(once) == f);

    Foam lattice = torus_lattice(2, 3);
    CHECK(parse_foam(serialize_foam(lattice)) == lattice);
}

TEST_CASE("foam parse errors carry positions") {
    CHECK_THROWS_AS(parse_foam("FACET 0 chi_open=2\n"), ParseError);
    CHECK_THROWS_AS(parse_foam("foam\nFACET 0 thickness=1\n"), ParseError);
    CHECK_THROWS_AS(parse_foam("foam\nSEAM 0 kind=circle sides=0,1\n"), ParseError);
    CHECK_THROWS_AS(parse_foam("foam theory=sl4\n"), ParseError);
    try {
        parse_foam("foam\nFACET 0 chi_open=x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 18);
    }
}

TEST_CASE("labels") {
    CHECK(parse_label("y1+y2", 2) == elementary_symmetric(1, 2));
    CHECK(parse_label("e2", 3) == elementary_symmetric(2, 3));
    CHECK(parse_label("h2", 2) == complete_homogeneous(2, 2));
    CHECK(parse_label("(y1+y2)^2-2*y1*y2", 2) == parse_label("y1^2+y2^2", 2));
    CHECK(parse_label("-3", 1) == SymPoly::constant(-3, 1));
    CHECK_THROWS_AS(parse_label("y3", 2), ParseError);
    CHECK_THROWS_AS(parse_label("y1+", 2), ParseError);
    SymPoly p = parse_label("y1^2*y2+y1*y2^2-4", 2);
    CHECK(parse_label(format_label(p), 2) == p);
}

TEST_CASE("validation") {
    CHECK(validate(theta_foam({0, 0, 0})).ok());
    CHECK(validate(torus_with_disks()).ok());
    CHECK(validate(torus_lattice(3, 2)).ok());
    CHECK(validate(k4_suspension(4, 1, 1, 2)).ok());

    Foam bad = parse_foam(
        "foam theory=gl N=4\nFACET 0 thickness=1 chi_open=1\nFACET 1 thickness=1 chi_open=1\n"
        "FACET 2 thickness=3 chi_open=1\nSEAM 0 kind=circle sides=0,1,2\n");
    CHECK(has_problem(validate(bad), "additivity"));

    Foam dangling = parse_foam(
        "foam\nFACET 0 chi_open=1\nFACET 1 chi_open=1\nFACET 2 chi_open=1\n"
        "SEAM 0 kind=interval sides=0,1,2 ends=0,-1\n"
        "VERTEX 0 seams=0:0,0:0,0:0,0:0\n");
    CHECK(has_problem(validate(dangling), "dangling"));

    Foam thick = sphere_foam(0);
    thick.facets[0].thickness = 2;
    CHECK(has_problem(validate(thick), "thickness 1"));

    Foam lattice = torus_with_disks();
    (*lattice.vertices[0].corners)[0] = 2;
    CHECK(has_problem(validate(lattice), "corners"));
    lattice.vertices[0].corners.reset();
    CHECK(validate(lattice).ok());

    Foam unknown = theta_foam({0, 0, 0});
    unknown.seams[0].sides[2] = 7;
    CHECK(has_problem(validate(unknown), "unknown facet"));
}

TEST_CASE("euler characteristics of direct foams") {
    CHECK(euler_characteristic(sphere_foam(0)) == 2);
    CHECK(euler_characteristic(theta_foam({0, 0, 0})) == 3);
    // torus with two disks: T^2 plus two 2-cells
    CHECK(euler_characteristic(torus_with_disks()) == 2);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(euler_characteristic(torus_lattice(n, m)) == n + m);
    // suspension of a graph with 4 vertices and 6 edges: 2 - (4 - 6)
    CHECK(euler_characteristic(k4_suspension(3, 1, 1, 1)) == 4);
    CHECK(boundary_circle_count(theta_foam({0, 0, 0}), 1) == 1);
}

TEST_CASE("movie compilation examples") {
    Foam sphere = movie_to_foam(movie_of("movie\nSLICE empty\nbirth\ndeath 0\n"));
    CHECK(sphere.closed);
    REQUIRE(sphere.facets.size() == 1);
    CHECK(sphere.facet(0).euler_open == 2);
    CHECK(sphere.seams.empty());
    CHECK(*sphere.cell_euler == 2);

    Foam merged = movie_to_foam(movie_of("movie\nSLICE empty\nbirth\nbirth\nsaddle 0:0 1:0\ndeath 2\n"));
    REQUIRE(merged.facets.size() == 1);
    CHECK(merged.facet(0).euler_open == 2);
    CHECK(*merged.cell_euler == 2);

    Foam theta = movie_to_foam(movie_of("movie\nSLICE empty\nbirth\nzip 0\nunzip 2:0\ndeath 4\n"));
    CHECK(theta.facets.size() == 3);
    for (const auto& [id, x] : theta.facets) CHECK(x.euler_open == 1);
    REQUIRE(theta.seams.size() == 1);
    CHECK(theta.seams.at(0).circle);
    CHECK(euler_characteristic(theta) == 3);
    CHECK(*theta.cell_euler == 3);
    CHECK(validate(theta).ok());
}

TEST_CASE("movie errors name the event") {
    try {
        parse_movie("movie\nSLICE empty\nbirth\ndeath 5\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("event 1") != std::string::npos);
    }
    Movie m = cup_movie(0);
    WebRewrite bogus = make_death(m.top(), 0);
    bogus.rm_circles[0].id = 9;
    m.events.push_back(rewrite_event(bogus));
    try {
        movie_to_foam(m);
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("event 1") != std::string::npos);
    }
    Movie g = cup_movie(0, gl(3));
    g.events.push_back(rewrite_event(make_zip(g.top(), 0)));
    CHECK_THROWS_AS(movie_to_foam(g), DomainError);
}

TEST_CASE("reflection") {
    Movie cup = cup_movie(0);
    Movie cap = reflect(cup);
    CHECK(cap.bottom == circle_web());
    REQUIRE(cap.events.size() == 1);
    CHECK(cap.events[0].rewrite.kind == RewriteKind::Death);
    CHECK(cap.top().empty());

    Movie dotted = reflect(cup_movie(1));
    REQUIRE(dotted.events.size() == 2);
    CHECK(dotted.events[0].kind == MovieEvent::Kind::Dot);
    CHECK(dotted.events[0].count == 1);

    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Movie m = random_closed_movie(rng, i % 2 ? sl3o() : sl3u(), 8, 2);
        m.events.resize(m.events.size() / 2);
        Movie r = reflect(m);
        CHECK(r.top() == m.bottom);
        CHECK(reflect(r) == m);
    }
}

TEST_CASE("gluing") {
    Foam s = glue(cup_movie(0), cup_movie(0));
    CHECK(s.facets.size() == 1);
    CHECK(s.facet(0).euler_open == 2);
    CHECK(s.facet(0).dots == 0);
    Foam d = glue(cup_movie(1), cup_movie(1));
    CHECK(d.facet(0).dots == 2);

    Foam t = glue(theta_cup_movie({0, 0, 0}), theta_cup_movie({2, 1, 0}));
    CHECK(t.facets.size() == 3);
    CHECK(t.seams.size() == 1);
    CHECK(t.vertices.empty());
    CHECK(euler_characteristic(t) == 3);
    CHECK(t.total_dots() == 3);

    try {
        glue(cup_movie(0), theta_cup_movie({0, 0, 0}));
        FAIL("expected a mismatch");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("edge") != std::string::npos);
    }
}

TEST_CASE("dots") {
    Foam s = add_dot(sphere_foam(0), 0, 2);
    CHECK(s.facet(0).dots == 2);
    CHECK_THROWS_AS(add_dot(sphere_foam(0), 3, 1), DomainError);
    Foam g = gl_theta_foam(3, 1, 1);
    Foam l = add_dot(g, 2, parse_label("e1", 2));
    CHECK(l.facet(2).labels.at(0).to_string("y") == "y1 + y2");
    CHECK_THROWS_AS(add_dot(g, 0, parse_label("e1", 2)), DomainError);
    Movie m = add_dot(cup_movie(0), 0, 3);
    CHECK(movie_to_foam(glue_movies(m, cup_movie(0))).total_dots() == 3);
}

TEST_CASE("movie files round-trip") {
    Movie m = movie_of(
        "movie theory=sl3u\nSLICE inline\nweb\ncircle 0\nEND\nzip 0\ndot 1 2\nexpand 0\nid\ncollapse 4:0\n");
    std::string once = serialize_movie(m);
    Movie again = parse_movie(once);
    CHECK(again == m);
    CHECK(serialize_movie(again) == once);
    Movie g = movie_of("movie theory=gl N=3\nSLICE empty\nbirth 2\ndot 0 label=e1^2-e2\n");
    CHECK(g.theory == gl(3));
    CHECK(parse_movie(serialize_movie(g)) == g);
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        Movie r = random_closed_movie(rng, sl3u(), 10, 2);
        CHECK(parse_movie(serialize_movie(r)) == r);
    }
}

TEST_CASE("property: compiled movies validate and count cells") {
    Rng rng(11);
    int with_vertices = 0;
    for (int i = 0; i < 60; ++i) {
        TheoryTag t = i % 3 == 2 ? sl3o() : sl3u();
        Movie m = random_closed_movie(rng, t, 10, 2);
        Foam f = movie_to_foam(m);
        INFO(serialize_movie(m));
        CHECK(f.closed);
        ValidationReport rep = validate(f);
        CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.problems.front()));
        CHECK(euler_characteristic(f) == *f.cell_euler);
        with_vertices += !f.vertices.empty();
        Foam r = movie_to_foam(reflect(m));
        CHECK(euler_characteristic(r) == euler_characteristic(f));
        CHECK(r.facets.size() == f.facets.size());
    }
    CHECK(with_vertices > 0);
}

TEST_CASE("property: identity steps do not change the foam") {
    Rng rng(12);
    for (int i = 0; i < 15; ++i) {
        Movie m = random_closed_movie(rng, sl3u(), 8, 1);
        Movie padded = m;
        std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.events.size())));
        padded.events.insert(padded.events.begin() + static_cast<long>(at), MovieEvent{});
        CHECK(movie_to_foam(padded) == movie_to_foam(m));
    }
}

TEST_CASE("connected components") {
    Foam u = disjoint_union(disjoint_union(theta_foam({1, 0, 0}), sphere_foam(2)), torus_with_disks());
    auto parts = connected_components(u);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].facets.size() == 3);
    CHECK(parts[1].facets.size() == 1);
    CHECK(parts[2].vertices.size() == 1);
    int chi = 0;
    for (const auto& p : parts) {
        CHECK(validate(p).ok());
        chi += euler_characteristic(p);
    }
    CHECK(chi == euler_characteristic(u));
}
