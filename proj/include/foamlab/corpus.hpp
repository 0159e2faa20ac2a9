#pragma once
/// \file corpus.hpp
/// Seeded generators of webs, link diagrams and foams for property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foamlab/foam.hpp"
#include "foamlab/link.hpp"
#include "foamlab/web.hpp"

namespace foamlab {

using Rng = std::mt19937_64;

/// Deterministic draw in [lo, hi].
int uniform(Rng& rng, int lo, int hi);

Web circle_web();
Web theta_web();
Web k4_web();
Web dodecahedron_web();

/// Inserts a square: zips two edges on a common face and saddles the
/// digon sides facing that face. Returns false when no such pair exists.
bool insert_square(Web& w, Rng& rng);

/// Built from circles by random inverse reductions (digon, triangle and
/// square insertions), so reduce() always succeeds.
Web random_reducible_web(Rng& rng, int max_vertices);
/// Random moves applied to a circle or a dodecahedron, including saddles
/// within a face; may contain bridges, loops or irreducible parts.
Web random_web(Rng& rng, int max_vertices);

std::vector<int> random_braid_word(Rng& rng, int strands, int length);
/// Two diagrams related by one move on braid closures: a cancelling pair
/// (second move), a braid relation (third move), far commutation,
/// conjugation, or a stabilisation (first move).
struct MovePair {
    std::string move;
    LinkDiagram before, after;
};
MovePair random_move_pair(Rng& rng, int max_strands, int max_length);
/// Closure of a random braid with at most \p max_crossings letters.
LinkDiagram random_link(Rng& rng, int max_crossings);

/// A random resolution of a random braid closure with at most
/// \p max_vertices vertices.
Web random_oriented_web(Rng& rng, int max_vertices);
/// Forget edge orientations.
Web unoriented(const Web& w);

// ------------------------------------------------------------ foams

TheoryTag sl3u();
TheoryTag sl3o();
TheoryTag gl(int N);

/// Closed surface of the given genus as a single facet.
Foam surface_foam(int genus, int dots, TheoryTag t = sl3u(), int thickness = 1);
Foam sphere_foam(int dots, TheoryTag t = sl3u(), int thickness = 1);
/// Three disks along one circle seam, with stored side order (0, 1, 2).
Foam theta_foam(const std::array<int, 3>& dots, TheoryTag t = sl3u());
/// GL(N) theta foam with facets of thickness a, b and a+b. Facet k has
/// genus genera[k] and carries labels[k].
Foam gl_theta_foam(int N, int a, int b, const std::array<std::vector<SymPoly>, 3>& labels = {},
                   const std::array<int, 3>& genera = {0, 0, 0}, bool orient = true);
/// Torus with a meridian disk and a longitude disk (one vertex).
Foam torus_with_disks();
/// Torus with n meridian disks and m longitude disks.
Foam torus_lattice(int n, int m);
/// Suspension of the closed associativity web with strands a, b, c:
/// six disk facets, four seams between the two suspension points.
/// \p flip reverses every seam orientation.
Foam k4_suspension(int N, int a, int b, int c, bool flip = false);
/// Oriented foam with two seam circles on a genus-one facet: disks P, R
/// on one circle and T, S on the other, one dot each on P and S.
Foam two_seam_oriented_foam();
/// Adds a bubble to an SL(3) facet: the facet loses a disk, and two
/// hemispheres with the given dots meet it along a new circle seam.
Foam add_bubble(const Foam& f, int facet, int upper_dots, int lower_dots);

/// Movie from the empty web to a circle with dots.
Movie cup_movie(int dots, TheoryTag t = sl3u());
/// Movie from the empty web to the theta web: birth then zip, with dots on
/// the three strands.
Movie theta_cup_movie(const std::array<int, 3>& dots, TheoryTag t = sl3u());

/// Closed SL(3) movie: random moves from the empty web and back, either by
/// the reverse path or through a reduction of the middle slice.
Movie random_closed_movie(Rng& rng, TheoryTag t, int max_vertices, int max_dots, bool allow_vertices = true);
/// Random valid GL(N) foam: surfaces, theta foams, suspensions and their
/// disjoint unions, with symmetric labels.
Foam random_gln_foam(Rng& rng, int max_facets, int max_N, int max_label_degree);
/// Random symmetric homogeneous polynomial in \p arity variables.
SymPoly random_label(Rng& rng, int arity, int degree);
/// Random SL(3) unoriented foam: a compiled closed movie, sometimes with a bubble.
Foam random_sl3_foam(Rng& rng, int max_vertices, int max_dots);

/// Named closed foams used by corpus-wide checks.
std::vector<std::pair<std::string, Foam>> foam_corpus();

}  // namespace foamlab
