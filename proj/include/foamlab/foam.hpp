#pragma once
/// \file foam.hpp
/// Closed foams as abstract 2-complexes (facets with Euler data, seams,
/// vertices, dots), movies of web rewrites, and their compilation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "foamlab/algebra.hpp"
#include "foamlab/web.hpp"

namespace foamlab {

enum class Theory { Sl3Unoriented, Sl3Oriented, GlN };

struct TheoryTag {
    Theory kind = Theory::Sl3Unoriented;
    int N = 3;  ///< only meaningful for GlN
    bool operator==(const TheoryTag& o) const { return kind == o.kind && (kind != Theory::GlN || N == o.N); }
};

std::string theory_name(const TheoryTag& t);

struct Facet {
    int id = -1;
    int thickness = 1;
    int euler_open = 0;
    int dots = 0;                 ///< plain dot count (x^dots); GL thickness-1 facets may use it too
    std::vector<SymPoly> labels;  ///< GL dot labels, symmetric in \c thickness variables
    bool operator==(const Facet& o) const;
};

struct Seam {
    int id = -1;
    bool circle = true;
    std::array<int, 3> sides{-1, -1, -1};  ///< (thin1, thin2, thick)
    std::array<int, 2> ends{-1, -1};       ///< vertex ids for interval seams
    bool orient = true;  ///< true: counterclockwise order along the seam is sides[0], sides[1], sides[2]
    bool operator==(const Seam& o) const {
        return id == o.id && circle == o.circle && sides == o.sides && ends == o.ends && orient == o.orient;
    }
};

struct SeamEnd {
    int seam = -1;
    int end = 0;
    bool operator==(const SeamEnd& o) const { return seam == o.seam && end == o.end; }
};

/// Corner pairs, in order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
inline constexpr std::array<std::array<int, 2>, 6> kCornerPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct FoamVertex {
    int id = -1;
    std::array<SeamEnd, 4> ends{};
    std::optional<std::array<int, 6>> corners;  ///< facet at each corner pair
    bool operator==(const FoamVertex& o) const { return id == o.id && ends == o.ends && corners == o.corners; }
};

struct Foam {
    TheoryTag theory;
    std::map<int, Facet> facets;
    std::map<int, Seam> seams;
    std::map<int, FoamVertex> vertices;
    bool closed = true;
    /// Alternating count of the full cellulation, set by movie compilation.
    std::optional<int> cell_euler;

    const Facet& facet(int id) const;
    int total_dots() const;
    bool operator==(const Foam& o) const;
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

ValidationReport validate(const Foam& f);
/// Sum of open-facet Euler characteristics, -1 per interval seam, +1 per vertex.
int euler_characteristic(const Foam& f);
/// Number of sides a facet occupies along all seams.
int boundary_circle_count(const Foam& f, int facet);

Foam parse_foam(const std::string& text);
std::string serialize_foam(const Foam& f);
Foam load_foam(const std::string& path);

/// Parses a dot label: integer combination of products of y1..ya and e1..ea.
SymPoly parse_label(const std::string& text, int arity);
std::string format_label(const SymPoly& p);

Foam add_dot(const Foam& f, int facet, int count);
Foam add_dot(const Foam& f, int facet, const SymPoly& label);
/// Facet, seam and vertex ids of \p b are shifted past those of \p a.
Foam disjoint_union(const Foam& a, const Foam& b);
/// Pieces joined by seams, keeping the original ids; cell_euler is dropped.
std::vector<Foam> connected_components(const Foam& f);

// ------------------------------------------------------------ movies

struct MovieEvent {
    enum class Kind { Rewrite, Dot, Identity };
    Kind kind = Kind::Identity;
    WebRewrite rewrite;
    int strand = -1;              ///< Dot: edge or circle id
    int count = 0;                ///< Dot: plain dots
    std::optional<SymPoly> label; ///< Dot: GL label
    bool operator==(const MovieEvent& o) const;
};

/// A foam with boundary, given as a bottom web and a sequence of events.
struct Movie {
    TheoryTag theory;
    Web bottom;
    std::vector<MovieEvent> events;

    Web top() const;
    bool operator==(const Movie& o) const;
};

MovieEvent rewrite_event(const WebRewrite& r);
MovieEvent dot_event(int strand, int count);
MovieEvent label_event(int strand, const SymPoly& label);

/// \p base_dir resolves relative SLICE paths.
Movie parse_movie(const std::string& text, const std::string& base_dir = ".");
std::string serialize_movie(const Movie& m);
Movie load_movie(const std::string& path);

/// Compiles a movie into a cellulated foam. Errors name the event index.
Foam movie_to_foam(const Movie& m);
Movie reflect(const Movie& m);
/// Movie of \p f2 followed by the reflection of \p f1; both must end in the
/// same web.
Movie glue_movies(const Movie& f1, const Movie& f2);
Foam glue(const Movie& f1, const Movie& f2);
/// Dot on the facet of \p strand in the final slice.
Movie add_dot(const Movie& m, int strand, int count);

/// First difference between two webs, or empty when equal.
std::string web_difference(const Web& a, const Web& b);

}  // namespace foamlab
