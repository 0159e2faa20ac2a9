#pragma once
/// \file coloring.hpp
/// Tait and GL(N) colorings of closed foams, the surfaces they cut out,
/// singular circles and Kempe moves.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "foamlab/foam.hpp"

namespace foamlab {

/// facet id -> color in {1, 2, 3}
using Sl3Coloring = std::map<int, int>;
/// facet id -> color set as a bitmask (bit k-1 is color k)
using GlColoring = std::map<int, std::uint32_t>;

/// Calls \p sink for every Tait coloring, in lexicographic order of
/// (facet id, color). Return false from the sink to stop early.
void for_each_sl3_coloring(const Foam& f, const std::function<bool(const Sl3Coloring&)>& sink);
std::vector<Sl3Coloring> sl3_colorings(const Foam& f);
std::int64_t count_tait_colorings_foam(const Foam& f);
bool is_tait_coloring(const Foam& f, const Sl3Coloring& c);

void for_each_gln_coloring(const Foam& f, int N, const std::function<bool(const GlColoring&)>& sink);
std::vector<GlColoring> gln_colorings(const Foam& f, int N);
bool is_gln_coloring(const Foam& f, int N, const GlColoring& c);

struct SurfaceSummary {
    int euler = 0;
    std::vector<int> facets;          ///< included facets, ascending
    std::map<int, int> component;     ///< facet -> smallest facet id of its component
    std::map<int, int> component_euler;
    int components() const { return static_cast<int>(component_euler.size()); }
};

/// Surface formed by the closed facets selected by \p included. Throws
/// DomainError when a seam has one or three included sides, or when a
/// component has odd Euler characteristic.
SurfaceSummary surface_of(const Foam& f, const std::function<bool(int)>& included);
SurfaceSummary bicolored_surface(const Foam& f, const Sl3Coloring& c, int i, int j);
SurfaceSummary bicolored_surface(const Foam& f, const GlColoring& c, int i, int j);
SurfaceSummary unicolored_surface(const Foam& f, const GlColoring& c, int i);

/// Number of positive singular circles of the (i, j) bicolored surface.
int positive_circle_count(const Foam& f, const GlColoring& c, int i, int j);

/// Swaps colors i and j on the component of F_ij(c) labeled \p component.
Sl3Coloring kempe_move(const Foam& f, const Sl3Coloring& c, int i, int j, int component);

}  // namespace foamlab
