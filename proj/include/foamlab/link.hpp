#pragma once
/// \file link.hpp
/// Oriented link diagrams as PD codes and their SL(3) invariant.

#include <array>
#include <string>
#include <vector>

#include "foamlab/algebra.hpp"
#include "foamlab/web.hpp"

namespace foamlab {

/// X[a,b,c,d] lists arc labels counterclockwise starting at the incoming
/// under-strand, so c is the outgoing under-strand. For a positive crossing
/// the over-strand runs d -> b, for a negative one b -> d.
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 1;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;  ///< crossingless unknotted components, written "O"
};

/// Accepts items such as "X[1,4,2,3]+" or "O", separated by commas or spaces.
LinkDiagram parse_pd(const std::string& text);
std::string format_pd(const LinkDiagram& d);
/// Checks that every arc occurs once as an incoming and once as an outgoing end.
void validate_pd(const LinkDiagram& d);

/// Coefficients of the crossing expansion
///   <X> = smooth * q^{smooth_exp} + h_coeff * q^{h_exp} * <H web>
/// for positive crossings; negative crossings use the negated exponents.
struct SkeinConstants {
    int smooth_exp;
    int h_exp;
    std::int64_t h_coeff;
};
const SkeinConstants& skein_constants();

/// Closed oriented web obtained by resolving crossing i as the oriented
/// smoothing (choice 0) or the H web (choice 1).
Web resolution_web(const LinkDiagram& d, const std::vector<int>& choice);
LaurentQ link_invariant(const LinkDiagram& d);

/// Mirror image: every crossing changes sign, labels are rotated so that the
/// first entry stays the incoming under-strand.
LinkDiagram mirror(const LinkDiagram& d);
/// Closure of a braid word on \p strands strands; letter +i / -i is the
/// generator sigma_i or its inverse (1-based).
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace foamlab
