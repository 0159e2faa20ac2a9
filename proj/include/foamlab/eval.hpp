#pragma once
/// \file eval.hpp
/// Closed foam evaluation: unoriented SL(3) over GF(2), GL(N) over the
/// integers, oriented SL(3) scalars, and foam degrees.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "foamlab/coloring.hpp"
#include "foamlab/foam.hpp"

namespace foamlab {

/// sign * numerator / prod_{i<j} (x_i -+ x_j)^{denominator[(i,j)]}; colors
/// are 1-based. Exponents may be negative.
struct ColoringTerm {
    SymPoly numerator;
    std::map<std::pair<int, int>, int> denominator;
    int sign = 1;
};

/// A sum of terms over a common denominator.
struct Fraction {
    SymPoly numerator;
    std::map<std::pair<int, int>, int> denominator;
};

ColoringTerm eval_sl3_term(const Foam& f, const Sl3Coloring& c);
ColoringTerm eval_gln_term(const Foam& f, const GlColoring& c, int N);

/// Sums terms over prod (x_i - x_j)^{M_ij} (x_i + x_j over GF(2)) with M_ij
/// the largest exponent clamped at 0, then cancels every factor that
/// divides the numerator.
Fraction sum_terms(const std::vector<ColoringTerm>& terms, int nvars, Coeffs k);
/// (x_i - x_j) over the integers, (x_i + x_j) over GF(2); colors 1-based.
SymPoly pair_factor(int i, int j, int nvars, Coeffs k);

/// With \p split set, connected components are evaluated separately and
/// multiplied; otherwise the coloring sum runs over the whole foam.
SymPoly eval_sl3_unoriented(const Foam& f, bool split = true);
/// N defaults to the foam's theory tag.
SymPoly eval_gln(const Foam& f, int N = 0, bool split = true);
std::int64_t eval_oriented_sl3(const Foam& f);
/// f0 applied to the unoriented evaluation.
int eval0(const Foam& f);

/// Degree from any coloring: internal label degree (2 per dot) minus the
/// sum of bicolored Euler characteristics. Checked across all colorings;
/// empty when the foam has no colorings.
std::optional<int> foam_degree(const Foam& f);
/// 2 d - 2 chi(F) - chi(s(F)), which needs no coloring (SL(3) foams).
int topological_degree(const Foam& f);

}  // namespace foamlab
