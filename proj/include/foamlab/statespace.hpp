#pragma once
/// \file statespace.hpp
/// Universal construction from explicit generator movies: Gram matrices,
/// graded ranks, generators for reducible webs, and the comparison with
/// Tait counts.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "foamlab/foam.hpp"
#include "foamlab/linalg.hpp"
#include "foamlab/web.hpp"

namespace foamlab {

enum class GramTheory {
    F2,          ///< unoriented SL(3) followed by f0
    Z,           ///< oriented SL(3), integer scalars
    GlConstant,  ///< GL(N) evaluation at x = 0
};

std::string gram_theory_name(GramTheory t);
GramTheory gram_theory_from_name(const std::string& s);

struct GramReport {
    GramTheory theory = GramTheory::F2;
    std::vector<int> degrees;
    std::vector<std::string> hashes;  ///< of the serialized generator movies
    IntMatrix matrix;
    /// degree d -> rank of the block of degree-d rows against degree -d columns
    std::map<int, int> ranks;
    /// sum over d of ranks[d] q^{-d}
    LaurentQ graded_dimension;
    /// Z and GlConstant: every invariant factor of every block is 1
    bool free = true;
    /// true unless the generators came from generators_for_reducible
    bool lower_bound = true;
};

/// Checks that every generator runs from the empty web to \p w.
void check_generators(const Web& w, const std::vector<Movie>& gens);
/// Degree of a generator: half the degree of the generator glued to itself.
int generator_degree(const Movie& g);
/// Entry (i, j) evaluates glue(gens[i], gens[j]).
GramReport gram_matrix(const Web& w, const std::vector<Movie>& gens, GramTheory theory);

LaurentQ graded_dimension_f2(const Web& w, const std::vector<Movie>& gens);
/// Graded rank and freeness over the integers (oriented theory).
std::pair<LaurentQ, bool> graded_rank_z(const Web& w, const std::vector<Movie>& gens);

/// Generator movies read off the reduction trace: circles are capped with
/// 0, 1 or 2 dots, digons zipped with 0 or 1 dot, triangles expanded and
/// squares rebuilt from both smoothings. Oriented webs give oriented movies.
std::vector<Movie> generators_for_reducible(const Web& w);

struct InequalityReport {
    std::int64_t dim0 = 0;
    std::int64_t t = 0;
    bool ok = false;     ///< dim0 <= t
    bool equal = false;  ///< dim0 == t, expected for reducible webs
};
InequalityReport check_inequality(const Web& w);

/// Movie of a followed by the movie of b, with b's ids shifted to match
/// disjoint_union(a.top(), b.top()). Both must start from the empty web.
Movie disjoint_union(const Movie& a, const Movie& b);

struct DisjointUnionReport {
    LaurentQ dim1, dim2, dim_union;
    bool ok = false;  ///< dim_union == dim1 * dim2
};
/// Graded dimensions over the two-element field, the union computed from
/// the pairwise product generators.
DisjointUnionReport disjoint_union_check(const Web& a, const Web& b);

/// Cups of thickness a in GL(N) labeled by Schur polynomials of the
/// partitions in the a x (N - a) box.
std::vector<Movie> gl_circle_generators(int N, int a);
/// Graded dimension of the thickness-a circle from its cup Gram matrix.
LaurentQ gl_circle_dimension(int N, int a);
/// Rank of the GL(N) equivariant Gram matrix specialized at random
/// distinct integers, computed mod a large prime.
int generic_rank_gl(const std::vector<Movie>& gens, std::uint64_t seed);

}  // namespace foamlab
