#pragma once
/// \file linalg.hpp
/// Small dense exact linear algebra for Gram matrices.

#include <cstdint>
#include <vector>

namespace foamlab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over the two-element field (entries read mod 2).
int rank_mod2(const IntMatrix& m);
/// Rank over GF(p) for a prime p < 2^62.
int rank_mod_p(const IntMatrix& m, std::int64_t p);
/// Nonzero invariant factors (positive, each dividing the next).
/// Throws DomainError on int64 overflow.
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);

}  // namespace foamlab
