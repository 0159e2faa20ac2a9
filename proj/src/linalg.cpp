#include "foamlab/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "foamlab/algebra.hpp"
#include "foamlab/errors.hpp"

namespace foamlab {

int rank_mod2(const IntMatrix& m) {
    std::vector<std::vector<std::uint8_t>> a;
    for (const auto& row : m) {
        std::vector<std::uint8_t> r;
        for (auto x : row) r.push_back(static_cast<std::uint8_t>(x & 1));
        a.push_back(std::move(r));
    }
    int rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && !a[piv][c]) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r)
            if (static_cast<int>(r) != rank && a[r][c])
                for (std::size_t k = c; k < cols; ++k) a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
    IntMatrix a = m;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    int rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        std::int64_t inv = powmod(a[rank][c], p - 2, p);
        for (auto& x : a[rank]) x = mulmod(x, inv, p);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (static_cast<int>(r) == rank || a[r][c] == 0) continue;
            std::int64_t f = a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - mulmod(f, a[rank][k], p)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::int64_t> smith_invariants(const IntMatrix& m0) {
    using detail::add_checked;
    using detail::mul_checked;
    IntMatrix a = m0;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::int64_t> out;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the remaining block as pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                std::int64_t q = a[r][t] / a[t][t];
                for (std::size_t c = t; c < cols; ++c) a[r][c] = add_checked(a[r][c], -mul_checked(q, a[t][c]));
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                std::int64_t q = a[t][c] / a[t][t];
                for (std::size_t r = t; r < rows; ++r) a[r][c] = add_checked(a[r][c], -mul_checked(q, a[r][t]));
                if (a[t][c] != 0) {
                    for (auto& row : a) std::swap(row[t], row[c]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // the pivot must divide the rest of the block
            for (std::size_t r = t + 1; r < rows && clean; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] = add_checked(a[t][k], a[r][k]);
                        clean = false;
                        break;
                    }
        }
        out.push_back(std::llabs(a[t][t]));
        ++t;
    }
    return out;
}

}  // namespace foamlab
