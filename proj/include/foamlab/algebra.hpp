#pragma once
/// \file algebra.hpp
/// Exact polynomial arithmetic: sparse multivariate polynomials over the
/// integers or GF(2), symmetric-function constructors and Laurent
/// polynomials in q.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace foamlab {

enum class Coeffs { Integer, Mod2 };

using Exponents = std::vector<int>;
using Partition = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
/// Ascending, so the leading term of a polynomial is its last entry.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial in x_1..x_n with no stored zero coefficients.
/// Over GF(2) every stored coefficient is 1.
class SymPoly {
public:
    using TermMap = std::map<Exponents, std::int64_t, GradedLexLess>;

    SymPoly() = default;
    explicit SymPoly(int nvars, Coeffs k = Coeffs::Integer);

    static SymPoly constant(std::int64_t c, int nvars, Coeffs k = Coeffs::Integer);
    /// x_{i+1}; i is 0-based.
    static SymPoly variable(int i, int nvars, Coeffs k = Coeffs::Integer);
    static SymPoly monomial(const Exponents& e, std::int64_t c = 1, Coeffs k = Coeffs::Integer);

    int nvars() const { return n_; }
    Coeffs coeffs() const { return k_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::int64_t coeff(const Exponents& e) const;
    void add_term(const Exponents& e, std::int64_t c);

    /// Largest exponent sum, or -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    /// Degree under the internal grading deg x_i = 2 (or deg = 2k for the
    /// k-th variable when \p weighted is set, used for e_1..e_a labels).
    int internal_degree(bool weighted = false) const;
    bool is_homogeneous_internal(bool weighted) const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly operator-() const;
    bool operator==(const SymPoly& o) const;
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    SymPoly pow(int k) const;
    SymPoly scaled(std::int64_t c) const;
    /// Relabel: variable i becomes variable perm[i].
    SymPoly permuted(const std::vector<int>& perm) const;
    /// Substitute x_i -> values[i]; all values share a ring.
    SymPoly substitute(const std::vector<SymPoly>& values) const;
    /// Same polynomial with a different coefficient domain (integers are reduced).
    SymPoly with_coeffs(Coeffs k) const;

    std::string to_string(const std::string& var = "x") const;

private:
    int n_ = 0;
    Coeffs k_ = Coeffs::Integer;
    TermMap terms_;
};

SymPoly elementary_symmetric(int k, int n, Coeffs c = Coeffs::Integer);
SymPoly complete_homogeneous(int k, int n, Coeffs c = Coeffs::Integer);
/// prod_{i<j} (x_i - x_j)
SymPoly vandermonde(int n, Coeffs c = Coeffs::Integer);
/// det(x_i^{lambda_j + n - j}), the bialternant numerator.
SymPoly alternant(const Partition& lambda, int n, Coeffs c = Coeffs::Integer);
SymPoly schur(const Partition& lambda, int n, Coeffs c = Coeffs::Integer);
SymPoly exact_divide(const SymPoly& p, const SymPoly& q);
bool is_symmetric(const SymPoly& p);
SymPoly reduce_mod2(const SymPoly& p);
std::int64_t apply_f0(const SymPoly& p);

/// Laurent polynomial in q with integer coefficients.
class LaurentQ {
public:
    LaurentQ() = default;
    static LaurentQ monomial(int e, std::int64_t c = 1);
    static LaurentQ constant(std::int64_t c) { return monomial(0, c); }

    const std::map<int, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int e) const;
    void add_term(int e, std::int64_t c);
    int min_exp() const;
    int max_exp() const;

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
    bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentQ& o) const { return terms_ != o.terms_; }

    LaurentQ pow(int k) const;
    LaurentQ mirror() const;
    std::int64_t at_one() const;
    bool is_palindromic() const { return mirror() == *this; }
    bool has_nonnegative_coeffs() const;
    std::string to_string() const;

private:
    std::map<int, std::int64_t> terms_;
};

LaurentQ quantum_integer(int n);
LaurentQ quantum_binomial(int n, int k);
LaurentQ exact_divide(const LaurentQ& p, const LaurentQ& q);

namespace detail {
std::int64_t add_checked(std::int64_t a, std::int64_t b);
std::int64_t mul_checked(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace foamlab
