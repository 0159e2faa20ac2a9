#include "foamlab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "foamlab/errors.hpp"

namespace foamlab {

namespace detail {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow");
    return r;
}

}  // namespace detail

using detail::add_checked;
using detail::mul_checked;

namespace {

int exp_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::int64_t normalize(std::int64_t c, Coeffs k) {
    if (k == Coeffs::Mod2) return (c % 2 != 0) ? 1 : 0;
    return c;
}

void require_same_ring(const SymPoly& a, const SymPoly& b) {
    if (a.nvars() != b.nvars()) throw DomainError("variable count mismatch");
    if (a.coeffs() != b.coeffs()) throw DomainError("coefficient domain mismatch");
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = exp_sum(a), db = exp_sum(b);
    if (da != db) return da < db;
    return a < b;
}

SymPoly::SymPoly(int nvars, Coeffs k) : n_(nvars), k_(k) {
    if (nvars < 0) throw DomainError("negative variable count");
}

SymPoly SymPoly::constant(std::int64_t c, int nvars, Coeffs k) {
    SymPoly p(nvars, k);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

SymPoly SymPoly::variable(int i, int nvars, Coeffs k) {
    if (i < 0 || i >= nvars) throw DomainError("index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e, 1, k);
}

SymPoly SymPoly::monomial(const Exponents& e, std::int64_t c, Coeffs k) {
    SymPoly p(static_cast<int>(e.size()), k);
    p.add_term(e, c);
    return p;
}

std::int64_t SymPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void SymPoly::add_term(const Exponents& e, std::int64_t c) {
    if (static_cast<int>(e.size()) != n_) throw DomainError("exponent vector length mismatch");
    for (int x : e)
        if (x < 0) throw DomainError("negative exponent");
    c = normalize(c, k_);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    std::int64_t s = k_ == Coeffs::Mod2 ? (it->second + c) % 2 : add_checked(it->second, c);
    if (s == 0)
        terms_.erase(it);
    else
        it->second = s;
}

int SymPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return exp_sum(terms_.rbegin()->first);
}

bool SymPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return exp_sum(terms_.begin()->first) == exp_sum(terms_.rbegin()->first);
}

static int weighted_sum(const Exponents& e, bool weighted) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += 2 * e[i] * (weighted ? static_cast<int>(i) + 1 : 1);
    return d;
}

int SymPoly::internal_degree(bool weighted) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, weighted_sum(e, weighted));
    return best;
}

bool SymPoly::is_homogeneous_internal(bool weighted) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int w = weighted_sum(e, weighted);
        if (d >= 0 && w != d) return false;
        d = w;
    }
    return true;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    require_same_ring(a, b);
    SymPoly r(a.n_, a.k_);
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, a.k_ == Coeffs::Mod2 ? 1 : mul_checked(ca, cb));
        }
    return r;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) { return *this = *this * o; }

SymPoly SymPoly::operator-() const { return scaled(-1); }

bool SymPoly::operator==(const SymPoly& o) const {
    return n_ == o.n_ && k_ == o.k_ && terms_ == o.terms_;
}

SymPoly SymPoly::pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    SymPoly r = constant(1, n_, k_), base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

SymPoly SymPoly::scaled(std::int64_t c) const {
    SymPoly r(n_, k_);
    for (const auto& [e, v] : terms_) r.add_term(e, k_ == Coeffs::Mod2 ? v * (c % 2) : mul_checked(v, c));
    return r;
}

SymPoly SymPoly::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation length mismatch");
    SymPoly r(n_, k_);
    Exponents f(n_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < n_; ++i) f[perm[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

SymPoly SymPoly::substitute(const std::vector<SymPoly>& values) const {
    if (static_cast<int>(values.size()) != n_) throw DomainError("substitution length mismatch");
    if (values.empty()) {
        throw DomainError("substitution into a polynomial without variables needs a target ring");
    }
    const SymPoly& ref = values.front();
    for (const auto& v : values) require_same_ring(ref, v);
    SymPoly r(ref.nvars(), ref.coeffs());
    // cache powers per variable
    std::vector<std::vector<SymPoly>> powers(n_);
    for (const auto& [e, c] : terms_) {
        SymPoly t = SymPoly::constant(c, ref.nvars(), ref.coeffs());
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(SymPoly::constant(1, ref.nvars(), ref.coeffs()));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * values[i]);
            t *= pw[e[i]];
        }
        r += t;
    }
    return r;
}

SymPoly SymPoly::with_coeffs(Coeffs k) const {
    SymPoly r(n_, k);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

std::string SymPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::int64_t a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (constant_term) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        bool need_star = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << var << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

SymPoly elementary_symmetric(int k, int n, Coeffs c) {
    if (k < 0 || k > n) throw DomainError("index out of range");
    SymPoly r(n, c);
    std::vector<int> sel(n, 0);
    std::fill(sel.end() - k, sel.end(), 1);
    do {
        r.add_term(Exponents(sel.begin(), sel.end()), 1);
    } while (std::next_permutation(sel.begin(), sel.end()));
    return r;
}

static void compositions(int k, int n, int pos, Exponents& cur, SymPoly& out) {
    if (pos == n - 1) {
        cur[pos] = k;
        out.add_term(cur, 1);
        return;
    }
    for (int a = k; a >= 0; --a) {
        cur[pos] = a;
        compositions(k - a, n, pos + 1, cur, out);
    }
}

SymPoly complete_homogeneous(int k, int n, Coeffs c) {
    if (k < 0) return SymPoly(n, c);
    SymPoly r(n, c);
    if (n == 0) {
        if (k == 0) r.add_term({}, 1);
        return r;
    }
    Exponents cur(n, 0);
    compositions(k, n, 0, cur, r);
    return r;
}

SymPoly vandermonde(int n, Coeffs c) {
    SymPoly r = SymPoly::constant(1, n, c);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r *= SymPoly::variable(i, n, c) - SymPoly::variable(j, n, c);
    return r;
}

static void check_partition(const Partition& lambda, int n) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw DomainError("partition has a negative part");
        if (i > 0 && lambda[i] > lambda[i - 1]) throw DomainError("partition not weakly decreasing");
    }
    int parts = 0;
    for (int x : lambda)
        if (x > 0) ++parts;
    if (parts > n) throw DomainError("partition has more than n parts");
}

SymPoly alternant(const Partition& lambda, int n, Coeffs c) {
    check_partition(lambda, n);
    std::vector<int> shifted(n, 0);
    for (int j = 0; j < n; ++j) shifted[j] = (j < static_cast<int>(lambda.size()) ? lambda[j] : 0) + n - 1 - j;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SymPoly r(n, c);
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        // row i uses column perm[i]: x_i^{shifted[perm[i]]}
        Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = shifted[perm[i]];
        r.add_term(e, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

SymPoly schur(const Partition& lambda, int n, Coeffs c) {
    SymPoly num = alternant(lambda, n, Coeffs::Integer);
    SymPoly s = exact_divide(num, vandermonde(n, Coeffs::Integer));
    return s.with_coeffs(c);
}

SymPoly exact_divide(const SymPoly& p, const SymPoly& q) {
    require_same_ring(p, q);
    if (q.is_zero()) throw DomainError("division by zero polynomial");
    const int n = p.nvars();
    const Coeffs k = p.coeffs();
    SymPoly quotient(n, k);
    SymPoly rem = p;
    const auto& [qe, qc] = *q.terms().rbegin();
    Exponents te(n);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        for (int i = 0; i < n; ++i) {
            te[i] = re[i] - qe[i];
            if (te[i] < 0) throw DomainError("inexact division");
        }
        std::int64_t tc = rc;
        if (k == Coeffs::Integer) {
            if (rc % qc != 0) throw DomainError("inexact division");
            tc = rc / qc;
        }
        quotient.add_term(te, tc);
        Exponents e(n);
        for (const auto& [fe, fc] : q.terms()) {
            for (int i = 0; i < n; ++i) e[i] = fe[i] + te[i];
            rem.add_term(e, k == Coeffs::Mod2 ? 1 : -mul_checked(fc, tc));
        }
    }
    return quotient;
}

bool is_symmetric(const SymPoly& p) {
    const int n = p.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[i + 1]);
        if (p.permuted(perm) != p) return false;
    }
    return true;
}

SymPoly reduce_mod2(const SymPoly& p) { return p.with_coeffs(Coeffs::Mod2); }

std::int64_t apply_f0(const SymPoly& p) {
    if (!is_symmetric(p)) throw DomainError("apply_f0: polynomial is not symmetric");
    return p.coeff(Exponents(p.nvars(), 0));
}

// ---------------------------------------------------------------- LaurentQ

LaurentQ LaurentQ::monomial(int e, std::int64_t c) {
    LaurentQ r;
    r.add_term(e, c);
    return r;
}

std::int64_t LaurentQ::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentQ::add_term(int e, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = add_checked(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

int LaurentQ::min_exp() const {
    if (terms_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentQ::max_exp() const {
    if (terms_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, mul_checked(ca, cb));
    return r;
}

LaurentQ LaurentQ::pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    LaurentQ r = constant(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

LaurentQ LaurentQ::mirror() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.add_term(-e, c);
    return r;
}

std::int64_t LaurentQ::at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = add_checked(s, c);
    return s;
}

bool LaurentQ::has_nonnegative_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string LaurentQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        std::int64_t a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentQ quantum_integer(int n) {
    if (n < 0) throw DomainError("quantum_integer: negative argument");
    LaurentQ r;
    for (int e = n - 1; e >= -(n - 1); e -= 2) r.add_term(e, 1);
    return r;
}

LaurentQ exact_divide(const LaurentQ& p, const LaurentQ& q) {
    if (q.is_zero()) throw DomainError("division by zero Laurent polynomial");
    LaurentQ quot, rem = p;
    const int qe = q.max_exp();
    const std::int64_t qc = q.coeff(qe);
    // Long division from the top; the remainder must vanish once its
    // span drops below that of q.
    while (!rem.is_zero()) {
        int re = rem.max_exp();
        std::int64_t rc = rem.coeff(re);
        if (rem.max_exp() - rem.min_exp() < q.max_exp() - q.min_exp() || rc % qc != 0)
            throw DomainError("inexact division");
        LaurentQ t = LaurentQ::monomial(re - qe, rc / qc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

LaurentQ quantum_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("quantum_binomial: need 0 <= k <= n");
    LaurentQ num = LaurentQ::constant(1), den = LaurentQ::constant(1);
    for (int i = 1; i <= k; ++i) {
        num *= quantum_integer(n - i + 1);
        den *= quantum_integer(i);
    }
    return exact_divide(num, den);
}

}  // namespace foamlab
