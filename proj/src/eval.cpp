#include "foamlab/eval.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "foamlab/errors.hpp"
#include "foamlab/parallel.hpp"

namespace foamlab {

SymPoly pair_factor(int i, int j, int nvars, Coeffs k) {
    SymPoly a = SymPoly::variable(i - 1, nvars, k), b = SymPoly::variable(j - 1, nvars, k);
    return k == Coeffs::Mod2 ? a + b : a - b;
}

ColoringTerm eval_sl3_term(const Foam& f, const Sl3Coloring& c) {
    ColoringTerm t;
    Exponents e(3, 0);
    for (const auto& [id, x] : f.facets) e[c.at(id) - 1] += x.dots;
    t.numerator = SymPoly::monomial(e, 1, Coeffs::Mod2);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            int chi = bicolored_surface(f, c, i, j).euler;
            t.denominator[{i, j}] = chi / 2;
        }
    return t;
}

namespace {

// y_k -> x_{color k} for the sorted colors of a facet
SymPoly relabel(const SymPoly& label, std::uint32_t colors, int N) {
    std::vector<SymPoly> values;
    for (int k = 0; k < N; ++k)
        if (colors & (1u << k)) values.push_back(SymPoly::variable(k, N));
    if (static_cast<int>(values.size()) != label.nvars())
        throw DomainError("label arity differs from the facet thickness");
    return label.substitute(values);
}

}  // namespace

ColoringTerm eval_gln_term(const Foam& f, const GlColoring& c, int N) {
    ColoringTerm t;
    SymPoly num = SymPoly::constant(1, N);
    for (const auto& [id, x] : f.facets) {
        std::uint32_t col = c.at(id);
        if (x.dots > 0) {
            if (x.thickness != 1) throw DomainError("plain dots need a thickness-1 facet");
            num *= SymPoly::variable(std::countr_zero(col), N).pow(x.dots);
        }
        for (const auto& l : x.labels) num *= relabel(l, col, N);
    }
    t.numerator = num;
    long s = 0;
    for (int j = 1; j <= N; ++j) s += static_cast<long>(j) * (unicolored_surface(f, c, j).euler / 2);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            t.denominator[{i, j}] = bicolored_surface(f, c, i, j).euler / 2;
            s += positive_circle_count(f, c, i, j);
        }
    t.sign = s % 2 == 0 ? 1 : -1;
    return t;
}

Fraction sum_terms(const std::vector<ColoringTerm>& terms, int nvars, Coeffs k) {
    Fraction out;
    out.numerator = SymPoly(nvars, k);
    std::map<std::pair<int, int>, int> M;
    for (int i = 1; i <= nvars; ++i)
        for (int j = i + 1; j <= nvars; ++j) M[{i, j}] = 0;
    for (const auto& t : terms)
        for (const auto& [p, e] : t.denominator) M[p] = std::max(M[p], e);
    std::map<std::pair<std::pair<int, int>, int>, SymPoly> powers;
    auto power = [&](std::pair<int, int> p, int e) -> const SymPoly& {
        auto key = std::make_pair(p, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, pair_factor(p.first, p.second, nvars, k).pow(e)).first;
        return it->second;
    };
    for (const auto& t : terms) {
        SymPoly x = k == Coeffs::Mod2 ? t.numerator.with_coeffs(Coeffs::Mod2) : t.numerator;
        for (const auto& [p, m] : M) {
            auto it = t.denominator.find(p);
            int e = it == t.denominator.end() ? 0 : it->second;
            if (m - e > 0) x *= power(p, m - e);
        }
        if (t.sign < 0) x = -x;
        out.numerator += x;
    }
    // cancel factors one at a time
    for (auto& [p, m] : M) {
        while (m > 0 && !out.numerator.is_zero()) {
            try {
                out.numerator = exact_divide(out.numerator, pair_factor(p.first, p.second, nvars, k));
                --m;
            } catch (const DomainError&) {
                break;
            }
        }
        if (out.numerator.is_zero()) m = 0;
    }
    for (const auto& [p, m] : M)
        if (m != 0) out.denominator[p] = m;
    return out;
}

namespace {

SymPoly finish(const Fraction& fr, const char* what) {
    if (!fr.denominator.empty())
        throw DomainError(std::string("foam not admissible: ") + what + " evaluation is not a polynomial");
    if (!is_symmetric(fr.numerator))
        throw DomainError(std::string("foam not admissible: ") + what + " evaluation is not symmetric");
    return fr.numerator;
}

template <class C, class F>
std::vector<ColoringTerm> terms_parallel(const std::vector<C>& cs, F term) {
    std::vector<ColoringTerm> out(cs.size());
    parallel_for(cs.size(), [&](std::size_t i) { out[i] = term(cs[i]); });
    return out;
}

}  // namespace

SymPoly eval_sl3_unoriented(const Foam& f, bool split) {
    if (f.theory.kind == Theory::GlN) throw DomainError("unoriented SL(3) evaluation needs an SL(3) foam");
    for (const auto& [id, x] : f.facets)
        if (x.thickness != 1) throw DomainError("SL(3) facets have thickness 1");
    if (split) {
        auto parts = connected_components(f);
        if (parts.size() > 1) {
            SymPoly p = SymPoly::constant(1, 3, Coeffs::Mod2);
            for (const auto& part : parts) {
                p *= eval_sl3_unoriented(part, false);
                if (p.is_zero()) break;
            }
            return p;
        }
    }
    auto cs = sl3_colorings(f);
    auto terms = terms_parallel(cs, [&](const Sl3Coloring& c) { return eval_sl3_term(f, c); });
    return finish(sum_terms(terms, 3, Coeffs::Mod2), "SL(3)");
}

SymPoly eval_gln(const Foam& f, int N, bool split) {
    if (N == 0) {
        if (f.theory.kind != Theory::GlN) throw DomainError("GL(N) evaluation needs N");
        N = f.theory.N;
    }
    if (N < 1) throw DomainError("N must be positive");
    for (const auto& [id, x] : f.facets)
        for (const auto& l : x.labels)
            if (l.nvars() != x.thickness)
                throw DomainError("facet " + std::to_string(id) + ": label arity differs from the thickness");
    if (split) {
        auto parts = connected_components(f);
        if (parts.size() > 1) {
            SymPoly p = SymPoly::constant(1, N);
            for (const auto& part : parts) {
                p *= eval_gln(part, N, false);
                if (p.is_zero()) break;
            }
            return p;
        }
    }
    auto cs = gln_colorings(f, N);
    auto terms = terms_parallel(cs, [&](const GlColoring& c) { return eval_gln_term(f, c, N); });
    return finish(sum_terms(terms, N, Coeffs::Integer), "GL(N)");
}

int eval0(const Foam& f) { return static_cast<int>(apply_f0(eval_sl3_unoriented(f))); }

// ------------------------------------------------------------ oriented

namespace {

// closed surface of genus g with d dots in the Frobenius algebra Z[x]/(x^3)
std::int64_t surface_value(int genus, int dots) {
    if (genus == 0 && dots == 2) return -1;
    if (genus == 1 && dots == 0) return 3;
    return 0;
}

// theta foam with dots (a, b, c) in counterclockwise seam order
int theta_value(int a, int b, int c) {
    std::array<int, 3> v{a, b, c};
    if (v == std::array<int, 3>{0, 1, 2} || v == std::array<int, 3>{1, 2, 0} || v == std::array<int, 3>{2, 0, 1})
        return 1;
    if (v == std::array<int, 3>{0, 2, 1} || v == std::array<int, 3>{2, 1, 0} || v == std::array<int, 3>{1, 0, 2})
        return -1;
    return 0;
}

}  // namespace

std::int64_t eval_oriented_sl3(const Foam& f) {
    if (!f.vertices.empty()) throw DomainError("oriented evaluator requires vertex-free foam");
    for (const auto& [id, s] : f.seams)
        if (!s.circle) throw DomainError("oriented evaluator requires vertex-free foam");
    for (const auto& [id, x] : f.facets) {
        if (x.thickness != 1) throw DomainError("SL(3) facets have thickness 1");
        if (!x.labels.empty()) throw DomainError("oriented evaluator takes plain dot counts");
    }
    // Cut every facet next to each seam circle it meets: a seam becomes a
    // theta foam with dots a_k on its sides, and each facet is capped off
    // with 2 - a_k dots per cut, with a sign -1 per cut.
    std::map<int, int> genus;
    for (const auto& [id, x] : f.facets) {
        int b = boundary_circle_count(f, id);
        int two_g = 2 - (x.euler_open + b);
        if (two_g < 0 || two_g % 2 != 0)
            throw DomainError("facet " + std::to_string(id) + " is not an orientable surface with boundary");
        genus[id] = two_g / 2;
    }
    std::vector<const Seam*> seams;
    for (const auto& [id, s] : f.seams) seams.push_back(&s);
    std::int64_t total = 0;
    std::map<int, int> extra;
    std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t k, std::int64_t weight) {
        if (weight == 0) return;
        if (k == seams.size()) {
            std::int64_t v = weight;
            for (const auto& [id, x] : f.facets) {
                v *= surface_value(genus[id], x.dots + extra[id]);
                if (v == 0) return;
            }
            total += v;
            return;
        }
        const Seam& s = *seams[k];
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) {
                    int th = s.orient ? theta_value(a, b, c) : theta_value(a, c, b);
                    if (th == 0) continue;
                    extra[s.sides[0]] += 2 - a;
                    extra[s.sides[1]] += 2 - b;
                    extra[s.sides[2]] += 2 - c;
                    go(k + 1, -weight * th);
                    extra[s.sides[0]] -= 2 - a;
                    extra[s.sides[1]] -= 2 - b;
                    extra[s.sides[2]] -= 2 - c;
                }
    };
    go(0, 1);
    return total;
}

// ------------------------------------------------------------ degrees

namespace {

int label_degree(const Foam& f) {
    int d = 0;
    for (const auto& [id, x] : f.facets) {
        d += 2 * x.dots;
        for (const auto& l : x.labels) {
            if (l.is_zero()) continue;
            if (!l.is_homogeneous()) throw DomainError("facet " + std::to_string(id) + ": label is not homogeneous");
            d += l.internal_degree();
        }
    }
    return d;
}

}  // namespace

std::optional<int> foam_degree(const Foam& f) {
    int d = label_degree(f);
    std::optional<int> deg;
    auto record = [&](int value) {
        if (deg && *deg != value) throw DomainError("foam degree depends on the coloring");
        deg = value;
    };
    if (f.theory.kind == Theory::GlN) {
        int N = f.theory.N;
        for_each_gln_coloring(f, N, [&](const GlColoring& c) {
            int s = 0;
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) s += bicolored_surface(f, c, i, j).euler;
            record(d - s);
            return true;
        });
    } else {
        for_each_sl3_coloring(f, [&](const Sl3Coloring& c) {
            int s = 0;
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j) s += bicolored_surface(f, c, i, j).euler;
            record(d - s);
            return true;
        });
    }
    return deg;
}

int topological_degree(const Foam& f) {
    int singular = static_cast<int>(f.vertices.size());
    for (const auto& [id, s] : f.seams) singular -= s.circle ? 0 : 1;
    return label_degree(f) - 2 * euler_characteristic(f) - singular;
}

}  // namespace foamlab
