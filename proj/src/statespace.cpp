#include "foamlab/statespace.hpp"

#include <cstdio>
#include <functional>
#include <random>

#include "foamlab/errors.hpp"
#include "foamlab/eval.hpp"
#include "foamlab/parallel.hpp"

namespace foamlab {

std::string gram_theory_name(GramTheory t) {
    switch (t) {
        case GramTheory::F2: return "f2";
        case GramTheory::Z: return "z";
        case GramTheory::GlConstant: return "gl";
    }
    return "?";
}

GramTheory gram_theory_from_name(const std::string& s) {
    if (s == "f2") return GramTheory::F2;
    if (s == "z") return GramTheory::Z;
    if (s == "gl") return GramTheory::GlConstant;
    throw DomainError("unknown state-space theory '" + s + "' (expected f2, z or gl)");
}

void check_generators(const Web& w, const std::vector<Movie>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].bottom.empty())
            throw DomainError("generator " + std::to_string(i) + " does not start from the empty web");
        std::string diff = web_difference(gens[i].top(), w);
        if (!diff.empty()) throw DomainError("generator " + std::to_string(i) + " boundary mismatch: " + diff);
    }
}

int generator_degree(const Movie& g) {
    Foam f = glue(g, g);
    int d;
    if (f.theory.kind == Theory::GlN) {
        auto fd = foam_degree(f);
        if (!fd) throw DomainError("generator pairs with itself through a foam without colorings");
        d = *fd;
    } else {
        d = topological_degree(f);
    }
    if (d % 2 != 0) throw DomainError("generator glued to itself has odd degree");
    return d / 2;
}

namespace {

std::string movie_hash(const Movie& m) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(serialize_movie(m)));
    return buf;
}

std::int64_t pairing(const Foam& f, GramTheory theory) {
    switch (theory) {
        case GramTheory::F2: return eval0(f);
        case GramTheory::Z: return eval_oriented_sl3(f);
        case GramTheory::GlConstant: {
            SymPoly p = eval_gln(f);
            return p.coeff(Exponents(p.nvars(), 0));
        }
    }
    return 0;
}

}  // namespace

GramReport gram_matrix(const Web& w, const std::vector<Movie>& gens, GramTheory theory) {
    check_generators(w, gens);
    GramReport r;
    r.theory = theory;
    std::size_t n = gens.size();
    r.degrees.resize(n);
    parallel_for(n, [&](std::size_t i) { r.degrees[i] = generator_degree(gens[i]); });
    for (const auto& g : gens) r.hashes.push_back(movie_hash(g));
    r.matrix.assign(n, std::vector<std::int64_t>(n, 0));
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) jobs.push_back({i, j});
    parallel_for(jobs.size(), [&](std::size_t k) {
        auto [i, j] = jobs[k];
        std::int64_t v = pairing(glue(gens[i], gens[j]), theory);
        r.matrix[i][j] = v;
        r.matrix[j][i] = v;
    });

    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < n; ++i) by_degree[r.degrees[i]].push_back(i);
    for (const auto& [d, rows] : by_degree) {
        auto it = by_degree.find(-d);
        int rank = 0;
        if (it != by_degree.end()) {
            IntMatrix block;
            for (std::size_t i : rows) {
                block.emplace_back();
                for (std::size_t j : it->second) block.back().push_back(r.matrix[i][j]);
            }
            if (theory == GramTheory::F2) {
                rank = rank_mod2(block);
            } else {
                auto inv = smith_invariants(block);
                rank = static_cast<int>(inv.size());
                for (auto x : inv) r.free = r.free && x == 1;
            }
        }
        r.ranks[d] = rank;
        if (rank) r.graded_dimension.add_term(-d, rank);
    }
    return r;
}

LaurentQ graded_dimension_f2(const Web& w, const std::vector<Movie>& gens) {
    return gram_matrix(w, gens, GramTheory::F2).graded_dimension;
}

std::pair<LaurentQ, bool> graded_rank_z(const Web& w, const std::vector<Movie>& gens) {
    GramReport r = gram_matrix(w, gens, GramTheory::Z);
    return {r.graded_dimension, r.free};
}

// ------------------------------------------------------------ generators

namespace {

using Events = std::vector<MovieEvent>;

std::vector<Events> node_generators(const ReductionNode& node) {
    std::vector<Events> gens;
    switch (node.end) {
        case ReductionNode::End::Empty:
            gens.push_back({});
            break;
        case ReductionNode::End::Zero:
            break;
        case ReductionNode::End::Irreducible:
            throw DomainError("web is not reducible");
        case ReductionNode::End::Branch:
            for (std::size_t b = 0; b < node.children.size(); ++b)
                for (Events g : node_generators(node.children[b])) {
                    const auto& rw = node.branch_rewrites[b];
                    for (auto it = rw.rbegin(); it != rw.rend(); ++it) g.push_back(rewrite_event(inverse(*it)));
                    gens.push_back(std::move(g));
                }
            break;
    }
    for (auto st = node.steps.rbegin(); st != node.steps.rend(); ++st) {
        int choices = st->kind == StepKind::Circle ? 3 : st->kind == StepKind::Digon ? 2 : 1;
        std::vector<Events> next;
        for (const auto& g : gens)
            for (int d = 0; d < choices; ++d) {
                Events e = g;
                e.push_back(rewrite_event(inverse(st->rewrite)));
                if (d > 0) e.push_back(dot_event(st->target, d));
                next.push_back(std::move(e));
            }
        gens = std::move(next);
    }
    return gens;
}

}  // namespace

std::vector<Movie> generators_for_reducible(const Web& w) {
    ReductionOutcome out = reduce(w);
    if (!out.reduced) throw DomainError("web is not reducible");
    if (out.trace.steps.empty() && out.trace.end == ReductionNode::End::Zero)
        throw DomainError("web has a " + out.trace.reason + ": its state space is trivial");
    std::vector<Movie> gens;
    for (auto& events : node_generators(out.trace)) {
        Movie m;
        m.theory = w.is_oriented() && !w.empty() ? TheoryTag{Theory::Sl3Oriented, 3} : TheoryTag{};
        m.events = std::move(events);
        gens.push_back(std::move(m));
    }
    return gens;
}

InequalityReport check_inequality(const Web& w) {
    InequalityReport r;
    r.t = count_tait_colorings_web(w);
    ReductionOutcome out = reduce(w);
    if (!out.reduced) throw DomainError("web is not reducible: no generator set available");
    if (out.t != 0) {
        std::vector<Movie> gens = generators_for_reducible(w);
        r.dim0 = graded_dimension_f2(w, gens).at_one();
    }
    r.ok = r.dim0 <= r.t;
    r.equal = r.dim0 == r.t;
    return r;
}

// ------------------------------------------------------------ disjoint unions

namespace {

void shift(WebRewrite& r, int dv, int de) {
    auto vs = [&](std::vector<VertexRecord>& v) {
        for (auto& x : v) x.id += dv;
    };
    auto es = [&](std::vector<WebEdge>& v) {
        for (auto& e : v) {
            e.id += de;
            e.tail.vertex += dv;
            e.head.vertex += dv;
        }
    };
    auto cs = [&](std::vector<WebCircle>& v) {
        for (auto& c : v) c.id += de;
    };
    vs(r.rm_vertices);
    vs(r.add_vertices);
    es(r.rm_edges);
    es(r.add_edges);
    cs(r.rm_circles);
    cs(r.add_circles);
}

}  // namespace

Movie disjoint_union(const Movie& a, const Movie& b) {
    if (!a.bottom.empty() || !b.bottom.empty()) throw DomainError("movie disjoint union needs empty bottoms");
    if (!(a.theory == b.theory)) throw DomainError("movie disjoint union needs one theory");
    Web ta = a.top();
    int dv = ta.next_vertex_id(), de = ta.next_edge_id();
    Movie out = a;
    for (MovieEvent e : b.events) {
        if (e.kind == MovieEvent::Kind::Rewrite) shift(e.rewrite, dv, de);
        if (e.kind == MovieEvent::Kind::Dot) e.strand += de;
        out.events.push_back(std::move(e));
    }
    return out;
}

DisjointUnionReport disjoint_union_check(const Web& a, const Web& b) {
    DisjointUnionReport r;
    auto ga = generators_for_reducible(a), gb = generators_for_reducible(b);
    r.dim1 = graded_dimension_f2(a, ga);
    r.dim2 = graded_dimension_f2(b, gb);
    std::vector<Movie> prod;
    for (const auto& x : ga)
        for (const auto& y : gb) prod.push_back(disjoint_union(x, y));
    Web u = disjoint_union(a, b);
    r.dim_union = graded_dimension_f2(u, prod);
    r.ok = r.dim_union == r.dim1 * r.dim2;
    return r;
}

// ------------------------------------------------------------ GL(N) circles

std::vector<Movie> gl_circle_generators(int N, int a) {
    if (a < 1 || a >= N) throw DomainError("circle thickness must lie in 1..N-1");
    std::vector<Partition> box;
    Partition cur;
    std::function<void(int)> go = [&](int bound) {
        if (static_cast<int>(cur.size()) == a) {
            box.push_back(cur);
            return;
        }
        for (int p = 0; p <= bound; ++p) {
            cur.push_back(p);
            go(p);
            cur.pop_back();
        }
    };
    go(N - a);
    std::vector<Movie> gens;
    for (const auto& lambda : box) {
        Movie m;
        m.theory = TheoryTag{Theory::GlN, N};
        WebRewrite birth = make_birth(Web{}, a);
        m.events.push_back(rewrite_event(birth));
        bool trivial = true;
        for (int p : lambda) trivial = trivial && p == 0;
        if (!trivial) m.events.push_back(label_event(birth.add_circles[0].id, schur(lambda, a)));
        gens.push_back(std::move(m));
    }
    return gens;
}

LaurentQ gl_circle_dimension(int N, int a) {
    auto gens = gl_circle_generators(N, a);
    Web w = gens.front().top();
    GramReport r = gram_matrix(w, gens, GramTheory::GlConstant);
    if (!r.free) throw DomainError("circle Gram matrix is not unimodular");
    return r.graded_dimension;
}

int generic_rank_gl(const std::vector<Movie>& gens, std::uint64_t seed) {
    constexpr std::int64_t p = 2305843009213693951;  // 2^61 - 1
    if (gens.empty()) return 0;
    int N = gens.front().theory.N;
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> x;
    while (static_cast<int>(x.size()) < N) {
        std::int64_t v = static_cast<std::int64_t>(rng() % 1000000007);
        bool fresh = true;
        for (auto y : x) fresh = fresh && y != v;
        if (fresh) x.push_back(v);
    }
    auto value = [&](const SymPoly& q) {
        __int128 s = 0;
        for (const auto& [e, c] : q.terms()) {
            __int128 m = ((c % p) + p) % p;
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) m = m * x[i] % p;
            s = (s + m) % p;
        }
        return static_cast<std::int64_t>(s);
    };
    std::size_t n = gens.size();
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    parallel_for(n * n, [&](std::size_t k) {
        std::size_t i = k / n, j = k % n;
        if (j < i) return;
        m[i][j] = m[j][i] = value(eval_gln(glue(gens[i], gens[j])));
    });
    return rank_mod_p(m, p);
}

}  // namespace foamlab
