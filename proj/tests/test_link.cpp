#include "doctest.h"

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"
#include "foamlab/link.hpp"

using namespace foamlab;

namespace {

LaurentQ Q(int n) { return quantum_integer(n); }

// Independent oracle for closures of the 2-strand braid sigma^k: the
// oriented skein relation a P(k) - a^{-1} P(k-2) = z P(k-1) with
// a = q^{3s}, z = s (q - q^{-1}), started from the 2-component unlink and
// the unknot. The two signs s are mirror conventions.
LaurentQ torus_oracle(int k, int s) {
    LaurentQ a = LaurentQ::monomial(3 * s), ai = LaurentQ::monomial(-3 * s);
    LaurentQ z = (LaurentQ::monomial(1) - LaurentQ::monomial(-1)) * LaurentQ::constant(s);
    std::map<int, LaurentQ> P;
    P[0] = Q(3) * Q(3);
    P[1] = Q(3);
    for (int j = 2; j <= std::abs(k) + 1; ++j) P[j] = ai * ai * P[j - 2] + ai * z * P[j - 1];
    for (int j = -1; j >= -std::abs(k); --j) P[j] = a * a * P[j + 2] - a * z * P[j + 1];
    return P[k];
}

std::vector<int> power(int g, int k) { return std::vector<int>(static_cast<std::size_t>(std::abs(k)), k > 0 ? g : -g); }

}  // namespace

TEST_CASE("PD parsing") {
    LinkDiagram d = parse_pd("X[1,4,2,5]-, X[3,6,4,1]-, X[5,2,6,3]-");
    CHECK(d.crossings.size() == 3);
    CHECK(parse_pd(format_pd(d)).crossings.size() == 3);
    CHECK(format_pd(parse_pd(format_pd(d))) == format_pd(d));
    CHECK(parse_pd("O O").free_loops == 2);
    CHECK_THROWS_AS(parse_pd("X[1,2,3]+"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,1,2,3]+"), ParseError);
    CHECK_THROWS_AS(parse_pd("Y"), ParseError);
}

TEST_CASE("unknots and unlinks") {
    CHECK(link_invariant(parse_pd("O")) == Q(3));
    CHECK(link_invariant(parse_pd("")) == LaurentQ::constant(1));
    for (int k = 1; k <= 4; ++k) {
        LinkDiagram d;
        d.free_loops = k;
        CHECK(link_invariant(d) == Q(3).pow(k));
    }
    // one-crossing diagrams of the unknot, both kinks
    CHECK(link_invariant(braid_closure(2, {1})) == Q(3));
    CHECK(link_invariant(braid_closure(2, {-1})) == Q(3));
    CHECK(link_invariant(braid_closure(3, {1, -2})) == Q(3));
    CHECK(link_invariant(braid_closure(2, {1, -1})) == Q(3) * Q(3));
}

TEST_CASE("kink factors cancel") {
    const auto& k = skein_constants();
    // positive kink: smoothing gives two circles, the H web a digon on a circle
    LaurentQ pos = LaurentQ::monomial(k.smooth_exp) * Q(3) + LaurentQ::monomial(k.h_exp, k.h_coeff) * Q(2);
    LaurentQ neg = LaurentQ::monomial(-k.smooth_exp) * Q(3) + LaurentQ::monomial(-k.h_exp, k.h_coeff) * Q(2);
    CHECK(pos == LaurentQ::constant(1));
    CHECK(neg == LaurentQ::constant(1));
}

TEST_CASE("two-strand torus links agree with the skein oracle") {
    std::vector<LaurentQ> ours;
    for (int k = -5; k <= 5; ++k) ours.push_back(link_invariant(braid_closure(2, power(1, k))));
    int matched = 0;
    for (int s : {1, -1}) {
        bool all = true;
        for (int k = -5; k <= 5; ++k) all = all && ours[k + 5] == torus_oracle(k, s);
        matched += all;
    }
    CHECK(matched == 1);
    LaurentQ right = link_invariant(braid_closure(2, {1, 1, 1}));
    LaurentQ left = link_invariant(braid_closure(2, {-1, -1, -1}));
    CHECK(right != left);
    CHECK(left == right.mirror());
    CHECK(right.at_one() == 3);
}

TEST_CASE("mirror images") {
    LinkDiagram t = parse_pd("X[1,4,2,5]-, X[3,6,4,1]-, X[5,2,6,3]-");
    LinkDiagram m = mirror(t);
    CHECK(link_invariant(m) == link_invariant(t).mirror());
    CHECK(format_pd(mirror(m)) == format_pd(t));
}

TEST_CASE("property: mirror symmetry on random diagrams") {
    Rng rng(31);
    for (int it = 0; it < 15; ++it) {
        LinkDiagram d = random_link(rng, 6);
        CHECK(link_invariant(mirror(d)) == link_invariant(d).mirror());
    }
}

TEST_CASE("property: invariance under generated moves") {
    Rng rng(32);
    std::map<std::string, int> kinds;
    for (int it = 0; it < 40; ++it) {
        MovePair m = random_move_pair(rng, 4, 5);
        ++kinds[m.move];
        INFO(m.move << ": " << format_pd(m.before) << " vs " << format_pd(m.after));
        CHECK(link_invariant(m.before) == link_invariant(m.after));
    }
    CHECK(kinds.size() == 5);
}

TEST_CASE("resolution webs are closed oriented webs") {
    LinkDiagram d = braid_closure(3, {1, -2, 1, 2});
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> choice(4);
        for (int i = 0; i < 4; ++i) choice[i] = (mask >> i) & 1;
        Web w = resolution_web(d, choice);
        CHECK(w.is_oriented());
        CHECK(static_cast<int>(w.vertices().size()) == 2 * __builtin_popcount(mask));
        regions(w);
    }
    CHECK_THROWS_AS(resolution_web(d, {0}), DomainError);
}
