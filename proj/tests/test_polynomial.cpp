#include "doctest.h"

#include "hmv/polynomial.hpp"

#include <random>

using namespace hmv;

static QPoly P(std::initializer_list<long> cs) {
    QPoly p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

TEST_CASE("degree, eval, derivative") {
    CHECK(degree(P({0})) == -1);
    CHECK(degree(P({3, 0, 1})) == 2);
    CHECK(eval(P({-6, 11, -6, 1}), 2) == 0);
    CHECK(derivative(P({1, 2, 3})) == P({2, 6}));
}

TEST_CASE("division reconstructs the dividend") {
    QPoly a = P({1, -4, 0, 2, 7});
    QPoly b = P({-3, 1, 2});
    auto [q, rem] = divmod(a, b);
    CHECK(trim(add(mul(q, b), rem)) == trim(a));
    CHECK(degree(rem) < degree(b));
}

TEST_CASE("resultant against product-of-root-images oracle") {
    // res(f, g) = lc(f)^deg g * prod g(alpha_i); for f = x^2-2 and
    // g = x^2-3 every g(alpha) = -1, so the resultant is 1
    CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
    // res(x - 2, g) = g(2)
    CHECK(resultant(P({-2, 1}), P({-1, 0, 1})) == 3);
    // common root => 0
    CHECK(resultant(P({-1, 1}), P({-1, 0, 1})) == 0);
}

TEST_CASE("resultant swap symmetry on random inputs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly f, g;
        for (int i = 0; i < 4; ++i) f.emplace_back(coef(rng));
        for (int i = 0; i < 3; ++i) g.emplace_back(coef(rng));
        f = trim(f);
        g = trim(g);
        if (degree(f) < 1 || degree(g) < 1) continue;
        mpq_class lhs = resultant(f, g);
        mpq_class sign = (degree(f) * degree(g)) % 2 == 0 ? 1 : -1;
        CHECK(lhs == sign * resultant(g, f));
    }
}

TEST_CASE("sturm root counting") {
    auto chain = sturm_chain(P({-2, 0, 1}));
    CHECK(sturm_count_all(chain) == 2);
    CHECK(sturm_count_all(sturm_chain(P({1, 0, 1}))) == 0);
    auto cubic = sturm_chain(P({-6, 11, -6, 1})); // roots 1, 2, 3
    CHECK(sturm_count_all(cubic) == 3);
    CHECK(sturm_count(cubic, mpq_class(3, 2), mpq_class(7, 2)) == 2);
    CHECK(sturm_count(cubic, 0, 1) == 1); // interval (0, 1] catches the root at 1
}

TEST_CASE("root isolation produces disjoint sign-changing intervals") {
    QPoly f = P({-6, 11, -6, 1});
    auto roots = isolate_real_roots(f);
    REQUIRE(roots.size() == 3);
    for (size_t i = 0; i < roots.size(); ++i) {
        CHECK(eval(f, roots[i].lo) != 0);
        CHECK(eval(f, roots[i].hi) != 0);
        CHECK(eval(f, roots[i].lo) * eval(f, roots[i].hi) < 0);
        if (i) CHECK(roots[i - 1].hi <= roots[i].lo);
    }
    // refinement stays inside and shrinks
    auto refined = refine_root(f, roots[1], mpq_class(1, 1000));
    CHECK(refined.hi - refined.lo <= mpq_class(1, 1000));
    CHECK(refined.lo >= roots[1].lo);
    CHECK(refined.hi <= roots[1].hi);
    CHECK(refined.lo < 2);
    CHECK(refined.hi > 2);
}

static std::vector<mpz_class> Z(std::initializer_list<long> cs) {
    return std::vector<mpz_class>(cs.begin(), cs.end());
}

TEST_CASE("irreducibility by brute force") {
    CHECK(is_irreducible_monic(Z({-2, 0, 1})));       // x^2 - 2
    CHECK(!is_irreducible_monic(Z({-1, 0, 1})));      // (x-1)(x+1)
    CHECK(is_irreducible_monic(Z({1, -2, -1, 1})));   // x^3 - x^2 - 2x + 1
    CHECK(!is_irreducible_monic(Z({6, 0, -5, 0, 1}))); // (x^2-2)(x^2-3)
    CHECK(is_irreducible_monic(Z({1, 0, 0, 0, 1})));  // x^4 + 1
    CHECK(is_irreducible_monic(Z({-2, 0, 0, 0, 0, 0, 1}))); // x^6 - 2, Eisenstein
    CHECK(!is_irreducible_monic(Z({-8, 0, 0, 0, 0, 0, 1}))); // (x^2-2)(x^4+2x^2+4)
    CHECK(irreducibility_decidable(6));
    CHECK(!irreducibility_decidable(7));
}

TEST_CASE("discriminants of quadratics and cubics") {
    // disc(x^2 + bx + c) = b^2 - 4c
    CHECK(poly_discriminant(Z({-2, 0, 1})) == 8);
    CHECK(poly_discriminant(Z({-5, 0, 1})) == 20);
    // disc(x^3 + px + q) = -4p^3 - 27q^2
    CHECK(poly_discriminant(Z({0, -1, 0, 1})) == 4);
    // the totally real cubic of conductor 7
    CHECK(poly_discriminant(Z({1, -2, -1, 1})) == 49);
}
