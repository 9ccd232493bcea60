#include "doctest.h"

#include "hmv/errors.hpp"
#include "hmv/numfield.hpp"

using namespace hmv;

static std::vector<mpz_class> Z(std::initializer_list<long> cs) {
    return std::vector<mpz_class>(cs.begin(), cs.end());
}

static FieldElement E(std::initializer_list<mpq_class> cs) {
    return FieldElement(cs.begin(), cs.end());
}

TEST_CASE("field construction and rejection") {
    TotallyRealField f = make_field(Z({-5, 0, 1}));
    CHECK(f.degree == 2);
    CHECK(f.embeddings.size() == 2);
    CHECK(f.disc == 20);
    CHECK(!f.irreducibility_asserted);
    CHECK(f.embeddings[0].hi <= f.embeddings[1].lo); // sorted embeddings

    CHECK_THROWS_WITH_AS(make_field(Z({1, 0, 1})), doctest::Contains("real roots"), Error);
    CHECK_THROWS_AS(make_field(Z({-4, 0, 1})), Error);   // x^2 - 4 reducible
    CHECK_THROWS_AS(make_field(Z({-5, 1})), Error);      // degree 1
    CHECK_THROWS_AS(make_field(Z({-5, 0, 2})), Error);   // non-monic

    // degree 7 needs the explicit irreducibility assertion
    auto deg7 = Z({-2, 0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(make_field(deg7), Error);
}

TEST_CASE("error codes are machine readable") {
    try {
        make_field(Z({1, 0, 1}));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == "NotTotallyReal");
    }
    try {
        make_field(Z({-4, 0, 1}));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == "NotIrreducible");
    }
    try {
        make_field(Z({-5, 1}));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == "DegreeTooSmall");
    }
}

TEST_CASE("element arithmetic and norms in Q(sqrt 5)") {
    TotallyRealField f = make_field(Z({-5, 0, 1}));
    FieldElement x = E({0, 1});
    FieldElement sq = elem_mul(f, x, x);
    CHECK(sq == E({5, 0})); // x^2 reduces to 5

    CHECK(norm(f, x) == -5);
    FieldElement golden = E({mpq_class(1, 2), mpq_class(1, 2)}); // (1 + sqrt5)/2
    CHECK(norm(f, golden) == -1);
    CHECK(is_algebraic_integer(f, golden));
    CHECK(!is_algebraic_integer(f, E({mpq_class(1, 3), mpq_class(1, 3)})));

    QPoly cp = char_poly(f, golden); // x^2 - x - 1
    CHECK(cp == QPoly{-1, -1, 1});
}

TEST_CASE("norm is multiplicative") {
    TotallyRealField f = make_field(Z({1, -2, -1, 1}));
    FieldElement a = E({2, 1, 0});
    FieldElement b = E({-1, 3, 1});
    CHECK(norm(f, elem_mul(f, a, b)) == norm(f, a) * norm(f, b));
}

TEST_CASE("unit validation") {
    TotallyRealField quad = make_field(Z({-5, 0, 1}));
    FieldElement golden = E({mpq_class(1, 2), mpq_class(1, 2)});
    UnitSystem us = check_units(quad, {golden});
    CHECK(us.norms == std::vector<int>{-1});

    CHECK_THROWS_AS(check_units(quad, {golden, golden}), Error); // WrongCount
    try {
        check_units(quad, {E({2, 0})});
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == "NotAUnit");
    }

    // cubic of discriminant 49: x and x-1 are units of norms -1 and +1
    TotallyRealField cubic = make_field(Z({1, -2, -1, 1}));
    UnitSystem cu = check_units(cubic, {E({0, 1, 0}), E({-1, 1, 0})});
    CHECK(cu.norms == std::vector<int>{-1, 1});
}

TEST_CASE("embedding refinement is monotone") {
    TotallyRealField f = make_field(Z({-2, 0, 1}));
    RootInterval coarse = f.embeddings[1];
    RootInterval fine = refine_embedding(f, 1, mpq_class(1, 10000));
    CHECK(fine.hi - fine.lo <= mpq_class(1, 10000));
    CHECK(fine.lo >= coarse.lo);
    CHECK(fine.hi <= coarse.hi);
    // still contains sqrt(2)
    CHECK(fine.lo * fine.lo < 2);
    CHECK(fine.hi * fine.hi > 2);
}
