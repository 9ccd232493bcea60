#include "doctest.h"

#include "hmv/errors.hpp"
#include "hmv/lift_algebra.hpp"

using namespace hmv;

TEST_CASE("relations kill boundary products") {
    LiftAlgebra alg(3, 2);
    auto xb = alg.reduce(alg.mul(alg.x(0), alg.b(1)));
    CHECK(LiftAlgebra::is_zero(xb));
    auto bb = alg.reduce(alg.mul(alg.b(0), alg.b(0)));
    CHECK(LiftAlgebra::is_zero(bb));
    auto xx = alg.reduce(alg.mul(alg.x(0), alg.x(1)));
    CHECK(!LiftAlgebra::is_zero(xx));
}

TEST_CASE("multiplication is commutative and reduction confluent") {
    LiftAlgebra alg(4, 3);
    auto e1 = alg.add(alg.lift(0), alg.mul(alg.x(1), alg.lift(2)));
    auto e2 = alg.add(alg.b(1), alg.lift(3));
    auto p = alg.mul(e1, e2);
    auto q = alg.mul(e2, e1);
    CHECK(alg.str(alg.reduce(p)) == alg.str(alg.reduce(q)));
    // processing order must not matter
    CHECK(alg.str(alg.reduce(p)) == alg.str(alg.reduce(p, true)));
}

TEST_CASE("lift products recover pure interior monomials") {
    for (auto [r, m] : std::initializer_list<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
        LiftCheckTrace t = lift_independence_check(r, m);
        CHECK(t.pass);
        CHECK(t.r == r);
        CHECK(t.m == m);
        CHECK(t.products_checked > 0);
        CHECK(t.lines.size() == static_cast<size_t>(t.products_checked));
    }
}

TEST_CASE("degree bounds for the independence check") {
    CHECK_THROWS_AS(lift_independence_check(4, 1), Error);
    CHECK_THROWS_AS(lift_independence_check(4, 3), Error); // m > r/2
    try {
        lift_independence_check(6, 4);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == "OutOfRange");
    }
}

TEST_CASE("splitting degree report") {
    SplittingReport r4 = splitting_report(4);
    CHECK(r4.split_compact == std::vector<int>{3, 4});
    CHECK(r4.split_ordinary == std::vector<int>{4, 5});
    CHECK(r4.nonsplit == std::vector<int>{2, 6});
    CHECK(!r4.uniqueness_reason.empty());
    CHECK(!r4.quadratic_remark);

    SplittingReport r2 = splitting_report(2);
    CHECK(r2.quadratic_remark);
    CHECK(r2.nonsplit == std::vector<int>{2});
}
