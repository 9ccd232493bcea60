#include "doctest.h"

#include "hmv/interval.hpp"

#include <cmath>

using namespace hmv;

TEST_CASE("construction and basic predicates") {
    Interval one = Interval::from_int(1, 128);
    CHECK(one.excludes_zero());
    CHECK(one.certain_sign() == 1);
    CHECK(one.lo_double() <= 1.0);
    CHECK(one.hi_double() >= 1.0);

    Interval third = Interval::from_rational(mpq_class(1, 3), 128);
    CHECK(third.lo_double() < third.hi_double()); // 1/3 is not a binary fraction
    CHECK(third.width_double() < 1e-30);

    Interval straddle = Interval::from_endpoints(mpq_class(-1), mpq_class(2), 128);
    CHECK(straddle.contains_zero());
    CHECK(straddle.certain_sign() == 0);
}

TEST_CASE("arithmetic encloses the exact value") {
    Interval third = Interval::from_rational(mpq_class(1, 3), 64);
    Interval three = Interval::from_int(3, 64);
    Interval prod = third * three;
    CHECK(prod.lo_double() <= 1.0);
    CHECK(prod.hi_double() >= 1.0);

    Interval diff = prod - Interval::from_int(1, 64);
    CHECK(diff.contains_zero());

    Interval neg = -three;
    CHECK(neg.certain_sign() == -1);
    CHECK(neg.abs().lo_double() == 3.0);
}

TEST_CASE("log_abs matches double logarithm") {
    Interval four = Interval::from_int(4, 128);
    Interval l = four.log_abs();
    double expect = std::log(4.0);
    CHECK(l.lo_double() <= expect);
    CHECK(l.hi_double() >= expect);
    CHECK(l.width_double() < 1e-30);

    Interval negquarter = Interval::from_rational(mpq_class(-1, 4), 128);
    Interval l2 = negquarter.log_abs(); // log |x|
    CHECK(l2.hi_double() <= -std::log(4.0) + 1e-12);
}

TEST_CASE("overlap predicate") {
    Interval a = Interval::from_endpoints(0, 2, 64);
    Interval b = Interval::from_endpoints(1, 3, 64);
    Interval c = Interval::from_endpoints(mpq_class(5, 2), 4, 64);
    CHECK(a.overlaps(b));
    CHECK(b.overlaps(c));
    CHECK(!a.overlaps(c));
}

TEST_CASE("polynomial evaluation encloses a root crossing") {
    std::vector<mpq_class> f{-2, 0, 1}; // x^2 - 2
    Interval x = Interval::from_endpoints(mpq_class(141, 100), mpq_class(142, 100), 128);
    Interval y = eval_poly_interval(f, x, 128);
    CHECK(y.contains_zero());

    Interval far = Interval::from_endpoints(3, 4, 128);
    CHECK(eval_poly_interval(f, far, 128).certain_sign() == 1);
}

TEST_CASE("interval determinant of exact integer matrices") {
    auto I = [](long v) { return Interval::from_int(v, 128); };
    std::vector<std::vector<Interval>> m{{I(1), I(2)}, {I(3), I(4)}};
    Interval d = interval_det(m);
    CHECK(d.lo_double() == -2.0);
    CHECK(d.hi_double() == -2.0);

    std::vector<std::vector<Interval>> m3{{I(2), I(0), I(1)},
                                          {I(1), I(1), I(0)},
                                          {I(0), I(3), I(1)}};
    Interval d3 = interval_det(m3);
    CHECK(d3.lo_double() == 5.0);
    CHECK(d3.hi_double() == 5.0);
}

TEST_CASE("deterministic endpoint rendering") {
    Interval a = Interval::from_rational(mpq_class(22, 7), 128);
    Interval b = Interval::from_rational(mpq_class(22, 7), 128);
    CHECK(a.lo_string() == b.lo_string());
    CHECK(a.hi_string() == b.hi_string());
    CHECK(a.lo_string() != a.hi_string()); // 22/7 needs rounding both ways
}
