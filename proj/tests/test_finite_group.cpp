#include "doctest.h"

#include "hmv/errors.hpp"
#include "hmv/finite_group.hpp"

#include <set>

using namespace hmv;

TEST_CASE("permutation helpers") {
    Perm a{1, 2, 0};
    Perm b{0, 2, 1};
    CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
    CHECK(perm_compose(a, b) == Perm{1, 0, 2});
    CHECK(perm_fixed_points(b) == 1);
    CHECK(perm_sign(a) == 1);
    CHECK(perm_sign(b) == -1);
    // subsets of size 1 fixed by (0)(1 2): just {0}
    CHECK(perm_fixed_subsets(b, 1) == 1);
    CHECK(perm_fixed_subsets(perm_identity(4), 2) == 6);
}

TEST_CASE("group constructors satisfy the axioms") {
    for (const char* name : {"C1", "C2", "C6", "S3", "S4", "D4", "C2xC2", "A4", "C2xC3"}) {
        FiniteGroup g = group_by_name(name);
        CHECK(g.order > 0);
        for (int a = 0; a < g.order; ++a) {
            CHECK(g.mul(a, g.identity) == a);
            CHECK(g.mul(g.identity, a) == a);
            CHECK(g.mul(a, g.inv(a)) == g.identity);
        }
    }
    CHECK(group_by_name("S3").order == 6);
    CHECK(group_by_name("D4").order == 8);
    CHECK(group_by_name("A4").order == 12);
    CHECK(group_by_name("C2xC3").order == 6);
    CHECK_THROWS_AS(group_by_name("Q8"), Error);
}

TEST_CASE("broken tables are rejected") {
    // 2x2 "table" where the non-identity element squares to itself
    CHECK_THROWS_AS(make_group({0, 1, 1, 1}), Error);
}

TEST_CASE("subgroups, transversals, cosets") {
    FiniteGroup s3 = symmetric_group(3);
    // find an order-2 element
    int t = -1;
    for (int a = 0; a < 6; ++a)
        if (a != s3.identity && s3.mul(a, a) == s3.identity) {
            t = a;
            break;
        }
    REQUIRE(t >= 0);
    std::vector<int> sub{s3.identity, t};
    CHECK(is_subgroup(s3, sub));
    CHECK(!is_subgroup(s3, std::vector<int>{t}));

    auto reps = left_transversal(s3, sub);
    CHECK(reps.size() == 3);
    CHECK(reps[0] == s3.identity);
    std::set<int> covered;
    for (int r : reps)
        for (int h : sub) covered.insert(s3.mul(r, h));
    CHECK(covered.size() == 6);
    for (int a = 0; a < 6; ++a) {
        int c = coset_of(s3, sub, reps, a);
        CHECK(c >= 0);
        CHECK(c < 3);
    }

    FiniteGroup sg = subgroup_group(s3, sub, "C2");
    CHECK(sg.order == 2);
    CHECK(sg.mul(1, 1) == 0);
    CHECK_THROWS_AS(subgroup_group(s3, std::vector<int>{t}), Error);
}

TEST_CASE("direct products multiply componentwise") {
    FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(g.order == 6);
    // the product of two generators has order lcm(2,3) = 6
    bool found_order6 = false;
    for (int a = 0; a < 6; ++a) {
        int x = a, n = 1;
        while (x != g.identity) {
            x = g.mul(x, a);
            ++n;
        }
        if (n == 6) found_order6 = true;
    }
    CHECK(found_order6);
}

TEST_CASE("action verification") {
    FiniteGroup c2 = cyclic_group(2);
    std::vector<Perm> swap_action{{0, 1}, {1, 0}};
    CHECK_NOTHROW(verify_action(c2, swap_action));
    CHECK_NOTHROW(verify_action(c2, std::vector<Perm>{{0, 1}, {0, 1}})); // trivial action
    CHECK_THROWS_AS(verify_action(c2, std::vector<Perm>{{0, 1}, {0, 0}}), Error);
}
