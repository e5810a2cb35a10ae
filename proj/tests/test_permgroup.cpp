#include "prymlab/permgroup.hpp"

#include <doctest.h>

#include <algorithm>

using namespace prymlab;

TEST_CASE("perm composition convention") {
    Perm a({1, 0, 2}); // (0 1)
    Perm b({0, 2, 1}); // (1 2)
    Perm ab = a * b;   // (a*b)(x) = a(b(x))
    CHECK(ab(1) == a(b(1)));
    CHECK(ab(1) == 2);
    CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("cycle notation") {
    CHECK(cycle_notation(Perm::identity(3)) == "()");
    CHECK(cycle_notation(Perm({1, 2, 0})) == "(0 1 2)");
}

TEST_CASE("s3 enumeration") {
    FiniteGroup g = enumerate_group({Perm({1, 0, 2}), Perm({1, 2, 0})});
    CHECK(g.order() == 6);
    CHECK(g.elements[0].is_identity());
    CHECK(!g.is_abelian());
    // class sizes 1, 2, 3
    std::vector<size_t> sizes;
    for (const auto &c : g.conjugacy_classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>({1, 2, 3}));
    // multiplication table is consistent with permutation composition
    for (size_t a = 0; a < g.order(); ++a)
        for (size_t b = 0; b < g.order(); ++b)
            CHECK(g.elements[g.mul((int)a, (int)b)] ==
                  g.elements[a] * g.elements[b]);
}

TEST_CASE("q8 structure") {
    FiniteGroup g = enumerate_group(
        {Perm({2, 3, 1, 0, 6, 7, 5, 4}), Perm({4, 5, 7, 6, 1, 0, 2, 3})});
    CHECK(g.order() == 8);
    CHECK(g.conjugacy_classes.size() == 5);
    int num_order4 = 0;
    for (size_t x = 0; x < g.order(); ++x)
        if (element_order(g, (int)x) == 4) ++num_order4;
    CHECK(num_order4 == 6); // +-i, +-j, +-k
}

TEST_CASE("element order and closure") {
    FiniteGroup g = enumerate_group({Perm({1, 2, 3, 4, 0})});
    CHECK(g.order() == 5);
    CHECK(element_order(g, 0) == 1);
    CHECK(element_order(g, 1) == 5);
    auto h = subgroup_closure(g, {1});
    CHECK(h.size() == 5);
    CHECK(subgroup_closure(g, {}).size() == 1);
}

TEST_CASE("cap exceeded") {
    CHECK_THROWS_AS(enumerate_group({Perm({1, 2, 3, 4, 0})}, 3), CapExceeded);
}

TEST_CASE("invalid permutation rejected") {
    CHECK_THROWS(Perm({0, 0, 1}));
}
