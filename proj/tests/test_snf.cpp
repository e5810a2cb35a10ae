#include "prymlab/snf.hpp"

#include <doctest.h>

using namespace prymlab;

namespace {

void check_smith(const ZMat &a, const SmithForm &f) {
    CHECK(f.u * a * f.v == f.d);
    CHECK((f.v * f.v_inv).is_identity());
    // diagonal, nonnegative, divisibility chain
    for (size_t i = 0; i < f.d.rows(); ++i)
        for (size_t j = 0; j < f.d.cols(); ++j)
            if (i != j) CHECK(f.d(i, j) == 0);
    for (size_t i = 0; i + 1 < f.invariant_factors.size(); ++i) {
        CHECK(f.invariant_factors[i] > 0);
        CHECK(f.invariant_factors[i + 1] % f.invariant_factors[i] == 0);
    }
}

} // namespace

TEST_CASE("classic 3x3 example") {
    ZMat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithForm f = smith_normal_form(a);
    check_smith(a, f);
    REQUIRE(f.invariant_factors.size() == 3);
    CHECK(f.invariant_factors[0] == 2);
    CHECK(f.invariant_factors[1] == 2);
    CHECK(f.invariant_factors[2] == 156);
    CHECK(f.torsion.size() == 3);
}

TEST_CASE("rank deficient with torsion") {
    ZMat a{{2, 0}, {0, 0}};
    SmithForm f = smith_normal_form(a);
    check_smith(a, f);
    CHECK(f.rank == 1);
    REQUIRE(f.torsion.size() == 1);
    CHECK(f.torsion[0] == 2);
}

TEST_CASE("unimodular input has trivial factors") {
    ZMat a{{1, 2}, {2, 3}};
    SmithForm f = smith_normal_form(a);
    check_smith(a, f);
    CHECK(f.rank == 2);
    CHECK(f.torsion.empty());
    CHECK(f.invariant_factors[0] == 1);
    CHECK(f.invariant_factors[1] == 1);
}

TEST_CASE("zero matrix") {
    ZMat a(2, 3);
    SmithForm f = smith_normal_form(a);
    check_smith(a, f);
    CHECK(f.rank == 0);
    CHECK(f.torsion.empty());
}
