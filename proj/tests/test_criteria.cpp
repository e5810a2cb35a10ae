#include "helpers.hpp"

#include "prymlab/catalog.hpp"
#include "prymlab/criteria.hpp"

#include <doctest.h>

using namespace prymlab;
using namespace prymlab::testing;

TEST_CASE("evenness check") {
    // all matrices identity on Q^2: invariant dim 2, pass
    ExtensionDatum d1;
    d1.genus = 1;
    d1.dim = 2;
    d1.action = {QMat::identity(2), QMat::identity(2)};
    auto [dim1, pass1] = evenness_check(d1);
    CHECK(dim1 == 2);
    CHECK(pass1);

    // single unipotent generator on Q^2: invariant dim 1, fail
    ExtensionDatum d2;
    d2.genus = 1;
    d2.dim = 2;
    d2.action = {QMat{{1, 1}, {0, 1}}, QMat::identity(2)};
    auto [dim2, pass2] = evenness_check(d2);
    CHECK(dim2 == 1);
    CHECK(!pass2);

    // vacuous action on Q^3: dim 3, fail
    ExtensionDatum d3;
    d3.genus = 0;
    d3.dim = 3;
    auto [dim3, pass3] = evenness_check(d3);
    CHECK(dim3 == 3);
    CHECK(!pass3);

    // basis independence: conjugate everything by an invertible P
    QMat p{{1, 2}, {1, 3}};
    QMat pinv{{3, -2}, {-1, 1}};
    ExtensionDatum d4 = d2;
    for (QMat &m : d4.action) m = p * m * pinv;
    auto [dim4, pass4] = evenness_check(d4);
    CHECK(dim4 == dim2);
    CHECK(pass4 == pass2);
}

TEST_CASE("evenness check verifies the orbifold relations") {
    ExtensionDatum d;
    d.genus = 0;
    d.multiplicities = {2, 2};
    d.dim = 2;
    // c_1 has order 3, not 2: relation c_1^2 = 1 is violated
    d.action = {QMat{{0, -1}, {1, -1}}, QMat{{0, -1}, {1, -1}}};
    CHECK_THROWS_AS(evenness_check(d), RelationViolated);
}

TEST_CASE("quasi-unipotence") {
    CHECK(quasi_unipotent_check(QMat{{1, 1}, {0, 1}}));
    CHECK(quasi_unipotent_check(QMat{{0, -1}, {1, 0}}));
    CHECK(!quasi_unipotent_check(QMat{{2, 0}, {0, Rat(1, 2)}}));
    // stability under powers
    QMat m{{0, -1}, {1, -1}}; // order 3
    CHECK(quasi_unipotent_check(m));
    CHECK(quasi_unipotent_check(m * m));
}

TEST_CASE("redundancy witness") {
    // genus 3 onto Z/2 via a single generator: witness of size 1
    Presentation p3 = surface_presentation(3);
    FiniteGroup z2 = enumerate_group({Perm({1, 0})});
    GroupHom r1 = validate_hom(p3, z2, {1, 0, 0, 0, 0, 0});
    RedundancyResult w1 = redundancy_witness(3, r1);
    CHECK(w1.found);
    CHECK(w1.witness_words.size() == 1);
    CHECK(w1.exact);
    CHECK(w1.min_generators == 1);

    // genus 2 onto (Z/2)^2: not cyclic, no witness of size < 2
    Presentation p2 = surface_presentation(2);
    std::vector<Perm> v4;
    for (const auto &v : v4_gens()) v4.emplace_back(v);
    FiniteGroup g4 = enumerate_group(v4);
    GroupHom r2 = validate_hom(p2, g4, {1, 2, 0, 0});
    RedundancyResult w2 = redundancy_witness(2, r2);
    CHECK(!w2.found);
    CHECK(w2.exact);
    CHECK(w2.min_generators == 2);

    // genus 3 onto S3: two elements generate
    std::vector<Perm> s3;
    for (const auto &v : s3_gens()) s3.emplace_back(v);
    FiniteGroup g6 = enumerate_group(s3);
    GroupHom r3 = validate_hom(p3, g6, {1, 2, 1, g6.inverse_of(2), 0, 0});
    RedundancyResult w3 = redundancy_witness(3, r3);
    CHECK(w3.found);
    CHECK(w3.witness_words.size() == 2);
}

TEST_CASE("torsion free cover search") {
    auto catalog = catalog_groups();
    auto r1 = torsion_free_cover_search(0, {2, 2, 2, 2}, catalog);
    REQUIRE(r1.has_value());
    CHECK(r1->kernel_genus == 1);

    auto r2 = torsion_free_cover_search(1, {2}, catalog);
    REQUIRE(r2.has_value());
    CHECK(r2->group_name == "Q8");
    CHECK(r2->kernel_genus == 3);

    // without PSL(2,7), no catalog group has order divisible by 42
    std::vector<CatalogEntry> small;
    for (const auto &e : catalog)
        if (e.name != "PSL27") small.push_back(e);
    auto r3 = torsion_free_cover_search(0, {2, 3, 7}, small);
    CHECK(!r3.has_value());
    // with it, the Hurwitz surjection exists and the kernel is the genus-3
    // Klein quartic: 2h - 2 = 168 / 42
    auto r4 = torsion_free_cover_search(0, {2, 3, 7}, catalog);
    REQUIRE(r4.has_value());
    CHECK(r4->group_name == "PSL27");
    CHECK(r4->kernel_genus == 3);
}

TEST_CASE("cover search respects its budget") {
    auto catalog = catalog_groups();
    CHECK_THROWS_AS(torsion_free_cover_search(1, {2}, catalog, 3), BudgetExceeded);
}

TEST_CASE("quaternion division algebras") {
    CHECK(quaternion_is_division({Rat(2), Rat(3)}));
    CHECK(!quaternion_is_division({Rat(1), Rat(1)}));
    CHECK(!quaternion_is_division({Rat(3), Rat(1)}));
    // agreement with the brute-force point search
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b) {
            bool division = quaternion_is_division({Rat(a), Rat(b)});
            bool point = quaternion_split_search({Rat(a), Rat(b)}, 60);
            CHECK(division == !point);
        }
    // rational (non-integral) parameters scale to the integral case
    CHECK(quaternion_is_division({Rat(1, 2), Rat(3, 2)}) ==
          quaternion_is_division({Rat(2), Rat(6)}));
}
