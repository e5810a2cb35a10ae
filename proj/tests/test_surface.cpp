#include "helpers.hpp"

#include "prymlab/linalg.hpp"
#include "prymlab/surface.hpp"

#include <doctest.h>

using namespace prymlab;
using namespace prymlab::testing;

namespace {

void check_form_invariants(const CoverFixture &f, const CoveringComplex &cx,
                           const ZMat &j) {
    // chi-consistency
    CHECK(Int(2) - cx.euler_characteristic() == Int((long)f.mod.rank));
    // skew and unimodular
    CHECK(j + j.transpose() == ZMat(j.rows(), j.cols()));
    Rat det = determinant(to_rational(j));
    CHECK((det == 1 || det == -1));
    // G-invariance
    for (const ZMat &a : f.mod.g_action) CHECK(a.transpose() * j * a == j);
}

} // namespace

TEST_CASE("trivial covering complex of genus 2") {
    auto f = trivial_cover(2);
    CoveringComplex cx = covering_complex(f->pres, f->hom, f->data);
    CHECK(cx.num_vertices == 1);
    CHECK(cx.num_edges == 4);
    CHECK(cx.num_faces == 1);
    CHECK(cx.euler_characteristic() == -2);
    ZMat j = intersection_form(f->pres, f->data, cx, f->mod);
    check_form_invariants(*f, cx, j);
    // symplectically standard: basis a1, b1, a2, b2 with (a_i, b_i) = 1
    ZMat expected{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    CHECK(j == expected);
}

TEST_CASE("z2 cover complex and form") {
    auto f = make_cover(2, z2_gens(), {1, 0, 0, 0});
    CoveringComplex cx = covering_complex(f->pres, f->hom, f->data);
    CHECK(cx.num_vertices == 2);
    CHECK(cx.num_edges == 8);
    CHECK(cx.num_faces == 2);
    CHECK(cx.euler_characteristic() == -4);
    ZMat j = intersection_form(f->pres, f->data, cx, f->mod);
    CHECK(j.rows() == 6);
    check_form_invariants(*f, cx, j);
}

TEST_CASE("z5 cover complex and form") {
    auto f = make_cover(2, z5_gens(), {1, 0, 0, 0});
    CoveringComplex cx = covering_complex(f->pres, f->hom, f->data);
    CHECK(cx.euler_characteristic() == -10);
    ZMat j = intersection_form(f->pres, f->data, cx, f->mod);
    check_form_invariants(*f, cx, j);
}

TEST_CASE("orbifold bases are rejected") {
    Presentation orb = orbifold_presentation(0, {2, 2, 2, 2});
    FiniteGroup z2 = enumerate_group({Perm({1, 0})});
    GroupHom r = validate_hom(orb, z2, {1, 1, 1, 1});
    SchreierData s = build_cover(orb, r);
    CHECK_THROWS_AS(covering_complex(orb, r, s), UnsupportedBase);
}

TEST_CASE("transfer and projection") {
    auto f = make_cover(2, z2_gens(), {1, 0, 0, 0});
    CoveringComplex cx = covering_complex(f->pres, f->hom, f->data);
    ZMat j = intersection_form(f->pres, f->data, cx, f->mod);
    TransferProjection tp = transfer_projection(f->pres, f->data, f->mod);
    CHECK(tp.p * tp.t == ZMat::identity(4) * Int(2));
    // t o p = sum of the deck transformations
    ZMat sum(f->mod.rank, f->mod.rank);
    for (const ZMat &a : f->mod.g_action) sum = sum + a;
    CHECK(tp.t * tp.p == sum);
    // (t u, t v) = |G| (u, v) with the standard genus-2 base form
    ZMat base{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    CHECK(tp.t.transpose() * j * tp.t == base * Int(2));
}

TEST_CASE("trivial transfer is the identity") {
    auto f = trivial_cover(2);
    TransferProjection tp = transfer_projection(f->pres, f->data, f->mod);
    CHECK(tp.t.is_identity());
    CHECK(tp.p.is_identity());
}
