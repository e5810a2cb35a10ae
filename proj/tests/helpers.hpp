#pragma once

#include "prymlab/cover.hpp"
#include "prymlab/fpgroup.hpp"
#include "prymlab/permgroup.hpp"

#include <memory>
#include <vector>

namespace prymlab::testing {

// A cover fixture owns the group, so the internal pointers stay valid.
struct CoverFixture {
    FiniteGroup group;
    Presentation pres;
    GroupHom hom;
    SchreierData data;
    HomologyModule mod;

    std::vector<QMat> rational_action() const {
        std::vector<QMat> out;
        for (const ZMat &a : mod.g_action) out.push_back(to_rational(a));
        return out;
    }
};

inline std::unique_ptr<CoverFixture> make_cover(int genus,
                                                const std::vector<std::vector<int>> &gens,
                                                const std::vector<int> &images) {
    auto f = std::make_unique<CoverFixture>();
    std::vector<Perm> perms;
    for (const auto &g : gens) perms.emplace_back(g);
    f->group = enumerate_group(perms);
    f->pres = surface_presentation(genus);
    f->hom = validate_hom(f->pres, f->group, images);
    f->data = build_cover(f->pres, f->hom);
    f->mod = cover_homology(f->pres, f->hom, f->data);
    return f;
}

// the catalog generators used throughout the tests
inline std::vector<std::vector<int>> z2_gens() { return {{1, 0}}; }
inline std::vector<std::vector<int>> z3_gens() { return {{1, 2, 0}}; }
inline std::vector<std::vector<int>> z5_gens() { return {{1, 2, 3, 4, 0}}; }
inline std::vector<std::vector<int>> v4_gens() { return {{1, 0, 2, 3}, {0, 1, 3, 2}}; }
inline std::vector<std::vector<int>> s3_gens() { return {{1, 0, 2}, {1, 2, 0}}; }
inline std::vector<std::vector<int>> q8_gens() {
    return {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}};
}
inline std::vector<std::vector<int>> trivial_gens() { return {{0}}; }

inline std::unique_ptr<CoverFixture> trivial_cover(int genus) {
    return make_cover(genus, trivial_gens(), std::vector<int>(2 * genus, 0));
}

// deterministic generator for sampled property checks
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    int next_in(int n) { return (int)(next() % (std::uint64_t)n); }
};

} // namespace prymlab::testing
