#pragma once

#include "prymlab/fpgroup.hpp"
#include "prymlab/matrix.hpp"
#include "prymlab/permgroup.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace prymlab {

class NotInKernel : public std::runtime_error {
public:
    NotInKernel() : std::runtime_error("word does not lie in the kernel") {}
};

class NotInStabilizer : public std::runtime_error {
public:
    NotInStabilizer() : std::runtime_error("automorphism is not in Stab(r)") {}
};

// Reidemeister-Schreier data for the kernel of a surjection r: base -> G.
// Cosets are identified with the elements of G (the kernel is normal).
struct SchreierGen {
    int coset;     // c
    int gen;       // x (1-based base generator)
    Word defining; // t_c x t_{c x}^{-1}, freely reduced
};

struct SchreierData {
    const FiniteGroup *group = nullptr;
    std::vector<int> gen_images;      // r on base generators
    int num_base_generators = 0;
    std::vector<Word> transversal;    // t_c per coset, BFS tree words
    std::vector<std::pair<int, int>> tree_edges; // (coset, gen)
    std::vector<SchreierGen> schreier_gens;
    // chord_index[c][x-1] = index into schreier_gens, or -1 for tree edges
    std::vector<std::vector<int>> chord_index;

    int coset_after(int coset, int letter) const; // follow one signed letter
};

SchreierData build_cover(const Presentation &p, const GroupHom &r);

// Reidemeister rewriting of a kernel word into a word over the Schreier
// generators (signed 1-based indices into schreier_gens).
Word rewrite(const SchreierData &s, const Word &w);

// H_1 of the cover as Z^S modulo the abelianized lifted relators.
struct HomologyModule {
    size_t num_chords = 0;
    size_t rank = 0;
    std::vector<Int> torsion;
    std::vector<std::pair<int, int>> labels; // schreier gens as (coset, gen)
    ZMat relation_matrix;                    // rows = lifted relators, cols = chords
    std::vector<Int> snf_factors;
    size_t snf_rank = 0;
    ZMat v, v_inv;                // SNF column transform on Z^S and its inverse
    std::vector<ZMat> g_action;   // conjugation matrix per element of G

    // Free-part coordinates of a chord-exponent vector.
    std::vector<Int> coords(const std::vector<Int> &z) const;
    // num_chords x rank matrix; column j = j-th basis vector in chord coords.
    ZMat basis() const;
};

HomologyModule cover_homology(const Presentation &p, const GroupHom &r,
                              const SchreierData &s);

// Action on H_1 of the lift of an automorphism in Stab(r), in the fixed basis.
QMat lift_automorphism(const Presentation &p, const GroupHom &r,
                       const SchreierData &s, const HomologyModule &m,
                       const AutDatum &a);

} // namespace prymlab
