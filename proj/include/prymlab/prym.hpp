#pragma once

#include "prymlab/cover.hpp"
#include "prymlab/galgebra.hpp"
#include "prymlab/surface.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace prymlab {

class FormNotInvariant : public std::runtime_error {
public:
    FormNotInvariant() : std::runtime_error("intersection form is not G-invariant") {}
};

// The Q[G]-valued pairing <u,v> = sum_g (u, g v) g, stored as its
// coefficient matrices B_g = J * action(g).
struct EquivariantForm {
    std::vector<QMat> b; // one matrix per group element
};

// Builds B and verifies sesquilinearity and skew-Hermitian symmetry exactly.
EquivariantForm equivariant_form(const FiniteGroup &g, const std::vector<QMat> &action,
                                 const ZMat &j);

struct PartialRep {
    std::vector<std::string> names;
    std::vector<QMat> full_matrices;
    // component_matrices[a][c] = block of automorphism a on component c
    std::vector<std::vector<QMat>> component_matrices;
};

// Lifts each automorphism, restricts to each isotypic block, and verifies the
// PartialRep invariants (form preservation, commutation with G, det = +-1).
PartialRep prym_matrices(const Presentation &p, const GroupHom &r, const SchreierData &s,
                         const HomologyModule &m, const ZMat &j,
                         const std::vector<IsotypicComponent> &comps,
                         const std::vector<AutDatum> &auts);

// dim_Q { x : x commutes with the G-action on eV and x^T J_e + J_e x = 0 }.
size_t unitary_lie_dim(const FiniteGroup &g, const std::vector<QMat> &action,
                       const ZMat &j, const IsotypicComponent &comp);

// Necessary-condition diagnostics for the group generated by a matrix set.
size_t commutant_dim(const std::vector<QMat> &mats);
size_t invariant_vector_dim(const std::vector<QMat> &mats);
size_t invariant_bilinear_dim(const std::vector<QMat> &mats);

} // namespace prymlab
