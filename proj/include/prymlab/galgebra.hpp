#pragma once

#include "prymlab/matrix.hpp"
#include "prymlab/permgroup.hpp"
#include "prymlab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace prymlab {

// An element of Q[G], coefficients indexed by the group's element list.
struct AlgebraElement {
    std::vector<Rat> c;

    bool operator==(const AlgebraElement &o) const { return c == o.c; }
};

AlgebraElement algebra_zero(const FiniteGroup &g);
AlgebraElement algebra_one(const FiniteGroup &g);
AlgebraElement algebra_add(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement algebra_sub(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement algebra_scale(const AlgebraElement &a, const Rat &s);
AlgebraElement algebra_mul(const FiniteGroup &g, const AlgebraElement &a,
                           const AlgebraElement &b);
// The involution g -> g^{-1}, extended linearly.
AlgebraElement algebra_star(const FiniteGroup &g, const AlgebraElement &a);
bool algebra_is_central(const FiniteGroup &g, const AlgebraElement &a);

class FactorizationFailure : public std::runtime_error {
public:
    FactorizationFailure()
        : std::runtime_error("could not split the center of the group algebra") {}
};

// Complete orthogonal family of primitive central idempotents of Q[G],
// deterministically ordered (descending lex on coefficients).
std::vector<AlgebraElement> central_idempotents(const FiniteGroup &g);

enum class InvolutionKind { First, Second };
enum class FirstKindType { Orthogonal, Symplectic, None };

struct ComponentStructure {
    size_t algebra_dim = 0; // dim_Q e Q[G]
    size_t center_dim = 0;  // dim_Q L
    size_t fixed_dim = 0;   // dim_Q K, fixed field of * on L
    InvolutionKind kind = InvolutionKind::First;
    FirstKindType type = FirstKindType::None; // first kind only
};

ComponentStructure component_structure(const FiniteGroup &g, const AlgebraElement &e);

struct IsotypicComponent {
    AlgebraElement e;
    QMat projector; // sum of e-coefficients times action matrices
    QMat subspace;  // basis columns of eV
    ComponentStructure structure;
    int fs_sign = 0;         // sign of sum_h trace(action of h^2 on eV)
    std::string group_label; // Sp / O / GL
};

// fs_sign of one idempotent on a module, and the trichotomy label.
std::pair<int, std::string> fs_sign_and_label(const FiniteGroup &g,
                                              const std::vector<QMat> &action,
                                              const AlgebraElement &e);

std::vector<IsotypicComponent> isotypic_split(const FiniteGroup &g,
                                              const std::vector<QMat> &action,
                                              const std::vector<AlgebraElement> &idems);

} // namespace prymlab
