#pragma once

#include "prymlab/matrix.hpp"

#include <vector>

namespace prymlab {

// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
// diagonal entries nonnegative, each dividing the next.
struct SmithForm {
    ZMat u, v, d;
    ZMat v_inv;
    size_t rank = 0;                  // number of nonzero diagonal entries
    std::vector<Int> invariant_factors; // the nonzero diagonal entries
    std::vector<Int> torsion;           // invariant factors > 1
};

SmithForm smith_normal_form(const ZMat &a);

} // namespace prymlab
