#pragma once

#include "prymlab/cover.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace prymlab {

class UnsupportedBase : public std::runtime_error {
public:
    UnsupportedBase() : std::runtime_error("covering complex requires a surface base") {}
};

// The cover as a cellular complex. Vertices = cosets; edge (c, x) has index
// c * 2g + (x - 1); faces are the |G| lifts of the 4g-gon.
struct CoveringComplex {
    int genus = 0;
    size_t num_vertices = 0, num_edges = 0, num_faces = 0;
    std::vector<std::pair<int, int>> edge_ends;              // (tail, head) per edge
    std::vector<std::vector<std::pair<size_t, int>>> faces;  // (edge, +-1) boundary darts
    std::vector<std::vector<std::pair<size_t, int>>> ribbon; // per vertex, cyclic darts
                                                             // (+1 = outgoing, -1 = incoming)
    Int euler_characteristic() const {
        return Int((long)num_vertices) - Int((long)num_edges) + Int((long)num_faces);
    }
};

CoveringComplex covering_complex(const Presentation &p, const GroupHom &r,
                                 const SchreierData &s);

// Intersection form on the fixed H_1 basis of the cover.
ZMat intersection_form(const Presentation &p, const SchreierData &s,
                       const CoveringComplex &cx, const HomologyModule &m);

struct TransferProjection {
    ZMat t; // base H_1 -> cover H_1 (rank x 2g)
    ZMat p; // cover H_1 -> base H_1 (2g x rank)
};

TransferProjection transfer_projection(const Presentation &p, const SchreierData &s,
                                       const HomologyModule &m);

} // namespace prymlab
