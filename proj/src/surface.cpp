#include "prymlab/surface.hpp"

#include "prymlab/linalg.hpp"

#include <cstdlib>
#include <map>

namespace prymlab {

namespace {

size_t edge_index(int coset, int gen, int two_g) { return (size_t)coset * two_g + gen - 1; }

// Signed edge-incidence vector of the walk of w starting at coset 0.
std::vector<Int> edge_vector(const SchreierData &s, const Word &w, int two_g) {
    std::vector<Int> vec(s.group->order() * two_g, 0);
    int v = 0;
    for (int l : w) {
        int x = std::abs(l);
        if (l > 0) {
            vec[edge_index(v, x, two_g)] += 1;
            v = s.coset_after(v, l);
        } else {
            v = s.coset_after(v, l);
            vec[edge_index(v, x, two_g)] -= 1;
        }
    }
    return vec;
}

// Retrace the faces of the oriented surface defined by the rotation system:
// after arriving through a dart, depart through its rotation successor.
// Returns the number of traced faces, or -1 if any face length is not 4g.
int trace_faces(const CoveringComplex &cx) {
    std::map<std::pair<size_t, int>, std::pair<int, size_t>> position; // dart -> (vertex, slot)
    for (size_t v = 0; v < cx.num_vertices; ++v)
        for (size_t i = 0; i < cx.ribbon[v].size(); ++i)
            position[cx.ribbon[v][i]] = {(int)v, i};

    std::map<std::pair<size_t, int>, bool> used;
    size_t expected_len = 4 * (size_t)cx.genus;
    int faces = 0;
    for (const auto &[start, pos] : position) {
        if (used[start]) continue;
        auto dart = start;
        size_t len = 0;
        do {
            used[dart] = true;
            ++len;
            // travel the directed dart to its other end
            auto [tail, head] = cx.edge_ends[dart.first];
            std::pair<size_t, int> arrival =
                dart.second > 0 ? std::make_pair(dart.first, -1)
                                : std::make_pair(dart.first, 1);
            auto it = position.find(arrival);
            if (it == position.end()) return -1;
            auto [v, slot] = it->second;
            const auto &rot = cx.ribbon[v];
            dart = rot[(slot + 1) % rot.size()];
            if (len > expected_len) return -1;
        } while (dart != start);
        if (len != expected_len) return -1;
        ++faces;
    }
    return faces;
}

} // namespace

CoveringComplex covering_complex(const Presentation &p, const GroupHom &r,
                                 const SchreierData &s) {
    if (p.kind != Presentation::Kind::Surface || p.genus < 1) throw UnsupportedBase();
    const FiniteGroup &g = *r.target;
    int two_g = 2 * p.genus;
    CoveringComplex cx;
    cx.genus = p.genus;
    cx.num_vertices = g.order();
    cx.num_edges = g.order() * two_g;
    cx.num_faces = g.order();
    cx.edge_ends.resize(cx.num_edges);
    for (size_t c = 0; c < g.order(); ++c)
        for (int x = 1; x <= two_g; ++x)
            cx.edge_ends[edge_index((int)c, x, two_g)] = {(int)c, s.coset_after((int)c, x)};

    const Word &rel = p.relators[0];
    cx.faces.resize(cx.num_faces);
    for (size_t c = 0; c < g.order(); ++c) {
        int v = (int)c;
        for (int l : rel) {
            int x = std::abs(l);
            if (l > 0) {
                cx.faces[c].emplace_back(edge_index(v, x, two_g), 1);
                v = s.coset_after(v, l);
            } else {
                v = s.coset_after(v, l);
                cx.faces[c].emplace_back(edge_index(v, x, two_g), -1);
            }
        }
        if (v != (int)c) throw std::logic_error("face boundary does not close");
    }

    // Rotation system: the base vertex sees one departure dart per relator
    // letter, in relator order; an unbranched cover lifts that cyclic order
    // verbatim to every coset.
    cx.ribbon.resize(cx.num_vertices);
    for (size_t v = 0; v < g.order(); ++v)
        for (int l : rel) {
            int x = std::abs(l);
            if (l > 0) {
                cx.ribbon[v].emplace_back(edge_index((int)v, x, two_g), 1);
            } else {
                int u = s.coset_after((int)v, -l); // edge (u, x) ends at v
                cx.ribbon[v].emplace_back(edge_index(u, x, two_g), -1);
            }
        }
    if (trace_faces(cx) != (int)cx.num_faces)
        throw std::logic_error("rotation system does not match the face structure");

    if (cx.euler_characteristic() != Int((long)g.order()) * (2 - two_g))
        throw std::logic_error("Euler characteristic mismatch");
    return cx;
}

ZMat intersection_form(const Presentation &p, const SchreierData &s,
                       const CoveringComplex &cx, const HomologyModule &m) {
    int two_g = 2 * p.genus;
    size_t big_l = 4 * (size_t)p.genus; // face boundary length
    size_t nf = cx.num_faces, ne = cx.num_edges;

    // Subdivide each face with edge midpoints and a center, ranking the
    // vertices original < midpoint < center so every triangle is an ordered
    // simplex. 1-simplices: two half-edges per edge, one spoke per polygon
    // corner, one mid-spoke per boundary position. The quad of boundary dart
    // p in face f splits into [v_p, M, C] - [v_{p+1}, M, C] (signs from the
    // counterclockwise face orientation).
    auto half = [&](size_t e, bool head_side) { return 2 * e + (head_side ? 1 : 0); };
    auto corner_spoke = [&](size_t f, size_t pos) { return 2 * ne + f * big_l + pos % big_l; };
    auto mid_spoke = [&](size_t f, size_t pos) { return 2 * ne + nf * big_l + f * big_l + pos; };
    size_t unknowns = 2 * ne + 2 * nf * big_l;

    // Cocycle condition on every triangle ([x,y,z]: xi(yz) - xi(xz) + xi(xy) = 0)
    // plus prescribed periods on the chord fundamental cycles.
    QMat a(2 * nf * big_l + m.num_chords, unknowns);
    QMat b(2 * nf * big_l + m.num_chords, m.rank);
    size_t row = 0;
    for (size_t f = 0; f < nf; ++f) {
        int v = (int)f;
        for (size_t pos = 0; pos < big_l; ++pos) {
            auto [e, sign] = cx.faces[f][pos];
            bool forward = sign > 0;
            // [v_p, M, C]
            a(row, mid_spoke(f, pos)) += 1;
            a(row, corner_spoke(f, pos)) -= 1;
            a(row, half(e, !forward)) += 1;
            ++row;
            // [v_{p+1}, M, C]
            a(row, mid_spoke(f, pos)) += 1;
            a(row, corner_spoke(f, pos + 1)) -= 1;
            a(row, half(e, forward)) += 1;
            ++row;
            v = forward ? cx.edge_ends[e].second : cx.edge_ends[e].first;
        }
        if (v != (int)f) throw std::logic_error("face walk does not close");
    }
    for (size_t k = 0; k < m.num_chords; ++k) {
        // traversing an edge forward contributes [tail,M] - [head,M]
        auto cyc = edge_vector(s, s.schreier_gens[k].defining, two_g);
        for (size_t e = 0; e < ne; ++e) {
            a(row, half(e, false)) += Rat(cyc[e]);
            a(row, half(e, true)) -= Rat(cyc[e]);
        }
        for (size_t i = 0; i < m.rank; ++i) b(row, i) = Rat(m.v(k, m.snf_rank + i));
        ++row;
    }
    auto x = solve_many(a, b);
    if (!x) throw std::logic_error("dual cocycle system inconsistent");

    // Cup product against the fundamental class:
    // (xi_i u xi_k)([x,y,z]) = xi_i([x,y]) xi_k([y,z]).
    QMat j(m.rank, m.rank);
    for (size_t f = 0; f < nf; ++f)
        for (size_t pos = 0; pos < big_l; ++pos) {
            auto [e, sign] = cx.faces[f][pos];
            bool forward = sign > 0;
            for (size_t i = 0; i < m.rank; ++i) {
                Rat vi = (*x)(half(e, !forward), i) - (*x)(half(e, forward), i);
                if (vi == 0) continue;
                for (size_t k = 0; k < m.rank; ++k)
                    j(i, k) += vi * (*x)(mid_spoke(f, pos), k);
            }
        }

    // j is the cup pairing on H^1 written in the basis dual to the homology
    // basis; the intersection matrix on homology is its negative inverse.
    QMat neg_id(m.rank, m.rank);
    for (size_t i = 0; i < m.rank; ++i) neg_id(i, i) = -1;
    auto inv = solve_many(j, neg_id);
    if (!inv) throw std::logic_error("cup pairing is degenerate");
    return to_integer(*inv);
}

TransferProjection transfer_projection(const Presentation &p, const SchreierData &s,
                                       const HomologyModule &m) {
    int two_g = 2 * p.genus;
    const FiniteGroup &g = *s.group;
    TransferProjection tp;
    tp.t = ZMat(m.rank, two_g);
    for (int x = 1; x <= two_g; ++x) {
        std::vector<Int> z(m.num_chords, 0);
        for (size_t c = 0; c < g.order(); ++c) {
            int k = s.chord_index[c][x - 1];
            if (k >= 0) z[k] += 1;
        }
        auto co = m.coords(z);
        for (size_t i = 0; i < m.rank; ++i) tp.t(i, x - 1) = co[i];
    }
    ZMat p_chords(two_g, m.num_chords);
    for (size_t k = 0; k < m.num_chords; ++k) {
        auto ab = word::exponent_vector(s.schreier_gens[k].defining, two_g);
        for (int i = 0; i < two_g; ++i) p_chords(i, k) = ab[i];
    }
    tp.p = p_chords * m.basis();
    return tp;
}

} // namespace prymlab
