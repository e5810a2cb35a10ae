#include "prymlab/cover.hpp"

#include "prymlab/snf.hpp"

#include <cstdlib>

namespace prymlab {

int SchreierData::coset_after(int coset, int letter) const {
    int x = std::abs(letter) - 1;
    int img = gen_images[x];
    return letter > 0 ? group->mul(coset, img)
                      : group->mul(coset, group->inverse_of(img));
}

SchreierData build_cover(const Presentation &p, const GroupHom &r) {
    if (!r.surjective) throw NotSurjective();
    const FiniteGroup &g = *r.target;
    SchreierData s;
    s.group = &g;
    s.gen_images = r.images;
    s.num_base_generators = p.num_generators;
    size_t n = g.order();
    s.transversal.assign(n, Word{});
    s.chord_index.assign(n, std::vector<int>(p.num_generators, -1));

    // BFS over cosets, generators in index order; tree edges marked first.
    std::vector<bool> visited(n, false);
    std::vector<int> queue{0};
    visited[0] = true;
    std::vector<std::vector<bool>> is_tree(n, std::vector<bool>(p.num_generators, false));
    for (size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (int x = 1; x <= p.num_generators; ++x) {
            int d = g.mul(c, r.images[x - 1]);
            if (visited[d]) continue;
            visited[d] = true;
            is_tree[c][x - 1] = true;
            s.tree_edges.emplace_back(c, x);
            s.transversal[d] = word::concat(s.transversal[c], Word{x});
            queue.push_back(d);
        }
    }

    for (size_t c = 0; c < n; ++c)
        for (int x = 1; x <= p.num_generators; ++x) {
            if (is_tree[c][x - 1]) continue;
            int d = g.mul((int)c, r.images[x - 1]);
            SchreierGen sg;
            sg.coset = (int)c;
            sg.gen = x;
            sg.defining = word::concat(word::concat(s.transversal[c], Word{x}),
                                       word::inverse(s.transversal[d]));
            s.chord_index[c][x - 1] = (int)s.schreier_gens.size();
            s.schreier_gens.push_back(std::move(sg));
        }
    return s;
}

Word rewrite(const SchreierData &s, const Word &w) {
    Word out;
    int c = 0;
    for (int l : word::reduce(w)) {
        int x = std::abs(l);
        if (l > 0) {
            int idx = s.chord_index[c][x - 1];
            if (idx >= 0) out.push_back(idx + 1);
            c = s.coset_after(c, l);
        } else {
            c = s.coset_after(c, l);
            int idx = s.chord_index[c][x - 1];
            if (idx >= 0) out.push_back(-(idx + 1));
        }
    }
    if (c != 0) throw NotInKernel();
    return word::reduce(out);
}

std::vector<Int> HomologyModule::coords(const std::vector<Int> &z) const {
    std::vector<Int> out(rank, 0);
    for (size_t j = 0; j < rank; ++j)
        for (size_t i = 0; i < num_chords; ++i)
            out[j] += v(i, snf_rank + j) * z[i]; // (V^T z)_{snf_rank + j}
    return out;
}

ZMat HomologyModule::basis() const {
    ZMat b(num_chords, rank);
    for (size_t i = 0; i < num_chords; ++i)
        for (size_t j = 0; j < rank; ++j)
            b(i, j) = v_inv(snf_rank + j, i); // row snf_rank+j of V^{-1}, transposed
    return b;
}

namespace {

// Chord-exponent action matrix of the substitution sending each Schreier
// generator's defining word through `transform`, then coordinates of it.
ZMat coord_matrix_of_chord_map(const HomologyModule &m, const ZMat &chord_map) {
    ZMat b = m.basis();
    ZMat on_chords = chord_map * b; // num_chords x rank
    ZMat out(m.rank, m.rank);
    for (size_t j = 0; j < m.rank; ++j) {
        std::vector<Int> col(m.num_chords);
        for (size_t i = 0; i < m.num_chords; ++i) col[i] = on_chords(i, j);
        auto c = m.coords(col);
        for (size_t i = 0; i < m.rank; ++i) out(i, j) = c[i];
    }
    return out;
}

} // namespace

HomologyModule cover_homology(const Presentation &p, const GroupHom &r,
                              const SchreierData &s) {
    const FiniteGroup &g = *r.target;
    size_t n = g.order();
    size_t nchords = s.schreier_gens.size();

    HomologyModule m;
    m.num_chords = nchords;
    for (const auto &sg : s.schreier_gens) m.labels.emplace_back(sg.coset, sg.gen);

    // Lifted relators t_c R_j t_c^{-1}, rewritten and abelianized.
    size_t nrel = p.relators.size();
    m.relation_matrix = ZMat(n * nrel, nchords);
    size_t row = 0;
    for (size_t c = 0; c < n; ++c)
        for (size_t j = 0; j < nrel; ++j, ++row) {
            Word lifted = word::concat(word::concat(s.transversal[c], p.relators[j]),
                                       word::inverse(s.transversal[c]));
            Word rw = rewrite(s, lifted);
            auto ab = word::exponent_vector(rw, (int)nchords);
            for (size_t k = 0; k < nchords; ++k) m.relation_matrix(row, k) = ab[k];
        }

    SmithForm snf = smith_normal_form(m.relation_matrix);
    m.snf_factors = snf.invariant_factors;
    m.snf_rank = snf.rank;
    m.torsion = snf.torsion;
    m.rank = nchords - snf.rank;
    m.v = snf.v;
    m.v_inv = snf.v_inv;

    // Conjugation action: schreier gen w -> t_d w t_d^{-1}, per element d.
    for (size_t d = 0; d < n; ++d) {
        ZMat chord_map(nchords, nchords);
        for (size_t k = 0; k < nchords; ++k) {
            Word conj = word::concat(
                word::concat(s.transversal[d], s.schreier_gens[k].defining),
                word::inverse(s.transversal[d]));
            auto ab = word::exponent_vector(rewrite(s, conj), (int)nchords);
            for (size_t i = 0; i < nchords; ++i) chord_map(i, k) = ab[i];
        }
        m.g_action.push_back(coord_matrix_of_chord_map(m, chord_map));
    }
    return m;
}

QMat lift_automorphism(const Presentation &p, const GroupHom &r,
                       const SchreierData &s, const HomologyModule &m,
                       const AutDatum &a) {
    if (!in_stab(p, a, r)) throw NotInStabilizer();
    size_t nchords = s.schreier_gens.size();
    ZMat chord_map(nchords, nchords);
    for (size_t k = 0; k < nchords; ++k) {
        Word img = word::substitute(s.schreier_gens[k].defining, a.images);
        auto ab = word::exponent_vector(rewrite(s, img), (int)nchords);
        for (size_t i = 0; i < nchords; ++i) chord_map(i, k) = ab[i];
    }
    return to_rational(coord_matrix_of_chord_map(m, chord_map));
}

} // namespace prymlab
