#include "prymlab/prym.hpp"

#include "prymlab/linalg.hpp"

namespace prymlab {

namespace {

// X with S X = M S (the matrix of M restricted to the column span of S).
QMat restrict_to(const QMat &s, const QMat &m) {
    auto x = solve_many(s, m * s);
    if (!x) throw std::logic_error("matrix does not preserve the subspace");
    // solve_many returns one solution; S has full column rank, so verify.
    if (!(s * (*x) == m * s)) throw std::logic_error("subspace restriction failed");
    return *x;
}

} // namespace

EquivariantForm equivariant_form(const FiniteGroup &g, const std::vector<QMat> &action,
                                 const ZMat &j) {
    QMat jq = to_rational(j);
    for (const QMat &a : action)
        if (!(a.transpose() * jq * a == jq)) throw FormNotInvariant();
    EquivariantForm f;
    for (size_t i = 0; i < g.order(); ++i) f.b.push_back(jq * action[i]);
    // skew-Hermitian: B_g = -B_{g^{-1}}^T
    for (size_t i = 0; i < g.order(); ++i) {
        QMat neg = f.b[g.inverse_of((int)i)].transpose() * Rat(-1);
        if (!(f.b[i] == neg)) throw std::logic_error("form is not skew-Hermitian");
    }
    // sesquilinearity: action(h)^T B_g = B_{h^{-1} g} and B_g action(h) = B_{gh}
    for (size_t h = 0; h < g.order(); ++h)
        for (size_t i = 0; i < g.order(); ++i) {
            if (!(action[h].transpose() * f.b[i] == f.b[g.mul(g.inverse_of((int)h), (int)i)]))
                throw std::logic_error("form is not sesquilinear (left)");
            if (!(f.b[i] * action[h] == f.b[g.mul((int)i, (int)h)]))
                throw std::logic_error("form is not sesquilinear (right)");
        }
    return f;
}

PartialRep prym_matrices(const Presentation &p, const GroupHom &r, const SchreierData &s,
                         const HomologyModule &m, const ZMat &j,
                         const std::vector<IsotypicComponent> &comps,
                         const std::vector<AutDatum> &auts) {
    PartialRep rep;
    QMat jq = to_rational(j);
    for (const AutDatum &a : auts) {
        if (!in_stab(p, a, r)) throw NotInStabilizer();
        QMat full = lift_automorphism(p, r, s, m, a);
        to_integer(full); // must be integral
        Rat det = determinant(full);
        if (det != 1 && det != -1) throw std::logic_error("lift is not unimodular");
        if (!(full.transpose() * jq * full == jq))
            throw std::logic_error("lift does not preserve the intersection form");
        for (const ZMat &ga : m.g_action) {
            QMat gq = to_rational(ga);
            if (!(full * gq == gq * full))
                throw std::logic_error("lift does not commute with the G-action");
        }
        std::vector<QMat> blocks;
        for (const IsotypicComponent &c : comps) blocks.push_back(restrict_to(c.subspace, full));
        rep.names.push_back(a.name);
        rep.full_matrices.push_back(std::move(full));
        rep.component_matrices.push_back(std::move(blocks));
    }
    return rep;
}

size_t unitary_lie_dim(const FiniteGroup &g, const std::vector<QMat> &action,
                       const ZMat &j, const IsotypicComponent &comp) {
    const QMat &s = comp.subspace;
    size_t d = s.cols();
    std::vector<QMat> gens;
    for (const Perm &pg : g.generators)
        gens.push_back(restrict_to(s, action[g.index_of(pg)]));
    QMat je = s.transpose() * to_rational(j) * s;

    size_t nuk = d * d;
    auto idx = [d](size_t k, size_t l) { return k * d + l; };
    QMat cons((gens.size() + 1) * d * d, nuk);
    size_t row = 0;
    for (const QMat &a : gens)
        for (size_t i = 0; i < d; ++i)
            for (size_t jj = 0; jj < d; ++jj, ++row) {
                // (x a - a x)_{ij} = 0
                for (size_t l = 0; l < d; ++l) cons(row, idx(i, l)) += a(l, jj);
                for (size_t k = 0; k < d; ++k) cons(row, idx(k, jj)) -= a(i, k);
            }
    for (size_t i = 0; i < d; ++i)
        for (size_t jj = 0; jj < d; ++jj, ++row) {
            // (x^T je + je x)_{ij} = 0
            for (size_t k = 0; k < d; ++k) {
                cons(row, idx(k, i)) += je(k, jj);
                cons(row, idx(k, jj)) += je(i, k);
            }
        }
    return kernel(cons).cols();
}

size_t commutant_dim(const std::vector<QMat> &mats) {
    if (mats.empty()) return 0;
    size_t d = mats[0].rows();
    auto idx = [d](size_t k, size_t l) { return k * d + l; };
    QMat cons(mats.size() * d * d, d * d);
    size_t row = 0;
    for (const QMat &a : mats)
        for (size_t i = 0; i < d; ++i)
            for (size_t jj = 0; jj < d; ++jj, ++row) {
                for (size_t l = 0; l < d; ++l) cons(row, idx(i, l)) += a(l, jj);
                for (size_t k = 0; k < d; ++k) cons(row, idx(k, jj)) -= a(i, k);
            }
    return kernel(cons).cols();
}

size_t invariant_vector_dim(const std::vector<QMat> &mats) {
    if (mats.empty()) return 0;
    std::vector<QMat> diffs;
    for (const QMat &m : mats) diffs.push_back(m - QMat::identity(m.rows()));
    return common_kernel_dim(diffs);
}

size_t invariant_bilinear_dim(const std::vector<QMat> &mats) {
    if (mats.empty()) return 0;
    size_t d = mats[0].rows();
    auto idx = [d](size_t k, size_t l) { return k * d + l; };
    QMat cons(mats.size() * d * d, d * d);
    size_t row = 0;
    for (const QMat &m : mats)
        for (size_t i = 0; i < d; ++i)
            for (size_t jj = 0; jj < d; ++jj, ++row) {
                // (m^T b m - b)_{ij} = 0
                for (size_t k = 0; k < d; ++k)
                    for (size_t l = 0; l < d; ++l)
                        cons(row, idx(k, l)) += m(k, i) * m(l, jj);
                cons(row, idx(i, jj)) -= 1;
            }
    return kernel(cons).cols();
}

} // namespace prymlab
