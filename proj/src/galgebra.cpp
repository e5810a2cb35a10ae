#include "prymlab/galgebra.hpp"

#include "prymlab/linalg.hpp"
#include "prymlab/poly.hpp"

#include <algorithm>

namespace prymlab {

AlgebraElement algebra_zero(const FiniteGroup &g) {
    return AlgebraElement{std::vector<Rat>(g.order(), Rat(0))};
}

AlgebraElement algebra_one(const FiniteGroup &g) {
    AlgebraElement a = algebra_zero(g);
    a.c[0] = 1;
    return a;
}

AlgebraElement algebra_add(const AlgebraElement &a, const AlgebraElement &b) {
    AlgebraElement r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

AlgebraElement algebra_sub(const AlgebraElement &a, const AlgebraElement &b) {
    AlgebraElement r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

AlgebraElement algebra_scale(const AlgebraElement &a, const Rat &s) {
    AlgebraElement r = a;
    for (auto &x : r.c) x *= s;
    return r;
}

AlgebraElement algebra_mul(const FiniteGroup &g, const AlgebraElement &a,
                           const AlgebraElement &b) {
    AlgebraElement r{std::vector<Rat>(g.order(), Rat(0))};
    for (size_t i = 0; i < g.order(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < g.order(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[g.mul((int)i, (int)j)] += a.c[i] * b.c[j];
        }
    }
    return r;
}

AlgebraElement algebra_star(const FiniteGroup &g, const AlgebraElement &a) {
    AlgebraElement r{std::vector<Rat>(g.order(), Rat(0))};
    for (size_t i = 0; i < g.order(); ++i) r.c[g.inverse_of((int)i)] = a.c[i];
    return r;
}

bool algebra_is_central(const FiniteGroup &g, const AlgebraElement &a) {
    for (const auto &cls : g.conjugacy_classes)
        for (int x : cls)
            if (a.c[x] != a.c[cls[0]]) return false;
    return true;
}

namespace {

AlgebraElement class_sum(const FiniteGroup &g, const std::vector<int> &cls) {
    AlgebraElement a = algebra_zero(g);
    for (int x : cls) a.c[x] = 1;
    return a;
}

// Horner evaluation, constant term times the local identity `one`.
AlgebraElement eval_in_algebra(const FiniteGroup &g, const QPoly &p,
                               const AlgebraElement &z, const AlgebraElement &one) {
    AlgebraElement acc = algebra_zero(g);
    for (size_t i = p.size(); i-- > 0;) {
        acc = algebra_mul(g, acc, z);
        acc = algebra_add(acc, algebra_scale(one, p[i]));
    }
    return acc;
}

// Minimal polynomial of z in the unital algebra with identity `one`
// (z assumed to satisfy z = one * z = z * one).
QPoly minimal_polynomial(const FiniteGroup &g, const AlgebraElement &z,
                         const AlgebraElement &one) {
    size_t n = g.order();
    std::vector<AlgebraElement> powers{one};
    for (;;) {
        size_t k = powers.size();
        QMat m(n, k + 1);
        AlgebraElement next = algebra_mul(g, powers.back(), z);
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < n; ++i) m(i, j) = powers[j].c[i];
        for (size_t i = 0; i < n; ++i) m(i, k) = -next.c[i];
        // next = sum c_j powers[j]?  Solve m * (c, 1) = 0 form.
        QMat lhs(n, k);
        std::vector<Rat> rhs(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < k; ++j) lhs(i, j) = powers[j].c[i];
            rhs[i] = next.c[i];
        }
        auto sol = solve(lhs, rhs);
        if (sol) {
            QPoly p(k + 1);
            for (size_t j = 0; j < k; ++j) p[j] = -(*sol)[j];
            p[k] = 1;
            return p;
        }
        powers.push_back(std::move(next));
    }
}

size_t subalgebra_dim(const FiniteGroup &g, const AlgebraElement &e,
                      const std::vector<AlgebraElement> &span) {
    QMat m(g.order(), span.size());
    for (size_t j = 0; j < span.size(); ++j) {
        AlgebraElement prod = algebra_mul(g, e, span[j]);
        for (size_t i = 0; i < g.order(); ++i) m(i, j) = prod.c[i];
    }
    return rank(m);
}

// Deterministic candidate central elements for splitting e * Center.
std::vector<AlgebraElement> splitting_candidates(const FiniteGroup &g) {
    std::vector<AlgebraElement> out;
    std::vector<AlgebraElement> sums;
    for (const auto &cls : g.conjugacy_classes) sums.push_back(class_sum(g, cls));
    for (size_t i = 1; i < sums.size(); ++i) out.push_back(sums[i]);
    // small weighted combinations of class sums
    for (long t = 1; out.size() < 100 && t <= 120; ++t) {
        AlgebraElement z = algebra_zero(g);
        long w = 1;
        for (size_t j = 1; j < sums.size(); ++j) {
            w = (w * (t + 1)) % 251;
            z = algebra_add(z, algebra_scale(sums[j], Rat(w)));
        }
        out.push_back(std::move(z));
    }
    return out;
}

void split_idempotent(const FiniteGroup &g, const AlgebraElement &e, size_t center_dim,
                      const std::vector<AlgebraElement> &candidates,
                      std::vector<AlgebraElement> &out) {
    std::vector<AlgebraElement> center_sums;
    for (const auto &cls : g.conjugacy_classes) center_sums.push_back(class_sum(g, cls));
    for (const AlgebraElement &cand : candidates) {
        AlgebraElement z = algebra_mul(g, e, cand);
        QPoly mp = minimal_polynomial(g, z, e);
        auto factors = poly::factor(mp);
        if (factors.size() == 1 && factors[0].second == 1) {
            if (poly::degree(factors[0].first) == (int)center_dim) {
                out.push_back(e); // e * Center is a field: e is primitive
                return;
            }
            continue; // z does not generate; try the next candidate
        }
        // CRT idempotents from the distinct irreducible factors of mp.
        std::vector<AlgebraElement> parts;
        AlgebraElement total = algebra_zero(g);
        bool ok = true;
        for (const auto &[f, mult] : factors) {
            if (mult != 1) {
                ok = false; // not squarefree: z unusable in a semisimple center
                break;
            }
            QPoly u = poly::divmod(mp, f).first;
            auto [gg, s, t] = poly::extended_gcd(u, f);
            if (poly::degree(gg) != 0) {
                ok = false;
                break;
            }
            QPoly uw = poly::divmod(poly::mul(u, s), mp).second;
            AlgebraElement ei = eval_in_algebra(g, uw, z, e);
            if (!(algebra_mul(g, ei, ei) == ei)) throw FactorizationFailure();
            total = algebra_add(total, ei);
            parts.push_back(std::move(ei));
        }
        if (!ok) continue;
        if (!(total == e)) throw FactorizationFailure();
        for (const AlgebraElement &ei : parts) {
            size_t d = subalgebra_dim(g, ei, center_sums);
            split_idempotent(g, ei, d, candidates, out);
        }
        return;
    }
    throw FactorizationFailure();
}

} // namespace

std::vector<AlgebraElement> central_idempotents(const FiniteGroup &g) {
    std::vector<AlgebraElement> out;
    auto candidates = splitting_candidates(g);
    split_idempotent(g, algebra_one(g), g.conjugacy_classes.size(), candidates, out);
    std::sort(out.begin(), out.end(),
              [](const AlgebraElement &a, const AlgebraElement &b) { return a.c > b.c; });
    // full family sanity: orthogonal, complete, central
    AlgebraElement sum = algebra_zero(g);
    for (const auto &e : out) {
        if (!algebra_is_central(g, e)) throw FactorizationFailure();
        sum = algebra_add(sum, e);
    }
    if (!(sum == algebra_one(g))) throw FactorizationFailure();
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!(algebra_mul(g, out[i], out[j]) == algebra_zero(g)))
                throw FactorizationFailure();
    return out;
}

ComponentStructure component_structure(const FiniteGroup &g, const AlgebraElement &e) {
    size_t n = g.order();
    // Basis of A = e Q[G] from the columns e * g.
    QMat cols(n, n);
    for (size_t j = 0; j < n; ++j) {
        AlgebraElement gj = algebra_zero(g);
        gj.c[j] = 1;
        AlgebraElement prod = algebra_mul(g, e, gj);
        for (size_t i = 0; i < n; ++i) cols(i, j) = prod.c[i];
    }
    QMat basis = column_space(cols);
    size_t dim = basis.cols();

    auto basis_elem = [&](size_t j) {
        AlgebraElement a = algebra_zero(g);
        for (size_t i = 0; i < n; ++i) a.c[i] = basis(i, j);
        return a;
    };

    // Center of A: x in A commuting with every group generator's image in A.
    std::vector<QMat> comm_constraints;
    for (const Perm &gen : g.generators) {
        size_t gi = g.index_of(gen);
        AlgebraElement ge = algebra_zero(g);
        ge.c[gi] = 1;
        QMat cm(n, dim);
        for (size_t j = 0; j < dim; ++j) {
            AlgebraElement bj = basis_elem(j);
            AlgebraElement d = algebra_sub(algebra_mul(g, bj, ge), algebra_mul(g, ge, bj));
            for (size_t i = 0; i < n; ++i) cm(i, j) = d.c[i];
        }
        comm_constraints.push_back(std::move(cm));
    }
    QMat center_coords = common_kernel(comm_constraints);
    size_t center_dim = center_coords.cols();

    // Involution on the center: kind and fixed field.
    // center basis vectors in Q[G] coordinates:
    QMat center_basis(n, center_dim);
    for (size_t j = 0; j < center_dim; ++j)
        for (size_t i = 0; i < n; ++i) {
            Rat v(0);
            for (size_t k = 0; k < dim; ++k) v += basis(i, k) * center_coords(k, j);
            center_basis(i, j) = v;
        }
    // fixed space of * on the center
    QMat fix(n, center_dim);
    for (size_t j = 0; j < center_dim; ++j) {
        AlgebraElement a = algebra_zero(g);
        for (size_t i = 0; i < n; ++i) a.c[i] = center_basis(i, j);
        AlgebraElement d = algebra_sub(algebra_star(g, a), a);
        for (size_t i = 0; i < n; ++i) fix(i, j) = d.c[i];
    }
    size_t fixed_dim = kernel(fix).cols();

    ComponentStructure cs;
    cs.algebra_dim = dim;
    cs.center_dim = center_dim;
    cs.fixed_dim = fixed_dim;
    cs.kind = (fixed_dim < center_dim) ? InvolutionKind::Second : InvolutionKind::First;
    cs.type = FirstKindType::None;
    if (cs.kind == InvolutionKind::First) {
        // symmetric part of A under *
        QMat sym(n, dim);
        for (size_t j = 0; j < dim; ++j) {
            AlgebraElement bj = basis_elem(j);
            AlgebraElement d = algebra_sub(algebra_star(g, bj), bj);
            for (size_t i = 0; i < n; ++i) sym(i, j) = d.c[i];
        }
        size_t sym_dim = kernel(sym).cols();
        // dim_L A = n0^2, symmetric dim is [L:Q] * n0(n0 +- 1)/2
        size_t n0 = 0;
        while (n0 * n0 < dim / center_dim) ++n0;
        if (n0 * n0 != dim / center_dim)
            throw std::logic_error("component dimension is not a square over its center");
        if (sym_dim == center_dim * n0 * (n0 + 1) / 2)
            cs.type = FirstKindType::Orthogonal;
        else if (sym_dim == center_dim * n0 * (n0 - 1) / 2)
            cs.type = FirstKindType::Symplectic;
        else
            throw std::logic_error("symmetric part has unexpected dimension");
    }
    return cs;
}

std::pair<int, std::string> fs_sign_and_label(const FiniteGroup &g,
                                              const std::vector<QMat> &action,
                                              const AlgebraElement &e) {
    size_t dim = action[0].rows();
    QMat proj(dim, dim);
    for (size_t i = 0; i < g.order(); ++i)
        if (e.c[i] != 0) proj = proj + action[i] * e.c[i];
    Rat s(0);
    for (size_t h = 0; h < g.order(); ++h) {
        int h2 = g.mul((int)h, (int)h);
        s += (action[h2] * proj).trace();
    }
    int sign = sign_of(s);
    std::string label = sign > 0 ? "Sp" : (sign < 0 ? "O" : "GL");
    return {sign, label};
}

std::vector<IsotypicComponent> isotypic_split(const FiniteGroup &g,
                                              const std::vector<QMat> &action,
                                              const std::vector<AlgebraElement> &idems) {
    std::vector<IsotypicComponent> out;
    size_t dim = action[0].rows();
    size_t total = 0;
    for (const auto &e : idems) {
        IsotypicComponent comp;
        comp.e = e;
        comp.projector = QMat(dim, dim);
        for (size_t i = 0; i < g.order(); ++i)
            if (e.c[i] != 0) comp.projector = comp.projector + action[i] * e.c[i];
        comp.subspace = column_space(comp.projector);
        comp.structure = component_structure(g, e);
        auto [sign, label] = fs_sign_and_label(g, action, e);
        comp.fs_sign = sign;
        comp.group_label = label;
        total += comp.subspace.cols();
        out.push_back(std::move(comp));
    }
    if (total != dim) throw std::logic_error("isotypic dimensions do not sum to dim V");
    return out;
}

} // namespace prymlab
