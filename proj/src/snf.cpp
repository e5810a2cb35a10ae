#include "prymlab/snf.hpp"

#include "prymlab/linalg.hpp"

#include <stdexcept>

namespace prymlab {

namespace {

void add_row(ZMat &m, size_t dst, size_t src, const Int &f) {
    for (size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(ZMat &m, size_t dst, size_t src, const Int &f) {
    for (size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void negate_row(ZMat &m, size_t i) {
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

void negate_col(ZMat &m, size_t j) {
    for (size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

} // namespace

SmithForm smith_normal_form(const ZMat &a) {
    SmithForm s;
    size_t rows = a.rows(), cols = a.cols();
    s.d = a;
    s.u = ZMat::identity(rows);
    s.v = ZMat::identity(cols);
    ZMat &d = s.d, &u = s.u, &v = s.v;

    size_t t = 0;
    while (t < rows && t < cols) {
        // Find the pivot of minimal absolute value in the remaining block.
        size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (d(i, j) == 0) continue;
                Int av = abs(d(i, j));
                if (!found || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (d(i, t) == 0) continue;
            Int q = d(i, t) / d(t, t);
            // Round toward the nearest multiple to shrink remainders fast.
            if (abs(d(i, t) - q * d(t, t)) * 2 > abs(d(t, t)))
                q += (sgn(d(i, t)) == sgn(d(t, t))) ? 1 : -1;
            if (q != 0) {
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
            }
            if (d(i, t) != 0) dirty = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (d(t, j) == 0) continue;
            Int q = d(t, j) / d(t, t);
            if (abs(d(t, j) - q * d(t, t)) * 2 > abs(d(t, t)))
                q += (sgn(d(t, j)) == sgn(d(t, t))) ? 1 : -1;
            if (q != 0) {
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
            }
            if (d(t, j) != 0) dirty = true;
        }
        if (dirty) continue; // new, smaller entries appeared; pick pivot again
        // Pivot must divide every remaining entry for the divisibility chain.
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    add_row(d, t, i, 1);
                    add_row(u, t, i, 1);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        ++t;
    }

    s.rank = t;
    for (size_t i = 0; i < t; ++i) {
        s.invariant_factors.push_back(d(i, i));
        if (d(i, i) > 1) s.torsion.push_back(d(i, i));
    }

    // v is unimodular, so its inverse is integral.
    auto vinv = inverse(to_rational(v));
    if (!vinv) throw std::logic_error("SNF column transform not invertible");
    s.v_inv = to_integer(*vinv);
    return s;
}

} // namespace prymlab
