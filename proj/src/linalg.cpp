#include "prymlab/linalg.hpp"

#include <stdexcept>

namespace prymlab {

std::vector<size_t> rref(QMat &m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        Rat inv = 1 / m(r, c);
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(QMat m) { return rref(m).size(); }

QMat kernel(const QMat &m) {
    QMat e = m;
    std::vector<size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat k(m.cols(), free_cols.size());
    for (size_t f = 0; f < free_cols.size(); ++f) {
        size_t c = free_cols[f];
        k(c, f) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -e(i, c);
    }
    return k;
}

QMat column_space(const QMat &m) {
    QMat e = m;
    std::vector<size_t> pivots = rref(e);
    QMat b(m.rows(), pivots.size());
    for (size_t j = 0; j < pivots.size(); ++j)
        for (size_t i = 0; i < m.rows(); ++i) b(i, j) = m(i, pivots[j]);
    return b;
}

Rat determinant(QMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Rat det(1);
    size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            m.swap_rows(c, p);
            det = -det;
        }
        det *= m(c, c);
        Rat inv = 1 / m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<QMat> inverse(const QMat &m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<Rat>> solve(const QMat &m, const std::vector<Rat> &b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rat> x(m.cols(), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

std::optional<QMat> solve_many(const QMat &m, const QMat &b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve_many: size mismatch");
    QMat aug(m.rows(), m.cols() + b.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (size_t j = 0; j < b.cols(); ++j) aug(i, m.cols() + j) = b(i, j);
    }
    std::vector<size_t> pivots = rref(aug);
    QMat x(m.cols(), b.cols());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= m.cols()) return std::nullopt; // inconsistent column
        for (size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, m.cols() + j);
    }
    return x;
}

std::vector<Rat> char_poly(const QMat &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
    size_t n = m.rows();
    // Evaluate det(tI - M) at t = 0..n and interpolate (Newton form).
    std::vector<Rat> xs(n + 1), ys(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        xs[k] = Rat((long)k);
        QMat a(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = (i == j ? xs[k] : Rat(0)) - m(i, j);
        ys[k] = determinant(a);
    }
    // Divided differences.
    std::vector<Rat> dd = ys;
    for (size_t lvl = 1; lvl <= n; ++lvl)
        for (size_t i = n; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    // Expand Newton form into monomial coefficients.
    std::vector<Rat> coeffs(n + 1, Rat(0));
    std::vector<Rat> basis{Rat(1)}; // product (x - x_0)...(x - x_{k-1})
    for (size_t k = 0; k <= n; ++k) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[k] * basis[j];
        if (k < n) {
            basis.push_back(Rat(0));
            for (size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = basis[j - 1] - xs[k] * basis[j];
            basis[0] = -xs[k] * basis[0];
        }
    }
    return coeffs;
}

QMat common_kernel(const std::vector<QMat> &mats) {
    if (mats.empty()) throw std::invalid_argument("common_kernel of empty list");
    size_t n = mats[0].cols();
    size_t total_rows = 0;
    for (const auto &m : mats) total_rows += m.rows();
    QMat s(total_rows, n);
    size_t r = 0;
    for (const auto &m : mats) {
        for (size_t i = 0; i < m.rows(); ++i, ++r)
            for (size_t j = 0; j < n; ++j) s(r, j) = m(i, j);
    }
    return kernel(s);
}

size_t common_kernel_dim(const std::vector<QMat> &mats) {
    if (mats.empty()) return 0;
    return common_kernel(mats).cols();
}

} // namespace prymlab
