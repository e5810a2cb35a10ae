#pragma once

#include "prymlab/matrix.hpp"

#include <optional>
#include <vector>

namespace prymlab {

// Reduced row echelon form, in place. Returns pivot column indices.
std::vector<size_t> rref(QMat &m);

size_t rank(QMat m);

// Basis of the right kernel {v : Mv = 0}, as columns of the returned matrix.
QMat kernel(const QMat &m);

// Basis of the column space, deterministic (pivot columns of the input).
QMat column_space(const QMat &m);

Rat determinant(QMat m);

std::optional<QMat> inverse(const QMat &m);

// One solution x of Mx = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const QMat &m, const std::vector<Rat> &b);

// One solution X of MX = B (column-wise), sharing a single elimination.
std::optional<QMat> solve_many(const QMat &m, const QMat &b);

// Coefficients of det(xI - M), degree-ascending: c[0] + c[1] x + ... + x^n.
std::vector<Rat> char_poly(const QMat &m);

// Basis of the common kernel of the given matrices, as columns.
QMat common_kernel(const std::vector<QMat> &mats);

// Dimension of the common kernel of the given matrices.
size_t common_kernel_dim(const std::vector<QMat> &mats);

} // namespace prymlab
