#pragma once

#include <cstddef>
#include <vector>

// Minimal dense real matrix support for the Fock-space oracle: row-major
// storage, matrix exponential by scaling-and-squaring, and a self-contained
// cyclic Jacobi eigensolver for symmetric matrices.

namespace gqd {

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n);
};

Matrix matmul(const Matrix& x, const Matrix& y);

// x * y^T without forming the transpose.
Matrix matmul_abt(const Matrix& x, const Matrix& y);

double inf_norm(const Matrix& m);

// exp(m) for square m via scaling-and-squaring with a Taylor series summed
// until the next term falls below 1e-14 of the accumulated result.
Matrix expm(const Matrix& m);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, returned in
// ascending order. The sweep order is fixed, so results are deterministic.
std::vector<double> jacobi_eigenvalues(Matrix m);

}  // namespace gqd
