#pragma once

#include <vector>

namespace qsb {

/// Dense symmetric matrix stored row-major; only what the Gram-inverse kernel
/// constructions need.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;  // n * n, row-major

    explicit SymMatrix(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0) {}

    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

/// Eigenvalues by cyclic Jacobi rotations; fine for the small matrices here.
std::vector<double> jacobi_eigenvalues(SymMatrix m, int max_sweeps = 64);

/// Ratio of extreme absolute eigenvalues.
double condition_number(const SymMatrix& m);

/// Inverse of a symmetric positive definite matrix via Cholesky.
/// Throws std::runtime_error if the factorization breaks down.
SymMatrix spd_inverse(const SymMatrix& m);

}  // namespace qsb
