#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmsdisc {

struct IllConditionedError : std::runtime_error {
    explicit IllConditionedError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense row-major Hermitian matrix.
struct HermitianMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;  // n*n, a[i*n+j]

    explicit HermitianMatrix(int dim = 0) : n(dim), a(static_cast<size_t>(dim) * dim) {}
    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a[static_cast<size_t>(i) * n + j];
    }
    double trace_real() const;
};

// Solve the square system A x = b by Householder QR. A is row-major n x n,
// consumed by the factorization.
std::vector<double> qr_solve(std::vector<double> A, std::vector<double> b, int n);

struct Tridiagonal {
    std::vector<double> diag;  // length n
    std::vector<double> off;   // length n-1, nonnegative
};

// Unitary reduction of a Hermitian matrix to real symmetric tridiagonal form.
Tridiagonal tridiagonalize(const HermitianMatrix& h);

// Eigenvalues of a symmetric tridiagonal matrix, ascending; implicit-shift QL.
// Throws NoConvergenceError after 40 sweeps on a single eigenvalue.
std::vector<double> tridiag_eigenvalues(Tridiagonal t);

}  // namespace cmsdisc
