#include "cmsdisc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cmsdisc {

using cd = std::complex<double>;

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += at(i, i).real();
    return t;
}

std::vector<double> qr_solve(std::vector<double> A, std::vector<double> b, int n) {
    if (static_cast<int>(b.size()) != n || static_cast<int>(A.size()) != n * n)
        throw std::invalid_argument("qr_solve: dimension mismatch");
    // Householder QR, applying reflectors to b as we go.
    for (int k = 0; k < n - 1; ++k) {
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm = std::hypot(norm, A[i * n + k]);
        if (norm == 0.0) throw IllConditionedError("qr_solve: rank-deficient matrix");
        const double alpha = (A[k * n + k] >= 0.0) ? -norm : norm;
        // v = x - alpha e_k, stored in the column
        A[k * n + k] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k; i < n; ++i) vnorm2 += A[i * n + k] * A[i * n + k];
        if (vnorm2 == 0.0) throw IllConditionedError("qr_solve: degenerate reflector");
        for (int j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += A[i * n + k] * A[i * n + j];
            const double f = 2.0 * dot / vnorm2;
            for (int i = k; i < n; ++i) A[i * n + j] -= f * A[i * n + k];
        }
        double dot = 0.0;
        for (int i = k; i < n; ++i) dot += A[i * n + k] * b[i];
        const double f = 2.0 * dot / vnorm2;
        for (int i = k; i < n; ++i) b[i] -= f * A[i * n + k];
        A[k * n + k] = alpha;
    }
    // Back substitution on the triangular factor.
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= A[i * n + j] * x[j];
        const double diag = A[i * n + i];
        if (diag == 0.0) throw IllConditionedError("qr_solve: zero pivot");
        x[i] = acc / diag;
    }
    return x;
}

Tridiagonal tridiagonalize(const HermitianMatrix& h) {
    const int n = h.n;
    Tridiagonal t;
    t.diag.resize(n);
    t.off.assign(std::max(n - 1, 0), 0.0);
    if (n == 0) return t;

    std::vector<cd> a = h.a;  // working copy
    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    std::vector<cd> v(n), p(n);
    for (int k = 0; k < n - 2; ++k) {
        const int m = n - k - 1;  // trailing block size
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(a[idx(i, k)]);
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) {
            t.off[k] = 0.0;
            continue;
        }
        const cd x0 = a[idx(k + 1, k)];
        const cd phase = (std::abs(x0) == 0.0) ? cd(1.0, 0.0) : x0 / std::abs(x0);
        const cd beta = -phase * xnorm;

        double vnorm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            v[i] = a[idx(k + 1 + i, k)];
            if (i == 0) v[i] -= beta;
            vnorm2 += std::norm(v[i]);
        }
        t.off[k] = std::abs(beta);
        a[idx(k + 1, k)] = beta;
        a[idx(k, k + 1)] = std::conj(beta);
        for (int i = k + 2; i < n; ++i) {
            a[idx(i, k)] = 0.0;
            a[idx(k, i)] = 0.0;
        }
        if (vnorm2 == 0.0) continue;
        const double c = 2.0 / vnorm2;

        // p = c * B v over the trailing Hermitian block B = a[k+1.., k+1..]
        for (int i = 0; i < m; ++i) {
            cd acc = 0.0;
            const cd* row = &a[idx(k + 1 + i, k + 1)];
            for (int j = 0; j < m; ++j) acc += row[j] * v[j];
            p[i] = c * acc;
        }
        cd vp = 0.0;
        for (int i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
        const cd half = 0.5 * c * vp;
        for (int i = 0; i < m; ++i) p[i] -= half * v[i];  // w = p - (c/2)(v* p) v

        // B <- B - v w* - w v*
        for (int i = 0; i < m; ++i) {
            cd* row = &a[idx(k + 1 + i, k + 1)];
            const cd vi = v[i];
            const cd wi = p[i];
            for (int j = 0; j < m; ++j)
                row[j] -= vi * std::conj(p[j]) + wi * std::conj(v[j]);
        }
    }
    if (n >= 2) t.off[n - 2] = std::abs(a[idx(n - 1, n - 2)]);
    for (int i = 0; i < n; ++i) t.diag[i] = a[idx(i, i)].real();
    return t;
}

std::vector<double> tridiag_eigenvalues(Tridiagonal t) {
    const int n = static_cast<int>(t.diag.size());
    std::vector<double>& d = t.diag;
    std::vector<double> e = t.off;
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 40)
                    throw NoConvergenceError("tridiag_eigenvalues: too many QL sweeps");
                // Wilkinson-style implicit shift
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace cmsdisc
