#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "opmean/matrix.hpp"

namespace opmean {

struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending
    Matrix eigenvectors;             // orthogonal, columns match eigenvalues

    Matrix reconstruct() const {
        const int n = eigenvectors.dim();
        Matrix d = Matrix::diagonal(eigenvalues);
        return matmul(matmul(eigenvectors, d), transpose(eigenvectors));
    }
};

// Cyclic Jacobi for dense symmetric matrices.  At the dimensions this library
// targets it reaches essentially machine-precision reconstruction, and it is
// fully deterministic: no pivot heuristics, fixed sweep order.
inline EigenDecomposition eigen_decompose(const Matrix &a, double sym_tol = 1e-12) {
    require_symmetric(a, "eigen_decompose", sym_tol);
    const int n = a.dim();
    Matrix w = symmetrize(a);
    Matrix v = Matrix::identity(n);

    if (n > 1) {
        const double frob = std::max(frobenius_norm(w), 1e-300);
        const int max_sweeps = 64;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            double off = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) off += 2.0 * w(i, j) * w(i, j);
            if (std::sqrt(off) <= 1e-15 * frob) break;

            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = w(p, q);
                    if (std::abs(apq) <= 1e-300) continue;
                    const double app = w(p, p);
                    const double aqq = w(q, q);
                    const double theta = 0.5 * (aqq - app) / apq;
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);

                    w(p, p) = app - t * apq;
                    w(q, q) = aqq + t * apq;
                    w(p, q) = 0.0;
                    w(q, p) = 0.0;
                    for (int k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        const double akp = w(k, p);
                        const double akq = w(k, q);
                        w(k, p) = akp - s * (akq + tau * akp);
                        w(p, k) = w(k, p);
                        w(k, q) = akq + s * (akp - tau * akq);
                        w(q, k) = w(k, q);
                    }
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v(k, p);
                        const double vkq = v(k, q);
                        v(k, p) = vkp - s * (vkq + tau * vkp);
                        v(k, q) = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return w(i, i) < w(j, j); });

    EigenDecomposition dec;
    dec.eigenvalues.resize(static_cast<std::size_t>(n));
    dec.eigenvectors = Matrix(n);
    for (int col = 0; col < n; ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        dec.eigenvalues[static_cast<std::size_t>(col)] = w(src, src);
        // fix the sign so the decomposition (not just the spectrum) is deterministic
        int imax = 0;
        double amax = 0.0;
        for (int k = 0; k < n; ++k) {
            if (std::abs(v(k, src)) > amax) {
                amax = std::abs(v(k, src));
                imax = k;
            }
        }
        const double sign = v(imax, src) >= 0.0 ? 1.0 : -1.0;
        for (int k = 0; k < n; ++k) dec.eigenvectors(k, col) = sign * v(k, src);
    }
    return dec;
}

inline double min_eigenvalue(const Matrix &a) {
    return eigen_decompose(a).eigenvalues.front();
}

inline double max_eigenvalue(const Matrix &a) {
    return eigen_decompose(a).eigenvalues.back();
}

// spectral norm of a symmetric matrix
inline double spectral_norm(const Matrix &a) {
    const EigenDecomposition d = eigen_decompose(a);
    return std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
}

} // namespace opmean
