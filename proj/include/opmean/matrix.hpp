#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "opmean/errors.hpp"

namespace opmean {

// Dense square real matrix, row-major.  Everything in this library is a
// square matrix of modest dimension (<= 64), so no attempt is made at a
// BLAS-grade kernel; clarity and determinism win.
class Matrix {
  public:
    Matrix() = default;

    explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw BadRange("Matrix: dimension must be >= 1");
    }

    Matrix(int n, std::vector<double> entries) : n_(n), e_(std::move(entries)) {
        if (n < 1) throw BadRange("Matrix: dimension must be >= 1");
        if (e_.size() != static_cast<std::size_t>(n) * n)
            throw DimensionMismatch("Matrix: entry count does not match dim*dim");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::vector<double> &d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    double &operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<double> &entries() const { return e_; }
    std::vector<double> &entries() { return e_; }

  private:
    int n_ = 0;
    std::vector<double> e_;
};

inline void check_same_dim(const Matrix &a, const Matrix &b, const char *where) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

inline Matrix operator+(const Matrix &a, const Matrix &b) {
    check_same_dim(a, b, "operator+");
    Matrix r(a.dim());
    for (std::size_t k = 0; k < r.entries().size(); ++k) r.entries()[k] = a.entries()[k] + b.entries()[k];
    return r;
}

inline Matrix operator-(const Matrix &a, const Matrix &b) {
    check_same_dim(a, b, "operator-");
    Matrix r(a.dim());
    for (std::size_t k = 0; k < r.entries().size(); ++k) r.entries()[k] = a.entries()[k] - b.entries()[k];
    return r;
}

inline Matrix operator*(double c, const Matrix &a) {
    Matrix r(a.dim());
    for (std::size_t k = 0; k < r.entries().size(); ++k) r.entries()[k] = c * a.entries()[k];
    return r;
}

inline Matrix matmul(const Matrix &a, const Matrix &b) {
    check_same_dim(a, b, "matmul");
    const int n = a.dim();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline Matrix transpose(const Matrix &a) {
    const int n = a.dim();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = a(j, i);
    return r;
}

// S * A * S^T
inline Matrix congruence(const Matrix &s, const Matrix &a) {
    check_same_dim(s, a, "congruence");
    return matmul(matmul(s, a), transpose(s));
}

inline double frobenius_norm(const Matrix &a) {
    double s = 0.0;
    for (double x : a.entries()) s += x * x;
    return std::sqrt(s);
}

inline double max_abs(const Matrix &a) {
    double m = 0.0;
    for (double x : a.entries()) m = std::max(m, std::abs(x));
    return m;
}

// max_{i<j} |a_ij - a_ji|, the raw asymmetry
inline double asymmetry(const Matrix &a) {
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
    return worst;
}

inline bool is_symmetric(const Matrix &a, double tol = 1e-12) {
    return asymmetry(a) <= tol * (1.0 + max_abs(a));
}

inline void require_symmetric(const Matrix &a, const char *where, double tol = 1e-12) {
    if (!is_symmetric(a, tol))
        throw NonSymmetric(std::string(where) + ": matrix is not symmetric within tolerance");
}

inline Matrix symmetrize(const Matrix &a) {
    Matrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = 0.5 * (a(i, j) + a(j, i));
    return r;
}

inline double commutator_norm(const Matrix &a, const Matrix &b) {
    return frobenius_norm(matmul(a, b) - matmul(b, a));
}

} // namespace opmean
