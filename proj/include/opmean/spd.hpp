#pragma once

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <string>
#include <vector>

#include "opmean/eigensolve.hpp"
#include "opmean/errors.hpp"
#include "opmean/functions.hpp"
#include "opmean/matrix.hpp"
#include "opmean/rng.hpp"

namespace opmean {

// Eigenvalues at or below this (relative) threshold are treated as zero by
// the functional calculus and the mean-evaluation routing.
inline double zero_eig_threshold(const Matrix &a, const EigenDecomposition &dec) {
    const double norm = std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
    return a.dim() * 1e-12 * norm;
}

inline Matrix assemble_from_spectrum(const EigenDecomposition &dec, const std::vector<double> &mapped) {
    Matrix d = Matrix::diagonal(mapped);
    return symmetrize(matmul(matmul(dec.eigenvectors, d), transpose(dec.eigenvectors)));
}

// f(A) = Q diag(f(lambda_i)) Q^T for a plain scalar callable; the callable
// must be defined on the whole spectrum.
template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, RepFunction>)
Matrix apply_function(F &&f, const Matrix &a) {
    const EigenDecomposition dec = eigen_decompose(a);
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        mapped[i] = f(dec.eigenvalues[i]);
        if (!std::isfinite(mapped[i]))
            throw DomainError("apply_function: f is not finite on the spectrum");
    }
    return assemble_from_spectrum(dec, mapped);
}

// RepFunction overload: eigenvalues that vanish within tolerance use the
// continuous extension f(0) = lim_{t->0+} f(t); genuinely negative
// eigenvalues are outside the domain.
inline Matrix apply_function(const RepFunction &f, const Matrix &a) {
    const EigenDecomposition dec = eigen_decompose(a);
    const double zthr = zero_eig_threshold(a, dec);
    std::vector<double> mapped(dec.eigenvalues.size());
    ZeroLimit zl;
    bool have_zl = false;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        const double lam = dec.eigenvalues[i];
        if (lam <= zthr) {
            if (lam < -zthr)
                throw DomainError("apply_function: eigenvalue " + std::to_string(lam) +
                                  " lies outside (0, inf) beyond tolerance");
            if (!have_zl) {
                zl = zero_limit(f);
                have_zl = true;
            }
            if (zl.infinite)
                throw DomainError("apply_function: f diverges at 0 and the matrix is singular");
            mapped[i] = zl.value;
        } else {
            mapped[i] = f.eval(lam);
        }
    }
    return assemble_from_spectrum(dec, mapped);
}

// ---------------------------------------------------------------------------
// Loewner order
// ---------------------------------------------------------------------------

enum class LoewnerRelation { LessEqual, GreaterEqual, Equal, Incomparable };

struct LoewnerVerdict {
    LoewnerRelation relation = LoewnerRelation::Incomparable;
    double min_eig_b_minus_a = 0.0;
    double min_eig_a_minus_b = 0.0;
    double tolerance_used = 0.0;

    bool leq() const {
        return relation == LoewnerRelation::LessEqual || relation == LoewnerRelation::Equal;
    }
    bool geq() const {
        return relation == LoewnerRelation::GreaterEqual || relation == LoewnerRelation::Equal;
    }
};

inline const char *to_string(LoewnerRelation r) {
    switch (r) {
        case LoewnerRelation::LessEqual: return "LessEqual";
        case LoewnerRelation::GreaterEqual: return "GreaterEqual";
        case LoewnerRelation::Equal: return "Equal";
        case LoewnerRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

// A <= B in the Loewner order iff B - A is PSD, decided with a relative
// tolerance tol * max(||A||, ||B||, 1).
inline LoewnerVerdict loewner_compare(const Matrix &a, const Matrix &b, double tol = 1e-9) {
    check_same_dim(a, b, "loewner_compare");
    require_symmetric(a, "loewner_compare");
    require_symmetric(b, "loewner_compare");
    LoewnerVerdict v;
    v.tolerance_used = tol * std::max({spectral_norm(a), spectral_norm(b), 1.0});
    v.min_eig_b_minus_a = min_eigenvalue(b - a);
    v.min_eig_a_minus_b = min_eigenvalue(a - b);
    const bool le = v.min_eig_b_minus_a >= -v.tolerance_used;
    const bool ge = v.min_eig_a_minus_b >= -v.tolerance_used;
    if (le && ge) v.relation = LoewnerRelation::Equal;
    else if (le) v.relation = LoewnerRelation::LessEqual;
    else if (ge) v.relation = LoewnerRelation::GreaterEqual;
    else v.relation = LoewnerRelation::Incomparable;
    return v;
}

// ---------------------------------------------------------------------------
// seeded random matrices
// ---------------------------------------------------------------------------

// Householder QR, Q with positive R diagonal; deterministic.
inline Matrix orthogonalize(const Matrix &g) {
    const int n = g.dim();
    Matrix r = g;
    Matrix q = Matrix::identity(n);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n - 1; ++k) {
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm += r(i, k) * r(i, k);
        norm = std::sqrt(norm);
        if (norm <= 1e-300) continue;
        const double alpha = r(k, k) >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (int i = k; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = r(i, k) - (i == k ? alpha : 0.0);
            vnorm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        if (vnorm2 <= 1e-300) continue;
        for (int j = k; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[static_cast<std::size_t>(i)] * r(i, j);
            const double c = 2.0 * dot / vnorm2;
            for (int i = k; i < n; ++i) r(i, j) -= c * v[static_cast<std::size_t>(i)];
        }
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[static_cast<std::size_t>(i)] * q(j, i);
            const double c = 2.0 * dot / vnorm2;
            for (int i = k; i < n; ++i) q(j, i) -= c * v[static_cast<std::size_t>(i)];
        }
    }
    // make R's diagonal positive so Q is a deterministic function of g
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0.0)
            for (int i = 0; i < n; ++i) q(i, j) = -q(i, j);
    return q;
}

inline Matrix random_orthogonal(int dim, std::uint64_t seed) {
    if (dim < 1) throw BadRange("random_orthogonal: dim must be >= 1");
    Rng rng(mix_seed(seed, 0xa17u, static_cast<std::uint64_t>(dim)));
    Matrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.normal();
    return orthogonalize(g);
}

// Random SPD matrix with log-uniform spectrum in [lo, hi] and a Haar-ish
// eigenbasis from a QR-orthogonalized Gaussian.  Fully determined by
// (dim, seed, lo, hi).
inline Matrix random_spd(int dim, std::uint64_t seed, double lo, double hi) {
    if (dim < 1) throw BadRange("random_spd: dim must be >= 1");
    if (!(lo > 0.0) || !(hi >= lo)) throw BadRange("random_spd: need 0 < lo <= hi");
    if (hi / lo > 1e8) throw BadRange("random_spd: condition cap hi/lo <= 1e8 exceeded");
    Rng rng(mix_seed(seed, 0x5bd1u, static_cast<std::uint64_t>(dim)));
    std::vector<double> lambda(static_cast<std::size_t>(dim));
    for (double &l : lambda) l = rng.log_uniform(lo, hi);
    Matrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.normal();
    const Matrix q = orthogonalize(g);
    return symmetrize(matmul(matmul(q, Matrix::diagonal(lambda)), transpose(q)));
}

// ---------------------------------------------------------------------------
// square root and inverse
// ---------------------------------------------------------------------------

inline void require_invertible(const EigenDecomposition &dec, int dim, const char *where) {
    const double norm = std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
    if (dec.eigenvalues.front() <= dim * 1e-14 * norm)
        throw SingularMatrix(std::string(where) + ": matrix is numerically singular");
}

inline Matrix sqrt_matrix(const Matrix &a) {
    const EigenDecomposition dec = eigen_decompose(a);
    require_invertible(dec, a.dim(), "sqrt_matrix");
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = std::sqrt(dec.eigenvalues[i]);
    return assemble_from_spectrum(dec, mapped);
}

inline Matrix inv_matrix(const Matrix &a) {
    const EigenDecomposition dec = eigen_decompose(a);
    require_invertible(dec, a.dim(), "inv_matrix");
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = 1.0 / dec.eigenvalues[i];
    return assemble_from_spectrum(dec, mapped);
}

inline Matrix inv_sqrt_matrix(const Matrix &a) {
    const EigenDecomposition dec = eigen_decompose(a);
    require_invertible(dec, a.dim(), "inv_sqrt_matrix");
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = 1.0 / std::sqrt(dec.eigenvalues[i]);
    return assemble_from_spectrum(dec, mapped);
}

} // namespace opmean
