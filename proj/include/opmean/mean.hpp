#pragma once

/*
 * mean.hpp — Kubo-Ando means from representing functions
 *
 * A mean sigma with representing function Phi acts on positive matrices by
 *
 *   A sigma B = A^{1/2} Phi(A^{-1/2} B A^{-1/2}) A^{1/2}        (A invertible)
 *
 * and on positive scalars by x sigma y = x Phi(y/x).  When only B is
 * invertible the same value is reached through the transpose Phi'(t) = t Phi(1/t):
 *
 *   A sigma_Phi B = B sigma_{Phi'} A = B^{1/2} Phi'(B^{-1/2} A B^{-1/2}) B^{1/2}.
 *
 * When both operands are singular the downward-continuity axiom defines the
 * mean as the limit of (A + eps I) sigma (B + eps I); regularized_mean walks a
 * decreasing eps schedule and extrapolates.
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opmean/config.hpp"
#include "opmean/errors.hpp"
#include "opmean/functions.hpp"
#include "opmean/matrix.hpp"
#include "opmean/rng.hpp"
#include "opmean/spd.hpp"

namespace opmean {

class Mean {
  public:
    explicit Mean(RepFunction rep) : rep_(std::move(rep)) {}
    const RepFunction &rep() const { return rep_; }

  private:
    RepFunction rep_;
};

inline Mean adjoint_mean(const Mean &m) { return Mean(adjoint(m.rep())); }
inline Mean transpose_mean(const Mean &m) { return Mean(transpose(m.rep())); }

inline double mean_scalar(const Mean &m, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw NonPositive("mean_scalar: operands must be positive");
    return x * m.rep().eval(y / x);
}

namespace detail {

inline void require_psd(const EigenDecomposition &dec, const char *where) {
    const double norm = std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
    if (dec.eigenvalues.front() < -1e-9 * std::max(norm, 1.0))
        throw NonPositive(std::string(where) + ": operand is not positive semidefinite");
}

// A^{1/2} Phi(A^{-1/2} B A^{-1/2}) A^{1/2} with A's decomposition already known
inline Matrix mean_via_first(const RepFunction &phi, const EigenDecomposition &deca,
                             const Matrix &b) {
    std::vector<double> sq(deca.eigenvalues.size()), isq(deca.eigenvalues.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        sq[i] = std::sqrt(deca.eigenvalues[i]);
        isq[i] = 1.0 / sq[i];
    }
    const Matrix sqrt_a = assemble_from_spectrum(deca, sq);
    const Matrix isqrt_a = assemble_from_spectrum(deca, isq);
    const Matrix inner = symmetrize(matmul(matmul(isqrt_a, b), isqrt_a));
    const Matrix phi_inner = apply_function(phi, inner);
    return symmetrize(matmul(matmul(sqrt_a, phi_inner), sqrt_a));
}

} // namespace detail

// Evaluate A sigma B.  Operands must be PSD and at least one invertible;
// the invertible one carries the congruence.
inline Matrix mean_matrix(const Mean &m, const Matrix &a, const Matrix &b) {
    check_same_dim(a, b, "mean_matrix");
    require_symmetric(a, "mean_matrix");
    require_symmetric(b, "mean_matrix");
    const EigenDecomposition deca = eigen_decompose(a);
    const EigenDecomposition decb = eigen_decompose(b);
    detail::require_psd(deca, "mean_matrix");
    detail::require_psd(decb, "mean_matrix");
    const double zthra = zero_eig_threshold(a, deca);
    const double zthrb = zero_eig_threshold(b, decb);
    if (deca.eigenvalues.front() > zthra)
        return detail::mean_via_first(m.rep(), deca, b);
    if (decb.eigenvalues.front() > zthrb)
        return detail::mean_via_first(transpose(m.rep()), decb, a);
    throw BothSingular("mean_matrix: both operands are singular; use regularized_mean");
}

struct RegularizedResult {
    Matrix value;
    double cauchy_gap = 0.0; // relative gap between the last two extrapolants
    int steps = 0;
};

inline std::vector<double> default_eps_schedule() {
    return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
}

// (A + eps I) sigma (B + eps I) along a decreasing schedule, with gap-ratio
// extrapolation of the tail.  The extrapolants are what must go Cauchy: for
// singular operands the raw iterates can converge only like sqrt(eps).
inline RegularizedResult regularized_mean(const Mean &m, const Matrix &a, const Matrix &b,
                                          std::vector<double> eps_schedule = default_eps_schedule(),
                                          double convergence_tol = 1e-6) {
    check_same_dim(a, b, "regularized_mean");
    if (eps_schedule.size() < 2)
        throw BadRange("regularized_mean: schedule needs at least two steps");
    const Matrix eye = Matrix::identity(a.dim());
    const double scale = std::max(spectral_norm(a), spectral_norm(b));
    if (scale == 0.0) return {Matrix(a.dim()), 0.0, 0}; // 0 sigma 0 = 0

    std::vector<Matrix> iterates;
    iterates.reserve(eps_schedule.size());
    for (double eps : eps_schedule)
        iterates.push_back(mean_matrix(m, a + (eps * scale) * eye, b + (eps * scale) * eye));

    auto extrapolate = [&](std::size_t k) -> Matrix {
        if (k < 2) return iterates[k];
        const Matrix d2 = iterates[k] - iterates[k - 1];
        const Matrix d1 = iterates[k - 1] - iterates[k - 2];
        const double n2 = frobenius_norm(d2);
        const double n1 = frobenius_norm(d1);
        if (n2 <= 1e-14 * scale || n1 <= 1e-300) return iterates[k];
        const double rho = n2 / n1;
        if (!(rho > 0.0 && rho < 0.999)) return iterates[k];
        return iterates[k] + (rho / (1.0 - rho)) * d2;
    };

    const std::size_t last = iterates.size() - 1;
    const Matrix e_prev = extrapolate(last - 1);
    const Matrix e_last = extrapolate(last);
    RegularizedResult res;
    res.value = symmetrize(e_last);
    res.cauchy_gap = frobenius_norm(e_last - e_prev) / scale;
    res.steps = static_cast<int>(iterates.size());
    if (res.cauchy_gap > convergence_tol)
        throw NoConvergence("regularized_mean: extrapolated iterates differ by " +
                            std::to_string(res.cauchy_gap) + " relative at the end of the schedule");
    return res;
}

// Mean of PSD operands.  Direct evaluation when one side is invertible.
// When both are singular but annihilate the same subspace, the
// downward-continuity limit is exact: the connection of X + 0 and Y + 0 is
// (X sigma Y) + 0 on the common range, so we reduce, recurse, and embed.
// Only genuinely misaligned kernels fall back to the epsilon schedule.
inline Matrix mean_matrix_psd(const Mean &m, const Matrix &a, const Matrix &b) {
    try {
        return mean_matrix(m, a, b);
    } catch (const BothSingular &) {
    }
    const int n = a.dim();
    const double na = spectral_norm(a);
    const double nb = spectral_norm(b);
    if (na == 0.0 && nb == 0.0) return Matrix(n);
    const Matrix combined =
        (na > 0.0 ? 1.0 / na : 0.0) * a + (nb > 0.0 ? 1.0 / nb : 0.0) * b;
    const EigenDecomposition dec = eigen_decompose(combined);
    const double thr = n * 1e-12 * std::abs(dec.eigenvalues.back());
    int kernel_dim = 0;
    while (kernel_dim < n && dec.eigenvalues[static_cast<std::size_t>(kernel_dim)] <= thr)
        ++kernel_dim;
    const int r = n - kernel_dim;
    if (r == 0) return Matrix(n);
    if (r == n) return regularized_mean(m, a, b).value; // disjoint kernels
    const Matrix abar = congruence(transpose(dec.eigenvectors), a);
    const Matrix bbar = congruence(transpose(dec.eigenvectors), b);
    Matrix ared(r), bred(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            ared(i, j) = abar(kernel_dim + i, kernel_dim + j);
            bred(i, j) = bbar(kernel_dim + i, kernel_dim + j);
        }
    const Matrix mred = mean_matrix_psd(m, symmetrize(ared), symmetrize(bred));
    Matrix mbar(n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) mbar(kernel_dim + i, kernel_dim + j) = mred(i, j);
    return symmetrize(congruence(dec.eigenvectors, mbar));
}

// ---------------------------------------------------------------------------
// axiom checks
// ---------------------------------------------------------------------------

namespace detail {

// random invertible matrix with singular values in [0.5, 2]; keeps the
// congruence-equality test far from conditioning noise
inline Matrix random_well_conditioned(int dim, std::uint64_t seed) {
    const Matrix q1 = random_orthogonal(dim, mix_seed(seed, 11));
    const Matrix q2 = random_orthogonal(dim, mix_seed(seed, 13));
    Rng rng(mix_seed(seed, 17));
    std::vector<double> d(static_cast<std::size_t>(dim));
    for (double &x : d) x = rng.log_uniform(0.5, 2.0);
    return matmul(matmul(q1, Matrix::diagonal(d)), transpose(q2));
}

} // namespace detail

// Randomized check of the connection axioms:
//   (I)  A <= C, B <= D  =>  A sigma B <= C sigma D
//   (II) S (A sigma B) S^T <= (S A S^T) sigma (S B S^T), equality for invertible S
//   (IV) I sigma I = I
// Each residual is recorded relative to the right-hand side's spectral norm.
inline PreservationReport check_axioms(const Mean &m, const SearchConfig &cfg) {
    cfg.validate();
    PreservationReport rep;
    rep.config_echo = cfg;
    rep.worst_residual = 0.0;
    double worst_eq = 0.0;

    const Matrix one = mean_matrix(m, Matrix::identity(2), Matrix::identity(2));
    rep.trials.push_back({2, -1, -frobenius_norm(one - Matrix::identity(2)), "normalization"});

    for (int dim : cfg.dims) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t s = mix_seed(cfg.seed, 0xA110, static_cast<std::uint64_t>(dim),
                                             static_cast<std::uint64_t>(trial));
            const Matrix a = random_spd(dim, mix_seed(s, 1), cfg.spectrum_lo, cfg.spectrum_hi);
            const Matrix b = random_spd(dim, mix_seed(s, 2), cfg.spectrum_lo, cfg.spectrum_hi);
            const Matrix ab = mean_matrix(m, a, b);

            // (I) monotonicity under PSD increments
            const Matrix c = a + random_spd(dim, mix_seed(s, 3), cfg.spectrum_lo, cfg.spectrum_hi);
            const Matrix d = b + random_spd(dim, mix_seed(s, 4), cfg.spectrum_lo, cfg.spectrum_hi);
            const Matrix cd = mean_matrix(m, c, d);
            const double r_mono = min_eigenvalue(cd - ab) / std::max(spectral_norm(cd), 1e-300);
            rep.trials.push_back({dim, trial, r_mono, "monotone"});
            if (r_mono < rep.worst_residual) {
                rep.worst_residual = r_mono;
                rep.witness = Witness{a, b, dim, trial};
            }

            // (II) invertible congruence: equality
            const Matrix sM = detail::random_well_conditioned(dim, mix_seed(s, 5));
            const Matrix lhs = congruence(sM, ab);
            const Matrix rhs = mean_matrix(m, congruence(sM, a), congruence(sM, b));
            const double r_eq = frobenius_norm(lhs - rhs) / std::max(frobenius_norm(rhs), 1e-300);
            rep.trials.push_back({dim, trial, -r_eq, "transformer-eq"});
            worst_eq = std::max(worst_eq, r_eq);

            // (II) singular congruence: <= direction only
            if (dim >= 2) {
                Matrix proj = Matrix::identity(dim);
                proj(dim - 1, dim - 1) = 0.0;
                const Matrix ss = matmul(sM, proj);
                const Matrix lhs_s = congruence(ss, ab);
                const Matrix rhs_s = mean_matrix_psd(m, congruence(ss, a), congruence(ss, b));
                const double r_sub =
                    min_eigenvalue(rhs_s - lhs_s) / std::max(spectral_norm(rhs_s), 1e-300);
                rep.trials.push_back({dim, trial, r_sub, "transformer-sub"});
                if (r_sub < rep.worst_residual) {
                    rep.worst_residual = r_sub;
                    rep.witness = Witness{a, b, dim, trial};
                }
            }
            rep.trials_run++;
        }
    }

    const bool holds = rep.worst_residual >= -cfg.tol && worst_eq <= 1e-8;
    rep.verdict = holds ? Verdict::HoldsOnAllTrials
                        : (rep.worst_residual < -cfg.violation_tol || worst_eq > 1e-6
                               ? Verdict::ViolationFound
                               : Verdict::Inconclusive);
    if (rep.verdict == Verdict::HoldsOnAllTrials) rep.witness.reset();
    return rep;
}

} // namespace opmean
