#pragma once

/*
 * preservation.hpp — sigma-subpreserving / sigma-preserving checks
 *
 * For a mean sigma and a normalized operator monotone f the two inequalities
 * of interest are
 *
 *   f(A sigma B) <= f(A) sigma f(B)     (subL)
 *   f(A sigma B) >= f(A) sigma f(B)     (superR)
 *
 * over positive definite A, B.  A pair's residual is the minimum eigenvalue
 * of the favorable difference, normalized by the spectral norm of
 * f(A) sigma f(B); "holds" means residual >= -tol on every pair tried.
 *
 * Violations are hunted in three phases:
 *   1. seeded random SPD pairs across the configured dimensions;
 *   2. structured 2x2 probes: scalar multiples of I and commuting diagonal
 *      pairs (these reduce the question to f(Phi(t)) vs Phi(f(t))), plus the
 *      rank-one projection family P ~ diag(1, eps) against the rotated pair
 *      Q = [[x+y, x-y], [x-y, x+y]] and the inverses of both.  The inverted
 *      family is where obstructions live when only the adjoints vanish at 0:
 *      f(A sigma_Phi B) <= f(A) sigma_Phi f(B) at (A^-1, B^-1) is equivalent
 *      to the reversed inequality for (f*, sigma_{Phi*}) at (A, B).
 *   3. if the worst residual lands between -violation_tol and -tol, one retry
 *      on a tighter spectrum separates eigensolver noise from a true but
 *      small violation; if it still lands in the band, the verdict is
 *      Inconclusive.
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opmean/config.hpp"
#include "opmean/functions.hpp"
#include "opmean/matrix.hpp"
#include "opmean/mean.hpp"
#include "opmean/rng.hpp"
#include "opmean/spd.hpp"

namespace opmean {

// ---------------------------------------------------------------------------
// residuals
// ---------------------------------------------------------------------------

struct PairResiduals {
    double sub_l = 0.0;   // min eig of f(A) sigma f(B) - f(A sigma B), relative
    double super_r = 0.0; // min eig of f(A sigma B) - f(A) sigma f(B), relative
};

inline PairResiduals pair_residuals(const RepFunction &f, const Mean &m, const Matrix &a,
                                    const Matrix &b) {
    const Matrix f_of_mean = apply_function(f, mean_matrix_psd(m, a, b));
    const Matrix mean_of_f = mean_matrix_psd(m, apply_function(f, a), apply_function(f, b));
    const double scale = std::max(spectral_norm(mean_of_f), 1e-300);
    PairResiduals r;
    r.sub_l = min_eigenvalue(mean_of_f - f_of_mean) / scale;
    r.super_r = min_eigenvalue(f_of_mean - mean_of_f) / scale;
    return r;
}

inline double directional_residual(const PairResiduals &r, Direction d) {
    switch (d) {
        case Direction::SubL: return r.sub_l;
        case Direction::SuperR: return r.super_r;
        case Direction::Equality: return std::min(r.sub_l, r.super_r);
    }
    return 0.0;
}

inline double sub_residual(const RepFunction &f, const Mean &m, const Matrix &a, const Matrix &b) {
    return pair_residuals(f, m, a, b).sub_l;
}

// ---------------------------------------------------------------------------
// structured probe pairs
// ---------------------------------------------------------------------------

struct ProbePair {
    Matrix a;
    Matrix b;
    std::string tag;
};

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : static_cast<double>(i) / (n - 1)));
    return g;
}

inline std::vector<ProbePair> structured_probe_pairs() {
    std::vector<ProbePair> pairs;
    const Matrix eye = Matrix::identity(2);

    for (int k = -10; k <= 10; ++k) {
        if (k == 0) continue;
        pairs.push_back({eye, std::pow(2.0, k) * eye, "scalar"});
    }

    const std::vector<double> grid = log_grid(0.1, 10.0, 7);
    for (double x : grid)
        for (double y : grid) {
            if (x == y) continue;
            pairs.push_back({Matrix::diagonal({x, 1.0}), Matrix::diagonal({y, 1.0}), "diag"});
        }

    for (double eps : {1e-2, 1e-3, 1e-4}) {
        for (double x : grid)
            for (double y : grid) {
                const Matrix p = Matrix::diagonal({1.0 + eps, eps});
                const Matrix q(2, {x + y, x - y, x - y, x + y});
                pairs.push_back({p, q, "rank-one"});
                pairs.push_back({q, p, "rank-one"});
                const Matrix pi = Matrix::diagonal({1.0 / (1.0 + eps), 1.0 / eps});
                const Matrix qi = inv_matrix(q);
                pairs.push_back({pi, qi, "rank-one-inv"});
                pairs.push_back({qi, pi, "rank-one-inv"});
            }
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// preservation check
// ---------------------------------------------------------------------------

namespace detail {

struct Phase {
    double worst = 0.0;
    std::optional<Witness> witness;
};

inline void observe(PreservationReport &rep, Phase &phase, const Matrix &a, const Matrix &b,
                    int dim, long trial, double residual, const std::string &tag) {
    rep.trials.push_back({dim, trial, residual, tag});
    if (residual < phase.worst) {
        phase.worst = residual;
        phase.witness = Witness{a, b, dim, trial};
    }
}

inline Phase random_phase(const RepFunction &f, const Mean &m, const SearchConfig &cfg,
                          double lo, double hi, std::uint64_t salt, PreservationReport &rep) {
    Phase phase;
    for (int dim : cfg.dims) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t s = mix_seed(cfg.seed, salt, static_cast<std::uint64_t>(dim),
                                             static_cast<std::uint64_t>(trial));
            const Matrix a = random_spd(dim, mix_seed(s, 1), lo, hi);
            const Matrix b = random_spd(dim, mix_seed(s, 2), lo, hi);
            const double r = directional_residual(pair_residuals(f, m, a, b), cfg.direction);
            observe(rep, phase, a, b, dim, trial, r, "random");
            rep.trials_run++;
        }
    }
    return phase;
}

inline Phase structured_phase(const RepFunction &f, const Mean &m, const SearchConfig &cfg,
                              PreservationReport &rep) {
    Phase phase;
    long idx = -1;
    for (const ProbePair &p : structured_probe_pairs()) {
        const double r = directional_residual(pair_residuals(f, m, p.a, p.b), cfg.direction);
        observe(rep, phase, p.a, p.b, p.a.dim(), idx, r, "structured:" + p.tag);
        --idx;
        rep.trials_run++;
    }
    return phase;
}

} // namespace detail

// Randomized (plus structured) check whether f(A sigma B) <=/=>/= f(A) sigma f(B)
// holds over the sampled pairs.  Deterministic for a fixed config.
inline PreservationReport check_preservation(const RepFunction &f, const Mean &m,
                                             const SearchConfig &cfg) {
    cfg.validate();
    PreservationReport rep;
    rep.config_echo = cfg;

    detail::Phase best = detail::random_phase(f, m, cfg, cfg.spectrum_lo, cfg.spectrum_hi, 0xF00D, rep);

    if (cfg.structured && best.worst > -cfg.violation_tol) {
        detail::Phase st = detail::structured_phase(f, m, cfg, rep);
        if (st.worst < best.worst) best = st;
    }

    if (best.worst < -cfg.violation_tol) {
        rep.verdict = Verdict::ViolationFound;
    } else if (best.worst >= -cfg.tol) {
        rep.verdict = Verdict::HoldsOnAllTrials;
    } else {
        // borderline band: retry on a mild spectrum where eigensolver noise
        // is orders of magnitude below tol
        rep.retried_tighter_spectrum = true;
        const double lo = std::max(cfg.spectrum_lo, 1e-1);
        const double hi = std::min(cfg.spectrum_hi, 1e1);
        detail::Phase retry = detail::random_phase(f, m, cfg, lo, hi, 0x7e717, rep);
        if (retry.worst < -cfg.violation_tol) {
            best = retry;
            rep.verdict = Verdict::ViolationFound;
        } else if (retry.worst >= -cfg.tol) {
            rep.verdict = Verdict::HoldsOnAllTrials;
        } else {
            if (retry.worst < best.worst) best = retry;
            rep.verdict = Verdict::Inconclusive;
        }
    }

    rep.worst_residual = best.worst;
    if (rep.verdict != Verdict::HoldsOnAllTrials && best.witness) rep.witness = best.witness;
    return rep;
}

// ---------------------------------------------------------------------------
// rank-one closed forms
// ---------------------------------------------------------------------------

// For f(0) = Phi(0) = 0, P = diag(1,0) and Q = [[x+y, x-y], [x-y, x+y]]:
//   f(P sigma_{Phi'} Q)       = f(Phi'(4xy/(x+y))) P
//   f(P) sigma_{Phi'} f(Q)    = Phi'(2 f(2x) f(2y) / (f(2x)+f(2y))) P
// with Phi' the transpose of Phi.
inline bool lemma_rank_one_hypothesis_ok(const RepFunction &f, const RepFunction &phi) {
    return zero_limit(f).value <= 1e-8 && zero_limit(phi).value <= 1e-8;
}

inline double lemma_rank_one_lhs(const RepFunction &f, const RepFunction &phi, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw NonPositive("lemma_rank_one_lhs: x, y must be positive");
    return f.eval(transpose(phi).eval(4.0 * x * y / (x + y)));
}

inline double lemma_rank_one_rhs(const RepFunction &f, const RepFunction &phi, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw NonPositive("lemma_rank_one_rhs: x, y must be positive");
    const double fx = f.eval(2.0 * x);
    const double fy = f.eval(2.0 * y);
    return transpose(phi).eval(2.0 * fx * fy / (fx + fy));
}

// Full-matrix evaluation of both sides against the closed forms; returns the
// larger of the two relative errors.
inline double lemma_rank_one_matrix_check(const RepFunction &f, const RepFunction &phi, double x,
                                          double y) {
    const Matrix p = Matrix::diagonal({1.0, 0.0});
    const Matrix q(2, {x + y, x - y, x - y, x + y});
    const Mean sigma_t(transpose(phi));

    const Matrix lhs_mat = apply_function(f, mean_matrix_psd(sigma_t, p, q));
    const Matrix rhs_mat =
        mean_matrix_psd(sigma_t, apply_function(f, p), apply_function(f, q));

    const double lhs = lemma_rank_one_lhs(f, phi, x, y);
    const double rhs = lemma_rank_one_rhs(f, phi, x, y);
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return std::max(frobenius_norm(lhs_mat - lhs * p), frobenius_norm(rhs_mat - rhs * p)) / scale;
}

// When f preserves sigma_Phi and f(0) = Phi(0) = 0, the adjoint of the
// transpose satisfies an arithmetic-mean intertwining:
//   f*(Phi'*(x nabla y)) = Phi'*(f*(x) nabla f*(y)).
// Returns the worst relative deviation over grid x grid.
inline double scalar_nabla_identity_check(const RepFunction &f, const RepFunction &phi,
                                          const std::vector<double> &grid) {
    const RepFunction fs = adjoint(f);
    const RepFunction ps = adjoint(transpose(phi));
    double worst = 0.0;
    for (double x : grid)
        for (double y : grid) {
            const double lhs = fs.eval(ps.eval(0.5 * (x + y)));
            const double rhs = ps.eval(0.5 * (fs.eval(x) + fs.eval(y)));
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    return worst;
}

// ---------------------------------------------------------------------------
// triviality screens
// ---------------------------------------------------------------------------

inline bool matches_on_grid(const RepFunction &f, const RepFunction &g, double tol = 1e-10) {
    return max_relative_deviation(f, g, standard_grid(-10, 10)) <= tol;
}

inline bool is_trivial_function(const RepFunction &f) {
    return matches_on_grid(f, RepFunction::constant_one()) ||
           matches_on_grid(f, RepFunction::identity());
}

// Weight recovery from one exact value beats a finite-difference slope: if f
// is the weighted harmonic t/((1-w)t + w) then f(2) = 2/(2-w), so
// w = 2 - 2/f(2) exactly (and similarly w = f(2) - 1 for the arithmetic).
inline bool is_weighted_harmonic_function(const RepFunction &f) {
    const double w = 2.0 - 2.0 / f.eval(2.0);
    if (!(w >= -1e-12 && w <= 1.0 + 1e-12)) return false;
    return matches_on_grid(f, RepFunction::harmonic(std::min(std::max(w, 0.0), 1.0)));
}

inline bool is_weighted_arithmetic_function(const RepFunction &f) {
    const double w = f.eval(2.0) - 1.0;
    if (!(w >= -1e-12 && w <= 1.0 + 1e-12)) return false;
    return matches_on_grid(f, RepFunction::arithmetic(std::min(std::max(w, 0.0), 1.0)));
}

struct ScreenItem {
    std::string fn;
    bool applicable = false; // f non-trivial with f(0) = 0
    PreservationReport report;
    bool pass = true; // applicable items pass iff a violation was found
};

// Two sufficient conditions force every sigma_Phi-subpreserving f with
// f(0) = 0 to be the identity:
//   (a) Phi*(0) = 0
//   (b) Phi(0) + Phi'(0) > 0   (prime = transpose), which implies (a)
// When neither holds (the weighted harmonic case) the screen is silent.
struct TrivialityScreenResult {
    double phi_star_0 = 0.0;
    double phi_0 = 0.0;
    double phi_transpose_0 = 0.0;
    bool hypothesis_adjoint_vanishes = false; // (a)
    bool hypothesis_positive_sum = false;     // (b)
    char hypothesis_class = 'c';
    std::vector<ScreenItem> items;
};

inline TrivialityScreenResult
triviality_screen(const RepFunction &phi,
                  const std::vector<std::pair<std::string, RepFunction>> &candidates,
                  const SearchConfig &cfg) {
    if (is_trivial_function(phi))
        throw ParamOutOfDomain("triviality_screen: Phi must be non-trivial");
    TrivialityScreenResult res;
    res.phi_star_0 = zero_limit(adjoint(phi)).value;
    res.phi_0 = zero_limit(phi).value;
    res.phi_transpose_0 = zero_limit(transpose(phi)).value;
    res.hypothesis_adjoint_vanishes = res.phi_star_0 <= 1e-8;
    res.hypothesis_positive_sum = res.phi_0 + res.phi_transpose_0 > 1e-8;
    res.hypothesis_class = res.hypothesis_adjoint_vanishes ? 'a'
                           : res.hypothesis_positive_sum  ? 'b'
                                                          : 'c';

    const Mean sigma(phi);
    for (const auto &[name, f] : candidates) {
        ScreenItem item;
        item.fn = name;
        const bool f_vanishes = zero_limit(f).value <= 1e-8;
        item.applicable = f_vanishes && !is_trivial_function(f) && res.hypothesis_class != 'c';
        if (item.applicable) {
            SearchConfig c = cfg;
            c.direction = Direction::SubL;
            item.report = check_preservation(f, sigma, c);
            item.pass = item.report.verdict == Verdict::ViolationFound;
        }
        res.items.push_back(std::move(item));
    }
    return res;
}

// ---------------------------------------------------------------------------
// powers of the weighted geometric mean
// ---------------------------------------------------------------------------

// For r outside {-1, 0, 1} the order (A #_alpha B)^r <= A^r #_alpha B^r must
// fail on some pair; for r in {-1, 0, 1} it is an identity.  Equality-mode
// residuals are recorded as -(relative deviation) so "holds" keeps the usual
// sign convention.
inline PreservationReport power_geometric_check(double r, double alpha, const SearchConfig &cfg) {
    cfg.validate();
    if (!(r >= -2.0 && r <= 2.0)) throw ParamOutOfDomain("power_geometric_check: r in [-2,2]");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParamOutOfDomain("power_geometric_check: alpha in (0,1)");
    const Mean sharp(RepFunction::geometric(alpha));
    const bool identity_case = r == -1.0 || r == 0.0 || r == 1.0;
    const auto pw = [r](double t) { return std::pow(t, r); };

    PreservationReport rep;
    rep.config_echo = cfg;
    detail::Phase phase;

    // the powered operands A^r must stay numerically definite: clip the draw
    // spectrum so its |r|-th power keeps condition numbers near 1e8 at most
    double lo = cfg.spectrum_lo, hi = cfg.spectrum_hi;
    if (std::abs(r) > 1.0) {
        lo = std::max(lo, 1e-2);
        hi = std::min(hi, 1e2);
    }

    auto eval_pair = [&](const Matrix &a, const Matrix &b, int dim, long trial,
                         const std::string &tag) {
        const Matrix ab_r = apply_function(pw, mean_matrix(sharp, a, b));
        const Matrix r_ab = mean_matrix(sharp, apply_function(pw, a), apply_function(pw, b));
        double res;
        if (identity_case)
            res = -frobenius_norm(ab_r - r_ab) / std::max(frobenius_norm(r_ab), 1e-300);
        else
            res = min_eigenvalue(r_ab - ab_r) / std::max(spectral_norm(r_ab), 1e-300);
        detail::observe(rep, phase, a, b, dim, trial, res, tag);
        rep.trials_run++;
    };

    for (int dim : cfg.dims)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t s = mix_seed(cfg.seed, 0x9e0, static_cast<std::uint64_t>(dim),
                                             static_cast<std::uint64_t>(trial));
            eval_pair(random_spd(dim, mix_seed(s, 1), lo, hi),
                      random_spd(dim, mix_seed(s, 2), lo, hi), dim, trial, "random");
        }
    if (!identity_case && cfg.structured && phase.worst > -cfg.violation_tol) {
        long idx = -1;
        for (const ProbePair &p : structured_probe_pairs()) {
            eval_pair(p.a, p.b, 2, idx, "structured:" + p.tag);
            --idx;
        }
    }

    rep.worst_residual = phase.worst;
    rep.verdict = phase.worst < -cfg.violation_tol ? Verdict::ViolationFound
                  : phase.worst >= -cfg.tol        ? Verdict::HoldsOnAllTrials
                                                   : Verdict::Inconclusive;
    if (rep.verdict != Verdict::HoldsOnAllTrials && phase.witness) rep.witness = phase.witness;
    return rep;
}

// ---------------------------------------------------------------------------
// quasi-arithmetic scalar means
// ---------------------------------------------------------------------------

enum class QATag { Exp, Power };

// t sigma s = g(alpha g^{-1}(t) + (1-alpha) g^{-1}(s)) for g = exp or g = t^{1/a}
inline double quasi_arithmetic_scalar(QATag g, double a, double alpha, double t, double s) {
    if (!(t > 0.0) || !(s > 0.0)) throw NonPositive("quasi_arithmetic_scalar: t, s must be positive");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParamOutOfDomain("quasi_arithmetic_scalar: alpha in [0,1]");
    switch (g) {
        case QATag::Exp:
            return std::exp(alpha * std::log(t) + (1.0 - alpha) * std::log(s));
        case QATag::Power: {
            if (!(a >= -1.0 && a <= 1.0) || a == 0.0)
                throw ParamOutOfDomain("quasi_arithmetic_scalar: power exponent in [-1,0)u(0,1]");
            return std::pow(alpha * std::pow(t, a) + (1.0 - alpha) * std::pow(s, a), 1.0 / a);
        }
    }
    throw ParamOutOfDomain("quasi_arithmetic_scalar: unknown tag");
}

// The solutions of f(t sigma s) = f(t) sigma f(s) for a quasi-arithmetic
// sigma are exactly f(t) = g(beta g^{-1}(t) + (1-beta) g^{-1}(1)); this
// verifies that identity over grid x grid and returns the worst deviation.
inline double quasi_arithmetic_preserving_check(QATag g, double a, double alpha, double beta,
                                                const std::vector<double> &grid) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw ParamOutOfDomain("quasi_arithmetic_preserving_check: beta in [0,1]");
    auto f = [&](double t) {
        switch (g) {
            case QATag::Exp: return std::pow(t, beta);
            case QATag::Power: return std::pow(beta * std::pow(t, a) + (1.0 - beta), 1.0 / a);
        }
        return 0.0;
    };
    double worst = 0.0;
    for (double t : grid)
        for (double s : grid) {
            const double lhs = f(quasi_arithmetic_scalar(g, a, alpha, t, s));
            const double rhs = quasi_arithmetic_scalar(g, a, alpha, f(t), f(s));
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    return worst;
}

// ---------------------------------------------------------------------------
// weighted power mean preservers
// ---------------------------------------------------------------------------

struct PowerMeanPreserverItem {
    double beta = 0.0;
    bool expect_preserving = false;
    PreservationReport report;
    bool pass = false;
};

// sigma = weighted power mean with exponent r and weight alpha.  For
// r in {-1, 1} every member of the same power family preserves sigma; for
// r in (-1, 1) only the trivial members do, so interior betas must yield a
// matrix-equality violation (commuting pairs satisfy the scalar identity, so
// any witness is necessarily non-commuting).
inline std::vector<PowerMeanPreserverItem>
power_mean_preserver_suite(double r, double alpha, const SearchConfig &cfg) {
    if (!(r >= -1.0 && r <= 1.0)) throw ParamOutOfDomain("power_mean_preserver_suite: r in [-1,1]");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParamOutOfDomain("power_mean_preserver_suite: alpha in (0,1)");
    const Mean sigma(RepFunction::power_mean(r, alpha));
    const bool endpoint = (r == -1.0 || r == 1.0);
    std::vector<PowerMeanPreserverItem> items;
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        PowerMeanPreserverItem item;
        item.beta = beta;
        item.expect_preserving = endpoint || beta == 0.0 || beta == 1.0;
        SearchConfig c = cfg;
        c.direction = Direction::Equality;
        item.report = check_preservation(RepFunction::power_mean(r, beta), sigma, c);
        item.pass = item.expect_preserving
                        ? item.report.verdict == Verdict::HoldsOnAllTrials
                        : item.report.verdict == Verdict::ViolationFound;
        items.push_back(std::move(item));
    }
    return items;
}

// ---------------------------------------------------------------------------
// power difference family and zero-limit propagation
// ---------------------------------------------------------------------------

struct AlgPResult {
    double alg_zero = 0.0;
    double alg_adjoint_zero = 0.0;
    bool disjunction_holds = false; // ALG_p(0) = 0 or ALG_p*(0) = 0
    TrivialityScreenResult screen;  // subpreserving route (silent for p < 0)
    std::vector<PreservationReport> equality_screen; // no non-trivial preserver
};

// ALG_p(0) = 0 or ALG_p*(0) = 0 throughout (-1, 2), which rules out every
// non-trivial preserver of sigma_{ALG_p}: when ALG_p(0) = 0 a preserver would
// force the mean to be weighted harmonic, when ALG_p*(0) = 0 weighted
// arithmetic, and ALG_p is neither inside the open interval.  The
// subpreserving screen additionally applies whenever ALG_p is unbounded
// (p >= 0).
inline AlgPResult
alg_p_triviality_check(double p,
                       const std::vector<std::pair<std::string, RepFunction>> &candidates,
                       const SearchConfig &cfg) {
    if (!(p > -1.0 && p < 2.0)) throw ParamOutOfDomain("alg_p_triviality_check: p in (-1,2)");
    const RepFunction alg = RepFunction::power_difference(p);
    AlgPResult res;
    res.alg_zero = zero_limit(alg).value;
    res.alg_adjoint_zero = zero_limit(adjoint(alg)).value;
    res.disjunction_holds = res.alg_zero <= 1e-8 || res.alg_adjoint_zero <= 1e-8;
    res.screen = triviality_screen(alg, candidates, cfg);
    SearchConfig eq = cfg;
    eq.direction = Direction::Equality;
    const Mean sigma(alg);
    for (const auto &[name, f] : candidates) {
        if (is_trivial_function(f)) continue;
        PreservationReport rep = check_preservation(f, sigma, eq);
        rep.function_label = name;
        res.equality_screen.push_back(std::move(rep));
    }
    return res;
}

struct PropagationResult {
    bool lemma_applicable = false;  // Phi*(0) = 0 and f*(0) > 0  =>  violation
    bool remark_applicable = false; // f(0) = 0 and Phi(0) > 0    =>  violation
    bool vacuous = false;           // f trivial
    Verdict verdict = Verdict::Inconclusive;
    PreservationReport report;
};

// Contrapositive screen of the zero-limit propagation facts: a subpreserving
// f inherits f*(0) = 0 from Phi*(0) = 0, and f(0) = 0 forces Phi(0) = 0.
inline PropagationResult zero_limit_propagation_check(const RepFunction &f, const RepFunction &phi,
                                                      const SearchConfig &cfg) {
    PropagationResult res;
    if (is_trivial_function(f)) {
        res.vacuous = true;
        res.verdict = Verdict::HoldsOnAllTrials;
        return res;
    }
    const double phi_star_0 = zero_limit(adjoint(phi)).value;
    const double f_star_0 = zero_limit(adjoint(f)).value;
    res.lemma_applicable = phi_star_0 <= 1e-8 && f_star_0 > 1e-8;
    res.remark_applicable = zero_limit(f).value <= 1e-8 && zero_limit(phi).value > 1e-8;
    if (!res.lemma_applicable && !res.remark_applicable) {
        res.verdict = Verdict::Inconclusive;
        return res;
    }
    SearchConfig c = cfg;
    c.direction = Direction::SubL;
    res.report = check_preservation(f, Mean(phi), c);
    res.verdict = res.report.verdict;
    return res;
}

} // namespace opmean
