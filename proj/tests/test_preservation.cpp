#include <catch2/catch.hpp>

#include <cmath>

#include "opmean/opmean.hpp"

using namespace opmean;

namespace {

SearchConfig quick_config() {
    SearchConfig cfg;
    cfg.trials = 40;
    cfg.dims = {2, 3};
    return cfg;
}

} // namespace

TEST_CASE("trivial functions give zero residuals") {
    const Mean m(RepFunction::geometric(0.5));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Matrix a = random_spd(3, mix_seed(10, seed), 1e-2, 1e2);
        const Matrix b = random_spd(3, mix_seed(11, seed), 1e-2, 1e2);
        const PairResiduals rid = pair_residuals(RepFunction::identity(), m, a, b);
        CHECK(std::abs(rid.sub_l) <= 1e-10);
        CHECK(std::abs(rid.super_r) <= 1e-10);
        const PairResiduals rone = pair_residuals(RepFunction::constant_one(), m, a, b);
        CHECK(std::abs(rone.sub_l) <= 1e-10);
        CHECK(std::abs(rone.super_r) <= 1e-10);
    }
}

TEST_CASE("operator concavity puts every OM function on the superR side of nabla") {
    // f(A nabla B) >= f(A) nabla f(B); the subL direction fails strictly for
    // every non-affine member, already on commuting pairs
    SearchConfig cfg = quick_config();
    cfg.direction = Direction::SuperR;
    const Mean nabla(RepFunction::arithmetic(0.5));
    for (const char *name : {"harmonic:0.5", "geom:0.5", "log"}) {
        const PreservationReport rep =
            check_preservation(parse_function(name), nabla, cfg);
        INFO(name << " worst " << rep.worst_residual);
        CHECK(rep.verdict == Verdict::HoldsOnAllTrials);
    }
    cfg.direction = Direction::SubL;
    const PreservationReport sub =
        check_preservation(RepFunction::harmonic(0.5), nabla, cfg);
    CHECK(sub.verdict == Verdict::ViolationFound);
}

TEST_CASE("every function is subpreserving for the weighted harmonic means") {
    SearchConfig cfg = quick_config();
    for (const char *name : {"geom:0.5", "arith:0.7", "ph:1.5", "stolarsky:0.6", "log"})
        for (double alpha : {0.3, 0.5, 0.7}) {
            const PreservationReport rep = check_preservation(
                parse_function(name), Mean(RepFunction::harmonic(alpha)), cfg);
            INFO(name << " vs harmonic " << alpha << " worst " << rep.worst_residual);
            CHECK(rep.verdict == Verdict::HoldsOnAllTrials);
        }
}

TEST_CASE("sqrt is not subpreserving for the geometric mean") {
    SearchConfig cfg = quick_config();
    const PreservationReport rep = check_preservation(RepFunction::geometric(0.5),
                                                      Mean(RepFunction::geometric(0.5)), cfg);
    CHECK(rep.verdict == Verdict::ViolationFound);
    CHECK(rep.worst_residual <= -1e-6);
    REQUIRE(rep.witness.has_value());
    // scalar pairs satisfy the identity (powers commute), so the witness
    // cannot be a commuting pair
    const double comm = commutator_norm(rep.witness->a, rep.witness->b) /
                        (frobenius_norm(rep.witness->a) * frobenius_norm(rep.witness->b));
    CHECK(comm > 1e-9);
}

TEST_CASE("harmonic functions preserve harmonic means exactly") {
    SearchConfig cfg = quick_config();
    cfg.direction = Direction::Equality;
    for (double beta : {0.25, 0.75})
        for (double alpha : {0.3, 0.6}) {
            const PreservationReport rep = check_preservation(
                RepFunction::harmonic(beta), Mean(RepFunction::harmonic(alpha)), cfg);
            CHECK(rep.verdict == Verdict::HoldsOnAllTrials);
        }
}

TEST_CASE("the inverted rank-one family exposes the sqrt/geometric obstruction") {
    // hand oracle at (x, y) = (0.1, 10): the subpreservation coefficient gap
    // f(Phi'(4xy/(x+y))) - Phi'(harm(f(2x), f(2y))) is about +0.109 after
    // inversion, i.e. a decisive violation
    const double x = 0.1, y = 10.0;
    const double lhs = std::pow(4.0 * x * y / (x + y), 0.25);
    const double fa = std::sqrt(2.0 * x), fb = std::sqrt(2.0 * y);
    const double rhs = std::sqrt(2.0 * fa * fb / (fa + fb));
    CHECK(lhs < rhs); // superR side fails for the adjoint pair

    const Matrix p_inv = Matrix::diagonal({1.0 / (1.0 + 1e-3), 1.0 / 1e-3});
    const Matrix q(2, {x + y, x - y, x - y, x + y});
    const PairResiduals r = pair_residuals(RepFunction::geometric(0.5),
                                           Mean(RepFunction::geometric(0.5)), p_inv,
                                           inv_matrix(q));
    CHECK(r.sub_l < -1e-4);
}

TEST_CASE("rank-one closed forms") {
    const RepFunction id = RepFunction::identity();
    const RepFunction geo = RepFunction::geometric(0.5);

    // f = id, Phi = geometric, x = y = 1: lhs = Phi'(2) = sqrt(2)
    CHECK(lemma_rank_one_lhs(id, geo, 1.0, 1.0) == Approx(std::sqrt(2.0)).epsilon(1e-14));

    // f = id collapses both sides to Phi' of the harmonic combination
    for (double x : {0.2, 1.0, 5.0})
        for (double y : {0.5, 2.0}) {
            CHECK(lemma_rank_one_lhs(id, geo, x, y) ==
                  Approx(lemma_rank_one_rhs(id, geo, x, y)).epsilon(1e-13));
        }

    // x = y collapses to f(Phi'(2x)) against Phi'(f(2x))
    const RepFunction harm = RepFunction::harmonic(0.5);
    for (double x : {0.3, 1.0, 4.0}) {
        CHECK(lemma_rank_one_lhs(harm, geo, x, x) ==
              Approx(harm.eval(transpose(geo).eval(2.0 * x))).epsilon(1e-13));
        CHECK(lemma_rank_one_rhs(harm, geo, x, x) ==
              Approx(transpose(geo).eval(harm.eval(2.0 * x))).epsilon(1e-13));
    }

    CHECK(lemma_rank_one_hypothesis_ok(harm, geo));
    CHECK_FALSE(lemma_rank_one_hypothesis_ok(RepFunction::arithmetic(0.5), geo));
}

TEST_CASE("rank-one matrix evaluation matches the closed forms") {
    CHECK(lemma_rank_one_matrix_check(RepFunction::identity(), RepFunction::geometric(0.5), 1.0,
                                      2.0) <= 1e-6);
    CHECK(lemma_rank_one_matrix_check(RepFunction::harmonic(0.5), RepFunction::harmonic(0.5), 3.0,
                                      5.0) <= 1e-6);
    // x = y = 1/2 makes Q the identity: no regularization anywhere
    CHECK(lemma_rank_one_matrix_check(RepFunction::geometric(0.5), RepFunction::harmonic(0.5), 0.5,
                                      0.5) <= 1e-8);
}

TEST_CASE("scalar nabla identity") {
    const auto grid = log_grid(0.1, 10.0, 9);
    CHECK(scalar_nabla_identity_check(RepFunction::identity(), RepFunction::geometric(0.5), grid) <=
          1e-12);
    CHECK(scalar_nabla_identity_check(RepFunction::harmonic(0.3), RepFunction::harmonic(0.7),
                                      grid) <= 1e-10);

    // hand oracle for the sqrt pair at (x, y) = (1, 4): both sides are fourth
    // roots of (x+y)/2 = 2.5 and ((sqrt x + sqrt y)/2)^2 = 2.25
    const double dev =
        scalar_nabla_identity_check(RepFunction::geometric(0.5), RepFunction::geometric(0.5), grid);
    CHECK(dev > 1e-3);
    const double lhs = std::pow(2.5, 0.25), rhs = std::pow(2.25, 0.25);
    CHECK(dev >= (lhs - rhs) / lhs * 0.5);
}

TEST_CASE("triviality screen classifies the hypotheses") {
    const auto candidates = vanishing_candidates();
    SearchConfig cfg = quick_config();

    const TrivialityScreenResult a = triviality_screen(RepFunction::stolarsky(-1.0), candidates, cfg);
    CHECK(a.hypothesis_adjoint_vanishes);
    CHECK(a.hypothesis_class == 'a');

    const TrivialityScreenResult b = triviality_screen(RepFunction::stolarsky(0.6), candidates, cfg);
    CHECK(b.hypothesis_positive_sum);
    CHECK(b.phi_0 > 0.0);

    // the weighted harmonic mean satisfies neither hypothesis
    const TrivialityScreenResult c = triviality_screen(RepFunction::harmonic(0.3), candidates, cfg);
    CHECK(c.hypothesis_class == 'c');
    CHECK(c.phi_star_0 > 0.0);
    CHECK(c.phi_0 + c.phi_transpose_0 <= 1e-8);
    for (const ScreenItem &it : c.items) CHECK_FALSE(it.applicable);

    CHECK_THROWS_AS(triviality_screen(RepFunction::identity(), candidates, cfg), ParamOutOfDomain);
}

TEST_CASE("powers of the geometric mean") {
    SearchConfig cfg = quick_config();
    cfg.spectrum_lo = 1e-2;
    cfg.spectrum_hi = 1e2;

    for (double r : {-1.0, 0.0, 1.0}) {
        const PreservationReport rep = power_geometric_check(r, 0.5, cfg);
        INFO("r " << r << " worst " << rep.worst_residual);
        CHECK(rep.verdict == Verdict::HoldsOnAllTrials);
    }

    SearchConfig cfg2 = quick_config();
    cfg2.dims = {2};
    const PreservationReport rep2 = power_geometric_check(2.0, 0.5, cfg2);
    CHECK(rep2.verdict == Verdict::ViolationFound);
    REQUIRE(rep2.witness.has_value());
    CHECK(rep2.witness->dim == 2);
}

TEST_CASE("quasi-arithmetic scalar means") {
    CHECK(quasi_arithmetic_scalar(QATag::Exp, 0.0, 0.5, 1.0, 4.0) == Approx(2.0).epsilon(1e-14));
    for (double alpha : {0.2, 0.6})
        CHECK(quasi_arithmetic_scalar(QATag::Power, 1.0, alpha, 3.0, 5.0) ==
              Approx(alpha * 3.0 + (1.0 - alpha) * 5.0).epsilon(1e-14));
    CHECK(quasi_arithmetic_scalar(QATag::Power, -1.0, 0.5, 1.0, 2.0) ==
          Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(quasi_arithmetic_scalar(QATag::Power, 0.0, 0.5, 1.0, 2.0), ParamOutOfDomain);
    CHECK_THROWS_AS(quasi_arithmetic_scalar(QATag::Exp, 0.0, 0.5, -1.0, 2.0), NonPositive);
}

TEST_CASE("quasi-arithmetic preservers") {
    const auto grid = log_grid(0.05, 20.0, 20);
    CHECK(quasi_arithmetic_preserving_check(QATag::Exp, 0.0, 0.4, 0.4, grid) <= 1e-12);
    CHECK(quasi_arithmetic_preserving_check(QATag::Power, 0.5, 0.3, 0.0, grid) <= 1e-14);
    CHECK(quasi_arithmetic_preserving_check(QATag::Power, -1.0, 0.4, 0.7, grid) <= 1e-10);
    CHECK_THROWS_AS(quasi_arithmetic_preserving_check(QATag::Power, 0.5, 0.3, 1.5, grid),
                    ParamOutOfDomain);
}

TEST_CASE("weighted power mean preservers") {
    SearchConfig cfg = quick_config();

    // r = -1: every harmonic-family member preserves (exact identity)
    for (const PowerMeanPreserverItem &it : power_mean_preserver_suite(-1.0, 0.3, cfg)) {
        CHECK(it.expect_preserving);
        CHECK(it.pass);
    }
    // r = 1: same on the arithmetic side
    for (const PowerMeanPreserverItem &it : power_mean_preserver_suite(1.0, 0.6, cfg)) {
        CHECK(it.expect_preserving);
        CHECK(it.pass);
    }
    // r = 0 (geometric): only the trivial betas survive; the violating
    // witness must be non-commuting since scalars satisfy the identity
    for (const PowerMeanPreserverItem &it : power_mean_preserver_suite(0.0, 0.5, cfg)) {
        CHECK(it.pass);
        if (!it.expect_preserving) {
            REQUIRE(it.report.witness.has_value());
            const double comm =
                commutator_norm(it.report.witness->a, it.report.witness->b) /
                (frobenius_norm(it.report.witness->a) * frobenius_norm(it.report.witness->b));
            CHECK(comm > 1e-9);
        }
    }
}

TEST_CASE("power difference triviality check") {
    const auto candidates = vanishing_candidates();
    SearchConfig cfg = quick_config();

    const AlgPResult r15 = alg_p_triviality_check(1.5, candidates, cfg);
    CHECK(r15.alg_zero == Approx(1.0 / 3.0));
    CHECK(r15.alg_adjoint_zero <= 1e-10);
    CHECK(r15.disjunction_holds);

    const AlgPResult r05 = alg_p_triviality_check(0.5, candidates, cfg);
    CHECK(r05.alg_zero <= 1e-10);
    CHECK(r05.alg_adjoint_zero <= 1e-10);

    const AlgPResult r1 = alg_p_triviality_check(1.0, candidates, cfg);
    CHECK(r1.disjunction_holds);

    CHECK_THROWS_AS(alg_p_triviality_check(2.0, candidates, cfg), ParamOutOfDomain);
}

TEST_CASE("zero-limit propagation screens") {
    SearchConfig cfg = quick_config();

    // Phi = geometric has Phi*(0) = 0 while the harmonic f has f*(0) = 1/2,
    // so f cannot be subpreserving and the search must find a violation
    const PropagationResult r1 = zero_limit_propagation_check(
        RepFunction::harmonic(0.5), RepFunction::geometric(0.5), cfg);
    CHECK(r1.lemma_applicable);
    CHECK(r1.verdict == Verdict::ViolationFound);

    // trivial f: vacuous
    const PropagationResult r2 = zero_limit_propagation_check(
        RepFunction::identity(), RepFunction::geometric(0.5), cfg);
    CHECK(r2.vacuous);
    CHECK(r2.verdict == Verdict::HoldsOnAllTrials);

    // Phi = arithmetic with f = geometric: the adjoint route gives nothing
    // (f*(0) = 0) but f(0) = 0 with Phi(0) > 0 makes the dual screen bite
    const PropagationResult r3 = zero_limit_propagation_check(
        RepFunction::geometric(0.5), RepFunction::arithmetic(0.5), cfg);
    CHECK_FALSE(r3.lemma_applicable);
    CHECK(r3.remark_applicable);
    CHECK(r3.verdict == Verdict::ViolationFound);

    // neither direction applies: f, Phi both harmonic
    const PropagationResult r4 = zero_limit_propagation_check(
        RepFunction::harmonic(0.3), RepFunction::harmonic(0.5), cfg);
    CHECK_FALSE(r4.lemma_applicable);
    CHECK_FALSE(r4.remark_applicable);
    CHECK(r4.verdict == Verdict::Inconclusive);
}

TEST_CASE("duality consistency of the two directions") {
    // f(A sigma_Phi B) <= f(A) sigma_Phi f(B) at (A^{-1}, B^{-1}) is the
    // superR statement for (f*, sigma_{Phi*}) at (A, B)
    const RepFunction f = RepFunction::geometric(0.5);
    const RepFunction phi = RepFunction::petz_hasegawa(0.5);
    const Mean m(phi);
    const Mean madj(adjoint(phi));
    const RepFunction fadj = adjoint(f);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix a = random_spd(3, mix_seed(500, seed), 1e-2, 1e2);
        const Matrix b = random_spd(3, mix_seed(501, seed), 1e-2, 1e2);
        const double sub = pair_residuals(f, m, inv_matrix(a), inv_matrix(b)).sub_l;
        const double sup = pair_residuals(fadj, madj, a, b).super_r;
        if (std::abs(sub) > 1e-7 || std::abs(sup) > 1e-7) {
            CHECK((sub < -1e-9) == (sup < -1e-9));
        }
    }
}

TEST_CASE("reports are deterministic functions of the config") {
    SearchConfig cfg = quick_config();
    cfg.seed = 2024;
    const auto once = check_preservation(RepFunction::geometric(0.5),
                                         Mean(RepFunction::logarithmic()), cfg);
    const auto twice = check_preservation(RepFunction::geometric(0.5),
                                          Mean(RepFunction::logarithmic()), cfg);
    CHECK(report_to_json(once).dump() == report_to_json(twice).dump());
}

TEST_CASE("inconclusive band falls back to a tighter spectrum") {
    // a holds-case must not be declared inconclusive: the retry logic only
    // fires in the band, and clean holds stay clean
    SearchConfig cfg = quick_config();
    const PreservationReport rep =
        check_preservation(RepFunction::identity(), Mean(RepFunction::geometric(0.5)), cfg);
    CHECK(rep.verdict == Verdict::HoldsOnAllTrials);
    CHECK_FALSE(rep.retried_tighter_spectrum);
}
