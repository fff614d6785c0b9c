#include "doctest.h"

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "sagnac/measurement.hpp"
#include "sagnac/theory.hpp"

using namespace sagnac;

namespace {

PhaseBudget budget_from_loops(double lp1c, double lp2q,
                              std::array<double, 3> split = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}) {
    BandPhases band;
    band.pre = split[0] * lp1c;
    band.pump = split[1] * lp1c;
    band.post = split[2] * lp1c;
    band.sensing = lp2q + band.pump;
    return {band, band};
}

PhaseBudget sensing_only(double sensing) {
    BandPhases band;
    band.sensing = sensing;
    return {band, band};
}

}  // namespace

TEST_CASE("composite gains collapse to (1, 0) at the unperturbed dark fringe") {
    const GainPair gain(1.25, 0.75);
    const auto gains = composite_gains_exact(gain, budget_from_loops(0.0, 0.0),
                                             PumpPhase::dark_fringe(0.0));
    CHECK(std::abs(gains.amp_a - cxd(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(gains.conj_a) < 1e-15);
    CHECK(std::abs(gains.amp_b - cxd(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(gains.conj_b) < 1e-15);
}

TEST_CASE("composite gains at the bright fringe are (G^2+g^2, 2Gg)") {
    const GainPair gain(1.25, 0.75);
    const PumpPhase bright{};  // all pump phases zero
    const auto gains = composite_gains_exact(gain, budget_from_loops(0.0, 0.0), bright);
    CHECK(std::abs(gains.amp_a - cxd(17.0 / 8.0, 0.0)) < 1e-15);
    CHECK(std::abs(gains.conj_a - cxd(15.0 / 8.0, 0.0)) < 1e-15);
}

TEST_CASE("composite gains keep |G_T|^2 - |g_T|^2 = 1 for random operating points") {
    for (int iter = 0; iter < 100; ++iter) {
        const GainPair gain = GainPair::from_amp_gain(test_helpers::uniform(1.0, 4.0));
        PumpPhase pump;
        pump.phi1 = test_helpers::uniform(-3, 3);
        pump.phi1_prime = test_helpers::uniform(-3, 3);
        pump.phi2 = test_helpers::uniform(-3, 3);
        pump.phi2_prime = test_helpers::uniform(-3, 3);
        const auto gains = composite_gains_exact(
            gain, sensing_only(test_helpers::uniform(-0.5, 0.5)), pump);
        CHECK(std::norm(gains.amp_a) - std::norm(gains.conj_a) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::norm(gains.amp_b) - std::norm(gains.conj_b) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("linearized composite gains match the worked example") {
    const GainPair gain(1.25, 0.75);
    const auto gains = composite_gains_linear(gain, sensing_only(2e-4));  // delta1 = 1e-4
    CHECK(gains.amp_a.real() == doctest::Approx(1.0));
    CHECK(gains.amp_a.imag() == doctest::Approx(1e-4 * 17.0 / 8.0).epsilon(1e-12));
    CHECK(gains.conj_a.real() == doctest::Approx(0.0));
    CHECK(gains.conj_a.imag() == doctest::Approx(15.0 / 16.0 * 2e-4).epsilon(1e-12));
}

TEST_CASE("linearized composite gains approximate the exact ones to O(delta^2)") {
    const GainPair gain(1.25, 0.75);
    const PhaseBudget budget = sensing_only(2e-5);  // delta1 = 1e-5
    const auto exact = composite_gains_exact(gain, budget, PumpPhase::dark_fringe(0.0));
    const auto linear = composite_gains_linear(gain, budget);
    const double gsq = gain.amp_gain * gain.amp_gain + gain.conj_gain * gain.conj_gain;
    CHECK(std::abs(exact.amp_a - linear.amp_a) <= 1e-9 * gsq);
    CHECK(std::abs(exact.conj_a - linear.conj_a) <= 1e-9 * gsq);
    CHECK(std::abs(exact.amp_b - linear.amp_b) <= 1e-9 * gsq);

    // and the relative error shrinks with the phase scale
    const auto exact_small =
        composite_gains_exact(gain, sensing_only(2e-7), PumpPhase::dark_fringe(0.0));
    const auto linear_small = composite_gains_linear(gain, sensing_only(2e-7));
    CHECK(std::abs(exact_small.amp_a - linear_small.amp_a) <
          std::abs(exact.amp_a - linear.amp_a));
}

TEST_CASE("lambda coefficients vanish to (0, 2, 0, 0) with no rotation") {
    const auto lam = lambda_coeffs(GainPair(1.25, 0.75), budget_from_loops(0.0, 0.0));
    CHECK(std::abs(lam.l1) == 0.0);
    CHECK(lam.l2 == cxd(2.0, 0.0));
    CHECK(std::abs(lam.l3) == 0.0);
    CHECK(std::abs(lam.l4) == 0.0);
}

TEST_CASE("lambda coefficients match the worked example") {
    const auto lam = lambda_coeffs(GainPair(1.25, 0.75), sensing_only(1e-4));
    CHECK(lam.l1.imag() == doctest::Approx(2.125e-4).epsilon(1e-12));
    CHECK(lam.l1.real() == 0.0);
    CHECK(lam.l3.imag() == doctest::Approx(1.875e-4).epsilon(1e-12));
    CHECK(std::abs(lam.l4) == 0.0);
}

TEST_CASE("linearized lambdas track the exact assembly to O(delta^2)") {
    const GainPair gain(1.25, 0.75);
    const PhaseBudget budget = budget_from_loops(3e-5, 2e-5);
    const auto exact = lambda_coeffs_from(
        composite_gains_exact(gain, budget, PumpPhase::dark_fringe(budget.delta_phi2() / 2.0)),
        budget.signal.pre, budget.signal.post);
    const auto linear = lambda_coeffs(gain, budget);
    const double scale = 1e-8;  // ~ (3e-5)^2 * Gg terms
    CHECK(std::abs(exact.l1 - linear.l1) < scale);
    CHECK(std::abs(exact.l2 - linear.l2) < scale);
    CHECK(std::abs(exact.l3 - linear.l3) < scale);
    CHECK(std::abs(exact.l4 - linear.l4) < scale);
}

TEST_CASE("degenerate snr prediction") {
    SUBCASE("unit gain reduces to the classical sagnac") {
        const PhaseBudget budget = budget_from_loops(2e-6, 3e-6);
        const auto pred = snr_degenerate(GainPair(1.0, 0.0), budget, 1000.0);
        const double loop = 5e-6;
        CHECK(pred.snr == doctest::Approx(loop * loop * 1e6).epsilon(1e-12));
    }

    SUBCASE("worked example: 1e-4 quantum loop, G+g = 2, |alpha|^2 = 1e6") {
        const auto pred = snr_degenerate(GainPair(1.25, 0.75), budget_from_loops(0.0, 1e-4),
                                         1000.0);
        CHECK(pred.snr == doctest::Approx(0.16).epsilon(1e-12));
        CHECK(pred.noise_power == 1.0);
        CHECK(pred.snr == pred.signal_power / pred.noise_power);
        CHECK(pred.photon_budget == doctest::Approx(4e6).epsilon(1e-12));
    }

    SUBCASE("enhancement against the unit-gain baseline is (G+g)^2") {
        const auto pred = snr_degenerate(GainPair(1.25, 0.75), budget_from_loops(0.0, 1e-6),
                                         1000.0);
        CHECK(pred.enhancement == doctest::Approx(4.0).epsilon(1e-12));
    }
}

TEST_CASE("the three algebraic forms of the degenerate snr agree to 1e-15") {
    for (int iter = 0; iter < 100; ++iter) {
        const double amp = test_helpers::uniform(1.0, 3.0);
        const GainPair gain = GainPair::from_amp_gain(amp);
        const double G = gain.amp_gain;
        const double g = gain.conj_gain;
        const PhaseBudget budget = budget_from_loops(test_helpers::uniform(-3e-6, 3e-6),
                                                     test_helpers::uniform(-3e-6, 3e-6),
                                                     {0.3, 0.45, 0.25});
        const BandPhases& ph = budget.signal;
        const double gp = G + g;

        const double raw =
            ph.pre + ph.post + gp * gp * ph.sensing - 2.0 * ph.pump * g * gp;
        const double regrouped = ph.pre + ph.post + gp * gp * (ph.sensing - ph.pump) +
                                 gp * (G - g) * ph.pump;
        const double loop_form = ph.classical_loop() + gp * gp * ph.quantum_loop();

        CHECK(raw == doctest::Approx(regrouped).epsilon(1e-15));
        CHECK(regrouped == doctest::Approx(loop_form).epsilon(1e-15));

        const auto pred = snr_degenerate(gain, budget, 10.0);
        CHECK(pred.snr == doctest::Approx(100.0 * raw * raw).epsilon(1e-12));
    }
}

TEST_CASE("single-injection non-degenerate snr prediction") {
    SUBCASE("unit gain reduces to the signal-band classical sagnac") {
        const PhaseBudget budget = budget_from_loops(1e-6, 2e-6);
        const auto pred = snr_nondegenerate_single(GainPair(1.0, 0.0), budget, 500.0);
        CHECK(pred.snr == doctest::Approx(9e-12 * 2.5e5).epsilon(1e-12));
    }

    SUBCASE("worked example: (G^2+g^2)^2 factor") {
        const auto pred = snr_nondegenerate_single(GainPair(1.25, 0.75),
                                                   budget_from_loops(0.0, 1e-4), 1000.0);
        CHECK(pred.snr == doctest::Approx(4.515625e-2).epsilon(1e-12));
        CHECK(pred.photon_budget == doctest::Approx(2.125e6).epsilon(1e-12));
    }

    SUBCASE("enhancement is G^2+g^2 and approaches half the degenerate one") {
        const auto small = snr_nondegenerate_single(GainPair(1.25, 0.75),
                                                    budget_from_loops(0.0, 1e-6), 100.0);
        CHECK(small.enhancement == doctest::Approx(17.0 / 8.0).epsilon(1e-12));

        const GainPair big = GainPair::from_amp_gain(10.0);
        const auto nondeg = snr_nondegenerate_single(big, budget_from_loops(0.0, 1e-6), 100.0);
        const auto deg = snr_degenerate(big, budget_from_loops(0.0, 1e-6), 100.0);
        const double ratio = nondeg.enhancement / deg.enhancement;
        CHECK(ratio <= 0.55);
        CHECK(ratio > 0.45);
    }
}

TEST_CASE("dual-injection non-degenerate snr prediction") {
    SUBCASE("unit gain yields 2|alpha|^2 (mean classical + mean quantum loop)^2") {
        const PhaseBudget budget = budget_from_loops(1e-6, 2e-6);
        const auto pred = snr_nondegenerate_dual(GainPair(1.0, 0.0), budget, 300.0);
        CHECK(pred.snr == doctest::Approx(2.0 * 9e4 * 9e-12).epsilon(1e-12));
        CHECK(pred.noise_power == 2.0);
    }

    SUBCASE("worked example: 2e6 * (4e-4)^2") {
        const auto pred = snr_nondegenerate_dual(GainPair(1.25, 0.75),
                                                 budget_from_loops(0.0, 1e-4), 1000.0);
        CHECK(pred.snr == doctest::Approx(0.32).epsilon(1e-12));
    }

    SUBCASE("equals the degenerate prediction once the doubled input is accounted for") {
        const GainPair gain(1.25, 0.75);
        const PhaseBudget budget = budget_from_loops(2e-6, 1e-6);
        const auto dual = snr_nondegenerate_dual(gain, budget, 1000.0);
        const auto degenerate = snr_degenerate(gain, budget, 1000.0);
        CHECK(dual.snr == doctest::Approx(2.0 * degenerate.snr).epsilon(1e-12));
        CHECK(dual.enhancement == doctest::Approx(degenerate.enhancement).epsilon(1e-12));
    }

    SUBCASE("combined signal amplitudes add coherently across the bands") {
        const GainPair gain(1.25, 0.75);
        const PhaseBudget budget = budget_from_loops(0.0, 1e-5);
        const auto combined = snr_nondegenerate_dual(gain, budget, 100.0);
        const auto band_s = snr_nondegenerate_dual_band(gain, budget, 100.0, Band::signal);
        const auto band_i = snr_nondegenerate_dual_band(gain, budget, 100.0, Band::idler);
        CHECK(combined.snr >= band_s.snr);
        CHECK(combined.snr >= band_i.snr);
        // equal budgets per band: double amplitude, double noise -> 2x SNR
        CHECK(combined.snr == doctest::Approx(2.0 * band_s.snr).epsilon(1e-12));
        CHECK(combined.signal_power ==
              doctest::Approx(4.0 * band_s.signal_power).epsilon(1e-12));
    }

    SUBCASE("per-band prediction keeps the cross-band correction term") {
        const GainPair gain(1.25, 0.75);
        PhaseBudget budget = sensing_only(1e-5);
        budget.idler.sensing = 3e-5;  // bands differ
        const double G = gain.amp_gain;
        const double g = gain.conj_gain;
        const double gp = G + g;
        const auto band_s = snr_nondegenerate_dual_band(gain, budget, 10.0, Band::signal);
        // regrouped form with the (lq_i - lq_s) g (G+g) term retained
        const double expected =
            budget.signal.quantum_loop() * gp * gp +
            (budget.idler.quantum_loop() - budget.signal.quantum_loop()) * g * gp;
        CHECK(band_s.signal_power == doctest::Approx(100.0 * expected * expected).epsilon(1e-12));
    }
}

TEST_CASE("near-degenerate gate for the collapsed forms") {
    CHECK(near_degenerate(1.55e-6, 1.55e-6));
    CHECK(near_degenerate(1.5499e-6, 1.5501e-6));
    CHECK_FALSE(near_degenerate(1.2e-6, 0.9e-6));
    CHECK_THROWS_AS(near_degenerate(0.0, 1.0e-6), std::invalid_argument);
}

TEST_CASE("sui fringe model") {
    CHECK(sui_fringe(1.0, 0.0, 0.0) == doctest::Approx(2.0));
    CHECK(sui_fringe(0.0, 1.3, -0.2) == doctest::Approx(1.0));
    for (const double phi : {0.0, 0.3, 1.2, 2.9}) {
        CHECK(sui_fringe(1.0, phi, -phi) == doctest::Approx(2.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(sui_fringe(1.2, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sui_fringe(-0.1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("linearized snr matches the exact engine at small phases") {
    // G <= 3 and all phases at or below 1e-5: relative deviation under 1e-3
    for (const double amp : {1.25, 2.0, 3.0}) {
        const GainPair gain = GainPair::from_amp_gain(amp);
        const PhaseBudget budget = budget_from_loops(4e-6, 1e-5);
        const auto built = build_nested_sagnac_sui(budget, gain,
                                                   {InjectionScheme::degenerate_single, 100.0});
        const auto m = homodyne(built.circuit.propagate(built.input), built.circuit.reg(),
                                HomodyneSetting::phase_quadrature(built.monitored[0]));
        const double exact_snr = m.mean * m.mean / m.variance;
        const auto pred = snr_degenerate(gain, budget, 100.0);
        CHECK(pred.snr == doctest::Approx(exact_snr).epsilon(1e-3));
    }
}
