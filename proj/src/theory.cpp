#include "sagnac/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sagnac {

namespace {

const cxd kI{0.0, 1.0};

cxd expi(double theta) {
    return std::polar(1.0, theta);
}

double enhancement_vs_baseline(double snr, double photons, double baseline_loop_phase) {
    const double baseline_snr = photons * baseline_loop_phase * baseline_loop_phase;
    if (baseline_snr == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return snr / baseline_snr;
}

// Signed dark-port signal bracket of one band under dual injection.
double dual_band_bracket(const GainPair& gain, const PhaseBudget& budget, Band which) {
    const double G = gain.amp_gain;
    const double g = gain.conj_gain;
    const BandPhases& own = budget.band(which);
    const BandPhases& other = budget.band(which == Band::idler ? Band::signal : Band::idler);
    const double gp = G + g;
    return own.pre + own.post + gp * (own.sensing * G + other.sensing * g) -
           budget.delta_phi2() * g * gp;
}

}  // namespace

CompositeGains composite_gains_exact(const GainPair& gain, const PhaseBudget& budget,
                                     const PumpPhase& pump) {
    const double G = gain.amp_gain;
    const double g = gain.conj_gain;
    const double d1 = budget.signal.sensing / 2.0;
    const double d2 = -budget.signal.sensing / 2.0;

    CompositeGains out;
    out.amp_a = expi(d1) * G * G + expi(pump.phi2 - pump.phi1 - d1) * g * g;
    out.amp_b = expi(d2) * G * G + expi(pump.phi2_prime - pump.phi1_prime - d2) * g * g;
    out.conj_a = expi(d1 + pump.phi1) * G * g + expi(pump.phi2 - d1) * G * g;
    out.conj_b = expi(d2 + pump.phi1_prime) * G * g + expi(pump.phi2_prime - d2) * G * g;

    const double dev_a = std::abs(std::norm(out.amp_a) - std::norm(out.conj_a) - 1.0);
    const double dev_b = std::abs(std::norm(out.amp_b) - std::norm(out.conj_b) - 1.0);
    if (dev_a > 1e-12 || dev_b > 1e-12) {
        throw std::runtime_error("composite gains violate |G_T|^2 - |g_T|^2 = 1");
    }
    return out;
}

CompositeGains composite_gains_linear(const GainPair& gain, const PhaseBudget& budget) {
    const double G = gain.amp_gain;
    const double g = gain.conj_gain;
    const double d1 = budget.signal.sensing / 2.0;
    const double d2 = -budget.signal.sensing / 2.0;
    const double dphi2 = budget.delta_phi2() / 2.0;
    const double dphi2p = -dphi2;

    CompositeGains out;
    out.amp_a = 1.0 + kI * (d1 * (G * G + g * g) - dphi2 * g * g);
    out.conj_a = kI * G * g * (2.0 * d1 - dphi2);
    out.amp_b = 1.0 + kI * (d2 * (G * G + g * g) - dphi2p * g * g);
    out.conj_b = kI * G * g * (2.0 * d2 - dphi2p);
    return out;
}

LambdaCoeffs lambda_coeffs(const GainPair& gain, const PhaseBudget& budget) {
    const double G = gain.amp_gain;
    const double g = gain.conj_gain;
    const BandPhases& ph = budget.signal;
    const double dphi2 = budget.delta_phi2();

    LambdaCoeffs out;
    out.l1 = kI * (ph.pre + ph.post + ph.sensing * (G * G + g * g) - dphi2 * g * g);
    out.l2 = 2.0;
    out.l3 = kI * G * g * (2.0 * ph.sensing - dphi2);
    out.l4 = 0.0;
    return out;
}

LambdaCoeffs lambda_coeffs_from(const CompositeGains& gains, double pre_segment,
                                double post_segment) {
    const double da1 = pre_segment / 2.0;
    const double db4 = -pre_segment / 2.0;
    const double da4 = post_segment / 2.0;
    const double db1 = -post_segment / 2.0;

    LambdaCoeffs out;
    out.l1 = gains.amp_a * expi(da1 + da4) - gains.amp_b * expi(db1 + db4);
    out.l2 = gains.amp_a * expi(da1 + da4) + gains.amp_b * expi(db1 + db4);
    out.l3 = gains.conj_a * expi(da4 - da1) - gains.conj_b * expi(db4 - db1);
    out.l4 = gains.conj_a * expi(da4 - da1) + gains.conj_b * expi(db4 - db1);
    return out;
}

bool near_degenerate(double lambda_signal, double lambda_idler) {
    if (lambda_signal <= 0.0 || lambda_idler <= 0.0) {
        throw std::invalid_argument("wavelengths must be positive");
    }
    return std::abs(lambda_signal - lambda_idler) <= kNearDegenerateTol * lambda_signal;
}

double FringeModel::intensity_factor() const {
    return 1.0 + visibility * std::cos(phase_sum);
}

double sui_fringe(double visibility, double phi_s, double phi_i) {
    if (visibility < 0.0 || visibility > 1.0) {
        throw std::invalid_argument("fringe visibility must lie in [0, 1]");
    }
    return FringeModel{visibility, phi_s + phi_i}.intensity_factor();
}

SnrPrediction snr_degenerate(const GainPair& gain, const PhaseBudget& budget, double alpha_mag) {
    const double G = gain.amp_gain;
    const double g = gain.conj_gain;
    const BandPhases& ph = budget.signal;
    const double gp = G + g;
    const double photons = alpha_mag * alpha_mag;

    const double bracket =
        ph.pre + ph.post + gp * gp * ph.sensing - budget.delta_phi2() * g * gp;

    SnrPrediction out;
    out.signal_power = photons * bracket * bracket;
    out.noise_power = 1.0;
    out.snr = out.signal_power / out.noise_power;
    out.photon_budget = gp * gp * photons;
    out.enhancement = enhancement_vs_baseline(out.snr, out.photon_budget,
                                              ph.classical_loop() + ph.quantum_loop());
    return out;
}

SnrPrediction snr_nondegenerate_single(const GainPair& gain, const PhaseBudget& budget,
                                       double alpha_mag) {
    const double G = gain.amp_gain;
    const double g = gain.conj_gain;
    const BandPhases& s = budget.signal;
    const BandPhases& i = budget.idler;
    const double photons = alpha_mag * alpha_mag;

    const double bracket = s.pre + s.post + s.sensing * G * G + i.sensing * g * g -
                           budget.delta_phi2() * g * g;

    SnrPrediction out;
    out.signal_power = photons * bracket * bracket;
    out.noise_power = 1.0;
    out.snr = out.signal_power / out.noise_power;
    out.photon_budget = (G * G + g * g) * photons;
    out.enhancement = enhancement_vs_baseline(out.snr, out.photon_budget,
                                              s.classical_loop() + s.quantum_loop());
    return out;
}

SnrPrediction snr_nondegenerate_dual_band(const GainPair& gain, const PhaseBudget& budget,
                                          double alpha_mag, Band which) {
    const double gp = gain.amp_gain + gain.conj_gain;
    const double photons = alpha_mag * alpha_mag;
    const double bracket = dual_band_bracket(gain, budget, which);
    const BandPhases& own = budget.band(which);

    SnrPrediction out;
    out.signal_power = photons * bracket * bracket;
    out.noise_power = 1.0;
    out.snr = out.signal_power / out.noise_power;
    out.photon_budget = 2.0 * gp * gp * photons;
    out.enhancement = enhancement_vs_baseline(out.snr, photons * gp * gp,
                                              own.classical_loop() + own.quantum_loop());
    return out;
}

SnrPrediction snr_nondegenerate_dual(const GainPair& gain, const PhaseBudget& budget,
                                     double alpha_mag) {
    const double gp = gain.amp_gain + gain.conj_gain;
    const double photons = alpha_mag * alpha_mag;

    // Band signal amplitudes add before squaring; vacuum noise doubles.
    const double sum_bracket = dual_band_bracket(gain, budget, Band::signal) +
                               dual_band_bracket(gain, budget, Band::idler);

    SnrPrediction out;
    out.signal_power = photons * sum_bracket * sum_bracket;
    out.noise_power = 2.0;
    out.snr = out.signal_power / out.noise_power;
    out.photon_budget = 2.0 * gp * gp * photons;
    out.enhancement = enhancement_vs_baseline(
        out.snr, out.photon_budget, budget.mean_classical_loop() + budget.mean_quantum_loop());
    return out;
}

}  // namespace sagnac
