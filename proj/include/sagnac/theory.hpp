#pragma once

#include "sagnac/components.hpp"
#include "sagnac/scenario.hpp"

namespace sagnac {

/// Composite gains of one nested two-stage amplifier pair, per arm.
/// Exact forms satisfy |G_T|^2 - |g_T|^2 = 1 on each path.
struct CompositeGains {
    cxd amp_a{1.0, 0.0};
    cxd conj_a{0.0, 0.0};
    cxd amp_b{1.0, 0.0};
    cxd conj_b{0.0, 0.0};
};

CompositeGains composite_gains_exact(const GainPair& gain, const PhaseBudget& budget,
                                     const PumpPhase& pump);

/// First-order dark-fringe expansion of the composite gains.
CompositeGains composite_gains_linear(const GainPair& gain, const PhaseBudget& budget);

/// Coefficients of the whole-interferometer input-output relation
/// b_out = (l1 a_in + l2 b_in + l3 a_in^dag + l4 b_in^dag) / 2.
struct LambdaCoeffs {
    cxd l1{0.0, 0.0};
    cxd l2{2.0, 0.0};
    cxd l3{0.0, 0.0};
    cxd l4{0.0, 0.0};
};

/// First-order coefficients at the dark fringe (degenerate case).
LambdaCoeffs lambda_coeffs(const GainPair& gain, const PhaseBudget& budget);

/// Coefficients assembled from composite gains and the pre/post segment
/// phases without further approximation.
LambdaCoeffs lambda_coeffs_from(const CompositeGains& gains, double pre_segment,
                                double post_segment);

struct FringeModel {
    double visibility = 1.0;
    double phase_sum = 0.0;
    double intensity_factor() const;
};

/// Interference factor 1 + V cos(phi_s + phi_i); constant whenever the two
/// bands carry opposite phases.
double sui_fringe(double visibility, double phi_s, double phi_i);

struct SnrPrediction {
    double signal_power = 0.0;
    double noise_power = 1.0;
    double snr = 0.0;
    double enhancement = 0.0;    // vs shot-noise baseline at matched sensing photons
    double photon_budget = 0.0;  // phase-sensing photon number
};

/// Dark-port SNR of the degenerate nested interferometer, coherent input of
/// real amplitude alpha_mag.
SnrPrediction snr_degenerate(const GainPair& gain, const PhaseBudget& budget, double alpha_mag);

/// Single coherent injection at the signal band, vacuum idler; homodyne on
/// the signal-band dark port.
SnrPrediction snr_nondegenerate_single(const GainPair& gain, const PhaseBudget& budget,
                                       double alpha_mag);

/// Equal coherent injections at both bands; combined Y_s + Y_i measurement
/// (noise power 2, band signals add before squaring).
SnrPrediction snr_nondegenerate_dual(const GainPair& gain, const PhaseBudget& budget,
                                     double alpha_mag);

/// Per-band prediction under dual injection, measuring only `which`.
SnrPrediction snr_nondegenerate_dual_band(const GainPair& gain, const PhaseBudget& budget,
                                          double alpha_mag, Band which);

/// Relative band-wavelength spread below which the collapsed near-degenerate
/// forms are considered applicable.
inline constexpr double kNearDegenerateTol = 1e-3;

/// Gate for quoting the collapsed (band-averaged) SNR forms. The full
/// per-band expressions above stay valid either way.
bool near_degenerate(double lambda_signal, double lambda_idler);

}  // namespace sagnac
