#pragma once

#include "sagnac/gaussian.hpp"
#include "sagnac/modes.hpp"

namespace sagnac {

/// Parametric amplifier gain pair (G, g) with G^2 - g^2 = 1.
struct GainPair {
    double amp_gain = 1.0;   // G >= 1
    double conj_gain = 0.0;  // g >= 0

    GainPair(double amp, double conj);
    static GainPair from_amp_gain(double amp);   // g = sqrt(G^2 - 1)
    static GainPair from_squeezing(double r);    // G = cosh r, g = sinh r

    bool is_unity() const { return conj_gain == 0.0; }
};

/// Pump phases of the four amplifiers. The dark-fringe operating point is
/// phi1 = phi1' = 0, phi2 = pi + delta_phi2, phi2' = pi - delta_phi2.
struct PumpPhase {
    double phi1 = 0.0;
    double phi1_prime = 0.0;
    double phi2 = 0.0;
    double phi2_prime = 0.0;
    double delta_phi2 = 0.0;  // rotation-induced pump shift (half of the total pump phase difference)

    static PumpPhase dark_fringe(double delta_phi2);
};

/// Per-element propagation phases of one band. Counter-propagation assigns
/// delta1 = -delta2 = delta/2, delta_a1 = -delta_b4 = Delta1/2 and
/// delta_a4 = -delta_b1 = Delta2/2.
struct PropagationPhases {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta_a1 = 0.0;
    double delta_b1 = 0.0;
    double delta_a4 = 0.0;
    double delta_b4 = 0.0;

    static PropagationPhases counter_propagating(double sensing, double pre_segment,
                                                 double post_segment);
};

/// 50:50 splitter: port_a -> (port_a + port_b)/sqrt2, port_b -> (port_b - port_a)/sqrt2.
/// Traversing the same splitter backwards is beam_splitter(reg, port_b, port_a).
BogoliubovTransform beam_splitter(const ModeRegister& reg, const ModeLabel& port_a,
                                  const ModeLabel& port_b);

BogoliubovTransform phase_shift(const ModeRegister& reg, const ModeLabel& mode, double theta);

/// Degenerate parametric amplifier on one mode: a -> G a + e^{i phi} g a^dag.
BogoliubovTransform dpa(const ModeRegister& reg, const ModeLabel& mode, const GainPair& gain,
                        double pump_phase);

/// Non-degenerate parametric amplifier coupling signal and idler of one path:
/// a_s -> G a_s + e^{i phi} g a_i^dag and a_i -> G a_i + e^{i phi} g a_s^dag.
BogoliubovTransform npa(const ModeRegister& reg, const ModeLabel& signal_mode,
                        const ModeLabel& idler_mode, const GainPair& gain, double pump_phase);

}  // namespace sagnac
