#pragma once

#include <functional>
#include <optional>

#include "sagnac/circuit.hpp"
#include "sagnac/gaussian.hpp"

namespace sagnac {

enum class CombineMode { single, sum_of_two };

/// Homodyne detector configuration. lo_angle 0 measures Y = i(a^dag - a),
/// lo_angle pi/2 measures X = a + a^dag.
struct HomodyneSetting {
    ModeLabel mode;
    std::optional<ModeLabel> second{};
    double lo_angle = 0.0;
    CombineMode combine = CombineMode::single;

    static HomodyneSetting phase_quadrature(ModeLabel m);
    static HomodyneSetting combined_sum(ModeLabel first, ModeLabel second);
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

Moments homodyne(const GaussianState& state, const ModeRegister& reg,
                 const HomodyneSetting& setting);

struct SnrReport {
    double mean = 0.0;
    double variance = 0.0;
    double signal_power = 0.0;
    double snr = 0.0;
    double baseline_snr = 0.0;  // baseline circuit, rescaled to matched sensing photons
    double enhancement = 0.0;
    double sensing_photons = 0.0;
    double baseline_sensing_photons = 0.0;
};

/// Coherent photon number entering the sensing loop: sum of |<a_k>|^2 after
/// the circuit's sensing prefix.
double sensing_photons(const Circuit& circuit, const GaussianState& input);

double mean_photon_number(const GaussianState& state, std::size_t mode_index);
double total_photon_number(const GaussianState& state);

/// Exact propagation and homodyne SNR, with the enhancement quoted against
/// the baseline circuit at matched sensing photon number. The baseline is
/// measured with `baseline_setting` when given, otherwise with `setting`.
SnrReport snr_exact(const Circuit& circuit, const GaussianState& input,
                    const HomodyneSetting& setting, const Circuit& baseline,
                    std::optional<HomodyneSetting> baseline_setting = {});

/// Central-difference derivative of the homodyne mean over a circuit family.
double slope_check(const std::function<Circuit(double)>& family, const GaussianState& input,
                   const HomodyneSetting& setting, double step);

/// Central-difference derivative of an arbitrary output-state functional.
double slope_check(const std::function<Circuit(double)>& family, const GaussianState& input,
                   const std::function<double(const GaussianState&, const ModeRegister&)>& eval,
                   double step);

/// LO angle maximizing mean^2/variance, by scanning then refining.
double optimal_lo_angle(const GaussianState& state, const ModeRegister& reg,
                        const HomodyneSetting& base, int samples = 720);

}  // namespace sagnac
