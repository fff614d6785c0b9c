#include "sagnac/measurement.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sagnac {

HomodyneSetting HomodyneSetting::phase_quadrature(ModeLabel m) {
    HomodyneSetting s;
    s.mode = std::move(m);
    return s;
}

HomodyneSetting HomodyneSetting::combined_sum(ModeLabel first, ModeLabel second) {
    HomodyneSetting s;
    s.mode = std::move(first);
    s.second = std::move(second);
    s.combine = CombineMode::sum_of_two;
    return s;
}

Moments homodyne(const GaussianState& state, const ModeRegister& reg,
                 const HomodyneSetting& setting) {
    if (state.size() != reg.size()) {
        throw std::invalid_argument("state size does not match register");
    }
    Eigen::VectorXd direction = Eigen::VectorXd::Zero(2 * static_cast<Eigen::Index>(reg.size()));
    const auto add_mode = [&](const ModeLabel& m) {
        const auto i = static_cast<Eigen::Index>(reg.index_of(m));
        direction(2 * i) += std::sin(setting.lo_angle);
        direction(2 * i + 1) += std::cos(setting.lo_angle);
    };
    add_mode(setting.mode);
    if (setting.combine == CombineMode::sum_of_two) {
        if (!setting.second) {
            throw std::invalid_argument("combined measurement requires a second mode");
        }
        add_mode(*setting.second);
    }
    return {direction.dot(state.quadrature_mean()),
            direction.dot(state.cov() * direction)};
}

double mean_photon_number(const GaussianState& state, std::size_t mode_index) {
    if (mode_index >= state.size()) {
        throw std::invalid_argument("mode index out of range");
    }
    const auto i = static_cast<Eigen::Index>(mode_index);
    const double coherent = std::norm(state.mean()(i));
    const double fluct = (state.cov()(2 * i, 2 * i) + state.cov()(2 * i + 1, 2 * i + 1) - 2.0) / 4.0;
    return coherent + fluct;
}

double total_photon_number(const GaussianState& state) {
    double total = 0.0;
    for (std::size_t k = 0; k < state.size(); ++k) {
        total += mean_photon_number(state, k);
    }
    return total;
}

double sensing_photons(const Circuit& circuit, const GaussianState& input) {
    const GaussianState at_loop = circuit.propagate_prefix(input, circuit.sensing_prefix);
    return at_loop.mean().squaredNorm();
}

SnrReport snr_exact(const Circuit& circuit, const GaussianState& input,
                    const HomodyneSetting& setting, const Circuit& baseline,
                    std::optional<HomodyneSetting> baseline_setting) {
    const Moments m = homodyne(circuit.propagate(input), circuit.reg(), setting);
    if (m.variance <= 0.0) {
        throw std::runtime_error("homodyne variance must be positive");
    }

    SnrReport report;
    report.mean = m.mean;
    report.variance = m.variance;
    report.signal_power = m.mean * m.mean;
    report.snr = report.signal_power / m.variance;
    report.sensing_photons = sensing_photons(circuit, input);

    const HomodyneSetting& bset = baseline_setting ? *baseline_setting : setting;
    const Moments mb = homodyne(baseline.propagate(input), baseline.reg(), bset);
    if (mb.variance <= 0.0) {
        throw std::runtime_error("baseline homodyne variance must be positive");
    }
    const double baseline_raw = mb.mean * mb.mean / mb.variance;
    report.baseline_sensing_photons = sensing_photons(baseline, input);

    // Rescaling the baseline input to matched sensing photons scales its SNR
    // linearly, so the matched comparison is per sensing photon.
    if (report.baseline_sensing_photons > 0.0 && report.sensing_photons > 0.0) {
        report.baseline_snr =
            baseline_raw * report.sensing_photons / report.baseline_sensing_photons;
    } else {
        report.baseline_snr = baseline_raw;
    }
    report.enhancement = report.baseline_snr > 0.0
                             ? report.snr / report.baseline_snr
                             : std::numeric_limits<double>::quiet_NaN();
    return report;
}

double slope_check(const std::function<Circuit(double)>& family, const GaussianState& input,
                   const HomodyneSetting& setting, double step) {
    return slope_check(
        family, input,
        [&setting](const GaussianState& s, const ModeRegister& reg) {
            return homodyne(s, reg, setting).mean;
        },
        step);
}

double slope_check(const std::function<Circuit(double)>& family, const GaussianState& input,
                   const std::function<double(const GaussianState&, const ModeRegister&)>& eval,
                   double step) {
    if (step <= 0.0) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    const Circuit plus = family(step);
    const Circuit minus = family(-step);
    const double up = eval(plus.propagate(input), plus.reg());
    const double down = eval(minus.propagate(input), minus.reg());
    return (up - down) / (2.0 * step);
}

double optimal_lo_angle(const GaussianState& state, const ModeRegister& reg,
                        const HomodyneSetting& base, int samples) {
    if (samples < 4) {
        throw std::invalid_argument("angle scan needs at least 4 samples");
    }
    const auto snr_at = [&](double angle) {
        HomodyneSetting s = base;
        s.lo_angle = angle;
        const Moments m = homodyne(state, reg, s);
        return m.mean * m.mean / m.variance;
    };
    double best_angle = 0.0;
    double best = -1.0;
    for (int k = 0; k < samples; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / samples;
        const double v = snr_at(angle);
        if (v > best) {
            best = v;
            best_angle = angle;
        }
    }
    // golden-section refinement around the best coarse sample
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_angle - 2.0 * std::numbers::pi / samples;
    double hi = best_angle + 2.0 * std::numbers::pi / samples;
    for (int iter = 0; iter < 60; ++iter) {
        const double c = hi - gr * (hi - lo);
        const double d = lo + gr * (hi - lo);
        if (snr_at(c) > snr_at(d)) {
            hi = d;
        } else {
            lo = c;
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace sagnac
