#include "sagnac/components.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sagnac {

namespace {

constexpr double kGainTol = 1e-12;

Eigen::MatrixXcd id(std::size_t n) {
    return Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n),
                                      static_cast<Eigen::Index>(n));
}

Eigen::MatrixXcd zero(std::size_t n) {
    return Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                  static_cast<Eigen::Index>(n));
}

}  // namespace

GainPair::GainPair(double amp, double conj) : amp_gain(amp), conj_gain(conj) {
    if (amp < 1.0 || conj < 0.0) {
        throw std::invalid_argument("gain pair requires G >= 1 and g >= 0");
    }
    if (std::abs(amp * amp - conj * conj - 1.0) > kGainTol) {
        throw std::invalid_argument("gain pair must satisfy G^2 - g^2 = 1");
    }
}

GainPair GainPair::from_amp_gain(double amp) {
    if (amp < 1.0) {
        throw std::invalid_argument("amplitude gain must be >= 1");
    }
    return {amp, std::sqrt(amp * amp - 1.0)};
}

GainPair GainPair::from_squeezing(double r) {
    return {std::cosh(r), std::sinh(r)};
}

PumpPhase PumpPhase::dark_fringe(double delta_phi2) {
    PumpPhase p;
    p.phi1 = 0.0;
    p.phi1_prime = 0.0;
    p.phi2 = std::numbers::pi + delta_phi2;
    p.phi2_prime = std::numbers::pi - delta_phi2;
    p.delta_phi2 = delta_phi2;
    return p;
}

PropagationPhases PropagationPhases::counter_propagating(double sensing, double pre_segment,
                                                         double post_segment) {
    PropagationPhases p;
    p.delta1 = sensing / 2.0;
    p.delta2 = -sensing / 2.0;
    p.delta_a1 = pre_segment / 2.0;
    p.delta_b4 = -pre_segment / 2.0;
    p.delta_a4 = post_segment / 2.0;
    p.delta_b1 = -post_segment / 2.0;
    return p;
}

BogoliubovTransform beam_splitter(const ModeRegister& reg, const ModeLabel& port_a,
                                  const ModeLabel& port_b) {
    const auto ia = static_cast<Eigen::Index>(reg.index_of(port_a));
    const auto ib = static_cast<Eigen::Index>(reg.index_of(port_b));
    if (ia == ib) {
        throw std::invalid_argument("beam splitter ports must be distinct modes");
    }
    if (port_a.band != port_b.band) {
        throw std::invalid_argument("beam splitter couples modes of one band only");
    }
    Eigen::MatrixXcd a = id(reg.size());
    const double s = 1.0 / std::numbers::sqrt2;
    a(ia, ia) = s;
    a(ia, ib) = s;
    a(ib, ib) = s;
    a(ib, ia) = -s;
    return {a, zero(reg.size())};
}

BogoliubovTransform phase_shift(const ModeRegister& reg, const ModeLabel& mode, double theta) {
    const auto i = static_cast<Eigen::Index>(reg.index_of(mode));
    Eigen::MatrixXcd a = id(reg.size());
    a(i, i) = std::polar(1.0, theta);
    return {a, zero(reg.size())};
}

BogoliubovTransform dpa(const ModeRegister& reg, const ModeLabel& mode, const GainPair& gain,
                        double pump_phase) {
    if (mode.band != Band::degenerate) {
        throw std::invalid_argument("dpa acts on a degenerate-band mode; use npa for "
                                    "signal/idler registers");
    }
    const auto i = static_cast<Eigen::Index>(reg.index_of(mode));
    Eigen::MatrixXcd a = id(reg.size());
    Eigen::MatrixXcd b = zero(reg.size());
    a(i, i) = gain.amp_gain;
    b(i, i) = gain.conj_gain * std::polar(1.0, pump_phase);
    return {a, b};
}

BogoliubovTransform npa(const ModeRegister& reg, const ModeLabel& signal_mode,
                        const ModeLabel& idler_mode, const GainPair& gain, double pump_phase) {
    if (signal_mode.same_mode(idler_mode)) {
        throw std::invalid_argument("npa requires two distinct modes");
    }
    if (signal_mode.band != Band::signal || idler_mode.band != Band::idler) {
        throw std::invalid_argument("npa couples a signal-band mode with an idler-band mode");
    }
    if (signal_mode.path != idler_mode.path) {
        throw std::invalid_argument("npa couples signal and idler of the same path");
    }
    const auto is = static_cast<Eigen::Index>(reg.index_of(signal_mode));
    const auto ii = static_cast<Eigen::Index>(reg.index_of(idler_mode));
    Eigen::MatrixXcd a = id(reg.size());
    Eigen::MatrixXcd b = zero(reg.size());
    a(is, is) = gain.amp_gain;
    a(ii, ii) = gain.amp_gain;
    const cxd coupling = gain.conj_gain * std::polar(1.0, pump_phase);
    b(is, ii) = coupling;
    b(ii, is) = coupling;
    return {a, b};
}

}  // namespace sagnac
