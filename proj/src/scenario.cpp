#include "sagnac/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sagnac {

namespace {

constexpr double kSplitTol = 1e-9;
constexpr double kEnergyTol = 1e-9;

BandPhases band_phases(const RotationScenario& scen, double lambda) {
    const double lp1c = sagnac_phase(scen.omega, scen.area_lp1c, lambda, scen.light_speed);
    const double lp2q = sagnac_phase(scen.omega, scen.area_lp2q, lambda, scen.light_speed);
    BandPhases b;
    b.pre = scen.segment_split[0] * lp1c;
    b.pump = scen.segment_split[1] * lp1c;
    b.post = scen.segment_split[2] * lp1c;
    b.sensing = lp2q + b.pump;
    return b;
}

}  // namespace

void RotationScenario::validate() const {
    if (lambda_signal <= 0.0 || lambda_idler <= 0.0) {
        throw std::invalid_argument("band wavelengths must be positive");
    }
    if (area_lp1c < 0.0 || area_lp2q < 0.0) {
        throw std::invalid_argument("loop areas must be nonnegative");
    }
    if (light_speed <= 0.0) {
        throw std::invalid_argument("light speed must be positive");
    }
    const double sum = segment_split[0] + segment_split[1] + segment_split[2];
    if (std::abs(sum - 1.0) > kSplitTol) {
        throw std::invalid_argument("segment split fractions must sum to 1");
    }
    if (lambda_pump > 0.0) {
        const double lhs = 1.0 / lambda_signal + 1.0 / lambda_idler;
        const double rhs = pump_harmonics() / lambda_pump;
        if (std::abs(lhs - rhs) > kEnergyTol * rhs) {
            throw std::invalid_argument(
                "energy conservation violated: 1/lambda_s + 1/lambda_i must equal " +
                std::string(process == PumpProcess::chi2 ? "1" : "2") + "/lambda_p");
        }
    }
}

double RotationScenario::derived_lambda_pump() const {
    return pump_harmonics() / (1.0 / lambda_signal + 1.0 / lambda_idler);
}

double sagnac_phase(double omega, double area, double lambda, double light_speed) {
    if (lambda <= 0.0) {
        throw std::invalid_argument("wavelength must be positive");
    }
    if (area < 0.0) {
        throw std::invalid_argument("enclosed area must be nonnegative");
    }
    return 8.0 * std::numbers::pi * omega * area / (lambda * light_speed);
}

bool operator==(const BandPhases& l, const BandPhases& r) {
    return l.pre == r.pre && l.post == r.post && l.pump == r.pump && l.sensing == r.sensing;
}

PhaseBudget phase_budget(const RotationScenario& scen) {
    scen.validate();
    PhaseBudget budget;
    budget.signal = band_phases(scen, scen.lambda_signal);
    budget.idler = band_phases(scen, scen.lambda_idler);
    return budget;
}

BuiltCircuit build_classical_sagnac(const PhaseBudget& budget, cxd alpha) {
    const ModeRegister reg = ModeRegister::degenerate_pair();
    const ModeLabel mode_a = reg.mode(0);
    const ModeLabel mode_b = reg.mode(1);
    const BandPhases& ph = budget.signal;
    const double loop = ph.pre + ph.sensing + ph.post;

    Circuit circuit(reg);
    circuit.push("bs", beam_splitter(reg, mode_a, mode_b));
    circuit.push("loop a", phase_shift(reg, mode_a, loop / 2.0));
    circuit.push("loop b", phase_shift(reg, mode_b, -loop / 2.0));
    circuit.push("bs out", beam_splitter(reg, mode_b, mode_a));
    circuit.sensing_prefix = 1;

    Eigen::VectorXcd amps(2);
    amps << alpha, 0.0;
    return {std::move(circuit), coherent_state(reg, amps), {mode_b}, false};
}

BuiltCircuit build_naive_sui_sagnac(const PhaseBudget& budget, const GainPair& gain, cxd alpha) {
    const ModeRegister reg = ModeRegister::single_path_pair();
    const ModeLabel sig = reg.mode(0);
    const ModeLabel idl = reg.mode(1);

    // One amplifier acts as splitter and combiner; the entangled pair
    // counter-propagates, so the bands pick up opposite-sign loop phases.
    Circuit circuit(reg);
    circuit.push("pa split", npa(reg, sig, idl, gain, 0.0));
    circuit.push("loop s", phase_shift(reg, sig, budget.signal.sensing / 2.0));
    circuit.push("loop i", phase_shift(reg, idl, -budget.idler.sensing / 2.0));
    circuit.push("pa combine", npa(reg, sig, idl, gain, std::numbers::pi));
    circuit.sensing_prefix = 1;

    Eigen::VectorXcd amps(2);
    amps << alpha, 0.0;
    return {std::move(circuit), coherent_state(reg, amps), {idl}, false};
}

BuiltCircuit build_nested_sagnac_sui(const PhaseBudget& budget, const GainPair& gain,
                                     const Injection& injection) {
    const PumpPhase pump = PumpPhase::dark_fringe(budget.delta_phi2() / 2.0);

    if (injection.scheme == InjectionScheme::degenerate_single) {
        if (!budget.bands_equal()) {
            throw std::invalid_argument(
                "degenerate injection requires equal signal/idler phase budgets");
        }
        const ModeRegister reg = ModeRegister::degenerate_pair();
        const ModeLabel ma = reg.mode(0);
        const ModeLabel mb = reg.mode(1);
        const BandPhases& ph = budget.signal;
        const PropagationPhases prop =
            PropagationPhases::counter_propagating(ph.sensing, ph.pre, ph.post);

        Circuit circuit(reg);
        circuit.push("bs", beam_splitter(reg, ma, mb));
        circuit.push("pre a", phase_shift(reg, ma, prop.delta_a1));
        circuit.push("pre b", phase_shift(reg, mb, prop.delta_b1));
        circuit.push("dpa1", dpa(reg, ma, gain, pump.phi1));
        circuit.push("dpa1'", dpa(reg, mb, gain, pump.phi1_prime));
        circuit.push("sense a", phase_shift(reg, ma, prop.delta1));
        circuit.push("sense b", phase_shift(reg, mb, prop.delta2));
        circuit.push("dpa2", dpa(reg, ma, gain, pump.phi2));
        circuit.push("dpa2'", dpa(reg, mb, gain, pump.phi2_prime));
        circuit.push("post a", phase_shift(reg, ma, prop.delta_a4));
        circuit.push("post b", phase_shift(reg, mb, prop.delta_b4));
        circuit.push("bs out", beam_splitter(reg, mb, ma));
        circuit.sensing_prefix = 5;

        Eigen::VectorXcd amps(2);
        amps << injection.alpha, 0.0;
        return {std::move(circuit), coherent_state(reg, amps), {mb}, false};
    }

    const ModeRegister reg = ModeRegister::nondegenerate_quad();
    const ModeLabel as = reg.mode(0);
    const ModeLabel ai = reg.mode(1);
    const ModeLabel bs = reg.mode(2);
    const ModeLabel bi = reg.mode(3);
    const PropagationPhases prop_s = PropagationPhases::counter_propagating(
        budget.signal.sensing, budget.signal.pre, budget.signal.post);
    const PropagationPhases prop_i = PropagationPhases::counter_propagating(
        budget.idler.sensing, budget.idler.pre, budget.idler.post);

    Circuit circuit(reg);
    circuit.push("bs s", beam_splitter(reg, as, bs));
    circuit.push("bs i", beam_splitter(reg, ai, bi));
    circuit.push("pre as", phase_shift(reg, as, prop_s.delta_a1));
    circuit.push("pre ai", phase_shift(reg, ai, prop_i.delta_a1));
    circuit.push("pre bs", phase_shift(reg, bs, prop_s.delta_b1));
    circuit.push("pre bi", phase_shift(reg, bi, prop_i.delta_b1));
    circuit.push("npa1", npa(reg, as, ai, gain, pump.phi1));
    circuit.push("npa1'", npa(reg, bs, bi, gain, pump.phi1_prime));
    circuit.push("sense as", phase_shift(reg, as, prop_s.delta1));
    circuit.push("sense ai", phase_shift(reg, ai, prop_i.delta1));
    circuit.push("sense bs", phase_shift(reg, bs, prop_s.delta2));
    circuit.push("sense bi", phase_shift(reg, bi, prop_i.delta2));
    circuit.push("npa2", npa(reg, as, ai, gain, pump.phi2));
    circuit.push("npa2'", npa(reg, bs, bi, gain, pump.phi2_prime));
    circuit.push("post as", phase_shift(reg, as, prop_s.delta_a4));
    circuit.push("post ai", phase_shift(reg, ai, prop_i.delta_a4));
    circuit.push("post bs", phase_shift(reg, bs, prop_s.delta_b4));
    circuit.push("post bi", phase_shift(reg, bi, prop_i.delta_b4));
    circuit.push("bs out s", beam_splitter(reg, bs, as));
    circuit.push("bs out i", beam_splitter(reg, bi, ai));
    circuit.sensing_prefix = 8;

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps(0) = injection.alpha;
    if (injection.scheme == InjectionScheme::nondegenerate_dual) {
        amps(1) = injection.alpha;
    }
    const bool dual = injection.scheme == InjectionScheme::nondegenerate_dual;
    std::vector<ModeLabel> monitored = dual ? std::vector<ModeLabel>{bs, bi}
                                            : std::vector<ModeLabel>{bs};
    return {std::move(circuit), coherent_state(reg, amps), std::move(monitored), dual};
}

}  // namespace sagnac
