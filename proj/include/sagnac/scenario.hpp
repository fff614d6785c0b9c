#pragma once

#include <array>
#include <complex>

#include "sagnac/circuit.hpp"
#include "sagnac/components.hpp"
#include "sagnac/gaussian.hpp"

namespace sagnac {

enum class PumpProcess { chi2, chi3 };

/// Rotation geometry: angular velocity, the two enclosed loop areas, and the
/// wavelengths of the sensing and pump fields. All quantities in SI units.
struct RotationScenario {
    double omega = 0.0;        // rad/s
    double area_lp1c = 0.0;    // m^2, classical loop (pre/post segments + pump path)
    double area_lp2q = 0.0;    // m^2, quantum loop (between the two amplifiers)
    std::array<double, 3> segment_split{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    double lambda_signal = 0.0;  // m
    double lambda_idler = 0.0;   // m
    double lambda_pump = 0.0;    // m; 0 means unspecified (derived where needed)
    double light_speed = 299792458.0;
    PumpProcess process = PumpProcess::chi2;

    bool is_degenerate() const { return lambda_signal == lambda_idler; }
    void validate() const;

    /// 1/lambda_s + 1/lambda_i equals this times 1/lambda_p.
    double pump_harmonics() const { return process == PumpProcess::chi2 ? 1.0 : 2.0; }
    double derived_lambda_pump() const;
};

/// Sagnac phase 8 pi Omega A / (lambda c) for one wavelength.
double sagnac_phase(double omega, double area, double lambda, double light_speed);

/// Rotation phases of one band. The classical-loop total is
/// pre + pump + post and the quantum-loop total is sensing - pump.
struct BandPhases {
    double pre = 0.0;      // phase picked up before the first amplifier
    double post = 0.0;     // phase picked up after the second amplifier
    double pump = 0.0;     // equivalent pump-path phase at this band
    double sensing = 0.0;  // sensing-loop phase difference between the arms

    double classical_loop() const { return pre + pump + post; }
    double quantum_loop() const { return sensing - pump; }
};

bool operator==(const BandPhases& l, const BandPhases& r);

struct PhaseBudget {
    BandPhases signal;
    BandPhases idler;  // equal to signal in the degenerate case

    double delta_phi2() const { return signal.pump + idler.pump; }
    const BandPhases& band(Band b) const { return b == Band::idler ? idler : signal; }
    bool bands_equal() const { return signal == idler; }

    double mean_classical_loop() const {
        return (signal.classical_loop() + idler.classical_loop()) / 2.0;
    }
    double mean_quantum_loop() const {
        return (signal.quantum_loop() + idler.quantum_loop()) / 2.0;
    }
};

/// Distributes the loop phases of the scenario over every element phase.
/// The sensing phase is quantum_loop + pump so that both loop identities
/// hold at once (the pump path is traversed in the opposite sense).
PhaseBudget phase_budget(const RotationScenario& scen);

enum class InjectionScheme { degenerate_single, nondegenerate_single, nondegenerate_dual };

struct Injection {
    InjectionScheme scheme = InjectionScheme::degenerate_single;
    cxd alpha{0.0, 0.0};
};

/// A circuit ready to run: element list, input state, and the dark-port
/// modes a homodyne detector would monitor.
struct BuiltCircuit {
    Circuit circuit;
    GaussianState input;
    std::vector<ModeLabel> monitored;
    bool combine_sum = false;
};

BuiltCircuit build_classical_sagnac(const PhaseBudget& budget, cxd alpha);
BuiltCircuit build_naive_sui_sagnac(const PhaseBudget& budget, const GainPair& gain, cxd alpha);
BuiltCircuit build_nested_sagnac_sui(const PhaseBudget& budget, const GainPair& gain,
                                     const Injection& injection);

}  // namespace sagnac
