#pragma once

#include <random>

#include "sagnac/circuit.hpp"
#include "sagnac/components.hpp"
#include "sagnac/gaussian.hpp"

namespace test_helpers {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240517);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng());
}

/// Random physically valid element on the given register.
inline sagnac::BogoliubovTransform random_element(const sagnac::ModeRegister& reg) {
    using namespace sagnac;
    std::uniform_int_distribution<int> pick_kind(0, 3);
    std::uniform_int_distribution<int> pick_mode(0, static_cast<int>(reg.size()) - 1);
    const double angle = uniform(-3.0, 3.0);
    const GainPair gain = GainPair::from_amp_gain(uniform(1.0, 3.0));

    switch (pick_kind(rng())) {
        case 0: {
            // splitter between two same-band modes, if the register has such a pair
            for (std::size_t i = 0; i < reg.size(); ++i) {
                for (std::size_t j = i + 1; j < reg.size(); ++j) {
                    if (reg.mode(i).band == reg.mode(j).band) {
                        return beam_splitter(reg, reg.mode(i), reg.mode(j));
                    }
                }
            }
            [[fallthrough]];
        }
        case 1:
            return phase_shift(reg, reg.mode(pick_mode(rng())), angle);
        case 2: {
            if (reg.is_degenerate()) {
                return dpa(reg, reg.mode(pick_mode(rng())), gain, angle);
            }
            for (std::size_t i = 0; i < reg.size(); ++i) {
                for (std::size_t j = 0; j < reg.size(); ++j) {
                    if (reg.mode(i).band == sagnac::Band::signal &&
                        reg.mode(j).band == sagnac::Band::idler &&
                        reg.mode(i).path == reg.mode(j).path) {
                        return npa(reg, reg.mode(i), reg.mode(j), gain, angle);
                    }
                }
            }
            return phase_shift(reg, reg.mode(pick_mode(rng())), angle);
        }
        default:
            return phase_shift(reg, reg.mode(pick_mode(rng())), angle);
    }
}

inline sagnac::ModeRegister random_register() {
    std::uniform_int_distribution<int> pick(0, 2);
    switch (pick(rng())) {
        case 0: return sagnac::ModeRegister::degenerate_pair();
        case 1: return sagnac::ModeRegister::single_path_pair();
        default: return sagnac::ModeRegister::nondegenerate_quad();
    }
}

template <typename Lhs, typename Rhs>
double max_abs_diff(const Lhs& l, const Rhs& r) {
    return (l - r).cwiseAbs().maxCoeff();
}

}  // namespace test_helpers
