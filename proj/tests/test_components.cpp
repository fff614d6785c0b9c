#include "doctest.h"

#include <numbers>

#include "helpers.hpp"
#include "sagnac/components.hpp"

using namespace sagnac;
using test_helpers::max_abs_diff;

namespace {

const ModeRegister kPair = ModeRegister::degenerate_pair();
const ModeRegister kQuad = ModeRegister::nondegenerate_quad();

Eigen::VectorXcd two_amps(cxd first, cxd second) {
    Eigen::VectorXcd v(2);
    v << first, second;
    return v;
}

bool is_identity(const BogoliubovTransform& t, double tol = 1e-15) {
    const auto n = static_cast<Eigen::Index>(t.size());
    return max_abs_diff(t.a(), Eigen::MatrixXcd::Identity(n, n)) < tol &&
           t.b().cwiseAbs().maxCoeff() < tol;
}

}  // namespace

TEST_CASE("splitter sends a single input to both ports with opposite signs") {
    const auto bs = beam_splitter(kPair, kPair.mode(0), kPair.mode(1));
    const cxd alpha(0.8, 0.3);
    const auto out = apply(bs, coherent_state(kPair, two_amps(alpha, 0.0)));
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(out.mean()(0) - alpha * r) < 1e-15);
    CHECK(std::abs(out.mean()(1) + alpha * r) < 1e-15);
}

TEST_CASE("splitter combines equal inputs into the constructive port") {
    const auto bs = beam_splitter(kPair, kPair.mode(0), kPair.mode(1));
    const cxd alpha(1.0, -0.5);
    const auto out = apply(bs, coherent_state(kPair, two_amps(alpha, alpha)));
    CHECK(std::abs(out.mean()(0) - alpha * std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(out.mean()(1)) < 1e-15);
}

TEST_CASE("splitter applied twice is a quarter-turn rotation") {
    const auto bs = beam_splitter(kPair, kPair.mode(0), kPair.mode(1));
    const auto twice = compose(bs, bs);
    const Eigen::MatrixXd s = to_symplectic(bs);
    CHECK(max_abs_diff(to_symplectic(twice), s * s) < 1e-15);

    const auto out = apply(twice, coherent_state(kPair, two_amps(1.0, 0.0)));
    CHECK(std::abs(out.mean()(0)) < 1e-15);
    CHECK(std::abs(out.mean()(1) - cxd(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("splitter and phase shifter have exactly zero B block") {
    const auto bs = beam_splitter(kPair, kPair.mode(0), kPair.mode(1));
    CHECK(bs.b().cwiseAbs().maxCoeff() == 0.0);
    const auto ps = phase_shift(kPair, kPair.mode(0), 1.3);
    CHECK(ps.b().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("phase shifter basics") {
    CHECK(is_identity(phase_shift(kPair, kPair.mode(0), 0.0)));

    const auto flip = phase_shift(kPair, kPair.mode(0), std::numbers::pi);
    const auto out = apply(flip, coherent_state(kPair, two_amps(0.6, 0.0)));
    CHECK(std::abs(out.mean()(0) - cxd(-0.6, 0.0)) < 1e-15);

    const auto there = phase_shift(kPair, kPair.mode(1), 0.31);
    const auto back = phase_shift(kPair, kPair.mode(1), -0.31);
    CHECK(is_identity(compose(there, back)));
}

TEST_CASE("dpa with unit gain is the identity") {
    CHECK(is_identity(dpa(kPair, kPair.mode(0), GainPair(1.0, 0.0), 0.7)));
}

TEST_CASE("dpa amplifies a real mean by G+g at zero pump phase") {
    const GainPair gain(1.25, 0.75);
    const auto amp = dpa(kPair, kPair.mode(0), gain, 0.0);
    const auto out = apply(amp, coherent_state(kPair, two_amps(1.0, 0.0)));
    CHECK(std::abs(out.mean()(0) - cxd(2.0, 0.0)) < 1e-15);
}

TEST_CASE("dpa at pump phase pi deamplifies and inverts its partner") {
    const GainPair gain(1.25, 0.75);
    const auto forward = dpa(kPair, kPair.mode(0), gain, 0.0);
    const auto backward = dpa(kPair, kPair.mode(0), gain, std::numbers::pi);

    const auto out = apply(backward, coherent_state(kPair, two_amps(1.0, 0.0)));
    CHECK(std::abs(out.mean()(0) - cxd(0.5, 0.0)) < 1e-15);

    CHECK(is_identity(compose(forward, backward)));
}

TEST_CASE("dpa then dpa with pump phase offset pi cancels for random parameters") {
    for (int iter = 0; iter < 50; ++iter) {
        const GainPair gain = GainPair::from_amp_gain(test_helpers::uniform(1.0, 3.0));
        const double pump = test_helpers::uniform(-3.0, 3.0);
        const auto first = dpa(kPair, kPair.mode(1), gain, pump);
        const auto second = dpa(kPair, kPair.mode(1), gain, pump + std::numbers::pi);
        CHECK(is_identity(compose(first, second), 1e-13));
    }
}

TEST_CASE("npa with unit gain is the identity") {
    CHECK(is_identity(npa(kQuad, kQuad.mode(0), kQuad.mode(1), GainPair(1.0, 0.0), 0.4)));
}

TEST_CASE("npa on vacuum produces per-mode variance G^2+g^2 with zero mean") {
    const GainPair gain(1.25, 0.75);
    const auto amp = npa(kQuad, kQuad.mode(0), kQuad.mode(1), gain, 0.0);
    const auto out = apply(amp, GaussianState::vacuum(4));
    CHECK(out.mean().cwiseAbs().maxCoeff() == 0.0);
    for (int q = 0; q < 4; ++q) {  // X and Y of signal and idler
        CHECK(out.cov()(q, q) == doctest::Approx(17.0 / 8.0).epsilon(1e-12));
    }
    // untouched modes stay at vacuum
    CHECK(out.cov()(4, 4) == doctest::Approx(1.0));
}

TEST_CASE("npa cross-amplifies means: (alpha, 0) -> (G alpha, g conj(alpha))") {
    const GainPair gain(1.25, 0.75);
    const cxd alpha(0.4, 0.9);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps(0) = alpha;
    const auto out = apply(npa(kQuad, kQuad.mode(0), kQuad.mode(1), gain, 0.0),
                           coherent_state(kQuad, amps));
    CHECK(std::abs(out.mean()(0) - 1.25 * alpha) < 1e-15);
    CHECK(std::abs(out.mean()(1) - 0.75 * std::conj(alpha)) < 1e-15);
}

TEST_CASE("npa pairs with pump phase offset pi cancel on the two-mode subspace") {
    for (int iter = 0; iter < 50; ++iter) {
        const GainPair gain = GainPair::from_amp_gain(test_helpers::uniform(1.0, 3.0));
        const double pump = test_helpers::uniform(-3.0, 3.0);
        const auto first = npa(kQuad, kQuad.mode(2), kQuad.mode(3), gain, pump);
        const auto second = npa(kQuad, kQuad.mode(2), kQuad.mode(3), gain,
                                pump + std::numbers::pi);
        CHECK(is_identity(compose(first, second), 1e-13));
    }
}

TEST_CASE("factory outputs always satisfy the transform invariants") {
    for (int iter = 0; iter < 200; ++iter) {
        const auto reg = test_helpers::random_register();
        CHECK_NOTHROW(test_helpers::random_element(reg));  // ctor enforces invariants
    }
}

TEST_CASE("gain pair validation") {
    CHECK_THROWS_AS(GainPair(2.0, 1.0), std::invalid_argument);  // G^2-g^2 != 1
    CHECK_THROWS_AS(GainPair(0.5, 0.0), std::invalid_argument);  // G < 1
    CHECK_THROWS_AS(GainPair(1.25, -0.75), std::invalid_argument);
    CHECK(GainPair::from_amp_gain(1.25).conj_gain == doctest::Approx(0.75));
    const GainPair squeezed = GainPair::from_squeezing(0.5);
    CHECK(squeezed.amp_gain == doctest::Approx(std::cosh(0.5)));
}

TEST_CASE("pump phases at the dark fringe") {
    const PumpPhase pump = PumpPhase::dark_fringe(1e-4);
    CHECK(pump.phi1 == 0.0);
    CHECK(pump.phi1_prime == 0.0);
    CHECK(pump.phi2 == doctest::Approx(std::numbers::pi + 1e-4));
    CHECK(pump.phi2_prime == doctest::Approx(std::numbers::pi - 1e-4));
}

TEST_CASE("counter-propagating phases are antisymmetric") {
    const auto prop = PropagationPhases::counter_propagating(2e-6, 4e-7, 6e-7);
    CHECK(prop.delta1 == -prop.delta2);
    CHECK(prop.delta1 == doctest::Approx(1e-6));
    CHECK(prop.delta_a1 == -prop.delta_b4);
    CHECK(prop.delta_a1 == doctest::Approx(2e-7));
    CHECK(prop.delta_a4 == -prop.delta_b1);
    CHECK(prop.delta_a4 == doctest::Approx(3e-7));
}

TEST_CASE("factories reject invalid mode requests") {
    const ModeLabel stranger{Path::a, Band::signal};
    CHECK_THROWS_AS(beam_splitter(kPair, kPair.mode(0), stranger), std::invalid_argument);
    CHECK_THROWS_AS(beam_splitter(kQuad, kQuad.mode(0), kQuad.mode(1)),
                    std::invalid_argument);  // bands differ
    CHECK_THROWS_AS(phase_shift(kPair, stranger, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(dpa(kQuad, kQuad.mode(0), GainPair(1.25, 0.75), 0.0),
                    std::invalid_argument);  // non-degenerate register
    CHECK_THROWS_AS(npa(kQuad, kQuad.mode(0), kQuad.mode(0), GainPair(1.25, 0.75), 0.0),
                    std::invalid_argument);  // same mode twice
    CHECK_THROWS_AS(npa(kQuad, kQuad.mode(0), kQuad.mode(3), GainPair(1.25, 0.75), 0.0),
                    std::invalid_argument);  // different paths
}
