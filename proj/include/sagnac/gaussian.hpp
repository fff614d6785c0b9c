#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "sagnac/modes.hpp"

namespace sagnac {

using cxd = std::complex<double>;

// Construction-time invariant tolerance and propagation-time tolerance.
inline constexpr double kTransformTol = 1e-10;
inline constexpr double kPropagateTol = 1e-9;

/// Linear-canonical map of annihilation operators, a_out = A a + B a^dag.
/// Preserving commutators requires A A^dag - B B^dag = I and A B^T = B A^T;
/// both are enforced at construction.
class BogoliubovTransform {
  public:
    BogoliubovTransform(Eigen::MatrixXcd a, Eigen::MatrixXcd b);

    static BogoliubovTransform identity(std::size_t n);

    std::size_t size() const { return static_cast<std::size_t>(a_.rows()); }
    const Eigen::MatrixXcd& a() const { return a_; }
    const Eigen::MatrixXcd& b() const { return b_; }

  private:
    Eigen::MatrixXcd a_;
    Eigen::MatrixXcd b_;
};

/// Standard symplectic form on interleaved (X1, Y1, X2, Y2, ...) quadratures.
Eigen::MatrixXd symplectic_form(std::size_t n);

/// Real 2N x 2N quadrature matrix of the transform, with X = a + a^dag and
/// Y = i(a^dag - a). Mean quadratures transform as q -> S q, consistently
/// with mean amplitudes transforming as alpha -> A alpha + B conj(alpha).
Eigen::MatrixXd to_symplectic(const BogoliubovTransform& t);

/// Sequential application: `first`, then `second`.
BogoliubovTransform compose(const BogoliubovTransform& first, const BogoliubovTransform& second);

/// Multimode Gaussian state: complex mean amplitude per mode plus a real
/// covariance matrix over quadratures. Vacuum covariance is the identity,
/// so every vacuum quadrature has variance 1.
class GaussianState {
  public:
    GaussianState(Eigen::VectorXcd mean, Eigen::MatrixXd cov);

    static GaussianState vacuum(std::size_t n);

    std::size_t size() const { return static_cast<std::size_t>(mean_.size()); }
    const Eigen::VectorXcd& mean() const { return mean_; }
    const Eigen::MatrixXd& cov() const { return cov_; }

    /// Interleaved (X1, Y1, ...) means: X_k = 2 Re<a_k>, Y_k = 2 Im<a_k>.
    Eigen::VectorXd quadrature_mean() const;

    /// det(cov); equals 1 for pure states.
    double purity_det() const { return cov_.determinant(); }

  private:
    Eigen::VectorXcd mean_;
    Eigen::MatrixXd cov_;
};

GaussianState apply(const BogoliubovTransform& t, const GaussianState& s);

GaussianState coherent_state(const ModeRegister& reg, const Eigen::VectorXcd& amplitudes);

}  // namespace sagnac
