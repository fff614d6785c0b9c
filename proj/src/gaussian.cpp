#include "sagnac/gaussian.hpp"

#include <sstream>
#include <stdexcept>

namespace sagnac {

namespace {

double max_abs(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace

BogoliubovTransform::BogoliubovTransform(Eigen::MatrixXcd a, Eigen::MatrixXcd b)
    : a_(std::move(a)), b_(std::move(b)) {
    const auto n = a_.rows();
    if (n == 0 || a_.cols() != n || b_.rows() != n || b_.cols() != n) {
        throw std::invalid_argument("bogoliubov matrices must be square and equal-sized");
    }
    const Eigen::MatrixXcd comm = a_ * a_.adjoint() - b_ * b_.adjoint() -
                                  Eigen::MatrixXcd::Identity(n, n);
    if (max_abs(comm) > kTransformTol) {
        std::ostringstream msg;
        msg << "bogoliubov invariant A A^dag - B B^dag = I violated (max deviation "
            << max_abs(comm) << ")";
        throw std::invalid_argument(msg.str());
    }
    const Eigen::MatrixXcd sym = a_ * b_.transpose() - b_ * a_.transpose();
    if (max_abs(sym) > kTransformTol) {
        std::ostringstream msg;
        msg << "bogoliubov invariant A B^T = B A^T violated (max deviation "
            << max_abs(sym) << ")";
        throw std::invalid_argument(msg.str());
    }
}

BogoliubovTransform BogoliubovTransform::identity(std::size_t n) {
    return {Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)),
            Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
}

Eigen::MatrixXd symplectic_form(std::size_t n) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

Eigen::MatrixXd to_symplectic(const BogoliubovTransform& t) {
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd s(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const cxd sum = t.a()(j, k) + t.b()(j, k);
            const cxd diff = t.a()(j, k) - t.b()(j, k);
            s(2 * j, 2 * k) = sum.real();
            s(2 * j, 2 * k + 1) = -diff.imag();
            s(2 * j + 1, 2 * k) = sum.imag();
            s(2 * j + 1, 2 * k + 1) = diff.real();
        }
    }
    const Eigen::MatrixXd omega = symplectic_form(t.size());
    const double dev = (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
    if (dev > kPropagateTol) {
        std::ostringstream msg;
        msg << "symplectic condition S Omega S^T = Omega violated (max deviation " << dev << ")";
        throw std::runtime_error(msg.str());
    }
    return s;
}

BogoliubovTransform compose(const BogoliubovTransform& first, const BogoliubovTransform& second) {
    if (first.size() != second.size()) {
        throw std::invalid_argument("cannot compose transforms of different sizes");
    }
    return {second.a() * first.a() + second.b() * first.b().conjugate(),
            second.a() * first.b() + second.b() * first.a().conjugate()};
}

GaussianState::GaussianState(Eigen::VectorXcd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
    const auto n = mean_.size();
    if (n == 0 || cov_.rows() != 2 * n || cov_.cols() != 2 * n) {
        throw std::invalid_argument("covariance must be 2N x 2N for N mean amplitudes");
    }
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > kPropagateTol) {
        throw std::invalid_argument("covariance matrix must be symmetric");
    }
    // Uncertainty relation: cov + i Omega >= 0.
    Eigen::MatrixXcd h = cov_.cast<cxd>() + cxd(0.0, 1.0) * symplectic_form(n).cast<cxd>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kPropagateTol) {
        std::ostringstream msg;
        msg << "uncertainty relation cov + i Omega >= 0 violated (min eigenvalue "
            << eig.eigenvalues().minCoeff() << ")";
        throw std::invalid_argument(msg.str());
    }
}

GaussianState GaussianState::vacuum(std::size_t n) {
    return {Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n)),
            Eigen::MatrixXd::Identity(2 * static_cast<Eigen::Index>(n),
                                      2 * static_cast<Eigen::Index>(n))};
}

Eigen::VectorXd GaussianState::quadrature_mean() const {
    Eigen::VectorXd q(2 * mean_.size());
    for (Eigen::Index k = 0; k < mean_.size(); ++k) {
        q(2 * k) = 2.0 * mean_(k).real();
        q(2 * k + 1) = 2.0 * mean_(k).imag();
    }
    return q;
}

GaussianState apply(const BogoliubovTransform& t, const GaussianState& s) {
    if (t.size() != s.size()) {
        throw std::invalid_argument("transform and state sizes do not match");
    }
    const Eigen::MatrixXd sm = to_symplectic(t);
    return {t.a() * s.mean() + t.b() * s.mean().conjugate(),
            sm * s.cov() * sm.transpose()};
}

GaussianState coherent_state(const ModeRegister& reg, const Eigen::VectorXcd& amplitudes) {
    if (static_cast<std::size_t>(amplitudes.size()) != reg.size()) {
        throw std::invalid_argument("one amplitude per register mode required");
    }
    return {amplitudes, Eigen::MatrixXd::Identity(2 * amplitudes.size(), 2 * amplitudes.size())};
}

}  // namespace sagnac
