#include "qtherm/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qtherm {

namespace {

using std::complex;

// Pauli basis with the z axis flipped so the ground state |H><H| sits at -Z.
const Eigen::Matrix2cd& sigma_x() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}

const Eigen::Matrix2cd& sigma_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, complex<double>(0, -1), complex<double>(0, 1),
       0)
          .finished();
  return m;
}

const Eigen::Matrix2cd& sigma_z_flipped() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << -1, 0, 0, 1).finished();
  return m;
}

}  // namespace

bool is_valid_bloch(const BlochVector& r, double tol) {
  return r.allFinite() && r.squaredNorm() <= 1.0 + tol;
}

void validate_bloch(const BlochVector& r, double tol) {
  if (!is_valid_bloch(r, tol)) {
    throw std::invalid_argument(
        "Bloch vector lies outside the unit sphere (unphysical state)");
  }
}

bool is_valid_density(const DensityMatrix& rho, double tol) {
  if (!rho.allFinite()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - complex<double>(1, 0)) > tol) return false;
  // Both eigenvalues of a Hermitian 2x2 with trace 1: 1/2 +- sqrt(1/4 - det).
  const double det = rho.determinant().real();
  const double disc = std::max(0.25 - det, 0.0);
  return 0.5 - std::sqrt(disc) >= -tol;
}

void validate_density(const DensityMatrix& rho, double tol) {
  if (!is_valid_density(rho, tol)) {
    throw std::invalid_argument(
        "matrix is not a valid density matrix (Hermitian, unit trace, PSD)");
  }
}

Projector::Projector(double theta) {
  theta_ = theta - M_PI * std::floor(theta / M_PI);
  if (theta_ >= M_PI) theta_ = 0.0;  // folding can land on pi by rounding
}

BlochVector Projector::axis() const {
  return {std::sin(2.0 * theta_), 0.0, -std::cos(2.0 * theta_)};
}

Eigen::Matrix2cd Projector::matrix() const {
  const double c = std::cos(theta_);
  const double s = std::sin(theta_);
  return (Eigen::Matrix2cd() << c * c, c * s, s * c, s * s).finished();
}

DensityMatrix bloch_to_density(const BlochVector& r) {
  validate_bloch(r);
  return 0.5 * (Eigen::Matrix2cd::Identity() + r.x() * sigma_x() +
                r.y() * sigma_y() + r.z() * sigma_z_flipped());
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  validate_density(rho);
  return {(rho * sigma_x()).trace().real(), (rho * sigma_y()).trace().real(),
          (rho * sigma_z_flipped()).trace().real()};
}

double measure_prob(const BlochVector& state, const Projector& m) {
  validate_bloch(state);
  const double p = 0.5 * (1.0 + state.dot(m.axis()));
  return std::clamp(p, 0.0, 1.0);
}

double euclidean_distance(const BlochVector& r1, const BlochVector& r2) {
  return (r1 - r2).norm();
}

double helstrom_pe(const BlochVector& r1, const BlochVector& r2) {
  validate_bloch(r1);
  validate_bloch(r2);
  return 0.5 - euclidean_distance(r1, r2) / 4.0;
}

double fidelity(const BlochVector& r1, const BlochVector& r2) {
  validate_bloch(r1);
  validate_bloch(r2);
  const double purity_term =
      (1.0 - r1.squaredNorm()) * (1.0 - r2.squaredNorm());
  if (purity_term < -kStateTol) {
    throw std::invalid_argument("state norms exceed 1 beyond tolerance");
  }
  const double radicand =
      0.5 * (1.0 + r1.dot(r2) + std::sqrt(std::max(purity_term, 0.0)));
  if (radicand < -kStateTol) {
    throw std::invalid_argument("fidelity radicand negative beyond tolerance");
  }
  return std::min(std::sqrt(std::max(radicand, 0.0)), 1.0);
}

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return fidelity(density_to_bloch(rho1), density_to_bloch(rho2));
}

}  // namespace qtherm
