#include "qtherm/thermal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qtherm/states.hpp"

namespace qtherm {

ThermalBath ThermalBath::from_nbar(double nbar) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("occupation number must be >= 0");
  }
  if (std::isinf(nbar)) return infinite();
  return {1.0 / (1.0 + 2.0 * nbar), false};
}

ThermalBath ThermalBath::from_xi(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw std::invalid_argument("xi must lie in [0, 1]");
  }
  if (xi == 0.0) return infinite();
  return {xi, false};
}

ThermalBath ThermalBath::from_temperature(double temperature) {
  if (!(temperature >= 0.0)) {
    throw std::invalid_argument("temperature must be >= 0");
  }
  if (std::isinf(temperature)) return infinite();
  if (temperature == 0.0) return {1.0, false};
  return from_xi(std::tanh(1.0 / (2.0 * temperature)));
}

ThermalBath ThermalBath::infinite() { return {0.0, true}; }

double ThermalBath::nbar() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return (1.0 / xi_ - 1.0) / 2.0;
}

double ThermalBath::temperature() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  if (xi_ == 1.0) return 0.0;
  return 1.0 / (2.0 * std::atanh(xi_));
}

GadChannel::GadChannel(double p_in, double gamma_in) : p(p_in), gamma(gamma_in) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("channel weight p must lie in [0, 1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("damping gamma must lie in [0, 1]");
  }
}

double gamma_at(const ThermalBath& bath, double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("interaction time must be >= 0");
  }
  if (bath.is_infinite()) return t > 0.0 ? 1.0 : 0.0;
  return -std::expm1(-t / bath.xi());
}

GadChannel channel_at(const ThermalBath& bath, double t) {
  return {bath.excitation(), gamma_at(bath, t)};
}

BlochVector apply_gad_bloch(const GadChannel& ch, const BlochVector& v) {
  const double a = std::sqrt(1.0 - ch.gamma);
  return {a * v.x(), a * v.y(),
          (1.0 - ch.gamma) * v.z() + (2.0 * ch.p - 1.0) * ch.gamma};
}

KrausPair gad_absorption_pair(double gamma) {
  const double a = std::sqrt(1.0 - gamma);
  const double g = std::sqrt(gamma);
  KrausPair pair;
  pair.k1 = (Eigen::Matrix2cd() << a, 0, 0, 1).finished();
  pair.k2 = (Eigen::Matrix2cd() << 0, 0, g, 0).finished();
  return pair;
}

KrausPair gad_emission_pair(double gamma) {
  const double a = std::sqrt(1.0 - gamma);
  const double g = std::sqrt(gamma);
  KrausPair pair;
  pair.k1 = (Eigen::Matrix2cd() << 1, 0, 0, a).finished();
  pair.k2 = (Eigen::Matrix2cd() << 0, g, 0, 0).finished();
  return pair;
}

DensityMatrix apply_kraus_pair(const KrausPair& pair, const DensityMatrix& rho) {
  return pair.k1 * rho * pair.k1.adjoint() + pair.k2 * rho * pair.k2.adjoint();
}

DensityMatrix apply_gad_kraus(const GadChannel& ch, const DensityMatrix& rho) {
  validate_density(rho);
  const KrausPair up = gad_absorption_pair(ch.gamma);
  const KrausPair down = gad_emission_pair(ch.gamma);
  return ch.p * apply_kraus_pair(up, rho) +
         (1.0 - ch.p) * apply_kraus_pair(down, rho);
}

BlochVector asymptotic_state(const ThermalBath& bath) {
  return {0.0, 0.0, 2.0 * bath.excitation() - 1.0};
}

std::vector<BlochVector> trajectory(const ThermalBath& bath,
                                    const BlochVector& initial,
                                    const std::vector<double>& times) {
  validate_bloch(initial);
  std::vector<BlochVector> states;
  states.reserve(times.size());
  double previous = 0.0;
  for (const double t : times) {
    if (!(t >= 0.0)) throw std::invalid_argument("times must be >= 0");
    if (t < previous) throw std::invalid_argument("times must be ascending");
    previous = t;
    states.push_back(apply_gad_bloch(channel_at(bath, t), initial));
  }
  return states;
}

WaveplateSettings waveplate_settings(const GadChannel& ch) {
  // Principal branch: 2*theta in [0, pi/2] so every angle lands in [0, pi/4].
  WaveplateSettings s;
  s.theta_vbs = 0.5 * std::acos(std::clamp(std::sqrt(ch.p), 0.0, 1.0));
  const double damping = 0.5 * std::asin(std::clamp(std::sqrt(ch.gamma), 0.0, 1.0));
  s.branch1_theta_v = damping;
  s.branch2_theta_h = damping;
  return s;
}

KrausPair channel_from_waveplates(double theta_h, double theta_v) {
  KrausPair pair;
  pair.k1 = (Eigen::Matrix2cd() << std::cos(2.0 * theta_h), 0, 0,
             std::cos(2.0 * theta_v))
                .finished();
  pair.k2 = (Eigen::Matrix2cd() << 0, std::sin(2.0 * theta_v),
             std::sin(2.0 * theta_h), 0)
                .finished();
  return pair;
}

AffineChannel characterize_channel(const BlochChannel& channel) {
  AffineChannel result;
  Eigen::Matrix3d plus;
  Eigen::Matrix3d minus;
  for (int axis = 0; axis < 3; ++axis) {
    BlochVector probe = BlochVector::Zero();
    probe(axis) = 1.0;
    plus.col(axis) = channel(probe);
    minus.col(axis) = channel(-probe);
  }
  result.linear = 0.5 * (plus - minus);
  // Each probe pair yields an offset estimate; an affine map makes them agree.
  Eigen::Matrix3d offsets = 0.5 * (plus + minus);
  result.offset = offsets.rowwise().mean();
  for (int axis = 0; axis < 3; ++axis) {
    if ((offsets.col(axis) - result.offset).cwiseAbs().maxCoeff() > 1e-8) {
      throw std::domain_error(
          "channel is not affine on Bloch vectors (probe residuals > 1e-8)");
    }
  }
  return result;
}

}  // namespace qtherm
