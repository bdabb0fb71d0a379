#pragma once

#include <functional>
#include <vector>

#include "qtherm/bloch.hpp"

namespace qtherm {

/// A bosonic heat bath parameterized by its mean occupation number N.
/// Derived quantities: xi = 1/(1 + 2N) in (0, 1], asymptotic excitation
/// p = N/(1 + 2N) in [0, 1/2), and temperature T = 1/(2 atanh(xi)) in units
/// of hbar*omega/k_B. Infinite temperature is an explicit variant (xi = 0,
/// p = 1/2) rather than a large float. All times are in units of tau_sp.
class ThermalBath {
 public:
  static ThermalBath from_nbar(double nbar);
  /// xi in (0, 1]; xi == 0 constructs the infinite-temperature variant.
  static ThermalBath from_xi(double xi);
  /// T > 0 in units of hbar*omega/k_B; T == 0 gives the empty (ground) bath.
  static ThermalBath from_temperature(double temperature);
  static ThermalBath infinite();

  bool is_infinite() const { return infinite_; }
  double nbar() const;
  double xi() const { return infinite_ ? 0.0 : xi_; }
  /// Asymptotic excited-state population p = N/(1 + 2N).
  double excitation() const { return infinite_ ? 0.5 : (1.0 - xi_) / 2.0; }
  double temperature() const;

  /// Population relaxation time, xi * tau_sp.
  double tau1() const { return xi(); }
  /// Coherence relaxation time, 2 * xi * tau_sp.
  double tau2() const { return 2.0 * xi(); }

 private:
  ThermalBath(double xi, bool infinite) : xi_(xi), infinite_(infinite) {}

  double xi_;
  bool infinite_;
};

/// One application of the generalized amplitude damping map: p is the weight
/// of the branch pumping population toward |V> (+Z), gamma the damping
/// strength. Baths only produce p < 1/2, but the channel itself admits the
/// full range, including population inversion.
struct GadChannel {
  GadChannel(double p, double gamma);

  double p;
  double gamma;
};

/// gamma(t) = 1 - exp(-t / xi), with gamma = 1 for any t > 0 at infinite
/// temperature. Rejects t < 0.
double gamma_at(const ThermalBath& bath, double t);

/// The channel a bath realizes after interaction time t.
GadChannel channel_at(const ThermalBath& bath, double t);

/// Affine Bloch form: (sx, sy, sz) -> (a sx, a sy, a^2 sz + (2p-1)gamma) with
/// a = sqrt(1 - gamma).
BlochVector apply_gad_bloch(const GadChannel& ch, const BlochVector& v);

/// Operator-sum form of the same map. The weight-p Kraus pair has fixed point
/// |V><V| at gamma = 1, the weight-(1-p) pair |H><H|, so the stationary state
/// is the mixture p|V><V| + (1-p)|H><H|. Agrees with apply_gad_bloch through
/// the Bloch duality to within kStateTol.
DensityMatrix apply_gad_kraus(const GadChannel& ch, const DensityMatrix& rho);

/// Kraus pair pumping population |H> -> |V> with probability gamma.
KrausPair gad_absorption_pair(double gamma);
/// Kraus pair damping population |V> -> |H> with probability gamma.
KrausPair gad_emission_pair(double gamma);

/// Fixed point of the bath's dynamics, (0, 0, 2p - 1).
BlochVector asymptotic_state(const ThermalBath& bath);

/// States reached from `initial` at each time in `times` (nonnegative,
/// ascending). Element i equals apply_gad_bloch at gamma(times[i]).
std::vector<BlochVector> trajectory(const ThermalBath& bath,
                                    const BlochVector& initial,
                                    const std::vector<double>& times);

/// Half-wave plate angles realizing a GAD channel on the optical emulator.
/// Branch 1 keeps theta_H = 0 and rotates the V path; branch 2 the reverse.
/// All angles are principal-branch values in [0, pi/4].
struct WaveplateSettings {
  double theta_vbs;        // cos^2(2 theta_vbs) = p
  double branch1_theta_v;  // sin^2(2 theta_v) = gamma, theta_H = 0
  double branch2_theta_h;  // sin^2(2 theta_h) = gamma, theta_V = 0
};

WaveplateSettings waveplate_settings(const GadChannel& ch);

/// Channel realized by one interferometer branch with plate angles
/// (theta_h, theta_v): K1 = diag(cos 2theta_h, cos 2theta_v),
/// K2 = [[0, sin 2theta_v], [sin 2theta_h, 0]]. Trace preserving for all
/// angles.
KrausPair channel_from_waveplates(double theta_h, double theta_v);

DensityMatrix apply_kraus_pair(const KrausPair& pair, const DensityMatrix& rho);

/// Affine map recovered by probing a channel with the six cardinal states.
struct AffineChannel {
  Eigen::Matrix3d linear;
  Eigen::Vector3d offset;
};

using BlochChannel = std::function<BlochVector(const BlochVector&)>;

/// Probe-state characterization: recovers (A, b) with output = A input + b.
/// Throws if the probe residuals exceed 1e-8 (channel not affine).
AffineChannel characterize_channel(const BlochChannel& channel);

}  // namespace qtherm
