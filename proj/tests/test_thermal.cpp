#include "qtherm/thermal.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qtherm/states.hpp"

using namespace qtherm;

TEST_CASE("bath parameterizations agree") {
  const ThermalBath cold = ThermalBath::from_xi(1.0 / 12.0);
  CHECK(cold.nbar() == doctest::Approx((12.0 - 1.0) / 2.0));
  CHECK(cold.excitation() == doctest::Approx(cold.nbar() / (1 + 2 * cold.nbar()))
                                 .epsilon(1e-12));
  CHECK(std::abs(cold.xi() - 1.0 / (1.0 + 2.0 * cold.nbar())) <= 1e-12);
  // xi = tanh(1/(2T))
  CHECK(std::abs(std::tanh(1.0 / (2.0 * cold.temperature())) - cold.xi()) <=
        1e-9);
  CHECK(cold.temperature() == doctest::Approx(5.98).epsilon(0.01));

  const ThermalBath hot = ThermalBath::from_xi(1.0 / 20.0);
  CHECK(hot.temperature() == doctest::Approx(10.0).epsilon(0.01));
  CHECK(hot.tau1() == doctest::Approx(1.0 / 20.0));
  CHECK(hot.tau2() == doctest::Approx(2.0 / 20.0));

  const ThermalBath via_t = ThermalBath::from_temperature(hot.temperature());
  CHECK(via_t.xi() == doctest::Approx(hot.xi()).epsilon(1e-12));

  const ThermalBath empty = ThermalBath::from_nbar(0.0);
  CHECK(empty.xi() == 1.0);
  CHECK(empty.excitation() == 0.0);
  CHECK(empty.temperature() == 0.0);
}

TEST_CASE("infinite-temperature bath is explicit") {
  const ThermalBath inf_bath = ThermalBath::infinite();
  CHECK(inf_bath.is_infinite());
  CHECK(inf_bath.xi() == 0.0);
  CHECK(inf_bath.excitation() == 0.5);
  CHECK(std::isinf(inf_bath.temperature()));
  CHECK(gamma_at(inf_bath, 0.0) == 0.0);
  CHECK(gamma_at(inf_bath, 1e-9) == 1.0);
  CHECK(asymptotic_state(inf_bath).norm() == 0.0);
  CHECK(ThermalBath::from_xi(0.0).is_infinite());
}

TEST_CASE("bath constructors reject nonsense") {
  CHECK_THROWS_AS(ThermalBath::from_nbar(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ThermalBath::from_xi(1.5), std::invalid_argument);
  CHECK_THROWS_AS(ThermalBath::from_xi(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(ThermalBath::from_temperature(-2.0), std::invalid_argument);
}

TEST_CASE("gamma_at follows the exponential law") {
  const ThermalBath hot = ThermalBath::from_xi(1.0 / 20.0);
  const ThermalBath cold = ThermalBath::from_xi(1.0 / 12.0);
  CHECK(gamma_at(hot, 0.0) == 0.0);
  CHECK(gamma_at(cold, 0.0) == 0.0);
  CHECK(gamma_at(hot, 0.23) == doctest::Approx(0.989948).epsilon(1e-5));
  CHECK(gamma_at(hot, 0.23) == doctest::Approx(1.0 - std::exp(-4.6)));
  CHECK(gamma_at(cold, 0.23) == doctest::Approx(0.936708).epsilon(1e-5));
  CHECK(gamma_at(cold, 0.23) == doctest::Approx(1.0 - std::exp(-2.76)));
  CHECK_THROWS_AS(gamma_at(hot, -0.1), std::invalid_argument);

  // strictly increasing until double precision saturates gamma at 1
  double previous = -1.0;
  for (double t = 0.0; t < 0.8; t += 0.01) {
    const double g = gamma_at(hot, t);
    CHECK(g > previous);
    CHECK(g < 1.0);
    previous = g;
  }
}

TEST_CASE("channel parameters are validated") {
  CHECK_THROWS_AS(GadChannel(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(GadChannel(0.5, 1.1), std::invalid_argument);
  CHECK_NOTHROW(GadChannel(1.0, 1.0));  // inversion is allowed
}

TEST_CASE("apply_gad_bloch limit behavior") {
  const BlochVector v(0.4, 0.0, -0.3);
  CHECK((apply_gad_bloch(GadChannel(0.3, 0.0), v) - v).norm() == 0.0);

  const BlochVector saturated = apply_gad_bloch(GadChannel(0.3, 1.0), v);
  CHECK(saturated.x() == 0.0);
  CHECK(saturated.z() == doctest::Approx(2.0 * 0.3 - 1.0));

  const BlochVector half = apply_gad_bloch(GadChannel(0.5, 0.75), {1, 0, 0});
  CHECK(half.x() == doctest::Approx(0.5));
  CHECK(half.z() == doctest::Approx(0.0));
}

TEST_CASE("kraus route reproduces the affine route") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const GadChannel ch(u(rng), u(rng));
    const BlochVector r = oracle::random_bloch_in_ball(rng);
    const BlochVector via_kraus =
        density_to_bloch(apply_gad_kraus(ch, bloch_to_density(r)));
    const BlochVector via_bloch = apply_gad_bloch(ch, r);
    CHECK((via_kraus - via_bloch).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("zero-temperature full damping lands on the ground state") {
  std::mt19937_64 rng(37);
  const GadChannel ch(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho =
        bloch_to_density(oracle::random_bloch_in_ball(rng));
    const DensityMatrix out = apply_gad_kraus(ch, rho);
    CHECK(out(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(out(0, 1)) <= 1e-12);
    CHECK(std::abs(out(1, 1)) <= 1e-12);
  }
  // gamma = 0 leaves any state untouched
  const DensityMatrix rho = bloch_to_density({0.1, 0.2, 0.3});
  CHECK((apply_gad_kraus(GadChannel(0.7, 0.0), rho) - rho)
            .cwiseAbs()
            .maxCoeff() <= 1e-15);
}

TEST_CASE("weighted kraus set is trace preserving") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double p = u(rng);
    const double gamma = u(rng);
    const KrausPair up = gad_absorption_pair(gamma);
    const KrausPair down = gad_emission_pair(gamma);
    const Eigen::Matrix2cd sum =
        p * (up.k1.adjoint() * up.k1 + up.k2.adjoint() * up.k2) +
        (1.0 - p) * (down.k1.adjoint() * down.k1 + down.k2.adjoint() * down.k2);
    CHECK((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("the channel contracts Bloch distances") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const GadChannel ch(u(rng), u(rng));
    const BlochVector a = oracle::random_bloch_in_ball(rng);
    const BlochVector b = oracle::random_bloch_in_ball(rng);
    CHECK((apply_gad_bloch(ch, a) - apply_gad_bloch(ch, b)).norm() <=
          (a - b).norm() + 1e-12);
    CHECK(apply_gad_bloch(ch, a).norm() <= 1.0 + 1e-12);
  }
}

TEST_CASE("time composition matches the semigroup law") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> t_dist(0.0, 0.5);
  const ThermalBath bath = ThermalBath::from_xi(1.0 / 12.0);
  for (int i = 0; i < 500; ++i) {
    const double t1 = t_dist(rng);
    const double t2 = t_dist(rng);
    const BlochVector r = oracle::random_bloch_in_ball(rng);
    const BlochVector two_steps = apply_gad_bloch(
        channel_at(bath, t2), apply_gad_bloch(channel_at(bath, t1), r));
    const BlochVector one_step = apply_gad_bloch(channel_at(bath, t1 + t2), r);
    CHECK((two_steps - one_step).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("asymptotic state is a fixed point at every gamma") {
  const ThermalBath cold = ThermalBath::from_xi(1.0 / 12.0);
  const BlochVector fixed = asymptotic_state(cold);
  CHECK(fixed.z() == doctest::Approx(-1.0 / 12.0));
  for (double gamma : {0.0, 0.2, 0.77, 1.0}) {
    const BlochVector moved =
        apply_gad_bloch(GadChannel(cold.excitation(), gamma), fixed);
    CHECK((moved - fixed).cwiseAbs().maxCoeff() <= 1e-15);
  }
  CHECK(asymptotic_state(ThermalBath::from_nbar(0.0)).z() ==
        doctest::Approx(-1.0));
}

TEST_CASE("trajectory reproduces the closed-form decays") {
  const ThermalBath hot = ThermalBath::from_xi(1.0 / 20.0);
  std::vector<double> times;
  for (int i = 0; i <= 40; ++i) times.push_back(i * 0.01);

  // +X: coherence decays at half the population rate
  const auto from_x = trajectory(hot, {1, 0, 0}, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(from_x[i].x() ==
          doctest::Approx(std::exp(-times[i] / (2.0 * hot.xi())))
              .epsilon(1e-12));
    CHECK(from_x[i].y() == 0.0);
  }

  // +Z at one population relaxation time
  const auto from_z = trajectory(hot, {0, 0, 1}, {0.05});
  const double expected =
      std::exp(-1.0) * 1.0 + (2.0 * hot.excitation() - 1.0) * (1 - std::exp(-1.0));
  CHECK(from_z[0].z() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(from_z[0].z() == doctest::Approx(0.336273).epsilon(1e-5));

  // -Z converges to the asymptote
  const auto late = trajectory(hot, {0, 0, -1}, {8.0});
  CHECK((late[0] - asymptotic_state(hot)).norm() <= 1e-12);

  CHECK_THROWS_AS(trajectory(hot, {0, 0, 1}, {0.2, 0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trajectory(hot, {0, 0, 1}, {-0.1}), std::invalid_argument);
}

TEST_CASE("waveplate settings solve the channel angles") {
  const WaveplateSettings full = waveplate_settings(GadChannel(0.3, 1.0));
  CHECK(full.branch1_theta_v == doctest::Approx(M_PI / 4));
  CHECK(full.branch2_theta_h == doctest::Approx(M_PI / 4));

  const WaveplateSettings quarter = waveplate_settings(GadChannel(0.25, 0.5));
  CHECK(quarter.theta_vbs == doctest::Approx(0.5 * std::acos(0.5)));

  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const GadChannel ch(u(rng), u(rng));
    const WaveplateSettings s = waveplate_settings(ch);
    CHECK(std::abs(std::pow(std::cos(2.0 * s.theta_vbs), 2) - ch.p) <= 1e-10);
    CHECK(std::abs(std::pow(std::sin(2.0 * s.branch1_theta_v), 2) - ch.gamma) <=
          1e-10);
    CHECK(std::abs(std::pow(std::sin(2.0 * s.branch2_theta_h), 2) - ch.gamma) <=
          1e-10);
    for (double angle : {s.theta_vbs, s.branch1_theta_v, s.branch2_theta_h}) {
      CHECK(angle >= 0.0);
      CHECK(angle <= M_PI / 4 + 1e-15);
    }
  }
}

TEST_CASE("waveplate channels reproduce the kraus branches") {
  const KrausPair identity = channel_from_waveplates(0.0, 0.0);
  CHECK((identity.k1 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(identity.k2.cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double gamma = u(rng);
    const WaveplateSettings s = waveplate_settings(GadChannel(u(rng), gamma));

    const KrausPair branch1 = channel_from_waveplates(0.0, s.branch1_theta_v);
    const KrausPair emission = gad_emission_pair(gamma);
    CHECK((branch1.k1 - emission.k1).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((branch1.k2 - emission.k2).cwiseAbs().maxCoeff() <= 1e-10);

    const KrausPair branch2 = channel_from_waveplates(s.branch2_theta_h, 0.0);
    const KrausPair absorption = gad_absorption_pair(gamma);
    CHECK((branch2.k1 - absorption.k1).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((branch2.k2 - absorption.k2).cwiseAbs().maxCoeff() <= 1e-10);

    // each branch preserves trace on its own
    const Eigen::Matrix2cd tp =
        branch1.k1.adjoint() * branch1.k1 + branch1.k2.adjoint() * branch1.k2;
    CHECK((tp - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);

    // and applying the branches reproduces the channel's action
    const BlochVector r = oracle::random_bloch_in_ball(rng);
    const DensityMatrix rho = bloch_to_density(r);
    const double p = std::pow(std::cos(2.0 * s.theta_vbs), 2);
    const DensityMatrix mixed = p * apply_kraus_pair(branch2, rho) +
                                (1.0 - p) * apply_kraus_pair(branch1, rho);
    const DensityMatrix direct = apply_gad_kraus(GadChannel(p, gamma), rho);
    CHECK((mixed - direct).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("characterize_channel recovers affine maps") {
  const AffineChannel identity =
      characterize_channel([](const BlochVector& r) { return r; });
  CHECK((identity.linear - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <=
        1e-12);
  CHECK(identity.offset.cwiseAbs().maxCoeff() <= 1e-12);

  const GadChannel ch(0.3, 0.6);
  const AffineChannel gad = characterize_channel(
      [&](const BlochVector& r) { return apply_gad_bloch(ch, r); });
  const double a = std::sqrt(1.0 - ch.gamma);
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected.diagonal() << a, a, 1.0 - ch.gamma;
  CHECK((gad.linear - expected).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(gad.offset.x() == doctest::Approx(0.0));
  CHECK(gad.offset.z() ==
        doctest::Approx((2.0 * ch.p - 1.0) * ch.gamma).epsilon(1e-10));

  const AffineChannel crushed = characterize_channel([](const BlochVector& r) {
    return apply_gad_bloch(GadChannel(0.0, 1.0), r);
  });
  CHECK(crushed.linear.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((crushed.offset - Eigen::Vector3d(0, 0, -1)).cwiseAbs().maxCoeff() <=
        1e-10);

  CHECK_THROWS_AS(characterize_channel([](const BlochVector& r) {
                    return BlochVector(r.x() * r.x(), 0.0, 0.0);
                  }),
                  std::domain_error);
}
