#include <doctest.h>

#include <cmath>
#include <qclt/entropy.hpp>
#include <qclt/numerics.hpp>
#include <random>

#include "test_states.hpp"

using namespace qclt;
using namespace teststates;

namespace {

MomentSet synthetic(double var_x, double var_p, double cov_c) {
  MomentSet ms;
  ms.var_x = var_x;
  ms.var_p = var_p;
  ms.cov_c = cov_c;
  ms.comm_m = -1.0;
  return ms;
}

const SystemSpec kFree{SystemKind::free_particle, 0.0, 0.0};
const SystemSpec kForce{SystemKind::constant_force, 1.0, 0.0};
const SystemSpec kOsc{SystemKind::oscillator, 0.0, 1.0};

}  // namespace

TEST_CASE("dent_closed: product distribution has zero entropy") {
  CHECK(dent_closed(synthetic(0.5, 0.5, 0.0)) == 0.0);
}

TEST_CASE("dent_closed: worked example (1/2) ln 2") {
  CHECK(dent_closed(synthetic(0.5, 1.0, -0.5)) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("dent_closed: free flow at t=2 gives (1/2) ln 5") {
  const MomentSet ms = evolve_moments(kFree, synthetic(0.5, 0.5, 0.0), 2.0);
  CHECK(dent_closed(ms) == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("dent_closed: degenerate covariance reports +infinity") {
  CHECK(std::isinf(dent_closed(synthetic(1.0, 1.0, 1.0))));
  CHECK(std::isinf(dent_closed(synthetic(1.0, 1.0, 1.5))));
}

TEST_CASE("dent_closed scales with k_B") {
  MomentSet ms = synthetic(0.5, 1.0, -0.5);
  ms.units.k_b = 2.0;
  CHECK(dent_closed(ms) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("dent_quadrature agrees with the closed form") {
  const MomentSet ms = synthetic(0.5, 1.0, -0.5);
  const double closed = dent_closed(ms);
  CHECK(dent_quadrature(joint_re_density(ms, 4)) == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("dent_quadrature is N-independent") {
  const MomentSet ms = synthetic(0.5, 1.0, -0.5);
  const double a = dent_quadrature(joint_re_density(ms, 4));
  const double b = dent_quadrature(joint_re_density(ms, 400));
  CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("dent_quadrature: diagonal covariance integrates to zero") {
  const MomentSet ms = synthetic(0.7, 1.3, 0.0);
  CHECK(std::abs(dent_quadrature(joint_re_density(ms, 3))) < 1e-9);
}

TEST_CASE("dent_quadrature on randomized positive-definite moment sets") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> var(0.2, 3.0);
  std::uniform_real_distribution<double> corr(-0.95, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const double vx = var(rng), vp = var(rng);
    const double c = corr(rng) * std::sqrt(vx * vp);
    const MomentSet ms = synthetic(vx, vp, c);
    const double closed = dent_closed(ms);
    CHECK(dent_quadrature(joint_re_density(ms, 7)) ==
          doctest::Approx(closed).epsilon(1e-6));
    CHECK(closed >= 0.0);
  }
}

TEST_CASE("entropy is invariant under coordinate scaling x -> lambda x") {
  const MomentSet ms = synthetic(0.5, 1.0, -0.5);
  for (double lambda : {0.1, 3.0, 42.0}) {
    MomentSet scaled = ms;
    scaled.var_x = lambda * lambda * ms.var_x;
    scaled.cov_c = lambda * ms.cov_c;
    CHECK(dent_closed(scaled) == doctest::Approx(dent_closed(ms)).epsilon(1e-12));
  }
}

TEST_CASE("entropy series: oscillator worked values and periodicity") {
  const MomentSet ms0 = synthetic(0.5, 1.0, -0.5);
  const EntropySeries s = entropy_series(kOsc, ms0, 0.0, M_PI, 5);
  // samples at 0, pi/4, pi/2, 3pi/4, pi
  CHECK(s.dent[0] == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK(s.dent[1] == doctest::Approx(-0.5 * std::log(0.8)).epsilon(1e-12));
  CHECK(s.dent[2] == doctest::Approx(s.dent[0]).epsilon(1e-10));
  CHECK(s.dent[4] == doctest::Approx(s.dent[0]).epsilon(1e-10));
  // non-monotone: the pi/4 value dips below the initial value
  CHECK(s.dent[1] < s.dent[0]);
}

TEST_CASE("free-particle entropy grows like ln t") {
  const MomentSet ms0 = synthetic(0.5, 0.5, 0.0);
  const EntropySeries s = entropy_series(kFree, ms0, 100.0, 10000.0, 101);
  std::vector<double> lnt(s.times.size());
  for (std::size_t i = 0; i < lnt.size(); ++i) lnt[i] = std::log(s.times[i]);
  const LineFit fit = fit_line(lnt, s.dent);
  CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("near momentum eigenstate: entropy stays at zero") {
  const MomentSet ms0 = synthetic(0.5, 1e-12, 0.0);
  const EntropySeries s = entropy_series(kFree, ms0, 0.0, 100.0, 51);
  for (double d : s.dent) {
    CHECK(d >= -1e-12);
    CHECK(d <= 1e-6);
  }
}

TEST_CASE("entropy series is symmetric under time reversal") {
  const MomentSet ms0 = synthetic(0.5, 1.0, -0.5);
  for (const SystemSpec& sys : {kFree, kForce, kOsc}) {
    const EntropySeries fwd = entropy_series(sys, ms0, 0.0, 8.0, 33);
    const EntropySeries bwd = entropy_series(sys, reversed(ms0), 0.0, -8.0, 33);
    for (std::size_t i = 0; i < fwd.times.size(); ++i) {
      CHECK(bwd.dent[i] == doctest::Approx(fwd.dent[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("free and constant-force entropy series coincide") {
  const MomentSet ms0 = synthetic(0.5, 1.0, -0.5);
  const EntropySeries a = entropy_series(kFree, ms0, 0.0, 10.0, 21);
  const EntropySeries b = entropy_series(kForce, ms0, 0.0, 10.0, 21);
  for (std::size_t i = 0; i < a.dent.size(); ++i) CHECK(a.dent[i] == b.dent[i]);
}

TEST_CASE("entropy series validates the sample count") {
  CHECK_THROWS_AS(entropy_series(kFree, synthetic(0.5, 0.5, 0.0), 0.0, 1.0, 1),
                  std::invalid_argument);
}

TEST_CASE("dent values are non-negative along all flows") {
  const MomentSet ms0 = synthetic(0.4, 1.7, 0.55);
  for (const SystemSpec& sys : {kFree, kForce, kOsc}) {
    const EntropySeries s = entropy_series(sys, ms0, -20.0, 20.0, 81);
    for (double d : s.dent) CHECK(d >= -1e-12);
  }
}
