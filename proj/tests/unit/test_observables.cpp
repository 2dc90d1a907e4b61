#include <doctest.h>

#include <cmath>
#include <qclt/numerics.hpp>
#include <qclt/observables.hpp>
#include <qclt/oracle.hpp>
#include <random>

#include "test_states.hpp"

using namespace qclt;
using namespace teststates;

namespace {

MomentSet synthetic(double mean_x, double mean_p, double var_x, double var_p,
                    double cov_c, double comm_m) {
  MomentSet ms;
  ms.mean_x = mean_x;
  ms.mean_p = mean_p;
  ms.var_x = var_x;
  ms.var_p = var_p;
  ms.cov_c = cov_c;
  ms.comm_m = comm_m;
  return ms;
}

}  // namespace

TEST_CASE("gaussian2d_moment: first Wick pairings") {
  const Gaussian2D g = gaussian2d_from_cov(0.0, 0.0, 1.0, 0.5, 1.0);
  CHECK(gaussian2d_moment(g, 1, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gaussian2d_moment(g, 2, 2) == doctest::Approx(1.5).epsilon(1e-15));

  const Gaussian2D h = gaussian2d_from_cov(2.0, 0.0, 1.0, 0.0, 1.0);
  CHECK(gaussian2d_moment(h, 2, 0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("gaussian2d_moment matches 2D quadrature through degree 8") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> var(0.3, 1.5);
  std::uniform_real_distribution<double> mean(-0.8, 0.8);
  std::uniform_real_distribution<double> corr(-0.9, 0.9);
  for (int trial = 0; trial < 6; ++trial) {
    const double vx = var(rng), vp = var(rng);
    const double c = corr(rng) * std::sqrt(vx * vp);
    const Gaussian2D g = gaussian2d_from_cov(mean(rng), mean(rng), vx, c, vp);
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        auto f = [&](double X, double P) {
          double t = g.pdf(X, P);
          for (int i = 0; i < m; ++i) t *= X;
          for (int i = 0; i < n; ++i) t *= P;
          return t;
        };
        const double quad = quad2d(f, g.mean_x, g.mean_p, 12.0 * std::sqrt(g.cov_xx),
                                   12.0 * std::sqrt(g.cov_pp), 601);
        CHECK(gaussian2d_moment(g, m, n) == doctest::Approx(quad).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("gaussian2d_moment rejects degree overflow") {
  const Gaussian2D g = gaussian2d_from_cov(0, 0, 1, 0, 1);
  CHECK_THROWS_AS(gaussian2d_moment(g, 5, 4), std::invalid_argument);
}

TEST_CASE("expect_poly: block correlation identity") {
  // (XP + PX) at cov_c = -1/2, n = 5 -> 2(<x><p> + cov_c/5)
  const MomentSet ms = synthetic(0, 0, 0.5, 1.0, -0.5, -1.0);
  HermitianPolynomial poly{{{1, 1, {1.0, 0.0}}}};
  CHECK(expect_poly(ms, 5, poly) == doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("expect_poly: hermitian commutator identity") {
  const MomentSet ms = extract_moments(ground());
  HermitianPolynomial poly{{{1, 1, {0.0, 1.0}}}};
  CHECK(expect_poly(ms, 10, poly) ==
        doctest::Approx(ms.comm_m / 10.0).epsilon(1e-12));
}

TEST_CASE("expect_poly: X^2 block variance") {
  const MomentSet ms = synthetic(0, 0, 0.5, 0.5, 0, -1.0);
  HermitianPolynomial poly{{{2, 0, {0.5, 0.0}}}};
  CHECK(expect_poly(ms, 10, poly) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("expect_poly equals mean_x and mean_p exactly for all n") {
  const MomentSet ms = extract_moments(shifted());
  HermitianPolynomial X{{{1, 0, {0.5, 0.0}}}};
  HermitianPolynomial P{{{0, 1, {0.5, 0.0}}}};
  for (std::int64_t n : {1, 2, 7, 100, 100000}) {
    CHECK(expect_poly(ms, n, X) == doctest::Approx(ms.mean_x).epsilon(1e-14));
    CHECK(expect_poly(ms, n, P) == doctest::Approx(ms.mean_p).epsilon(1e-14));
  }
}

TEST_CASE("classical_limit: direct substitution") {
  const MomentSet ms = synthetic(1.0, 2.0, 0.5, 0.5, 0, -1.0);
  CHECK(classical_limit({{{2, 1, {3.0, 0.0}}}}, ms) == doctest::Approx(12.0));
  CHECK(classical_limit({{{1, 1, {0.0, 1.0}}}}, ms) == 0.0);

  const MomentSet centered = synthetic(0.0, 0.0, 0.5, 0.5, 0, -1.0);
  CHECK(classical_limit({{{3, 1, {2.0, 0.0}}, {1, 0, {1.0, 0.0}}}}, centered) == 0.0);
}

TEST_CASE("expect_poly converges to classical_limit at rate 1/n") {
  const MomentSet ms = extract_moments(chirped());
  HermitianPolynomial poly{{{2, 1, {3.0, 0.0}}, {1, 1, {0.0, 1.0}}, {2, 2, {0.5, 0.0}}}};
  const double classical = classical_limit(poly, ms);
  std::vector<double> fitted_c;
  for (std::int64_t n : {100, 1000, 10000}) {
    const double diff = std::abs(expect_poly(ms, n, poly) - classical);
    fitted_c.push_back(diff * static_cast<double>(n));
  }
  // |diff| <= C/n with a stable constant
  CHECK(fitted_c[1] == doctest::Approx(fitted_c[0]).epsilon(0.05));
  CHECK(fitted_c[2] == doctest::Approx(fitted_c[1]).epsilon(0.05));
}

TEST_CASE("block uncertainty product scales exactly as 1/n") {
  const MomentSet ms = extract_moments(chirped());
  const double sigma_prod = std::sqrt(ms.var_x * ms.var_p);
  for (std::int64_t n : {2, 10, 1000}) {
    const Gaussian2D g = joint_re_density(ms, n);
    CHECK(std::sqrt(g.cov_xx * g.cov_pp) ==
          doctest::Approx(sigma_prod / static_cast<double>(n)).epsilon(1e-13));
  }
}

TEST_CASE("expect_poly agrees with the exact block identities") {
  for (const WaveFunction& psi : {ground(), shifted(), chirped()}) {
    const MomentSet ms = extract_moments(psi);
    for (std::int64_t n : {2, 7, 100}) {
      const double dn = static_cast<double>(n);
      HermitianPolynomial X{{{1, 0, {0.5, 0.0}}}};
      CHECK(expect_poly(ms, n, X) ==
            doctest::Approx(exact_block_moment(ms, n, BlockMoment::mean_x)).epsilon(1e-12));
      HermitianPolynomial X2{{{2, 0, {0.5, 0.0}}}};
      const double exact_x2 = exact_block_moment(ms, n, BlockMoment::var_x) +
                              ms.mean_x * ms.mean_x;
      CHECK(expect_poly(ms, n, X2) == doctest::Approx(exact_x2).epsilon(1e-12));
      HermitianPolynomial sym{{{1, 1, {0.5, 0.0}}}};
      const double exact_sym = exact_block_moment(ms, n, BlockMoment::sym_cov) +
                               ms.mean_x * ms.mean_p;
      CHECK(expect_poly(ms, n, sym) == doctest::Approx(exact_sym).epsilon(1e-10));
      HermitianPolynomial comm{{{1, 1, {0.0, 1.0}}}};
      CHECK(expect_poly(ms, n, comm) ==
            doctest::Approx(ms.comm_m / dn).epsilon(1e-12));
    }
  }
}

TEST_CASE("polynomial validation") {
  HermitianPolynomial bad_degree{{{5, 4, {1.0, 0.0}}}};
  CHECK_THROWS_AS(bad_degree.validate(), ConfigError);
  HermitianPolynomial bad_power{{{-1, 0, {1.0, 0.0}}}};
  CHECK_THROWS_AS(bad_power.validate(), ConfigError);
  CHECK_THROWS_AS(expect_poly(synthetic(0, 0, 1, 1, 0, -1), 0, {{}}),
                  std::invalid_argument);
}
