#include <doctest.h>

#include <cmath>
#include <qclt/oracle.hpp>

#include "test_states.hpp"

using namespace qclt;
using namespace teststates;

TEST_CASE("convolve_density at n=1 reproduces |psi|^2") {
  const WaveFunction psi = skewed_mixture();
  const Density1D d = convolve_density(psi, 1);
  REQUIRE(d.values.size() == psi.amplitudes.size());
  for (std::size_t j = 0; j < d.values.size(); j += 97) {
    CHECK(d.values[j] == doctest::Approx(std::norm(psi.amplitudes[j])).epsilon(1e-9));
  }
  CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gaussian is closed under convolution: n=4 gives var 0.125") {
  const WaveFunction psi = ground();
  const Density1D d = convolve_density(psi, 4);
  CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d.variance() == doctest::Approx(0.125).epsilon(1e-7));
  const Gaussian1D g = single_var_density(extract_moments(psi), 4);
  CHECK(standardized_sup_error(d, g) < 1e-7);
}

TEST_CASE("density stays nonnegative and unit mass across n") {
  const WaveFunction psi = bimodal_mixture();
  for (std::int64_t n : {2, 16, 64}) {
    const Density1D d = convolve_density(psi, n);
    CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-9));
    for (double v : d.values) CHECK(v >= 0.0);
  }
}

TEST_CASE("convolution oracle agrees with the exact block identities") {
  for (const WaveFunction& psi : {ground(), skewed_mixture(), cat()}) {
    const MomentSet ms = extract_moments(psi);
    for (std::int64_t n : {1, 4, 16}) {
      const Density1D d = convolve_density(psi, n);
      CHECK(d.mean() ==
            doctest::Approx(exact_block_moment(ms, n, BlockMoment::mean_x)).epsilon(1e-7));
      CHECK(d.variance() ==
            doctest::Approx(exact_block_moment(ms, n, BlockMoment::var_x)).epsilon(1e-7));
    }
  }
}

TEST_CASE("CLT convergence is monotone for the pinned skewed mixture") {
  const WaveFunction psi = skewed_mixture();
  const MomentSet ms = extract_moments(psi);
  const double e4 = standardized_sup_error(convolve_density(psi, 4),
                                           single_var_density(ms, 4));
  const double e16 = standardized_sup_error(convolve_density(psi, 16),
                                            single_var_density(ms, 16));
  CHECK(e16 < e4);
}

TEST_CASE("exact block moments: closed forms") {
  MomentSet ms;
  ms.var_x = 0.5;
  CHECK(exact_block_moment(ms, 7, BlockMoment::var_x) ==
        doctest::Approx(0.5 / 7.0).epsilon(1e-15));

  ms.comm_m = -1.0;
  for (std::int64_t n : {1, 3, 50}) {
    CHECK(exact_block_moment(ms, n, BlockMoment::commutator) ==
          doctest::Approx(-1.0 / static_cast<double>(n)).epsilon(1e-15));
  }

  ms.cov_c = -0.5;
  CHECK(exact_block_moment(ms, 5, BlockMoment::sym_cov) ==
        doctest::Approx(-0.1).epsilon(1e-15));
}

TEST_CASE("X3 block moment tends to <x>^3 at rate 1/n") {
  const MomentSet ms = extract_moments(skewed_mixture());
  const double target = ms.mean_x * ms.mean_x * ms.mean_x;
  double prev_scaled = 0.0;
  for (std::int64_t n : {10, 100, 1000, 10000}) {
    const double x3 = exact_block_moment(ms, n, BlockMoment::x3);
    const double scaled = std::abs(x3 - target) * static_cast<double>(n);
    if (prev_scaled > 0.0) CHECK(scaled < prev_scaled * 1.1);
    prev_scaled = scaled;
  }
  CHECK(std::abs(exact_block_moment(ms, 1, BlockMoment::x3) - ms.x3) < 1e-12);
}

TEST_CASE("fit_convergence_rate: gaussian input is the blocking fixed point") {
  const RateReport report = fit_convergence_rate(ground(), std::vector<std::int64_t>{4, 16, 64});
  CHECK(report.exact_fixed_point);
  for (double e : report.sup_errors) CHECK(e < 1e-10);
}

TEST_CASE("fit_convergence_rate: gentle skew shows the 1/sqrt(n) law") {
  const RateReport report =
      fit_convergence_rate(gentle_skew_mixture(), std::vector<std::int64_t>{4, 16, 64});
  CHECK(!report.exact_fixed_point);
  CHECK(report.fitted_exponent == doctest::Approx(-0.5).epsilon(0.3));
  for (double e : report.sup_errors) CHECK(e > 0.0);
  CHECK(report.kl_errors[2] < report.kl_errors[0]);
}

TEST_CASE("fit_convergence_rate: pinned skewed mixture measures steeper than -1/2") {
  // At n in {4,16,64} this state's kurtosis term still dominates, so the
  // slope lands near -0.81 rather than the asymptotic -0.5.
  const RateReport report =
      fit_convergence_rate(skewed_mixture(), std::vector<std::int64_t>{4, 16, 64});
  CHECK(report.fitted_exponent == doctest::Approx(-0.809).epsilon(0.12));
}

TEST_CASE("fit_convergence_rate: symmetric bimodal shows the 1/n law") {
  const RateReport report =
      fit_convergence_rate(bimodal_mixture(), std::vector<std::int64_t>{4, 16, 64});
  CHECK(report.fitted_exponent == doctest::Approx(-1.0).epsilon(0.2));
}

TEST_CASE("fit_convergence_rate input validation") {
  const WaveFunction psi = ground();
  CHECK_THROWS_AS(fit_convergence_rate(psi, std::vector<std::int64_t>{4, 16}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_convergence_rate(psi, std::vector<std::int64_t>{1, 4, 16}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_convergence_rate(psi, std::vector<std::int64_t>{16, 4, 64}),
                  std::invalid_argument);
}

TEST_CASE("convolve_density argument guards") {
  const WaveFunction psi = ground();
  CHECK_THROWS_AS(convolve_density(psi, 0), std::invalid_argument);
  CHECK_THROWS_AS(convolve_density(psi, (1 << 14) + 1), std::invalid_argument);
}

TEST_CASE("im_moment_quadrature validates its grid") {
  const MomentSet ms = extract_moments(ground());
  CHECK_THROWS_AS(im_moment_quadrature(ms, 10, 1, 1, 510), std::invalid_argument);
}
