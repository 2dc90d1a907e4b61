#include "qclt/observables.hpp"

#include <array>
#include <cmath>

namespace qclt {

namespace {

constexpr int kMaxDegree = 8;

double ipow(double base, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

double gaussian2d_moment(const Gaussian2D& g, int m, int n) {
  if (m < 0 || n < 0 || m + n > kMaxDegree) {
    throw std::invalid_argument("gaussian2d_moment: degree overflow");
  }
  // M[a][b] = E[X^a P^b]; filled by increasing total degree.
  std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1> M{};
  M[0][0] = 1.0;
  for (int b = 1; b <= n; ++b) {
    M[0][b] = g.mean_p * M[0][b - 1] + (b - 1) * g.cov_pp * (b >= 2 ? M[0][b - 2] : 0.0);
  }
  for (int a = 1; a <= m; ++a) {
    for (int b = 0; b <= n; ++b) {
      double v = g.mean_x * M[a - 1][b];
      if (a >= 2) v += (a - 1) * g.cov_xx * M[a - 2][b];
      if (b >= 1) v += b * g.cov_xp * M[a - 1][b - 1];
      M[a][b] = v;
    }
  }
  return M[m][n];
}

double signed_moment(const SignedGaussianPair& pair, int m, int n) {
  if (pair.identically_zero) return 0.0;
  return gaussian2d_moment(pair.plus, m, n) - gaussian2d_moment(pair.minus, m, n);
}

double expect_poly(const MomentSet& ms, std::int64_t n, const HermitianPolynomial& poly) {
  if (n < 1) throw std::invalid_argument("expect_poly: n must be >= 1");
  poly.validate();
  ms.require_phase_space("expect_poly");
  const Gaussian2D re = joint_re_density(ms, n);
  const SignedGaussianPair im = joint_im_density(ms, n);
  double total = 0.0;
  for (const PolyTerm& t : poly.terms) {
    total += 2.0 * t.coeff.real() * gaussian2d_moment(re, t.m, t.n);
    if (t.coeff.imag() != 0.0) {
      total += t.coeff.imag() * signed_moment(im, t.m, t.n);
    }
  }
  return total;
}

double classical_limit(const HermitianPolynomial& poly, const MomentSet& ms) {
  poly.validate();
  double total = 0.0;
  for (const PolyTerm& t : poly.terms) {
    total += 2.0 * t.coeff.real() * ipow(ms.mean_x, t.m) * ipow(ms.mean_p, t.n);
  }
  return total;
}

}  // namespace qclt
