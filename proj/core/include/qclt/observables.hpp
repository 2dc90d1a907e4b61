#ifndef QCLT_OBSERVABLES_HPP
#define QCLT_OBSERVABLES_HPP

#include "qclt/cltdist.hpp"

namespace qclt {

/// One term of sum_mn c_mn X^m P^n + c*_mn P^n X^m. The represented
/// operator is hermitian by construction for any complex c.
struct PolyTerm {
  int m = 0;
  int n = 0;
  cplx coeff{0.0, 0.0};
};

struct HermitianPolynomial {
  std::vector<PolyTerm> terms;

  void validate() const {
    for (const PolyTerm& t : terms) {
      if (t.m < 0 || t.n < 0) {
        throw ConfigError("polynomial: powers must be non-negative");
      }
      if (t.m + t.n > 8) {
        throw ConfigError("polynomial: degree overflow (m+n <= 8 per term)");
      }
    }
  }
};

/// E[X^m P^n] under the Gaussian, by the Stein/Isserlis recurrence
///   M(a,b) = mu_x M(a-1,b) + (a-1) Cxx M(a-2,b) + b Cxp M(a-1,b-1).
/// Purely algebraic in the covariance entries, so it also serves the
/// indefinite plus component of a SignedGaussianPair.
double gaussian2d_moment(const Gaussian2D& g, int m, int n);

/// E_plus[X^m P^n] - E_minus[X^m P^n].
double signed_moment(const SignedGaussianPair& pair, int m, int n);

/// Expectation of the hermitian polynomial in the block variables at size n:
/// real parts weighted twice against the joint Gaussian, imaginary parts
/// against the signed pair.
double expect_poly(const MomentSet& ms, std::int64_t n, const HermitianPolynomial& poly);

/// The N -> infinity value: 2 sum Re(c_mn) <x>^m <p>^n.
double classical_limit(const HermitianPolynomial& poly, const MomentSet& ms);

}  // namespace qclt

#endif
