#pragma once

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// Poisson-kernel weight 2/(eta^2 + 1); (1/2pi) * integral over R is 1.
double weight_f(double eta);

/// Certificate for the neglected |eta| > R contribution:
/// R/(R^2 - 1) * ||h0||. Requires R > 1.
double tail_bound(double R, double h0norm);

/// Closed form e^{-H1|t| - i H2 t} h0 that the projection integral must
/// reproduce. Valid for either sign of t.
ComplexVector residue_oracle(const HermitianSplit& split, double t, const ComplexVector& h0);

struct CvProjectionResult {
  ComplexVector value;
  double quadError = 0.0;   // accumulated quadrature error estimate
  double tailBound = 0.0;   // analytic bound on the |eta| > R remainder
  long evaluations = 0;     // integrand evaluations used
};

/// Thrown when the adaptive quadrature cannot reach the requested
/// tolerance within its evaluation budget; carries the best estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, CvProjectionResult best)
      : std::runtime_error(msg), best(std::move(best)) {}
  CvProjectionResult best;
};

/// Evaluates (1/2pi) * int_{-R}^{R} f(eta) e^{-i(eta H1 + H2)t} h0 deta
/// by adaptive Gauss-Kronrod bisection to absolute tolerance tol.
/// The initial split is at eta = 0 where the weight peaks; adaptivity is
/// driven by the max entrywise error estimate of the vector result.
CvProjectionResult cv_project(const HermitianSplit& split, double t, const ComplexVector& h0,
                              double tol, double R, long maxEvaluations = 1000000);

}  // namespace dilatekit
