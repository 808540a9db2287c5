#pragma once

#include <vector>

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// 1D heat problem u_t = -(-d^2/dx^2 + V(x)) u on (0, domainLength) with
/// homogeneous Dirichlet boundaries, discretized on n interior points.
struct HeatProblem {
  int n = 0;
  double domainLength = 1.0;
  std::vector<double> potential;  // V(x_i) >= 0; empty means zero

  double h() const { return domainLength / (n + 1); }
};

/// A = tridiag(-1, 2, -1)/h^2 + diag(V): real symmetric, 3-sparse.
ComplexMatrix discretize(const HeatProblem& problem);

/// Reference solution. With zero potential this is the discrete sine
/// series sum_k e^{-lambda_k t} <phi_k, u0> phi_k; otherwise it falls
/// back to matrix_exp(-A t) u0.
ComplexVector exact_heat(const HeatProblem& problem, const ComplexVector& u0, double t);

/// Smooth default initial profile x(1 - x) sampled at the interior nodes.
ComplexVector default_initial_condition(const HeatProblem& problem);

struct HeatBenchRow {
  int n = 0;
  double T = 0.0;
  double delta = 0.0;
  double L = 0.0;
  long long N = 0;
  double recoveryErr = 0.0;   // relative L2 error against the exact oracle
  double defect = 0.0;        // operator dilation defect on the same grid
  double blockQueries = 0.0;
  double schrodQueries = 0.0;
  double normMax = 0.0;       // measured ||A||_max (scales as 1/h^2)
  double normRatio = 0.0;     // ||u(0)|| / ||u(T)|| from the oracle
  double wallMs = 0.0;
};

/// For each delta: builds the eta grid, solves by the weighted-sum route,
/// and records recovery error, dilation defect and both resource
/// estimates. Rows come back in input order.
std::vector<HeatBenchRow> run_heat_benchmark(int n, double T, const std::vector<double>& deltas);

}  // namespace dilatekit
