#include "dilatekit/heat.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "dilatekit/complexity.hpp"
#include "dilatekit/schrod_dv.hpp"

namespace dilatekit {

namespace {

void check_problem(const HeatProblem& p, const char* what) {
  if (p.n < 2) throw std::invalid_argument(std::string(what) + ": need at least 2 interior points");
  if (!(p.domainLength > 0)) throw std::invalid_argument(std::string(what) + ": domain length must be positive");
  if (!p.potential.empty() && p.potential.size() != static_cast<std::size_t>(p.n)) {
    throw std::invalid_argument(std::string(what) + ": potential length must equal n");
  }
  for (double v : p.potential) {
    if (v < 0) throw std::invalid_argument(std::string(what) + ": potential entries must be nonnegative");
  }
}

bool zero_potential(const HeatProblem& p) {
  for (double v : p.potential)
    if (v != 0.0) return false;
  return true;
}

}  // namespace

ComplexMatrix discretize(const HeatProblem& problem) {
  check_problem(problem, "discretize");
  const int n = problem.n;
  const double invH2 = 1.0 / (problem.h() * problem.h());

  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2.0 * invH2 + (problem.potential.empty() ? 0.0 : problem.potential[i]);
    if (i > 0) a(i, i - 1) = -invH2;
    if (i + 1 < n) a(i, i + 1) = -invH2;
  }
  return a;
}

ComplexVector exact_heat(const HeatProblem& problem, const ComplexVector& u0, double t) {
  check_problem(problem, "exact_heat");
  if (u0.size() != problem.n) throw std::invalid_argument("exact_heat: u0 dimension mismatch");

  if (!zero_potential(problem)) {
    return matrix_exp(-t * discretize(problem)) * u0;
  }

  // Discrete sine modes phi_k(i) = sqrt(2/(n+1)) sin(k pi i/(n+1)) with
  // lambda_k = (2/h^2)(1 - cos(k pi/(n+1))).
  const int n = problem.n;
  const double invH2 = 1.0 / (problem.h() * problem.h());
  const double norm = std::sqrt(2.0 / (n + 1));

  ComplexVector result = ComplexVector::Zero(n);
  Eigen::VectorXd mode(n);
  for (int k = 1; k <= n; ++k) {
    const double angle = k * std::numbers::pi / (n + 1);
    for (int i = 1; i <= n; ++i) mode(i - 1) = norm * std::sin(angle * i);
    const double lambda = 2.0 * invH2 * (1.0 - std::cos(angle));
    const Complex coeff = mode.cast<Complex>().dot(u0) * std::exp(-lambda * t);
    result += coeff * mode.cast<Complex>();
  }
  return result;
}

ComplexVector default_initial_condition(const HeatProblem& problem) {
  check_problem(problem, "default_initial_condition");
  ComplexVector u0(problem.n);
  for (int i = 1; i <= problem.n; ++i) {
    const double x = i * problem.h();
    u0(i - 1) = x * (problem.domainLength - x);
  }
  return u0;
}

std::vector<HeatBenchRow> run_heat_benchmark(int n, double T, const std::vector<double>& deltas) {
  if (n > 512) throw std::invalid_argument("run_heat_benchmark: n capped at 512");
  if (!(T > 0)) throw std::invalid_argument("run_heat_benchmark: T must be positive");

  HeatProblem problem{n};
  const ComplexMatrix a = discretize(problem);
  const HermitianSplit split = hermitian_split(a, T);
  const ComplexVector u0 = default_initial_condition(problem);
  const ComplexVector exact = exact_heat(problem, u0, T);
  const double normRatio = u0.norm() / exact.norm();
  const double m = std::log2(static_cast<double>(n));

  std::vector<HeatBenchRow> rows;
  rows.reserve(deltas.size());
  for (double delta : deltas) {
    const auto start = std::chrono::steady_clock::now();

    const EtaGrid grid = build_grid(delta);
    const ComplexVector recovered = solve_weighted_sum(split, u0, T, grid);
    const double defect = dilation_defect(split, T, grid);

    ResourceInputs inputs;
    inputs.normRatio = normRatio;
    inputs.tau = split.profile.tau;
    inputs.delta = delta;
    inputs.sparsity = split.profile.sparsity;
    inputs.normMax = split.profile.normMax;
    inputs.lambda0 = split.profile.lambda0;
    inputs.m = m;

    HeatBenchRow row;
    row.n = n;
    row.T = T;
    row.delta = delta;
    row.L = grid.L;
    row.N = grid.N;
    row.recoveryErr = (recovered - exact).norm() / exact.norm();
    row.defect = defect;
    row.blockQueries = estimate_block(inputs).queries;
    row.schrodQueries = estimate_schrod(inputs).queries;
    row.normMax = split.profile.normMax;
    row.normRatio = normRatio;
    row.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dilatekit
