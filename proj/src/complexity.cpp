#include "dilatekit/complexity.hpp"

#include <cmath>

namespace dilatekit {

namespace {

void check_domain(double tau, double deltaPrime, const char* what) {
  if (!(tau > 0)) throw std::invalid_argument(std::string(what) + ": tau must be positive");
  if (!(deltaPrime > 0 && deltaPrime < 1)) {
    throw std::invalid_argument(std::string(what) + ": deltaPrime must lie in (0, 1)");
  }
}

long long ceil_to_ll(double x, const char* what) {
  const double c = std::ceil(x);
  if (!(c < 9.0e18)) throw std::overflow_error(std::string(what) + ": count overflows");
  return static_cast<long long>(c);
}

}  // namespace

long long trotter_segments(double tau, double deltaPrime) {
  check_domain(tau, deltaPrime, "trotter_segments");
  return ceil_to_ll(tau * tau / deltaPrime, "trotter_segments");
}

long long trotter_segments_dv(double tau, double L, double deltaPrime) {
  check_domain(tau, deltaPrime, "trotter_segments_dv");
  if (!(L > 0)) throw std::invalid_argument("trotter_segments_dv: L must be positive");
  return ceil_to_ll(L * tau * L * tau / deltaPrime, "trotter_segments_dv");
}

std::pair<double, long long> schrod_params(double tau, double deltaPrime) {
  check_domain(tau, deltaPrime, "schrod_params");
  return {1.0 / deltaPrime, ceil_to_ll(tau / (deltaPrime * deltaPrime), "schrod_params")};
}

ResourceEstimate estimate_block(const ResourceInputs& in) {
  if (!(in.lambda0 > 0)) throw std::domain_error("estimate_block: lambda0 must be positive");
  check_domain(in.tau, in.delta, "estimate_block");

  ResourceEstimate est;
  est.method = Method::Block;
  est.inputs = in;
  const double amp = in.normRatio * in.normRatio;
  const double segments = in.tau * in.tau / in.delta;
  const double sigma = in.sparsity * in.normMax / in.lambda0;
  est.queries = amp * segments * (1.0 + sigma);
  est.gates = amp * segments * (in.m + sigma);
  est.ancillaQubits = in.m;
  est.K = trotter_segments(in.tau, in.delta / in.normRatio);
  return est;
}

ResourceEstimate estimate_schrod(const ResourceInputs& in) {
  check_domain(in.tau, in.delta, "estimate_schrod");
  if (!(in.normRatio > 0)) throw std::invalid_argument("estimate_schrod: normRatio must be positive");

  ResourceEstimate est;
  est.method = Method::Schrod;
  est.inputs = in;
  const double amp = std::pow(in.normRatio, 4);
  est.queries = amp * in.tau * in.tau / (in.delta * in.delta * in.delta);
  est.gates = in.m * est.queries;
  est.ancillaQubits = in.m + std::log2(in.tau / in.delta);

  const double deltaPrime = in.delta / in.normRatio;
  est.K = trotter_segments(in.tau, deltaPrime);
  const auto [L, N] = schrod_params(in.tau, deltaPrime);
  est.L = L;
  est.N = N;
  return est;
}

double scaling_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("scaling_fit: size mismatch");
  if (xs.size() < 3) throw std::invalid_argument("scaling_fit: need at least 3 points");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) {
      throw std::invalid_argument("scaling_fit: data must be positive");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) <= 1e-12 * std::max(1.0, n * sxx)) {
    throw std::invalid_argument("scaling_fit: degenerate abscissae");
  }
  return (n * sxy - sx * sy) / denom;
}

}  // namespace dilatekit
