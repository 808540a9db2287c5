#pragma once

#include <span>

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// Inputs shared by both estimators. All hidden constants are fixed to 1
/// and logarithmic factors are dropped; the claim is exponent fidelity,
/// not absolute counts.
struct ResourceInputs {
  double normRatio = 1.0;  // ||u(0)|| / ||u(T)||, the amplification factor
  double tau = 1.0;        // s(A) * ||A||_max * T
  double delta = 0.1;      // target precision
  double sparsity = 1.0;   // s(A)
  double normMax = 1.0;    // ||A||_max
  double lambda0 = 1.0;    // smallest real part of the eigenvalues of A
  double m = 1.0;          // system qubits, log2(n)
};

enum class Method { Block, Schrod };

struct ResourceEstimate {
  Method method = Method::Block;
  long long K = 0;       // Trotter segments
  double L = 0.0;        // eta truncation half-width
  long long N = 0;       // eta modes
  double queries = 0.0;
  double gates = 0.0;
  double ancillaQubits = 0.0;
  ResourceInputs inputs;
};

/// K = ceil(tau^2 / deltaPrime): segments for simulating e^{-AT} directly.
long long trotter_segments(double tau, double deltaPrime);

/// Variant with the mode cutoff folded in: K = ceil((L*tau)^2 / deltaPrime).
/// Exceeds trotter_segments for L > 1.
long long trotter_segments_dv(double tau, double L, double deltaPrime);

/// L = 1/deltaPrime, N = ceil(tau / deltaPrime^2).
std::pair<double, long long> schrod_params(double tau, double deltaPrime);

/// queries = ratio^2 * (tau^2/delta) * (1 + s*normMax/lambda0),
/// gates   = ratio^2 * (tau^2/delta) * (m + s*normMax/lambda0),
/// ancillas = m.
ResourceEstimate estimate_block(const ResourceInputs& in);

/// queries = ratio^4 * tau^2 / delta^3, gates = m * queries,
/// ancillas = m + log2(tau/delta); K, L, N derived at
/// deltaPrime = delta / ratio.
ResourceEstimate estimate_schrod(const ResourceInputs& in);

/// Least-squares slope of log y against log x. Needs >= 3 positive points.
double scaling_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace dilatekit
