#pragma once

#include <string>
#include <vector>

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// Regression constant for the first-order defect bound
/// dilation_defect(build_grid(delta)) <= kDefectScalingC * delta.
/// Calibrated once on the scalar decay test (observed ratios stay below
/// 0.02 at t = 1 and below 1/pi at t = 0) and frozen.
inline constexpr double kDefectScalingC = 1.0;

/// Discretized Fourier modes eta_j = -L + j*(2L/N), j = 1..N, with
/// Poisson-kernel quadrature weights w_j = f(eta_j)*deltaEta/(2pi).
struct EtaGrid {
  double L = 0.0;
  int N = 0;
  double deltaEta = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  static EtaGrid make(double L, int N);

  /// Sum of weights; 1 minus the tail/quadrature deficit.
  double mass() const;
};

/// L = 2/delta and N = ceil(2L/delta) rounded up to even, so that
/// deltaEta <= delta and the |eta| > L tail is O(delta).
EtaGrid build_grid(double delta);

struct SchrodConfig {
  double delta = 0.1;
  double L = 0.0;        // 0 = derive from delta
  int N = 0;             // 0 = derive from delta
  int K = 0;             // Trotter segments; 0 = exact per-mode exponentials
  enum class Recovery { WeightedSum, PPoint } recovery = Recovery::WeightedSum;
  double pStar = 1.0;

  EtaGrid make_grid() const;
};

/// Per-mode states w(t, eta_j), one column vector per grid node.
struct ModeState {
  std::vector<ComplexVector> modes;
  EtaGrid grid;
  double time = 0.0;
};

/// Fourier-side initial data: mode j = f(eta_j) * u0 (the transform of
/// the even extension e^{-|p|} u0, applied analytically). Feeds the
/// p-point recovery route.
ModeState initial_modes(const ComplexVector& u0, const EtaGrid& grid);

/// Constant embedding h(eta) = h0: the projection-route state whose
/// weighted recovery approximates exp(-At) h0.
ModeState embed_constant(const ComplexVector& h0, const EtaGrid& grid);

/// K = 0: mode j <- e^{-i(eta_j H1 + H2) t} mode j (exact; the dilated
/// generator is block-diagonal across modes). K >= 1: first-order
/// Lie-Trotter (e^{-i eta_j H1 t/K} e^{-i H2 t/K})^K per mode.
ModeState evolve(const ModeState& state, const HermitianSplit& split, double t, int K);

/// Sum_j w_j * mode_j, accumulated in ascending j order.
ComplexVector recover(const ModeState& state);

/// e^{p*} * (deltaEta/2pi) * Sum_j e^{-i eta_j p*} mode_j: inverse
/// transform at p = p*, then unwarping. Requires p* >= 1/L (the p
/// resolution of the grid).
ComplexVector recover_via_p(const ModeState& state, double pStar);

/// || Sum_j w_j e^{-i(eta_j H1 + H2)t}  -  e^{-(H1 + i H2)t} ||_2.
double dilation_defect(const HermitianSplit& split, double t, const EtaGrid& grid);

/// Projection-route solve: embed, evolve, weighted recovery.
ComplexVector solve_weighted_sum(const HermitianSplit& split, const ComplexVector& u0, double t,
                                 const EtaGrid& grid, int K = 0);

/// Fourier-route solve: f-weighted modes, evolve, p-point recovery.
ComplexVector solve_p_recovery(const HermitianSplit& split, const ComplexVector& u0, double t,
                               const EtaGrid& grid, double pStar, int K = 0);

}  // namespace dilatekit
