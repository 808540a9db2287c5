#include "dilatekit/schrod_dv.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dilatekit/detail/parallel.hpp"
#include "dilatekit/schrod_cv.hpp"

namespace dilatekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct HermitianEig {
  ComplexMatrix q;
  Eigen::VectorXd lambda;
};

HermitianEig eig_of(const ComplexMatrix& h, const char* what) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error(std::string(what) + ": eigensolver failed to converge");
  }
  return {es.eigenvectors(), es.eigenvalues()};
}

ComplexVector apply_phases(const HermitianEig& eig, const Eigen::VectorXd& angles,
                           const ComplexVector& v) {
  ComplexVector y = eig.q.adjoint() * v;
  for (Eigen::Index k = 0; k < y.size(); ++k) y(k) *= std::exp(Complex(0, -angles(k)));
  return eig.q * y;
}

bool h2_is_zero(const HermitianSplit& split) {
  return max_abs(split.h2) <= 1e-14 * std::max(1.0, max_abs(split.h1));
}

void require_state(const ModeState& state, const char* what) {
  if (state.modes.size() != static_cast<std::size_t>(state.grid.N)) {
    throw std::invalid_argument(std::string(what) + ": mode count does not match grid");
  }
  if (state.modes.empty()) throw std::invalid_argument(std::string(what) + ": empty state");
}

}  // namespace

EtaGrid EtaGrid::make(double L, int N) {
  if (!(L > 0)) throw std::invalid_argument("EtaGrid: L must be positive");
  if (N < 2) throw std::invalid_argument("EtaGrid: N must be at least 2");

  EtaGrid grid;
  grid.L = L;
  grid.N = N;
  grid.deltaEta = 2.0 * L / N;
  grid.nodes.resize(N);
  grid.weights.resize(N);
  for (int j = 1; j <= N; ++j) {
    const double eta = L * (2.0 * j - N) / N;  // -L + j*deltaEta, exact at the ends
    grid.nodes[j - 1] = eta;
    grid.weights[j - 1] = weight_f(eta) * grid.deltaEta / kTwoPi;
  }
  return grid;
}

double EtaGrid::mass() const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

EtaGrid build_grid(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("build_grid: delta must lie in (0, 1)");
  }
  const double L = 2.0 / delta;
  int N = static_cast<int>(std::ceil(2.0 * L / delta));
  if (N % 2 != 0) ++N;
  return EtaGrid::make(L, N);
}

EtaGrid SchrodConfig::make_grid() const {
  if (L > 0.0 && N > 0) return EtaGrid::make(L, N);
  if (L > 0.0) {
    int n = static_cast<int>(std::ceil(2.0 * L / delta));
    if (n % 2 != 0) ++n;
    return EtaGrid::make(L, n);
  }
  if (N > 0) return EtaGrid::make(2.0 / delta, N);
  return build_grid(delta);
}

ModeState initial_modes(const ComplexVector& u0, const EtaGrid& grid) {
  ModeState state;
  state.grid = grid;
  state.time = 0.0;
  state.modes.reserve(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    state.modes.push_back(weight_f(grid.nodes[j]) * u0);
  }
  return state;
}

ModeState embed_constant(const ComplexVector& h0, const EtaGrid& grid) {
  ModeState state;
  state.grid = grid;
  state.time = 0.0;
  state.modes.assign(grid.N, h0);
  return state;
}

ModeState evolve(const ModeState& state, const HermitianSplit& split, double t, int K) {
  require_state(state, "evolve");
  if (t < 0) throw std::invalid_argument("evolve: t must be nonnegative");
  if (K < 0) throw std::invalid_argument("evolve: K must be nonnegative");
  if (state.modes.front().size() != split.dim()) {
    throw std::invalid_argument("evolve: system dimension mismatch");
  }

  ModeState out;
  out.grid = state.grid;
  out.time = state.time + t;
  out.modes.resize(state.modes.size());

  if (t == 0.0) {
    out.modes = state.modes;
    return out;
  }

  const auto& nodes = state.grid.nodes;

  if (h2_is_zero(split)) {
    // One diagonalization serves every mode: eta H1 has fixed eigenbasis.
    const HermitianEig eig = eig_of(split.h1, "evolve");
    detail::parallel_for(state.grid.N, [&](Eigen::Index j) {
      out.modes[j] = apply_phases(eig, nodes[j] * t * eig.lambda, state.modes[j]);
    });
    return out;
  }

  if (K == 0) {
    detail::parallel_for(state.grid.N, [&](Eigen::Index j) {
      const HermitianEig eig = eig_of(nodes[j] * split.h1 + split.h2, "evolve");
      out.modes[j] = apply_phases(eig, t * eig.lambda, state.modes[j]);
    });
    return out;
  }

  const double dt = t / K;
  const HermitianEig eig1 = eig_of(split.h1, "evolve");
  const HermitianEig eig2 = eig_of(split.h2, "evolve");
  detail::parallel_for(state.grid.N, [&](Eigen::Index j) {
    ComplexVector v = state.modes[j];
    for (int step = 0; step < K; ++step) {
      v = apply_phases(eig2, dt * eig2.lambda, v);
      v = apply_phases(eig1, nodes[j] * dt * eig1.lambda, v);
    }
    out.modes[j] = std::move(v);
  });
  return out;
}

ComplexVector recover(const ModeState& state) {
  require_state(state, "recover");
  ComplexVector sum = ComplexVector::Zero(state.modes.front().size());
  for (int j = 0; j < state.grid.N; ++j) {
    sum += state.grid.weights[j] * state.modes[j];
  }
  return sum;
}

ComplexVector recover_via_p(const ModeState& state, double pStar) {
  require_state(state, "recover_via_p");
  if (!(pStar > 0)) throw std::invalid_argument("recover_via_p: pStar must be positive");
  if (pStar < 1.0 / state.grid.L) {
    std::ostringstream os;
    os << "recover_via_p: pStar = " << pStar << " is below the grid's p resolution 1/L = "
       << 1.0 / state.grid.L;
    throw std::invalid_argument(os.str());
  }

  ComplexVector sum = ComplexVector::Zero(state.modes.front().size());
  for (int j = 0; j < state.grid.N; ++j) {
    sum += std::exp(Complex(0, -state.grid.nodes[j] * pStar)) * state.modes[j];
  }
  return std::exp(pStar) * (state.grid.deltaEta / kTwoPi) * sum;
}

double dilation_defect(const HermitianSplit& split, double t, const EtaGrid& grid) {
  if (!(split.profile.lambda0 > 0)) {
    throw std::domain_error("dilation_defect: requires lambda0(A) > 0");
  }

  if (h2_is_zero(split)) {
    // Everything is diagonal in the eigenbasis of H1, so the operator
    // difference is normal and its 2-norm is the worst eigenvalue defect.
    const HermitianEig eig = eig_of(split.h1, "dilation_defect");
    double worst = 0.0;
    for (Eigen::Index k = 0; k < eig.lambda.size(); ++k) {
      Complex sum = 0.0;
      for (int j = 0; j < grid.N; ++j) {
        sum += grid.weights[j] * std::exp(Complex(0, -grid.nodes[j] * eig.lambda(k) * t));
      }
      worst = std::max(worst, std::abs(sum - std::exp(-eig.lambda(k) * t)));
    }
    return worst;
  }

  const Eigen::Index n = split.dim();
  std::vector<ComplexMatrix> terms(grid.N);
  detail::parallel_for(grid.N, [&](Eigen::Index j) {
    const HermitianEig eig = eig_of(grid.nodes[j] * split.h1 + split.h2, "dilation_defect");
    ComplexVector phases(n);
    for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::exp(Complex(0, -eig.lambda(k) * t));
    terms[j] = grid.weights[j] * (eig.q * phases.asDiagonal() * eig.q.adjoint());
  });

  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < grid.N; ++j) sum += terms[j];
  return two_norm(sum - matrix_exp(-t * split.reconstruct()));
}

ComplexVector solve_weighted_sum(const HermitianSplit& split, const ComplexVector& u0, double t,
                                 const EtaGrid& grid, int K) {
  return recover(evolve(embed_constant(u0, grid), split, t, K));
}

ComplexVector solve_p_recovery(const HermitianSplit& split, const ComplexVector& u0, double t,
                               const EtaGrid& grid, double pStar, int K) {
  return recover_via_p(evolve(initial_modes(u0, grid), split, t, K), pStar);
}

}  // namespace dilatekit
