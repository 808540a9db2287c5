#include "dilatekit/schrod_cv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

namespace dilatekit {

namespace {

// 7-15 Gauss-Kronrod rule on [-1, 1] (QUADPACK constants). Kronrod nodes
// are listed for the positive half-axis; even indices are the Kronrod
// extension, odd indices are the embedded 7-point Gauss nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  ComplexVector kronrod;  // 15-point estimate of the panel integral
  double err;             // max entrywise |K15 - G7|
};

class Integrand {
 public:
  Integrand(const HermitianSplit& split, double t, const ComplexVector& h0)
      : h1_(split.h1), h2_(split.h2), t_(t), h0_(h0) {}

  // f(eta)/(2pi) * e^{-i(eta H1 + H2)t} h0, via the Hermitian
  // eigendecomposition of eta H1 + H2 so the evolution stays unitary.
  ComplexVector operator()(double eta) const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(eta * h1_ + h2_);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("cv_project: eigensolver failed inside the integrand");
    }
    ComplexVector phases(h0_.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
      phases(k) = std::exp(Complex(0, -es.eigenvalues()(k) * t_));
    }
    const double w = weight_f(eta) / (2.0 * std::numbers::pi);
    return w * (es.eigenvectors() * phases.cwiseProduct(es.eigenvectors().adjoint() * h0_));
  }

 private:
  const ComplexMatrix& h1_;
  const ComplexMatrix& h2_;
  double t_;
  const ComplexVector& h0_;
};

Panel evaluate_panel(const Integrand& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double halfWidth = 0.5 * (b - a);

  ComplexVector k15, g7;
  for (int i = 0; i < 8; ++i) {
    const double x = kKronrodNodes[i];
    ComplexVector sum = g(center + halfWidth * x);
    if (x != 0.0) sum += g(center - halfWidth * x);
    if (k15.size() == 0) {
      k15 = ComplexVector::Zero(sum.size());
      g7 = ComplexVector::Zero(sum.size());
    }
    k15 += kKronrodWeights[i] * sum;
    if (i % 2 == 1) g7 += kGaussWeights[i / 2] * sum;
  }
  k15 *= halfWidth;
  g7 *= halfWidth;

  Panel p;
  p.a = a;
  p.b = b;
  p.kronrod = std::move(k15);
  p.err = (p.kronrod - g7).cwiseAbs().maxCoeff();
  return p;
}

CvProjectionResult gather(std::vector<Panel> panels, double tailBound, long evals) {
  // Deterministic accumulation order regardless of refinement history.
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CvProjectionResult result;
  result.value = ComplexVector::Zero(panels.front().kronrod.size());
  for (const Panel& p : panels) {
    result.value += p.kronrod;
    result.quadError += p.err;
  }
  result.tailBound = tailBound;
  result.evaluations = evals;
  return result;
}

}  // namespace

double weight_f(double eta) {
  if (!std::isfinite(eta)) throw std::invalid_argument("weight_f: eta must be finite");
  return 2.0 / (eta * eta + 1.0);
}

double tail_bound(double R, double h0norm) {
  if (!(R > 1.0)) throw std::invalid_argument("tail_bound: R must exceed 1");
  return R / (R * R - 1.0) * h0norm;
}

ComplexVector residue_oracle(const HermitianSplit& split, double t, const ComplexVector& h0) {
  const ComplexMatrix generator = -split.h1 * std::abs(t) - Complex(0, 1) * split.h2 * t;
  return matrix_exp(generator) * h0;
}

CvProjectionResult cv_project(const HermitianSplit& split, double t, const ComplexVector& h0,
                              double tol, double R, long maxEvaluations) {
  if (h0.size() != split.dim()) throw std::invalid_argument("cv_project: h0 dimension mismatch");
  if (!(tol > 0)) throw std::invalid_argument("cv_project: tol must be positive");
  if (!(R > 1)) throw std::invalid_argument("cv_project: R must exceed 1");
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(split.h1, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
      throw std::domain_error("cv_project: H1 must be positive semidefinite");
    }
  }

  const Integrand g(split, t, h0);
  const double tail = tail_bound(R, h0.norm());

  auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  long evals = 0;
  double totalErr = 0.0;

  auto push = [&](double a, double b) {
    Panel p = evaluate_panel(g, a, b);
    evals += 15;
    totalErr += p.err;
    queue.push(std::move(p));
  };

  push(-R, 0.0);
  push(0.0, R);

  const double minWidth = 1e-12 * R;
  while (totalErr > tol) {
    const Panel& worst = queue.top();
    if (worst.b - worst.a <= minWidth || evals + 30 > maxEvaluations) {
      std::vector<Panel> rest;
      auto drain = queue;
      while (!drain.empty()) {
        rest.push_back(drain.top());
        drain.pop();
      }
      CvProjectionResult best = gather(std::move(rest), tail, evals);
      std::ostringstream os;
      os << "cv_project: quadrature did not reach tol " << tol << " (error estimate " << totalErr
         << ", " << evals << " evaluations)";
      throw QuadratureError(os.str(), std::move(best));
    }
    Panel top = queue.top();
    queue.pop();
    totalErr -= top.err;
    const double mid = 0.5 * (top.a + top.b);
    push(top.a, mid);
    push(mid, top.b);
  }

  std::vector<Panel> panels;
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  return gather(std::move(panels), tail, evals);
}

}  // namespace dilatekit
