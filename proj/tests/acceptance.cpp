// Acceptance suite: runs each release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dilatekit/block_encoding.hpp"
#include "dilatekit/complexity.hpp"
#include "dilatekit/heat.hpp"
#include "dilatekit/nagy.hpp"
#include "dilatekit/rng.hpp"
#include "dilatekit/schrod_cv.hpp"
#include "dilatekit/schrod_dv.hpp"
#include "dilatekit/selftest.hpp"

using namespace dilatekit;

namespace {

constexpr std::uint64_t kSeed = 20250810;

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string name, double runtimeBudgetSec)
      : number_(number), name_(std::move(name)), budget_(runtimeBudgetSec),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && firstFailure_.empty()) firstFailure_ = detail;
    allOk_ = allOk_ && ok;
  }

  void finish() {
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (sec > budget_) {
      allOk_ = false;
      if (firstFailure_.empty()) firstFailure_ = "runtime budget exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2fs of %.0fs budget)%s%s\n", allOk_ ? "PASS" : "FAIL",
                number_, name_.c_str(), sec, budget_, firstFailure_.empty() ? "" : " -- ",
                firstFailure_.c_str());
    if (!allOk_) ++failures;
  }

 private:
  int number_;
  std::string name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  bool allOk_ = true;
  std::string firstFailure_;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void criterion1_residue_identity() {
  Criterion c(1, "residue/dilation identity (cv quadrature vs closed form)", 60.0);
  Rng rng(kSeed);
  const std::array<int, 3> dims = {1, 2, 4};
  for (int sys = 0; sys < 20; ++sys) {
    const int n = dims[sys % dims.size()];
    const ComplexMatrix h1 = rng.random_hermitian(n, 0.1, 2.0);
    const ComplexMatrix h2 = rng.random_hermitian(n, -2.0, 2.0);
    const HermitianSplit split = hermitian_split(h1 + Complex(0, 1) * h2, 1.0);
    const ComplexVector h0 = rng.random_unit_vector(n);
    for (double t : {0.25, 1.0, 3.0}) {
      const CvProjectionResult proj = cv_project(split, t, h0, 1e-8, 200.0);
      const double diff = (proj.value - residue_oracle(split, t, h0)).norm();
      const double bound = 1e-6 + tail_bound(200.0, h0.norm());
      c.require(diff <= bound, "sys " + std::to_string(sys) + " t=" + fmt(t) + ": diff " +
                                   fmt(diff) + " > " + fmt(bound));
    }
  }
  c.finish();
}

void criterion2_nagy_compression() {
  Criterion c(2, "Nagy dilation unitarity and chain compression", 5.0);
  Rng rng(kSeed + 1);
  const std::array<int, 4> dims = {1, 2, 4, 8};
  for (int sys = 0; sys < 20; ++sys) {
    const int n = dims[sys % dims.size()];
    const ComplexMatrix v = rng.random_contraction(n);

    const double unit = unitarity_defect(dilate_single(v).u);
    c.require(unit <= 1e-10, "sys " + std::to_string(sys) + ": unitarity " + fmt(unit));

    const DilationMatrix chain = dilate_chain(v, 5);
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    for (int k = 0; k <= 5; ++k) {
      const double defect = two_norm(compress(chain, k) - power);
      c.require(defect <= 1e-10,
                "sys " + std::to_string(sys) + " k=" + std::to_string(k) + ": " + fmt(defect));
      power = power * v;
    }
  }
  c.finish();
}

void criterion3_defect_scaling() {
  Criterion c(3, "discrete dilation defect scaling in delta", 30.0);
  const std::vector<double> deltas = {0.2, 0.1, 0.05, 0.025};

  ComplexMatrix scalar(1, 1);
  scalar(0, 0) = 1.0;
  Rng rng(kSeed + 2);
  const ComplexMatrix h1 = rng.random_hermitian(2, 0.5, 1.5);
  const ComplexMatrix h2 = rng.random_hermitian(2, -1.0, 1.0);
  const ComplexMatrix random2x2 = h1 + Complex(0, 1) * h2;

  int label = 0;
  for (const ComplexMatrix& a : {scalar, random2x2}) {
    const HermitianSplit split = hermitian_split(a, 1.0);
    c.require(split.profile.lambda0 >= 0.5 - 1e-9,
              "instance lambda0 " + fmt(split.profile.lambda0));
    std::vector<double> defects;
    for (double d : deltas) defects.push_back(dilation_defect(split, 1.0, build_grid(d)));
    const double slope = scaling_fit(deltas, defects);
    const std::string tag = label ? "random 2x2" : "scalar";
    c.require(slope >= 0.9, tag + ": slope " + fmt(slope) + " < 0.9");
    c.require(defects.back() <= kDefectScalingC * 0.025,
              tag + ": defect(0.025) = " + fmt(defects.back()) + " > C*0.025 with C = " +
                  fmt(kDefectScalingC));
    ++label;
  }
  c.finish();
}

void criterion4_trotter_order() {
  Criterion c(4, "first-order Trotter error slope", 10.0);
  ComplexMatrix h1 = ComplexMatrix::Zero(2, 2);
  h1(0, 0) = 1.0;
  ComplexMatrix h2 = ComplexMatrix::Zero(2, 2);
  h2(0, 1) = 1.0;
  h2(1, 0) = 1.0;
  const HermitianSplit split = hermitian_split(h1 + Complex(0, 1) * h2, 1.0);
  const ComplexMatrix target = matrix_exp(-split.reconstruct());

  const std::vector<double> segments = {8, 16, 32, 64, 128};
  std::vector<double> errors;
  for (double k : segments) {
    errors.push_back(verify(trotter_pipeline(split, 1.0, static_cast<int>(k)), target));
  }
  const double slope = scaling_fit(segments, errors);
  c.require(std::abs(slope + 1.0) <= 0.15, "slope " + fmt(slope) + " outside -1 +/- 0.15");
  c.finish();
}

void criterion5_blockencoding_algebra() {
  Criterion c(5, "block-encoding product and LCU error bounds", 30.0);
  Rng rng(kSeed + 3);

  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = (trial % 2) ? 2 : 4;
    const int terms = (trial % 4 < 2) ? 2 : 4;
    const double eps = (trial % 3 == 0) ? 0.0 : 1e-3;

    // LCU: exact Nagy encodings of down-scaled contractions, declared as
    // eps-accurate for perturbed targets.
    std::vector<double> ys;
    std::vector<BlockEncoding> bes;
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < terms; ++j) {
      const ComplexMatrix v = rng.random_contraction(n) * 0.9;
      BlockEncoding be = encode_nagy(v);
      ComplexMatrix target = v;
      if (eps > 0) {
        const ComplexMatrix e = rng.gaussian_matrix(n, n);
        target += e * (0.99 * eps / two_norm(e));
        be.declaredError = eps;
      }
      const double y = rng.uniform(0.0, 1.0);
      ys.push_back(y);
      sum += y * target;
      bes.push_back(std::move(be));
    }
    const BlockEncoding combined = lcu_combine(ys, bes);
    const double lcuErr = verify(combined, sum);
    c.require(lcuErr <= combined.declaredError + 1e-8,
              "trial " + std::to_string(trial) + ": lcu " + fmt(lcuErr) + " > " +
                  fmt(combined.declaredError + 1e-8));

    auto noisy = [&](double errBudget) {
      const ComplexMatrix v = rng.random_contraction(n) * 0.9;
      BlockEncoding be = encode_nagy(v);
      ComplexMatrix target = v;
      if (errBudget > 0) {
        const ComplexMatrix e = rng.gaussian_matrix(n, n);
        target += e * (0.99 * errBudget / two_norm(e));
        be.declaredError = errBudget;
      }
      return std::make_pair(std::move(be), std::move(target));
    };
    const auto [beA, targetA] = noisy(eps);
    const auto [beB, targetB] = noisy((trial % 2) ? eps : 0.0);
    const BlockEncoding prod = product(beA, beB);
    const double prodErr = verify(prod, targetA * targetB);
    c.require(prodErr <= prod.declaredError + 1e-8,
              "trial " + std::to_string(trial) + ": product " + fmt(prodErr) + " > " +
                  fmt(prod.declaredError + 1e-8));
  }
  c.finish();
}

void criterion6_heat_end_to_end() {
  Criterion c(6, "heat-equation end-to-end recovery at delta = 1e-2", 120.0);
  const auto rows = run_heat_benchmark(64, 0.1, {1e-2});
  const double bound = kDefectScalingC * 1e-2;
  c.require(rows.front().recoveryErr <= bound,
            "recovery error " + fmt(rows.front().recoveryErr) + " > " + fmt(bound));

  const int sparsity = spectral_profile(discretize(HeatProblem{64}), 0.1).sparsity;
  c.require(sparsity == 3, "sparsity " + std::to_string(sparsity) + " != 3");
  c.finish();
}

void criterion7_estimator_fidelity() {
  Criterion c(7, "estimator homogeneity and segment-count sufficiency", 30.0);

  ResourceInputs in;
  in.normRatio = 2.0;
  in.tau = 1.5;
  in.delta = 0.1;
  in.sparsity = 2.0;
  in.normMax = 1.0;
  in.lambda0 = 0.7;
  in.m = 5.0;
  ResourceInputs halved = in;
  halved.delta = in.delta / 2.0;

  const double blockRatio = estimate_block(halved).queries / estimate_block(in).queries;
  const double schrodRatio = estimate_schrod(halved).queries / estimate_schrod(in).queries;
  c.require(std::abs(blockRatio - 2.0) <= 1e-12, "block ratio " + fmt(blockRatio));
  c.require(std::abs(schrodRatio - 8.0) <= 1e-12, "schrod ratio " + fmt(schrodRatio));

  // The estimator's segment count must reach its own accuracy target on
  // the criterion-4 instance (tau = s * maxnorm * T = 2).
  ComplexMatrix h1 = ComplexMatrix::Zero(2, 2);
  h1(0, 0) = 1.0;
  ComplexMatrix h2 = ComplexMatrix::Zero(2, 2);
  h2(0, 1) = 1.0;
  h2(1, 0) = 1.0;
  const HermitianSplit split = hermitian_split(h1 + Complex(0, 1) * h2, 1.0);
  c.require(std::abs(split.profile.tau - 2.0) < 1e-12, "tau " + fmt(split.profile.tau));
  const ComplexMatrix target = matrix_exp(-split.reconstruct());
  for (double deltaPrime : {0.1, 0.02}) {
    const long long k = trotter_segments(split.profile.tau, deltaPrime);
    const double err = verify(trotter_pipeline(split, 1.0, static_cast<int>(k)), target);
    c.require(err <= deltaPrime, "K=" + std::to_string(k) + ": error " + fmt(err) + " > " +
                                     fmt(deltaPrime));
  }
  c.finish();
}

void criterion8_determinism() {
  Criterion c(8, "selftest determinism (byte-identical artifacts)", 60.0);
  const SelftestReport a = run_selftest(kSeed);
  const SelftestReport b = run_selftest(kSeed);
  c.require(a.passed, "selftest checks failed");
  c.require(a.csv == b.csv, "artifacts differ between runs");
  c.finish();
}

}  // namespace

int main() {
  criterion1_residue_identity();
  criterion2_nagy_compression();
  criterion3_defect_scaling();
  criterion4_trotter_order();
  criterion5_blockencoding_algebra();
  criterion6_heat_end_to_end();
  criterion7_estimator_fidelity();
  criterion8_determinism();

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
