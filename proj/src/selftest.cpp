#include "dilatekit/selftest.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "dilatekit/block_encoding.hpp"
#include "dilatekit/complexity.hpp"
#include "dilatekit/matrix_io.hpp"
#include "dilatekit/nagy.hpp"
#include "dilatekit/rng.hpp"
#include "dilatekit/schrod_cv.hpp"

namespace dilatekit {

namespace {

class CheckWriter {
 public:
  explicit CheckWriter(std::uint64_t seed) {
    out_ << "# config: command=selftest seed=" << seed << " rng=" << kRngName << "\n";
    out_ << "suite,case,value,bound,pass\n";
  }

  void check(const std::string& suite, const std::string& name, double value, double bound) {
    const bool ok = value <= bound;
    passed_ = passed_ && ok;
    out_ << suite << "," << name << "," << format_double(value) << "," << format_double(bound)
         << "," << (ok ? 1 : 0) << "\n";
  }

  SelftestReport finish() && { return {passed_, out_.str()}; }

 private:
  std::ostringstream out_;
  bool passed_ = true;
};

void residue_oracle_suite(CheckWriter& w, Rng& rng) {
  const std::array<int, 3> dims = {1, 2, 4};
  const std::array<double, 3> times = {0.25, 1.0, 3.0};

  for (int sys = 0; sys < 20; ++sys) {
    const int n = dims[sys % dims.size()];
    const ComplexMatrix h1 = rng.random_hermitian(n, 0.1, 2.0);
    const ComplexMatrix h2 = rng.random_hermitian(n, -2.0, 2.0);
    const HermitianSplit split = hermitian_split(h1 + Complex(0, 1) * h2, 1.0);
    const ComplexVector h0 = rng.random_unit_vector(n);

    for (double t : times) {
      const CvProjectionResult proj = cv_project(split, t, h0, 1e-8, 200.0);
      const double diff = (proj.value - residue_oracle(split, t, h0)).norm();
      std::ostringstream name;
      name << "sys" << sys << "_n" << n << "_t" << t;
      w.check("residue-oracle", name.str(), diff, 1e-6 + tail_bound(200.0, h0.norm()));
    }
  }
}

void nagy_compression_suite(CheckWriter& w, Rng& rng) {
  const std::array<int, 4> dims = {1, 2, 4, 8};

  for (int sys = 0; sys < 20; ++sys) {
    const int n = dims[sys % dims.size()];
    const ComplexMatrix v = rng.random_contraction(n);

    const DilationMatrix single = dilate_single(v);
    std::ostringstream uName;
    uName << "sys" << sys << "_n" << n << "_unitarity";
    w.check("nagy-compression", uName.str(), unitarity_defect(single.u), 1e-10);

    const DilationMatrix chain = dilate_chain(v, 5);
    double worst = 0.0;
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    for (int k = 0; k <= 5; ++k) {
      worst = std::max(worst, two_norm(compress(chain, k) - power));
      power = power * v;
    }
    std::ostringstream cName;
    cName << "sys" << sys << "_n" << n << "_chain_defect_k0to5";
    w.check("nagy-compression", cName.str(), worst, 1e-10);
  }
}

void trotter_slope_suite(CheckWriter& w) {
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
    const double err = verify(trotter_pipeline(split, 1.0, static_cast<int>(k)), target);
    std::ostringstream name;
    name << "error_K" << static_cast<int>(k);
    w.check("trotter-slope", name.str(), err, 1.0);  // sanity cap; the slope is the real check
    errors.push_back(err);
  }
  const double slope = scaling_fit(segments, errors);
  w.check("trotter-slope", "slope_deviation_from_-1", std::abs(slope + 1.0), 0.15);
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  CheckWriter writer(seed);
  Rng rng(seed);
  residue_oracle_suite(writer, rng);
  nagy_compression_suite(writer, rng);
  trotter_slope_suite(writer);
  return std::move(writer).finish();
}

}  // namespace dilatekit
