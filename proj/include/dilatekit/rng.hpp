#pragma once

#include <cstdint>
#include <random>

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// All seeded instance generation flows through this engine so regressions
/// are reproducible from a single seed.
inline constexpr const char* kRngName = "mt19937_64/v1";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }

  ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

  ComplexMatrix random_unitary(Eigen::Index n);

  /// Hermitian with eigenvalues uniform in [lo, hi] in a random basis.
  ComplexMatrix random_hermitian(Eigen::Index n, double lo, double hi);

  /// M/||M||_2 scaled by a uniform factor in [0, 1].
  ComplexMatrix random_contraction(Eigen::Index n);

  ComplexVector random_unit_vector(Eigen::Index n);

 private:
  std::mt19937_64 eng_;
};

}  // namespace dilatekit
