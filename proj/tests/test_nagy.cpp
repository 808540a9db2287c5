#include <doctest.h>

#include <cmath>

#include "dilatekit/nagy.hpp"
#include "dilatekit/rng.hpp"

using namespace dilatekit;

namespace {

ComplexMatrix scalar(double x) {
  ComplexMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

}  // namespace

TEST_SUITE("nagy-dilation") {

TEST_CASE("dilating the zero contraction gives the swap") {
  const DilationMatrix dil = dilate_single(scalar(0.0));
  CHECK(std::abs(dil.u(0, 0)) < 1e-15);
  CHECK(std::abs(dil.u(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(dil.u(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(dil.u(1, 1)) < 1e-15);
}

TEST_CASE("dilating the identity has vanishing defects") {
  const DilationMatrix dil = dilate_single(ComplexMatrix::Identity(2, 2));
  CHECK(max_abs(dil.u.topRightCorner(2, 2)) < 1e-12);
  CHECK(max_abs(dil.u.bottomLeftCorner(2, 2)) < 1e-12);
  CHECK(max_abs(dil.u.bottomRightCorner(2, 2) + ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("scalar 0.5 dilation and its unitarity by direct multiplication") {
  const DilationMatrix dil = dilate_single(scalar(0.5));
  const double s = std::sqrt(0.75);
  CHECK(std::abs(dil.u(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(dil.u(0, 1) - s) < 1e-15);
  CHECK(std::abs(dil.u(1, 0) - s) < 1e-15);
  CHECK(std::abs(dil.u(1, 1) + 0.5) < 1e-15);

  const ComplexMatrix gram = dil.u.adjoint() * dil.u;
  CHECK(max_abs(gram - ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("non-contractions are rejected with the measured norm") {
  CHECK_THROWS_WITH_AS(dilate_single(scalar(1.5)), doctest::Contains("1.5"), std::domain_error);
  CHECK_THROWS_AS(dilate_chain(scalar(1.5), 3), std::domain_error);
}

TEST_CASE("chain compression reproduces scalar powers up to N") {
  const DilationMatrix chain = dilate_chain(scalar(0.5), 2);
  CHECK(chain.copies == 3);
  for (int k = 0; k <= 2; ++k) {
    CHECK(std::abs(compress(chain, k)(0, 0) - std::pow(0.5, k)) < 1e-12);
  }
}

TEST_CASE("chain of the identity compresses to the identity") {
  const DilationMatrix chain = dilate_chain(ComplexMatrix::Identity(2, 2), 3);
  for (int k = 0; k <= 3; ++k) {
    CHECK(two_norm(compress(chain, k) - ComplexMatrix::Identity(2, 2)) < 1e-12);
  }
}

TEST_CASE("compression breaks down past the chain length") {
  // k = N + 1 picks up the shift-register wraparound; documents the k <= N limit.
  const DilationMatrix chain = dilate_chain(scalar(0.9), 5);
  CHECK(two_norm(compress(chain, 5) - scalar(std::pow(0.9, 5))) < 1e-12);
  CHECK(std::abs(compress(chain, 6)(0, 0) - std::pow(0.9, 6)) > 0.1);
}

TEST_CASE("compress at k = 0 is the identity, at k = 1 the verbatim block") {
  Rng rng(5);
  const ComplexMatrix v = rng.random_contraction(3);
  const DilationMatrix dil = dilate_single(v);
  CHECK(max_abs(compress(dil, 0) - ComplexMatrix::Identity(3, 3)) == 0.0);
  CHECK(max_abs(compress(dil, 1) - v) == 0.0);  // block copy, no arithmetic
  CHECK_THROWS_AS(compress(dil, -1), std::invalid_argument);
}

TEST_CASE("chain compression example 0.5^3") {
  const DilationMatrix chain = dilate_chain(scalar(0.5), 4);
  CHECK(std::abs(compress(chain, 3)(0, 0) - 0.125) < 1e-12);
}

TEST_CASE("random contractions dilate to unitaries with exact compression") {
  Rng rng(91);
  for (int n : {1, 2, 4, 8}) {
    const ComplexMatrix v = rng.random_contraction(n);
    CHECK(unitarity_defect(dilate_single(v).u) < 1e-10);

    const DilationMatrix chain = dilate_chain(v, 5);
    CHECK(unitarity_defect(chain.u) < 1e-10);
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    for (int k = 0; k <= 5; ++k) {
      CHECK(two_norm(compress(chain, k) - power) < 1e-10);
      power = power * v;
    }
  }
}

TEST_CASE("chain with steps = 1 coincides with the single-step dilation") {
  Rng rng(17);
  const ComplexMatrix v = rng.random_contraction(2);
  CHECK(max_abs(dilate_chain(v, 1).u - dilate_single(v).u) == 0.0);
  CHECK_THROWS_AS(dilate_chain(v, 0), std::invalid_argument);
}

}  // TEST_SUITE
