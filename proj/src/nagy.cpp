#include "dilatekit/nagy.hpp"

#include <sstream>

namespace dilatekit {

namespace {

void require_contraction(const ComplexMatrix& v, const char* what) {
  require_square(v, what);
  require_finite(v, what);
  const double norm = two_norm(v);
  if (norm > 1.0 + kContractionTol) {
    std::ostringstream os;
    os << what << ": not a contraction, ||V||_2 = " << norm;
    throw std::domain_error(os.str());
  }
}

void check_unitary(const DilationMatrix& dil, const char* what) {
  if (unitarity_defect(dil.u) > 1e-10) {
    throw std::runtime_error(std::string(what) + ": constructed dilation is not unitary to 1e-10");
  }
}

}  // namespace

DilationMatrix dilate_single(const ComplexMatrix& v) {
  require_contraction(v, "dilate_single");
  const Eigen::Index n = v.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix defectV = matrix_sqrt_psd(id - v.adjoint() * v);
  const ComplexMatrix defectVdag = matrix_sqrt_psd(id - v * v.adjoint());

  DilationMatrix dil;
  dil.blockDim = n;
  dil.copies = 2;
  dil.u.setZero(2 * n, 2 * n);
  dil.u.topLeftCorner(n, n) = v;
  dil.u.topRightCorner(n, n) = defectVdag;
  dil.u.bottomLeftCorner(n, n) = defectV;
  dil.u.bottomRightCorner(n, n) = -v.adjoint();
  check_unitary(dil, "dilate_single");
  return dil;
}

DilationMatrix dilate_chain(const ComplexMatrix& v, int steps) {
  require_contraction(v, "dilate_chain");
  if (steps < 1) throw std::invalid_argument("dilate_chain: steps must be >= 1");

  const Eigen::Index n = v.rows();
  const int copies = steps + 1;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix defectV = matrix_sqrt_psd(id - v.adjoint() * v);
  const ComplexMatrix defectVdag = matrix_sqrt_psd(id - v * v.adjoint());

  DilationMatrix dil;
  dil.blockDim = n;
  dil.copies = copies;
  dil.u.setZero(copies * n, copies * n);
  dil.u.block(0, 0, n, n) = v;
  dil.u.block(0, steps * n, n, n) = defectVdag;
  dil.u.block(n, 0, n, n) = defectV;
  dil.u.block(n, steps * n, n, n) = -v.adjoint();
  for (int r = 2; r < copies; ++r) {
    dil.u.block(r * n, (r - 1) * n, n, n) = id;
  }
  check_unitary(dil, "dilate_chain");
  return dil;
}

ComplexMatrix compress(const DilationMatrix& dil, int k) {
  if (k < 0) throw std::invalid_argument("compress: k must be nonnegative");
  const Eigen::Index dim = dil.u.rows();
  ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
  for (int i = 0; i < k; ++i) power = power * dil.u;
  if (!power.allFinite()) throw std::overflow_error("compress: power overflowed");
  return power.topLeftCorner(dil.blockDim, dil.blockDim);
}

}  // namespace dilatekit
