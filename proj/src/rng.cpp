#include "dilatekit/rng.hpp"

namespace dilatekit {

ComplexMatrix Rng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(), normal());
  return m;
}

ComplexMatrix Rng::random_unitary(Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(n, n));
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  // Fix the phase convention so the result depends only on the draw.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix Rng::random_hermitian(Eigen::Index n, double lo, double hi) {
  Eigen::VectorXd ev(n);
  for (Eigen::Index k = 0; k < n; ++k) ev(k) = uniform(lo, hi);
  const ComplexMatrix q = random_unitary(n);
  ComplexMatrix h = q * ev.asDiagonal() * q.adjoint();
  return 0.5 * (h + h.adjoint());
}

ComplexMatrix Rng::random_contraction(Eigen::Index n) {
  const ComplexMatrix m = gaussian_matrix(n, n);
  const double factor = uniform(0.0, 1.0);
  return m * (factor / two_norm(m));
}

ComplexVector Rng::random_unit_vector(Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v(k) = Complex(normal(), normal());
  return v / v.norm();
}

}  // namespace dilatekit
