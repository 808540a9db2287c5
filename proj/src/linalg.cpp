#include "dilatekit/linalg.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace dilatekit {

namespace {

std::string dims_of(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

bool near_hermitian(const ComplexMatrix& m, double tol) {
  return max_abs(m - m.adjoint()) <= tol;
}

}  // namespace

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": expected a nonempty square matrix, got " + dims_of(m));
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": matrix contains non-finite entries");
  }
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double two_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix g = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return two_norm(g);
}

HermitianSplit hermitian_split(const ComplexMatrix& a, double T) {
  require_square(a, "hermitian_split");
  require_finite(a, "hermitian_split");
  if (T < 0) throw std::invalid_argument("hermitian_split: T must be nonnegative");

  HermitianSplit split;
  split.h1 = 0.5 * (a + a.adjoint());
  split.h2 = (a - a.adjoint()) / Complex(0, 2);
  split.profile = spectral_profile(a, T);
  return split;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  require_square(m, "matrix_exp");
  require_finite(m, "matrix_exp");

  const Eigen::Index n = m.rows();
  const double scale = std::max(1.0, max_abs(m));
  const double hermTol = 1e-13 * scale;

  ComplexMatrix result;
  if (near_hermitian(m, hermTol)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
    if (es.info() != Eigen::Success) throw std::runtime_error("matrix_exp: eigensolver failed to converge");
    result = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
             es.eigenvectors().adjoint();
  } else if (near_hermitian(Complex(0, 1) * m, hermTol)) {
    // m = -iH with H Hermitian: exponential is exactly unitary.
    const ComplexMatrix h = 0.5 * (Complex(0, 1) * m + (Complex(0, 1) * m).adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("matrix_exp: eigensolver failed to converge");
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::exp(Complex(0, -es.eigenvalues()(k)));
    result = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  } else if ((m * m.adjoint() - m.adjoint() * m).norm() <= 1e-10) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("matrix_exp: eigensolver failed to converge");
    Eigen::VectorXcd ev(n);
    for (Eigen::Index k = 0; k < n; ++k) ev(k) = std::exp(es.eigenvalues()(k));
    const ComplexMatrix v = es.eigenvectors();
    result = v * ev.asDiagonal() * v.partialPivLu().solve(ComplexMatrix::Identity(n, n));
  } else {
    result = m.exp();
  }

  if (!result.allFinite()) {
    throw std::overflow_error("matrix_exp: result overflowed (input norm too extreme)");
  }
  return result;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, double tol) {
  require_square(m, "matrix_sqrt_psd");
  require_finite(m, "matrix_sqrt_psd");
  const double scale = std::max(1.0, max_abs(m));
  if (!near_hermitian(m, std::max(tol, 1e-12 * scale))) {
    throw std::invalid_argument("matrix_sqrt_psd: input is not Hermitian");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) throw std::runtime_error("matrix_sqrt_psd: eigensolver failed to converge");

  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    if (d(k) < -tol) {
      std::ostringstream os;
      os << "matrix_sqrt_psd: input is not PSD, eigenvalue " << d(k) << " below -" << tol;
      throw std::domain_error(os.str());
    }
    d(k) = std::sqrt(std::max(d(k), 0.0));
  }
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

SpectralProfile spectral_profile(const ComplexMatrix& a, double T) {
  require_square(a, "spectral_profile");
  require_finite(a, "spectral_profile");

  SpectralProfile p;
  p.normMax = max_abs(a);

  const double scale = std::max(1.0, p.normMax);
  if (near_hermitian(a, 1e-13 * scale)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
    if (es.info() != Eigen::Success) throw std::runtime_error("spectral_profile: eigensolver failed to converge");
    p.lambda0 = es.eigenvalues().minCoeff();
    p.norm2 = es.eigenvalues().cwiseAbs().maxCoeff();
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw std::runtime_error("spectral_profile: eigensolver failed to converge");
    p.lambda0 = es.eigenvalues().real().minCoeff();
    p.norm2 = two_norm(a);
  }

  int maxRow = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    int nz = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (std::abs(a(i, j)) > kSparsityZeroTol) ++nz;
    }
    maxRow = std::max(maxRow, nz);
  }
  p.sparsity = std::max(maxRow, 1);
  p.tau = p.sparsity * p.normMax * T;
  return p;
}

}  // namespace dilatekit
