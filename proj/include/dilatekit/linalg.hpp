#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace dilatekit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Entries with magnitude below this threshold count as structural zeros
/// when measuring row sparsity.
inline constexpr double kSparsityZeroTol = 1e-14;

/// Eigenvalues of a nominally PSD matrix may dip this far below zero
/// before the square root refuses the input.
inline constexpr double kPsdClampTol = 1e-10;

/// Admission slack on the spectral norm of a contraction.
inline constexpr double kContractionTol = 1e-10;

/// Spectral quantities of a system matrix A that the dilation pipelines
/// and resource estimators consume.
struct SpectralProfile {
  double lambda0 = 0.0;   // smallest real part of the eigenvalues
  double norm2 = 0.0;     // largest singular value
  double normMax = 0.0;   // largest entry magnitude
  int sparsity = 0;       // max nonzeros per row
  double tau = 0.0;       // sparsity * normMax * T
};

/// A = h1 + i*h2 with h1, h2 Hermitian.
struct HermitianSplit {
  ComplexMatrix h1;
  ComplexMatrix h2;
  SpectralProfile profile;

  Eigen::Index dim() const { return h1.rows(); }
  ComplexMatrix reconstruct() const { return h1 + Complex(0, 1) * h2; }
};

void require_square(const ComplexMatrix& m, const char* what);
void require_finite(const ComplexMatrix& m, const char* what);

/// Largest singular value.
double two_norm(const ComplexMatrix& m);

/// ||U^dag U - I||_2; zero for a perfect unitary.
double unitarity_defect(const ComplexMatrix& u);

double max_abs(const ComplexMatrix& m);

HermitianSplit hermitian_split(const ComplexMatrix& a, double T);

/// e^M. Normal inputs (Hermitian, anti-Hermitian or general normal) go
/// through an eigendecomposition so unitary generators stay unitary to
/// machine precision; everything else uses Pade scaling-and-squaring.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to
/// zero; anything below -tol throws with the offending eigenvalue.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, double tol = kPsdClampTol);

SpectralProfile spectral_profile(const ComplexMatrix& a, double T);

}  // namespace dilatekit
