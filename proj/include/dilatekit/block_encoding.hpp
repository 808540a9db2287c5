#pragma once

#include <utility>
#include <vector>

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// A unitary u on systemDim * 2^ancillas dimensions whose leading
/// systemDim x systemDim block, scaled by alpha, approximates a target
/// to within declaredError. The ancilla register is the leading tensor
/// factor and block index 0 is the extraction block.
struct BlockEncoding {
  ComplexMatrix u;
  double alpha = 1.0;
  int ancillas = 0;
  double declaredError = 0.0;
  Eigen::Index systemDim = 0;
};

/// Validates dimensions and unitarity (1e-10) before returning the record.
BlockEncoding make_block_encoding(ComplexMatrix u, double alpha, int ancillas,
                                  double declaredError, Eigen::Index systemDim);

/// alpha * u[0:n, 0:n].
ComplexMatrix extract(const BlockEncoding& be);

/// || target - extract(be) ||_2. A passing contract additionally requires
/// the return value <= be.declaredError + 1e-10.
double verify(const BlockEncoding& be, const ComplexMatrix& target);

/// (alpha, ancillas, 0)-encoding of alpha * I; used for LCU padding.
BlockEncoding encode_identity(Eigen::Index systemDim, int ancillas, double alpha);

/// Wraps the 2n x 2n single-step dilation of a contraction V as an exact
/// (1, 1, 0)-block-encoding of V.
BlockEncoding encode_nagy(const ComplexMatrix& v);

/// Linear combination Sum_j y_j A_j via prepare/select/unprepare. Inputs
/// must share (alpha, ancillas, systemDim); coefficients are nonnegative
/// and get padded to a power of two with zero weights and identity
/// encodings. Output: alpha' = alpha * Sum y_j, ancillas' = ancillas +
/// log2(#coeffs), declaredError' = Sum_j y_j * declaredError_j.
BlockEncoding lcu_combine(const std::vector<double>& coeffs, const std::vector<BlockEncoding>& bes);

/// Product encoding of A*B with parameters (alpha*beta, a + b,
/// alpha*epsilon + beta*delta).
BlockEncoding product(const BlockEncoding& beA, const BlockEncoding& beB);

/// Exact (1, 0, 0)-encoding of e^{iHt} for Hermitian H; the unitary needs
/// no dilation. Quantum query costs live in the complexity module.
BlockEncoding encode_exp_iht(const ComplexMatrix& h, double t);

/// Exact (1, 1, 0)-encoding of e^{-Ht} for Hermitian PSD H, standing in
/// for the quantum (3, l+4, delta) construction.
BlockEncoding encode_exp_minus_ht(const ComplexMatrix& h, double t);

/// K-segment first-order Lie-Trotter approximation of e^{-(H1 + i H2)T}:
/// the encoding of (e^{-H1 T/K} e^{-i H2 T/K})^K. The product matrix is
/// formed explicitly and re-dilated, which leaves the extraction (and
/// hence the measured Trotter error) identical to the K-fold tensor
/// composition while keeping the carrier at 2n dimensions.
BlockEncoding trotter_pipeline(const HermitianSplit& split, double T, int K);

/// Sparse-access normalization A -> A/(s(A) * ||A||_max); returns the
/// rescaled matrix and the factor s(A)*||A||_max.
std::pair<ComplexMatrix, double> sparse_access_normalization(const ComplexMatrix& a);

}  // namespace dilatekit
