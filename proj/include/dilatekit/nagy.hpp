#pragma once

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// Unitary dilation of a contraction together with its block layout.
struct DilationMatrix {
  ComplexMatrix u;         // the dilated unitary
  Eigen::Index blockDim;   // dimension of the original space
  int copies;              // number of blocks: 2 for single-step, N+1 for a chain
};

/// 2n x 2n dilation  [ V, D_{V^dag} ; D_V, -V^dag ]  of a contraction V.
/// The top-left block of the result is a verbatim copy of V.
DilationMatrix dilate_single(const ComplexMatrix& v);

/// (N+1)-block power-chain dilation. The compression identity
/// top-left-block(U^k) = V^k holds for all k <= N; beyond N the shift
/// register wraps around and the identity breaks down.
DilationMatrix dilate_chain(const ComplexMatrix& v, int steps);

/// Top-left blockDim x blockDim block of u^k. Powers are formed by
/// repeated multiplication to preserve the exact block structure.
ComplexMatrix compress(const DilationMatrix& dil, int k);

}  // namespace dilatekit
