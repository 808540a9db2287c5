#include "dilatekit/block_encoding.hpp"

#include <cmath>
#include <sstream>

#include "dilatekit/nagy.hpp"

namespace dilatekit {

namespace {

Eigen::Index pow2(int e) { return Eigen::Index(1) << e; }

void require_hermitian(const ComplexMatrix& h, const char* what) {
  require_square(h, what);
  require_finite(h, what);
  if (max_abs(h - h.adjoint()) > 1e-10 * std::max(1.0, max_abs(h))) {
    throw std::invalid_argument(std::string(what) + ": input is not Hermitian");
  }
}

/// Real orthogonal N x N matrix whose first column is amplitudes
/// (Householder completion of the prepare state).
Eigen::MatrixXd prepare_matrix(const Eigen::VectorXd& amplitudes) {
  const Eigen::Index n = amplitudes.size();
  Eigen::VectorXd v = amplitudes;
  v(0) -= 1.0;
  const double vv = v.squaredNorm();
  if (vv < 1e-30) return Eigen::MatrixXd::Identity(n, n);
  return Eigen::MatrixXd::Identity(n, n) - (2.0 / vv) * (v * v.transpose());
}

}  // namespace

BlockEncoding make_block_encoding(ComplexMatrix u, double alpha, int ancillas,
                                  double declaredError, Eigen::Index systemDim) {
  if (!(alpha > 0)) throw std::invalid_argument("block encoding: alpha must be positive");
  if (ancillas < 0) throw std::invalid_argument("block encoding: ancillas must be nonnegative");
  if (declaredError < 0) throw std::invalid_argument("block encoding: declaredError must be nonnegative");
  require_square(u, "block encoding");
  require_finite(u, "block encoding");
  if (u.rows() != systemDim * pow2(ancillas)) {
    std::ostringstream os;
    os << "block encoding: unitary dimension " << u.rows() << " != systemDim * 2^ancillas = "
       << systemDim * pow2(ancillas);
    throw std::invalid_argument(os.str());
  }
  if (unitarity_defect(u) > 1e-10) {
    throw std::invalid_argument("block encoding: u is not unitary to 1e-10");
  }
  return BlockEncoding{std::move(u), alpha, ancillas, declaredError, systemDim};
}

ComplexMatrix extract(const BlockEncoding& be) {
  return be.alpha * be.u.topLeftCorner(be.systemDim, be.systemDim);
}

double verify(const BlockEncoding& be, const ComplexMatrix& target) {
  if (target.rows() != be.systemDim || target.cols() != be.systemDim) {
    throw std::invalid_argument("verify: target dimension does not match systemDim");
  }
  return two_norm(target - extract(be));
}

BlockEncoding encode_identity(Eigen::Index systemDim, int ancillas, double alpha) {
  const Eigen::Index dim = systemDim * pow2(ancillas);
  return make_block_encoding(ComplexMatrix::Identity(dim, dim), alpha, ancillas, 0.0, systemDim);
}

BlockEncoding encode_nagy(const ComplexMatrix& v) {
  DilationMatrix dil = dilate_single(v);
  return make_block_encoding(std::move(dil.u), 1.0, 1, 0.0, dil.blockDim);
}

BlockEncoding lcu_combine(const std::vector<double>& coeffs, const std::vector<BlockEncoding>& bes) {
  if (coeffs.empty() || coeffs.size() != bes.size()) {
    throw std::invalid_argument("lcu_combine: need one coefficient per encoding");
  }
  const double alpha = bes.front().alpha;
  const int a = bes.front().ancillas;
  const Eigen::Index n = bes.front().systemDim;
  double mass = 0.0;
  double declared = 0.0;
  for (std::size_t j = 0; j < bes.size(); ++j) {
    if (coeffs[j] < 0) throw std::invalid_argument("lcu_combine: coefficients must be nonnegative");
    if (bes[j].alpha != alpha || bes[j].ancillas != a || bes[j].systemDim != n) {
      throw std::invalid_argument("lcu_combine: encodings must share (alpha, ancillas, systemDim)");
    }
    mass += coeffs[j];
    declared += coeffs[j] * bes[j].declaredError;
  }
  if (!(mass > 0)) throw std::invalid_argument("lcu_combine: coefficients sum to zero");

  int selBits = 0;
  while (pow2(selBits) < static_cast<Eigen::Index>(coeffs.size())) ++selBits;
  const Eigen::Index slots = pow2(selBits);

  Eigen::VectorXd amplitudes = Eigen::VectorXd::Zero(slots);
  for (std::size_t j = 0; j < coeffs.size(); ++j) amplitudes(j) = std::sqrt(coeffs[j] / mass);
  const Eigen::MatrixXd prep = prepare_matrix(amplitudes);

  const Eigen::Index inner = n * pow2(a);
  const Eigen::Index dim = slots * inner;
  ComplexMatrix select = ComplexMatrix::Zero(dim, dim);
  const BlockEncoding pad = encode_identity(n, a, alpha);
  for (Eigen::Index s = 0; s < slots; ++s) {
    const ComplexMatrix& uj = (s < static_cast<Eigen::Index>(bes.size())) ? bes[s].u : pad.u;
    select.block(s * inner, s * inner, inner, inner) = uj;
  }

  ComplexMatrix prepBig = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < slots; ++r)
    for (Eigen::Index c = 0; c < slots; ++c)
      if (prep(r, c) != 0.0)
        prepBig.block(r * inner, c * inner, inner, inner) =
            prep(r, c) * ComplexMatrix::Identity(inner, inner);

  ComplexMatrix u = prepBig.adjoint() * select * prepBig;
  return make_block_encoding(std::move(u), alpha * mass, a + selBits, declared, n);
}

BlockEncoding product(const BlockEncoding& beA, const BlockEncoding& beB) {
  if (beA.systemDim != beB.systemDim) {
    throw std::invalid_argument("product: encodings act on different system dimensions");
  }
  const Eigen::Index n = beA.systemDim;
  const Eigen::Index da = pow2(beA.ancillas);
  const Eigen::Index db = pow2(beB.ancillas);
  const Eigen::Index dim = da * db * n;

  // Register layout of the output: [b-ancillas, a-ancillas, system].
  // wa = I_b (x) uA acts on the trailing (a, system) factors; wb applies
  // uB to the (b, system) factors across the a register in the middle.
  ComplexMatrix wa = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index kb = 0; kb < db; ++kb) {
    wa.block(kb * da * n, kb * da * n, da * n, da * n) = beA.u;
  }

  ComplexMatrix wb = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index kb = 0; kb < db; ++kb)
    for (Eigen::Index kb2 = 0; kb2 < db; ++kb2)
      for (Eigen::Index ka = 0; ka < da; ++ka)
        wb.block((kb * da + ka) * n, (kb2 * da + ka) * n, n, n) =
            beB.u.block(kb * n, kb2 * n, n, n);

  ComplexMatrix u = wa * wb;
  return make_block_encoding(std::move(u), beA.alpha * beB.alpha, beA.ancillas + beB.ancillas,
                             beA.alpha * beB.declaredError + beB.alpha * beA.declaredError, n);
}

BlockEncoding encode_exp_iht(const ComplexMatrix& h, double t) {
  require_hermitian(h, "encode_exp_iht");
  ComplexMatrix u = matrix_exp(Complex(0, 1) * t * h);
  return make_block_encoding(std::move(u), 1.0, 0, 0.0, h.rows());
}

BlockEncoding encode_exp_minus_ht(const ComplexMatrix& h, double t) {
  require_hermitian(h, "encode_exp_minus_ht");
  if (t < 0) throw std::invalid_argument("encode_exp_minus_ht: t must be nonnegative");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-12) {
    std::ostringstream os;
    os << "encode_exp_minus_ht: H must be positive semidefinite, lambda_min = "
       << es.eigenvalues().minCoeff();
    throw std::domain_error(os.str());
  }
  return encode_nagy(matrix_exp(-t * h));
}

BlockEncoding trotter_pipeline(const HermitianSplit& split, double T, int K) {
  if (K < 1) throw std::invalid_argument("trotter_pipeline: K must be >= 1");
  if (T < 0) throw std::invalid_argument("trotter_pipeline: T must be nonnegative");
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(split.h1, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-12) {
      throw std::domain_error("trotter_pipeline: H1 must be positive semidefinite");
    }
  }

  const double dt = T / K;
  const ComplexMatrix segment =
      matrix_exp(-dt * split.h1) * matrix_exp(Complex(0, -dt) * split.h2);
  const Eigen::Index n = split.dim();
  ComplexMatrix total = ComplexMatrix::Identity(n, n);
  for (int k = 0; k < K; ++k) total = segment * total;

  // Exact stand-ins make every segment a (1, *, 0)-encoding, so the
  // composite extraction is exactly this product; re-dilating it keeps
  // the carrier small for any K.
  return encode_nagy(total);
}

std::pair<ComplexMatrix, double> sparse_access_normalization(const ComplexMatrix& a) {
  const SpectralProfile p = spectral_profile(a, 0.0);
  const double factor = p.sparsity * p.normMax;
  if (!(factor > 0)) throw std::domain_error("sparse_access_normalization: zero matrix");
  return {a / factor, factor};
}

}  // namespace dilatekit
