#include "quditbench/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace qbench {

namespace {

// Matrix dimensions are Eigen::Index (ptrdiff_t); reject products that
// would wrap or exceed anything a dense allocation could serve.
Eigen::Index checked_dim_product(Eigen::Index a, Eigen::Index b) {
  constexpr Eigen::Index kMaxDim = Eigen::Index(1) << 24;
  if (a != 0 && (b > kMaxDim / a)) {
    throw std::invalid_argument("kron: dimension product overflow");
  }
  return a * b;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = checked_dim_product(a.rows(), b.rows());
  const Eigen::Index cols = checked_dim_product(a.cols(), b.cols());
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

Eigensystem hermitian_eigensystem(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  }
  if ((a - a.adjoint()).norm() > kHermitianTol) {
    throw std::invalid_argument(
        "hermitian_eigensystem: matrix not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
  }
  // Eigen reports ascending order; the contract is descending.
  Eigensystem out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

double min_eigenvalue(const ComplexMatrix& a) {
  const Eigensystem es = hermitian_eigensystem(a);
  return es.eigenvalues(es.eigenvalues.size() - 1);
}

int SchmidtDecomposition::rank(double tol) const {
  int r = 0;
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    if (coefficients(i) > tol) ++r;
  }
  return r;
}

SchmidtDecomposition schmidt_decompose(const ComplexVector& psi, int d_a,
                                       int d_b) {
  if (d_a < 1 || d_b < 1 ||
      psi.size() != static_cast<Eigen::Index>(d_a) * d_b) {
    throw std::invalid_argument("schmidt_decompose: dimension mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("schmidt_decompose: input not normalized");
  }
  ComplexMatrix m(d_a, d_b);
  for (int i = 0; i < d_a; ++i) {
    for (int j = 0; j < d_b; ++j) {
      m(i, j) = psi(static_cast<Eigen::Index>(i) * d_b + j);
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left = svd.matrixU();
  // m = U S V^dagger, so psi = sum_k s_k u_k (x) conj(v_k).
  out.right = svd.matrixV().conjugate();
  return out;
}

}  // namespace qbench
