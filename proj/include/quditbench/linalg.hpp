#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qbench {

using Complex = std::complex<double>;

// Dense row-major complex matrix, the substrate for states, operators and
// Kraus maps. Everything at the target scale fits comfortably in dense
// double precision (dimensions never exceed d^2 <= 256 for d <= 16).
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances. All quantities handled by the library are O(1), so these
// leave several digits of headroom.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kEigReconstructTol = 1e-8;
inline constexpr double kSchmidtRankTol = 1e-7;

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of two column vectors.
ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

struct Eigensystem {
  RealVector eigenvalues;      // sorted descending, exactly real
  ComplexMatrix eigenvectors;  // column i pairs with eigenvalues[i]
};

/// Spectral decomposition of a Hermitian matrix. Throws
/// std::invalid_argument if the input is not square or deviates from
/// Hermiticity by more than kHermitianTol in Frobenius norm.
Eigensystem hermitian_eigensystem(const ComplexMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& a);

struct SchmidtDecomposition {
  RealVector coefficients;  // singular values, descending; squares sum to 1
  ComplexMatrix left;       // d_a x r, orthonormal columns
  ComplexMatrix right;      // d_b x r, orthonormal columns

  /// Number of coefficients above tol.
  int rank(double tol = kSchmidtRankTol) const;
};

/// Schmidt decomposition of a normalized bipartite vector of length
/// d_a * d_b (first-factor index major): psi = sum_k c_k left_k (x) right_k.
/// Throws std::invalid_argument on dimension mismatch or if psi is not
/// normalized within kNormTol.
SchmidtDecomposition schmidt_decompose(const ComplexVector& psi, int d_a,
                                       int d_b);

}  // namespace qbench
