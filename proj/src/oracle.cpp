#include "quditbench/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "quditbench/states.hpp"

namespace qbench {

namespace {

void check_config(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("optimizer: restarts must be >= 1");
  if (cfg.max_iters < 1) throw std::invalid_argument("optimizer: max_iters must be >= 1");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("optimizer: tolerance must be > 0");
}

void check_rank(int d, int k) {
  if (d < 2) throw std::invalid_argument("optimizer: dimension must be >= 2");
  if (k < 1 || k > d) {
    throw std::invalid_argument("optimizer: rank k must satisfy 1 <= k <= d");
  }
}

std::mt19937_64 restart_engine(const OptimizerConfig& cfg, int restart) {
  // splitmix-style spacing keeps the per-restart streams decorrelated.
  return std::mt19937_64(cfg.seed +
                         0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1));
}

ComplexVector random_gaussian_vector(Eigen::Index n, std::mt19937_64& eng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = g(eng);
    const double im = g(eng);
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     std::mt19937_64& eng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = g(eng);
      const double im = g(eng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

// Best Schmidt-rank-<=k approximation of phi (truncated SVD of the d x d
// reshaping), renormalized to a state.
RankKState truncate_to_rank_k(const ComplexVector& phi, int d, int k) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(i, j) = phi(static_cast<Eigen::Index>(i) * d + j);
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  RealVector top = svd.singularValues().head(k);
  const double norm = top.norm();
  if (norm <= 0.0) {
    throw std::runtime_error("rank-k truncation of a zero vector");
  }
  RankKState state;
  state.d = d;
  state.k = k;
  state.coefficients = top / norm;
  state.left_frame = svd.matrixU().leftCols(k);
  state.right_frame = svd.matrixV().conjugate().leftCols(k);
  return state;
}

// Maximize <psi|op|psi> over Schmidt-rank-<=k states by projected power
// iteration: a power step in the full space followed by the closest rank-k
// state (truncated SVD). op must be Hermitian PSD so the power step is an
// ascent direction. Keeps the best feasible iterate seen.
RankKResult maximize_rank_k_expectation(const ComplexMatrix& op, int d, int k,
                                        const OptimizerConfig& cfg) {
  check_rank(d, k);
  check_config(cfg);
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;

  RankKResult best;
  best.value = -1.0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 eng = restart_engine(cfg, r);
    RankKState state = truncate_to_rank_k(random_gaussian_vector(dim, eng), d, k);
    ComplexVector psi = state.to_vector();
    double value = (psi.adjoint() * op * psi)(0).real();
    if (value > best.value) {
      best.value = value;
      best.argmax = state;
    }
    double prev = value;
    for (int it = 0; it < cfg.max_iters; ++it) {
      ComplexVector direction = op * psi;
      if (direction.norm() < 1e-14) {
        // Stuck in the kernel of op; draw a fresh start.
        direction = random_gaussian_vector(dim, eng);
      }
      state = truncate_to_rank_k(direction, d, k);
      psi = state.to_vector();
      value = (psi.adjoint() * op * psi)(0).real();
      if (value > best.value) {
        best.value = value;
        best.argmax = state;
      }
      if (std::abs(value - prev) < cfg.tolerance) break;
      prev = value;
    }
  }
  return best;
}

// Closest matrix with orthonormal columns (polar factor).
ComplexMatrix polar_orthonormalize(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  return ComplexMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

}  // namespace

ComplexVector RankKState::to_vector() const {
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < k; ++i) {
    psi += coefficients(i) *
           kron_vec(left_frame.col(i), right_frame.col(i));
  }
  return psi;
}

RankKResult max_entangled_fraction_rank_k(int d, int k,
                                          const OptimizerConfig& cfg) {
  const ComplexVector phi = maximally_entangled_state(d);
  const ComplexMatrix op = phi * phi.adjoint();
  return maximize_rank_k_expectation(op, d, k, cfg);
}

double max_correlation_rank_k(int d, int k, const OptimizerConfig& cfg) {
  return maximize_rank_k_expectation(correlation_operator(d), d, k, cfg).value;
}

double max_fidelity_mp_scheme(int d, const OptimizerConfig& cfg) {
  if (d < 2) throw std::invalid_argument("optimizer: dimension must be >= 2");
  check_config(cfg);

  // The 2d inputs, each with prior weight 1/(2d).
  std::vector<ComplexVector> inputs;
  inputs.reserve(2 * static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) inputs.push_back(z_basis_state(d, j));
  for (int j = 0; j < d; ++j) inputs.push_back(x_basis_state(d, j));
  const double weight = 1.0 / (2.0 * d);

  // Rank-one POVM with n = d^2 outcomes encoded as an n x d frame B whose
  // rows are mu_i^dag with sum_i mu_i mu_i^dag = I, i.e. B^dag B = I.
  const int n_outcomes = d * d;

  double best = -1.0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 eng = restart_engine(cfg, r);
    ComplexMatrix frame =
        polar_orthonormalize(random_gaussian_matrix(n_outcomes, d, eng));
    double prev = -1.0;
    for (int it = 0; it < cfg.max_iters; ++it) {
      double objective = 0.0;
      ComplexMatrix ascent = ComplexMatrix::Zero(n_outcomes, d);
      for (int i = 0; i < n_outcomes; ++i) {
        const ComplexVector mu = frame.row(i).adjoint();
        // Exact preparation update: top eigenvector of the response matrix.
        ComplexMatrix response = ComplexMatrix::Zero(d, d);
        for (const ComplexVector& s : inputs) {
          const double p = std::norm((mu.adjoint() * s)(0));
          response += (weight * p) * (s * s.adjoint());
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(response);
        const ComplexVector prep = es.eigenvectors().col(d - 1);
        // Gain matrix for the measurement half-step at fixed preparation.
        ComplexMatrix gain = ComplexMatrix::Zero(d, d);
        for (const ComplexVector& s : inputs) {
          const double q = std::norm((s.adjoint() * prep)(0));
          gain += (weight * q) * (s * s.adjoint());
        }
        objective += (mu.adjoint() * gain * mu)(0).real();
        ascent.row(i) = (gain * mu).adjoint();
      }
      if (objective > best) best = objective;
      if (std::abs(objective - prev) < cfg.tolerance) break;
      prev = objective;
      // Damped measurement update projected back to a valid frame.
      frame = polar_orthonormalize(frame + ascent);
    }
  }
  return best;
}

}  // namespace qbench
