#pragma once

#include <cstdint>

#include "quditbench/linalg.hpp"

namespace qbench {

/// Random-restart settings for the numerical maximizers. Identical configs
/// (including seed) give bit-identical results; restart r draws from its own
/// stream derived from seed and r.
struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 500;
  double tolerance = 1e-10;
  std::uint64_t seed = 42;
};

/// Pure bipartite state of Schmidt rank <= k in C^d (x) C^d, stored as
/// sum_i c_i a_i (x) b_i with orthonormal frames {a_i}, {b_i}.
struct RankKState {
  int d = 0;
  int k = 0;
  RealVector coefficients;    // length k, nonnegative, squares sum to 1
  ComplexMatrix left_frame;   // d x k, orthonormal columns
  ComplexMatrix right_frame;  // d x k, orthonormal columns

  ComplexVector to_vector() const;
};

struct RankKResult {
  double value = 0.0;
  RankKState argmax;
};

/// Best found entangled fraction <Phi_00|psi><psi|Phi_00> over Schmidt-rank-k
/// pure states (pure states suffice: the objective is linear over mixtures).
/// The analytic ceiling is k/d; the maximizer is a heuristic achievability
/// witness and must never exceed it.
RankKResult max_entangled_fraction_rank_k(int d, int k,
                                          const OptimizerConfig& cfg);

/// Best found expectation of the two-basis correlation operator over
/// Schmidt-rank-k pure states. Analytic ceiling 1 + k/d.
double max_correlation_rank_k(int d, int k, const OptimizerConfig& cfg);

/// Best found two-basis average fidelity over measure-and-prepare schemes
/// (rank-one POVM of d^2 outcomes, pure repreparations), by alternating
/// exact preparation updates with projected measurement-frame updates.
/// Analytic ceiling (1 + 1/d) / 2.
double max_fidelity_mp_scheme(int d, const OptimizerConfig& cfg);

}  // namespace qbench
