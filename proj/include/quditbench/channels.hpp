#pragma once

#include <vector>

#include "quditbench/linalg.hpp"

namespace qbench {

inline constexpr double kTracePreservingTol = 1e-8;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kPartialTraceTol = 1e-8;

/// Positive unit-trace matrix. Construct through the factories; from_matrix
/// validates Hermiticity, positivity and trace.
struct DensityState {
  ComplexMatrix mat;

  static DensityState pure(const ComplexVector& psi);
  static DensityState from_matrix(ComplexMatrix m);

  Eigen::Index dim() const { return mat.rows(); }
};

/// Completely positive trace-preserving map in Kraus form. Operators are
/// d_out x d_in; trace preservation (sum_l K_l^dag K_l = I) is testable via
/// tp_residual rather than enforced on construction, so that channels read
/// from files can be validated with a reported residual.
struct QuantumChannel {
  int d_in = 0;
  int d_out = 0;
  std::vector<ComplexMatrix> kraus;

  QuantumChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus);

  /// ||sum_l K_l^dag K_l - I||_F
  double tp_residual() const;
  bool is_trace_preserving(double tol = kTracePreservingTol) const;
};

/// Channel state J = (E (x) I)(|Phi_00><Phi_00|), normalized to unit trace.
/// For a trace-preserving channel the partial trace over the first factor
/// is I/d.
struct ChoiMatrix {
  int d = 0;
  ComplexMatrix matrix;  // d^2 x d^2
};

/// sum_l K_l rho K_l^dag. Throws on dimension mismatch.
DensityState apply(const QuantumChannel& channel, const DensityState& rho);

/// Choi state of a square (d_in == d_out) channel.
ChoiMatrix choi(const QuantumChannel& channel);

/// Kraus composition: (after . before)(rho) = after(before(rho)).
QuantumChannel compose(const QuantumChannel& after,
                       const QuantumChannel& before);

/// Tensor product channel acting on the combined system.
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

QuantumChannel identity_channel(int d);
QuantumChannel unitary_channel(const ComplexMatrix& u);

/// Measure the Z basis and reprepare the outcome: Kraus set {|j><j|}.
/// Stores classical Z information faithfully and breaks all entanglement.
QuantumChannel eb_measure_prepare(int d);

/// Pinching channel mixing the d cyclic shifts of the rank-k projector onto
/// the first k basis states: (1/k) sum_l K_l rho K_l^dag with
/// K_l = X^l (sum_{m<k} |m><m|) X^-l. Its Choi state has Schmidt number
/// exactly k, and it attains the fidelity threshold (1 + k/d)/2.
QuantumChannel saturating_channel(int d, int k);

/// (1-p) rho + p I/d, realized by the d^2 Weyl operators X^a Z^b with the
/// standard weights.
QuantumChannel depolarizing(int d, double p);

/// (1-p) rho + p sum_j |j><j| rho |j><j|.
QuantumChannel dephasing(int d, double p);

/// Trace out the first (respectively second) factor of a d^2 x d^2 matrix.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, int d);
ComplexMatrix partial_trace_second(const ComplexMatrix& m, int d);

}  // namespace qbench
