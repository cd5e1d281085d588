#pragma once

#include <vector>

#include "quditbench/linalg.hpp"

namespace qbench {

enum class BasisKind { Z, X };

// Which pair of conjugate bases a task runs over: the qudit Z basis and its
// Fourier transform, or products of local qubit Z/X states when d = 2^n.
enum class TaskMode { Qudit, Qubits };

struct BasisLabel {
  BasisKind kind = BasisKind::Z;
  int index = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct BellLabel {
  int l = 0;
  int m = 0;
};

/// Computational basis vector e_j in C^d.
ComplexVector z_basis_state(int d, int j);

/// Fourier-conjugate basis vector with entries exp(+i 2 pi k j / d) / sqrt(d).
/// The +i sign convention is load-bearing: the conjugate choice silently
/// relabels the Bell family and breaks the Bell-diagonal identity for the
/// correlation operator.
ComplexVector x_basis_state(int d, int k);

struct PauliPair {
  ComplexMatrix x;  // cyclic shift |j+1 mod d><j|
  ComplexMatrix z;  // clock diag(exp(i 2 pi j / d))
};

/// Generalized Pauli (shift, clock) pair; X Z = exp(-i 2 pi / d) Z X.
PauliPair generalized_pauli(int d);

/// (1/sqrt(d)) sum_j |j>|j>.
ComplexVector maximally_entangled_state(int d);

/// Bell state (X^l (x) Z^m) |Phi_00>; the d^2 of them are orthonormal.
ComplexVector bell_state(int d, int l, int m);

/// Rank-one projector onto bell_state(d, l, m).
ComplexMatrix bell_projector(int d, int l, int m);

/// Total two-basis correlation operator on C^d (x) C^d:
///   sum_j (|j><j| (x) |j><j|  +  |x_j><x_j| (x) |x_{-j}><x_{-j}|)
/// where -j reads (d - j) mod d. Hermitian, with top eigenvalue 2 attained
/// on the maximally entangled state.
ComplexMatrix correlation_operator(int d);

/// Tensor product of single-qubit Z- or X-basis states. Bit lists are
/// ordered most-significant qubit first; index_bits uses the same order.
ComplexVector product_basis_state(int n_qubits, BasisKind kind,
                                  const std::vector<int>& bits);

/// Tensor product of sigma_x (or sigma_z) on mask-1 qubits, identity
/// elsewhere. Same qubit order as product_basis_state.
ComplexMatrix product_pauli(int n_qubits, BasisKind which,
                            const std::vector<int>& mask);

/// (X^l (x) Z^m) |Phi_00> built from product Paulis; the 4^n of them are
/// orthonormal.
ComplexVector product_bell_state(int n_qubits, const std::vector<int>& l,
                                 const std::vector<int>& m);

/// Product-basis analogue of correlation_operator; for local qubit X states
/// the Fourier partner of a bit string is the string itself.
ComplexMatrix product_correlation_operator(int n_qubits);

/// Basis state of the pair selected by mode. In Qubits mode the index is
/// expanded to bits most-significant first, so the Z family coincides with
/// z_basis_state while the X family differs from the qudit Fourier basis.
ComplexVector task_basis_state(int d, TaskMode mode, BasisKind kind,
                               int index);

/// correlation_operator or product_correlation_operator per mode.
ComplexMatrix task_correlation_operator(int d, TaskMode mode);

/// Bits of index, most-significant qubit first.
std::vector<int> index_bits(int n_qubits, int index);

/// n with 2^n == d; throws if d is not a power of two >= 2.
int qubit_count(int d);

/// Controlled-NOT on two qubits, control on the first (most significant)
/// tensor factor.
ComplexMatrix cnot_unitary();

}  // namespace qbench
