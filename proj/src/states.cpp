#include "quditbench/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qbench {

namespace {

void check_dimension(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
}

void check_index(int d, int j, const char* what) {
  if (j < 0 || j >= d) throw std::invalid_argument(std::string(what) + ": index out of range");
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

ComplexMatrix projector(const ComplexVector& v) {
  return ComplexMatrix(v * v.adjoint());
}

ComplexVector qubit_state(BasisKind kind, int bit) {
  return kind == BasisKind::Z ? z_basis_state(2, bit) : x_basis_state(2, bit);
}

}  // namespace

ComplexVector z_basis_state(int d, int j) {
  check_dimension(d);
  check_index(d, j, "z_basis_state");
  ComplexVector v = ComplexVector::Zero(d);
  v(j) = 1.0;
  return v;
}

ComplexVector x_basis_state(int d, int k) {
  check_dimension(d);
  check_index(d, k, "x_basis_state");
  ComplexVector v(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const double phase = 2.0 * std::numbers::pi * k * j / d;
    v(j) = norm * Complex(std::cos(phase), std::sin(phase));
  }
  return v;
}

PauliPair generalized_pauli(int d) {
  check_dimension(d);
  PauliPair p;
  p.x = ComplexMatrix::Zero(d, d);
  p.z = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    p.x((j + 1) % d, j) = 1.0;
    const double phase = 2.0 * std::numbers::pi * j / d;
    p.z(j, j) = Complex(std::cos(phase), std::sin(phase));
  }
  return p;
}

ComplexVector maximally_entangled_state(int d) {
  check_dimension(d);
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    v(static_cast<Eigen::Index>(j) * d + j) = norm;
  }
  return v;
}

ComplexVector bell_state(int d, int l, int m) {
  check_index(d, l, "bell_state");
  check_index(d, m, "bell_state");
  const PauliPair p = generalized_pauli(d);
  return kron(matrix_power(p.x, l), matrix_power(p.z, m)) *
         maximally_entangled_state(d);
}

ComplexMatrix bell_projector(int d, int l, int m) {
  return projector(bell_state(d, l, m));
}

ComplexMatrix correlation_operator(int d) {
  check_dimension(d);
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix c = ComplexMatrix::Zero(dd, dd);
  for (int j = 0; j < d; ++j) {
    const ComplexMatrix pz = projector(z_basis_state(d, j));
    c += kron(pz, pz);
    const ComplexMatrix px = projector(x_basis_state(d, j));
    const ComplexMatrix px_partner = projector(x_basis_state(d, (d - j) % d));
    c += kron(px, px_partner);
  }
  return c;
}

ComplexVector product_basis_state(int n_qubits, BasisKind kind,
                                  const std::vector<int>& bits) {
  if (n_qubits < 1 || bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("product_basis_state: bit list length mismatch");
  }
  ComplexVector v = ComplexVector::Ones(1);
  for (int bit : bits) {
    check_index(2, bit, "product_basis_state");
    v = kron_vec(v, qubit_state(kind, bit));
  }
  return v;
}

ComplexMatrix product_pauli(int n_qubits, BasisKind which,
                            const std::vector<int>& mask) {
  if (n_qubits < 1 || mask.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("product_pauli: mask length mismatch");
  }
  const PauliPair qubit = generalized_pauli(2);
  const ComplexMatrix& sigma = which == BasisKind::Z ? qubit.z : qubit.x;
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (int bit : mask) {
    check_index(2, bit, "product_pauli");
    out = kron(out, bit ? sigma : ComplexMatrix::Identity(2, 2));
  }
  return out;
}

ComplexVector product_bell_state(int n_qubits, const std::vector<int>& l,
                                 const std::vector<int>& m) {
  const int d = 1 << n_qubits;
  return kron(product_pauli(n_qubits, BasisKind::X, l),
              product_pauli(n_qubits, BasisKind::Z, m)) *
         maximally_entangled_state(d);
}

ComplexMatrix product_correlation_operator(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("product_correlation_operator: need n >= 1");
  const int d = 1 << n_qubits;
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix c = ComplexMatrix::Zero(dd, dd);
  for (int j = 0; j < d; ++j) {
    const std::vector<int> bits = index_bits(n_qubits, j);
    const ComplexMatrix pz = projector(product_basis_state(n_qubits, BasisKind::Z, bits));
    c += kron(pz, pz);
    const ComplexMatrix px = projector(product_basis_state(n_qubits, BasisKind::X, bits));
    c += kron(px, px);
  }
  return c;
}

ComplexVector task_basis_state(int d, TaskMode mode, BasisKind kind,
                               int index) {
  if (mode == TaskMode::Qudit) {
    return kind == BasisKind::Z ? z_basis_state(d, index)
                                : x_basis_state(d, index);
  }
  const int n = qubit_count(d);
  check_index(d, index, "task_basis_state");
  return product_basis_state(n, kind, index_bits(n, index));
}

ComplexMatrix task_correlation_operator(int d, TaskMode mode) {
  return mode == TaskMode::Qudit ? correlation_operator(d)
                                 : product_correlation_operator(qubit_count(d));
}

std::vector<int> index_bits(int n_qubits, int index) {
  check_index(1 << n_qubits, index, "index_bits");
  std::vector<int> bits(n_qubits);
  for (int k = 0; k < n_qubits; ++k) {
    bits[k] = (index >> (n_qubits - 1 - k)) & 1;
  }
  return bits;
}

int qubit_count(int d) {
  check_dimension(d);
  int n = 0;
  int value = d;
  while (value > 1) {
    if (value % 2 != 0) {
      throw std::invalid_argument("qubits mode requires d to be a power of two");
    }
    value /= 2;
    ++n;
  }
  return n;
}

ComplexMatrix cnot_unitary() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

}  // namespace qbench
