#include "quditbench/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "quditbench/states.hpp"

namespace qbench {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability must lie in [0, 1]");
  }
}

}  // namespace

DensityState DensityState::pure(const ComplexVector& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("DensityState::pure: vector not normalized");
  }
  DensityState out;
  out.mat = psi * psi.adjoint();
  return out;
}

DensityState DensityState::from_matrix(ComplexMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("DensityState: matrix not square");
  }
  if ((m - m.adjoint()).norm() > kHermitianTol) {
    throw std::invalid_argument("DensityState: matrix not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > kNormTol) {
    throw std::invalid_argument("DensityState: trace is not 1");
  }
  if (min_eigenvalue(m) < -kPsdTol) {
    throw std::invalid_argument("DensityState: matrix not positive");
  }
  DensityState out;
  out.mat = std::move(m);
  return out;
}

QuantumChannel::QuantumChannel(int d_in_, int d_out_,
                               std::vector<ComplexMatrix> kraus_)
    : d_in(d_in_), d_out(d_out_), kraus(std::move(kraus_)) {
  if (d_in < 1 || d_out < 1) {
    throw std::invalid_argument("QuantumChannel: dimensions must be positive");
  }
  if (kraus.empty()) {
    throw std::invalid_argument("QuantumChannel: empty Kraus list");
  }
  for (const ComplexMatrix& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw std::invalid_argument("QuantumChannel: Kraus operator shape mismatch");
    }
    if (!k.allFinite()) {
      throw std::invalid_argument("QuantumChannel: non-finite Kraus entry");
    }
  }
}

double QuantumChannel::tp_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(d_in, d_in);
  for (const ComplexMatrix& k : kraus) {
    sum += k.adjoint() * k;
  }
  return (sum - ComplexMatrix::Identity(d_in, d_in)).norm();
}

bool QuantumChannel::is_trace_preserving(double tol) const {
  return tp_residual() <= tol;
}

DensityState apply(const QuantumChannel& channel, const DensityState& rho) {
  if (rho.dim() != channel.d_in) {
    throw std::invalid_argument("apply: state dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(channel.d_out, channel.d_out);
  for (const ComplexMatrix& k : channel.kraus) {
    out += k * rho.mat * k.adjoint();
  }
  DensityState result;
  result.mat = std::move(out);
  return result;
}

ChoiMatrix choi(const QuantumChannel& channel) {
  if (channel.d_in != channel.d_out) {
    throw std::invalid_argument("choi: channel must be square (d_in == d_out)");
  }
  const int d = channel.d_in;
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  // (K (x) I)|Phi_00> lays out K row-major over the pair index, so each
  // Kraus operator contributes the rank-one term vec(K) vec(K)^dag / d.
  ChoiMatrix out;
  out.d = d;
  out.matrix = ComplexMatrix::Zero(dd, dd);
  const double norm = 1.0 / static_cast<double>(d);
  for (const ComplexMatrix& k : channel.kraus) {
    Eigen::Map<const ComplexVector> v(k.data(), dd);
    out.matrix += norm * (v * v.adjoint());
  }
  return out;
}

QuantumChannel compose(const QuantumChannel& after,
                       const QuantumChannel& before) {
  if (after.d_in != before.d_out) {
    throw std::invalid_argument("compose: inner dimensions mismatch");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(after.kraus.size() * before.kraus.size());
  for (const ComplexMatrix& a : after.kraus) {
    for (const ComplexMatrix& b : before.kraus) {
      kraus.push_back(a * b);
    }
  }
  return QuantumChannel(before.d_in, after.d_out, std::move(kraus));
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus.size() * b.kraus.size());
  for (const ComplexMatrix& ka : a.kraus) {
    for (const ComplexMatrix& kb : b.kraus) {
      kraus.push_back(kron(ka, kb));
    }
  }
  return QuantumChannel(a.d_in * b.d_in, a.d_out * b.d_out, std::move(kraus));
}

QuantumChannel identity_channel(int d) {
  return QuantumChannel(d, d, {ComplexMatrix::Identity(d, d)});
}

QuantumChannel unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("unitary_channel: matrix not square");
  }
  const Eigen::Index d = u.rows();
  if ((u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() > kHermitianTol) {
    throw std::invalid_argument("unitary_channel: matrix not unitary");
  }
  return QuantumChannel(static_cast<int>(d), static_cast<int>(d), {u});
}

QuantumChannel eb_measure_prepare(int d) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d);
  for (int j = 0; j < d; ++j) {
    const ComplexVector e = z_basis_state(d, j);
    kraus.push_back(ComplexMatrix(e * e.adjoint()));
  }
  return QuantumChannel(d, d, std::move(kraus));
}

QuantumChannel saturating_channel(int d, int k) {
  if (k < 1 || k > d) {
    throw std::invalid_argument("saturating_channel: k must satisfy 1 <= k <= d");
  }
  // K_l is diagonal with weight 1/sqrt(k) on the cyclic window
  // {l, l+1, ..., l+k-1}; every basis index falls in exactly k windows.
  const double w = 1.0 / std::sqrt(static_cast<double>(k));
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d);
  for (int l = 0; l < d; ++l) {
    ComplexMatrix op = ComplexMatrix::Zero(d, d);
    for (int m = 0; m < k; ++m) {
      const int idx = (m + l) % d;
      op(idx, idx) = w;
    }
    kraus.push_back(std::move(op));
  }
  return QuantumChannel(d, d, std::move(kraus));
}

QuantumChannel depolarizing(int d, double p) {
  check_probability(p);
  const PauliPair pauli = generalized_pauli(d);
  const double uniform = p / static_cast<double>(d) / static_cast<double>(d);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(d) * d);
  ComplexMatrix xa = ComplexMatrix::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix w = xa;
    for (int b = 0; b < d; ++b) {
      const double weight = (a == 0 && b == 0) ? (1.0 - p) + uniform : uniform;
      if (weight > 0.0) {
        kraus.push_back(ComplexMatrix(std::sqrt(weight) * w));
      }
      w = w * pauli.z;
    }
    xa = pauli.x * xa;
  }
  return QuantumChannel(d, d, std::move(kraus));
}

QuantumChannel dephasing(int d, double p) {
  check_probability(p);
  std::vector<ComplexMatrix> kraus;
  if (p < 1.0) {
    kraus.push_back(
        ComplexMatrix(std::sqrt(1.0 - p) * ComplexMatrix::Identity(d, d)));
  }
  if (p > 0.0) {
    const double w = std::sqrt(p);
    for (int j = 0; j < d; ++j) {
      const ComplexVector e = z_basis_state(d, j);
      kraus.push_back(ComplexMatrix(w * (e * e.adjoint())));
    }
  }
  return QuantumChannel(d, d, std::move(kraus));
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, int d) {
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  if (m.rows() != dd || m.cols() != dd) {
    throw std::invalid_argument("partial_trace_first: shape mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        out(b, c) += m(static_cast<Eigen::Index>(a) * d + b,
                       static_cast<Eigen::Index>(a) * d + c);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, int d) {
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  if (m.rows() != dd || m.cols() != dd) {
    throw std::invalid_argument("partial_trace_second: shape mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        out(a, b) += m(static_cast<Eigen::Index>(a) * d + c,
                       static_cast<Eigen::Index>(b) * d + c);
      }
    }
  }
  return out;
}

}  // namespace qbench
