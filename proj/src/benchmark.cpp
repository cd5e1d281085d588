#include "quditbench/benchmark.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qbench {

namespace {

void check_task(const QuantumChannel& channel, const GateTask& task) {
  if (task.d < 2) throw std::invalid_argument("task dimension must be >= 2");
  if (channel.d_in != task.d || channel.d_out != task.d) {
    throw std::invalid_argument("channel dimension does not match task");
  }
  if (task.mode == TaskMode::Qubits) {
    qubit_count(task.d);  // throws unless d is a power of two
  }
  if (task.target_unitary) {
    const ComplexMatrix& u = *task.target_unitary;
    if (u.rows() != task.d || u.cols() != task.d) {
      throw std::invalid_argument("target unitary dimension mismatch");
    }
    if ((u.adjoint() * u - ComplexMatrix::Identity(task.d, task.d)).norm() >
        kUnitaryTol) {
      throw std::invalid_argument("target matrix is not unitary");
    }
  }
}

void check_threshold_args(int d, int k) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  if (k < 1 || k > d) {
    throw std::invalid_argument("Schmidt rank k must satisfy 1 <= k <= d");
  }
}

}  // namespace

GateTask GateTask::memory(int d, TaskMode mode) {
  GateTask t;
  t.d = d;
  t.mode = mode;
  return t;
}

GateTask GateTask::gate(ComplexMatrix u, TaskMode mode) {
  GateTask t;
  t.d = static_cast<int>(u.rows());
  t.target_unitary = std::move(u);
  t.mode = mode;
  return t;
}

FidelityReport fidelity_direct(const QuantumChannel& channel,
                               const GateTask& task) {
  check_task(channel, task);
  const int d = task.d;

  FidelityReport report;
  report.d = d;
  report.per_state.reserve(2 * static_cast<std::size_t>(d));

  for (BasisKind kind : {BasisKind::Z, BasisKind::X}) {
    double sum = 0.0;
    for (int j = 0; j < d; ++j) {
      const ComplexVector in = task_basis_state(d, task.mode, kind, j);
      const ComplexVector target =
          task.target_unitary ? ComplexVector(*task.target_unitary * in) : in;
      const DensityState out = apply(channel, DensityState::pure(in));
      const double f = (target.adjoint() * out.mat * target)(0).real();
      report.per_state.push_back({BasisLabel{kind, j}, f});
      sum += f;
    }
    (kind == BasisKind::Z ? report.f_z : report.f_x) = sum / d;
  }
  report.f_avg = 0.5 * (report.f_z + report.f_x);
  return report;
}

double fidelity_via_choi(const QuantumChannel& channel, const GateTask& task) {
  check_task(channel, task);
  // Rotating the outputs back by U^dag reduces a gate task to the memory
  // task, keeping one canonical correlation operator per dimension.
  const ChoiMatrix j =
      task.target_unitary
          ? choi(compose(unitary_channel(dagger(*task.target_unitary)),
                         channel))
          : choi(channel);
  const ComplexMatrix c = task_correlation_operator(task.d, task.mode);
  const Complex trace_cj = c.cwiseProduct(j.matrix.transpose()).sum();
  return 0.5 * trace_cj.real();
}

double schmidt_threshold(int d, int k) {
  check_threshold_args(d, k);
  return 0.5 * (1.0 + static_cast<double>(k) / static_cast<double>(d));
}

Certificate certify(int d, double measured_f) {
  if (d < 2) throw std::invalid_argument("certify: dimension must be >= 2");
  if (!(measured_f >= 0.0 && measured_f <= 1.0)) {
    throw std::invalid_argument("certify: fidelity must lie in [0, 1]");
  }
  Certificate cert;
  cert.d = d;
  cert.measured_f = measured_f;
  for (int k = 1; k < d; ++k) {
    const double limit = schmidt_threshold(d, k);
    cert.thresholds.push_back({k, limit});
    // Strictly larger clears the threshold; equality certifies nothing.
    if (measured_f > limit) {
      cert.certified_schmidt_number = k + 1;
      cert.margin = measured_f - limit;
    }
  }
  return cert;
}

Certificate certify_from_counts(
    int d, const std::vector<std::pair<BasisLabel, double>>& per_state) {
  if (d < 2) throw std::invalid_argument("certify_from_counts: dimension must be >= 2");
  if (per_state.size() != 2 * static_cast<std::size_t>(d)) {
    throw std::invalid_argument(
        "certify_from_counts: expected exactly d Z and d X entries");
  }
  std::vector<bool> seen_z(d, false);
  std::vector<bool> seen_x(d, false);
  double sum_z = 0.0;
  double sum_x = 0.0;
  for (const auto& [label, f] : per_state) {
    if (label.index < 0 || label.index >= d) {
      throw std::invalid_argument("certify_from_counts: label index out of range");
    }
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument("certify_from_counts: fidelity outside [0, 1]");
    }
    std::vector<bool>& seen = label.kind == BasisKind::Z ? seen_z : seen_x;
    if (seen[label.index]) {
      throw std::invalid_argument("certify_from_counts: duplicate basis label");
    }
    seen[label.index] = true;
    (label.kind == BasisKind::Z ? sum_z : sum_x) += f;
  }
  for (int j = 0; j < d; ++j) {
    if (!seen_z[j] || !seen_x[j]) {
      throw std::invalid_argument("certify_from_counts: missing basis label");
    }
  }
  const double f_avg = 0.5 * (sum_z / d + sum_x / d);
  return certify(d, f_avg);
}

InformationalLimits informational_limits(int d, int k) {
  check_threshold_args(d, k);
  InformationalLimits out;
  out.uniform_limit = (1.0 + k) / (1.0 + d);
  out.process_limit = static_cast<double>(k) / static_cast<double>(d);
  return out;
}

double process_fidelity(const QuantumChannel& channel, const GateTask& task) {
  check_task(channel, task);
  const ChoiMatrix j =
      task.target_unitary
          ? choi(compose(unitary_channel(dagger(*task.target_unitary)),
                         channel))
          : choi(channel);
  const ComplexVector phi = maximally_entangled_state(task.d);
  return (phi.adjoint() * j.matrix * phi)(0).real();
}

double process_fidelity_lower_bound(const FidelityReport& report) {
  return 2.0 * report.f_avg - 1.0;
}

}  // namespace qbench
