#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quditbench/channels.hpp"
#include "quditbench/states.hpp"

namespace qbench {

inline constexpr double kUnitaryTol = 1e-9;

/// Transformation task: inputs run over the two conjugate bases of the
/// selected mode, targets are U applied to the inputs (identity when U is
/// absent). Qubits mode requires d = 2^n and uses product bases.
struct GateTask {
  int d = 2;
  std::optional<ComplexMatrix> target_unitary;
  TaskMode mode = TaskMode::Qudit;

  static GateTask memory(int d, TaskMode mode = TaskMode::Qudit);
  static GateTask gate(ComplexMatrix u, TaskMode mode = TaskMode::Qudit);
};

/// Average fidelities over the two conjugate bases, with the per-input
/// breakdown. f_avg is exactly (f_z + f_x) / 2.
struct FidelityReport {
  int d = 0;
  double f_z = 0.0;
  double f_x = 0.0;
  double f_avg = 0.0;
  std::vector<std::pair<BasisLabel, double>> per_state;
};

/// Certified Schmidt-number lower bound. Clearing threshold k (strictly)
/// certifies Schmidt number >= k + 1; equality with a threshold certifies
/// nothing. The certificate is a lower bound only: a fidelity below
/// threshold k never rules out higher Schmidt numbers.
struct Certificate {
  int d = 0;
  double measured_f = 0.0;
  std::vector<std::pair<int, double>> thresholds;  // (k, F^(k)), k = 1..d-1
  int certified_schmidt_number = 1;
  double margin = 0.0;  // measured_f - cleared threshold; 0 if none cleared
};

/// Average fidelity from direct channel application to each of the 2d
/// basis states (fixed summation order, deterministic).
FidelityReport fidelity_direct(const QuantumChannel& channel,
                               const GateTask& task);

/// Same average through the channel state: half the expectation of the
/// correlation operator on the Choi state of U^dag . E. Agrees with
/// fidelity_direct to 1e-10.
double fidelity_via_choi(const QuantumChannel& channel, const GateTask& task);

/// Fidelity threshold (1 + k/d) / 2 for channels of Schmidt number <= k.
double schmidt_threshold(int d, int k);

/// Certificate for a measured average fidelity.
Certificate certify(int d, double measured_f);

/// Averages per-basis-state fidelities (exactly d Z and d X entries) and
/// certifies the result.
Certificate certify_from_counts(
    int d, const std::vector<std::pair<BasisLabel, double>>& per_state);

/// Reference limits for the companion figures of merit: the uniform average
/// fidelity limit (1+k)/(1+d) and the process fidelity limit k/d.
/// Informational: exposed as formulas, verified here only numerically at
/// small d.
struct InformationalLimits {
  double uniform_limit = 0.0;
  double process_limit = 0.0;
};
InformationalLimits informational_limits(int d, int k);

/// Entangled fraction <Phi_00| J |Phi_00> of the (target-conjugated) Choi
/// state; the standard process fidelity of the task.
double process_fidelity(const QuantumChannel& channel, const GateTask& task);

/// Lower bound on the process fidelity implied by the two-basis average:
/// F_proc >= 2 F_avg - 1. May be vacuous (negative) for poor channels.
double process_fidelity_lower_bound(const FidelityReport& report);

}  // namespace qbench
