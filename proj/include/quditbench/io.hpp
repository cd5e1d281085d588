#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quditbench/benchmark.hpp"
#include "quditbench/channels.hpp"

namespace qbench::io {

// Channel file schema:
//   {"d": int, "kraus": [ operator [ row [ [re, im], ... ] ] ]}
// The loader validates trace preservation and reports the residual in the
// error message when it exceeds tolerance.
QuantumChannel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const QuantumChannel& channel);
QuantumChannel load_channel(const std::string& path);

// Target unitary file schema: {"d": int, "unitary": [ row [ [re, im], ... ] ]}
ComplexMatrix unitary_from_json(const nlohmann::json& j);
ComplexMatrix load_unitary(const std::string& path);

// Measured-data schema, either per-state
//   {"d": int, "mode": "qudit"|"qubits", "z_fidelities": [..], "x_fidelities": [..]}
// or the summary form {"d": int, "f_avg": real}. mode defaults to qudit.
struct MeasuredData {
  int d = 0;
  TaskMode mode = TaskMode::Qudit;
  std::optional<double> f_avg;  // summary form
  std::vector<std::pair<BasisLabel, double>> per_state;

  Certificate certify() const;
};
MeasuredData measured_data_from_json(const nlohmann::json& j);
MeasuredData load_measured_data(const std::string& path);

// {"d":, "f_avg":, "thresholds": [[k, value], ..],
//  "certified_schmidt_number":, "margin":}
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const FidelityReport& report);

}  // namespace qbench::io
