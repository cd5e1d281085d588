#include "quditbench/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qbench::io {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Complex entry_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::runtime_error("matrix entry must be a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

ComplexMatrix matrix_from_json(const json& rows, int size_rows, int size_cols) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(size_rows)) {
    throw std::runtime_error("matrix has wrong row count");
  }
  ComplexMatrix m(size_rows, size_cols);
  for (int r = 0; r < size_rows; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(size_cols)) {
      throw std::runtime_error("matrix row has wrong length");
    }
    for (int c = 0; c < size_cols; ++c) {
      m(r, c) = entry_from_json(row[c]);
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int dimension_from_json(const json& j) {
  if (!j.contains("d") || !j["d"].is_number_integer()) {
    throw std::runtime_error("missing integer field \"d\"");
  }
  const int d = j["d"].get<int>();
  if (d < 2) throw std::runtime_error("\"d\" must be at least 2");
  return d;
}

}  // namespace

QuantumChannel channel_from_json(const json& j) {
  const int d = dimension_from_json(j);
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw std::runtime_error("missing nonempty array field \"kraus\"");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(j["kraus"].size());
  for (const json& op : j["kraus"]) {
    kraus.push_back(matrix_from_json(op, d, d));
  }
  QuantumChannel channel(d, d, std::move(kraus));
  if (!channel.is_trace_preserving()) {
    std::ostringstream msg;
    msg << "channel is not trace preserving: residual "
        << channel.tp_residual() << " exceeds " << kTracePreservingTol;
    throw std::runtime_error(msg.str());
  }
  return channel;
}

json channel_to_json(const QuantumChannel& channel) {
  json ops = json::array();
  for (const ComplexMatrix& k : channel.kraus) {
    ops.push_back(matrix_to_json(k));
  }
  return json{{"d", channel.d_in}, {"kraus", std::move(ops)}};
}

QuantumChannel load_channel(const std::string& path) {
  try {
    return channel_from_json(parse_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error("channel file " + path + ": " + e.what());
  }
}

ComplexMatrix unitary_from_json(const json& j) {
  const int d = dimension_from_json(j);
  if (!j.contains("unitary")) {
    throw std::runtime_error("missing field \"unitary\"");
  }
  return matrix_from_json(j["unitary"], d, d);
}

ComplexMatrix load_unitary(const std::string& path) {
  try {
    return unitary_from_json(parse_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error("unitary file " + path + ": " + e.what());
  }
}

Certificate MeasuredData::certify() const {
  if (f_avg) {
    return qbench::certify(d, *f_avg);
  }
  return certify_from_counts(d, per_state);
}

MeasuredData measured_data_from_json(const json& j) {
  MeasuredData data;
  data.d = dimension_from_json(j);
  if (j.contains("mode")) {
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "qudit") {
      data.mode = TaskMode::Qudit;
    } else if (mode == "qubits") {
      data.mode = TaskMode::Qubits;
    } else {
      throw std::runtime_error("\"mode\" must be \"qudit\" or \"qubits\"");
    }
  }
  if (j.contains("f_avg")) {
    if (!j["f_avg"].is_number()) {
      throw std::runtime_error("\"f_avg\" must be a number");
    }
    data.f_avg = j["f_avg"].get<double>();
    return data;
  }
  if (!j.contains("z_fidelities") || !j.contains("x_fidelities")) {
    throw std::runtime_error(
        "expected either \"f_avg\" or both \"z_fidelities\" and \"x_fidelities\"");
  }
  for (BasisKind kind : {BasisKind::Z, BasisKind::X}) {
    const json& arr =
        kind == BasisKind::Z ? j["z_fidelities"] : j["x_fidelities"];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(data.d)) {
      throw std::runtime_error("per-basis fidelity arrays must have length d");
    }
    for (int i = 0; i < data.d; ++i) {
      if (!arr[i].is_number()) {
        throw std::runtime_error("fidelity entries must be numbers");
      }
      data.per_state.push_back({BasisLabel{kind, i}, arr[i].get<double>()});
    }
  }
  return data;
}

MeasuredData load_measured_data(const std::string& path) {
  try {
    return measured_data_from_json(parse_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error("data file " + path + ": " + e.what());
  }
}

json certificate_to_json(const Certificate& cert) {
  json thresholds = json::array();
  for (const auto& [k, value] : cert.thresholds) {
    thresholds.push_back({k, value});
  }
  return json{{"d", cert.d},
              {"f_avg", cert.measured_f},
              {"thresholds", std::move(thresholds)},
              {"certified_schmidt_number", cert.certified_schmidt_number},
              {"margin", cert.margin}};
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.d = dimension_from_json(j);
  cert.measured_f = j.at("f_avg").get<double>();
  for (const json& row : j.at("thresholds")) {
    cert.thresholds.push_back({row.at(0).get<int>(), row.at(1).get<double>()});
  }
  cert.certified_schmidt_number = j.at("certified_schmidt_number").get<int>();
  cert.margin = j.at("margin").get<double>();
  return cert;
}

json report_to_json(const FidelityReport& report) {
  json per_state = json::array();
  for (const auto& [label, f] : report.per_state) {
    per_state.push_back({{"basis", label.kind == BasisKind::Z ? "Z" : "X"},
                         {"index", label.index},
                         {"fidelity", f}});
  }
  return json{{"d", report.d},
              {"f_z", report.f_z},
              {"f_x", report.f_x},
              {"f_avg", report.f_avg},
              {"per_state", std::move(per_state)}};
}

}  // namespace qbench::io
