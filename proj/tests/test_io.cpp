#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "quditbench/benchmark.hpp"
#include "quditbench/channels.hpp"
#include "quditbench/io.hpp"
#include "quditbench/states.hpp"

using namespace qbench;
using nlohmann::json;

namespace {

// Runs f, requiring it to throw with a message containing needle.
template <typename F>
void check_throws_containing(F&& f, const std::string& needle) {
  try {
    f();
    FAIL_CHECK("expected an exception mentioning \"" << needle << "\"");
  } catch (const std::exception& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  "message was: " << e.what());
  }
}

json cnot_unitary_json() {
  const ComplexMatrix u = cnot_unitary();
  json rows = json::array();
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      row.push_back({u(r, c).real(), u(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return json{{"d", 4}, {"unitary", std::move(rows)}};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path(name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("channels survive a json round trip bit for bit") {
  const QuantumChannel original = depolarizing(3, 0.3);
  const json j = io::channel_to_json(original);
  CHECK(j.at("d").get<int>() == 3);
  CHECK(j.at("kraus").size() == original.kraus.size());

  // In-memory round trip, and a second pass through text serialization:
  // shortest-round-trip formatting must recover every double exactly.
  for (const json& parsed : {j, json::parse(j.dump())}) {
    const QuantumChannel restored = io::channel_from_json(parsed);
    REQUIRE(restored.kraus.size() == original.kraus.size());
    for (std::size_t i = 0; i < original.kraus.size(); ++i) {
      CHECK((restored.kraus[i] - original.kraus[i]).norm() == 0.0);
    }
  }
}

TEST_CASE("channel parsing rejects malformed inputs") {
  const json good = io::channel_to_json(dephasing(2, 0.25));

  json missing_d = good;
  missing_d.erase("d");
  check_throws_containing([&] { (void)io::channel_from_json(missing_d); },
                          "\"d\"");

  json tiny_d = good;
  tiny_d["d"] = 1;
  check_throws_containing([&] { (void)io::channel_from_json(tiny_d); },
                          "at least 2");

  json missing_kraus = good;
  missing_kraus.erase("kraus");
  check_throws_containing(
      [&] { (void)io::channel_from_json(missing_kraus); }, "kraus");

  json empty_kraus = good;
  empty_kraus["kraus"] = json::array();
  check_throws_containing([&] { (void)io::channel_from_json(empty_kraus); },
                          "kraus");

  json short_rows = good;
  short_rows["kraus"][0].erase(1);
  check_throws_containing([&] { (void)io::channel_from_json(short_rows); },
                          "row count");

  json ragged = good;
  ragged["kraus"][0][0].erase(1);
  check_throws_containing([&] { (void)io::channel_from_json(ragged); },
                          "length");

  json bad_entry = good;
  bad_entry["kraus"][0][0][0] = "x";
  check_throws_containing([&] { (void)io::channel_from_json(bad_entry); },
                          "[re, im]");
}

TEST_CASE("non-trace-preserving channel files report the residual") {
  json half_identity = {
      {"d", 2},
      {"kraus", json::array({json::array({json::array({json::array({0.5, 0.0}),
                                                       json::array({0.0, 0.0})}),
                                          json::array({json::array({0.0, 0.0}),
                                                       json::array({0.5, 0.0})})})})}};
  check_throws_containing(
      [&] { (void)io::channel_from_json(half_identity); }, "residual");
}

TEST_CASE("unitary files parse and validate") {
  const json j = cnot_unitary_json();
  const ComplexMatrix u = io::unitary_from_json(j);
  CHECK((u - cnot_unitary()).norm() == 0.0);

  json missing = j;
  missing.erase("unitary");
  check_throws_containing([&] { (void)io::unitary_from_json(missing); },
                          "unitary");

  json wrong_shape = j;
  wrong_shape["unitary"].erase(3);
  check_throws_containing([&] { (void)io::unitary_from_json(wrong_shape); },
                          "row count");
}

TEST_CASE("file loaders name the offending path") {
  check_throws_containing(
      [] { (void)io::load_channel("does_not_exist.json"); },
      "does_not_exist.json");

  const TempFile channel_file("qbench_io_test_channel.json",
                              io::channel_to_json(depolarizing(2, 0.5)).dump());
  const QuantumChannel loaded = io::load_channel(channel_file.path);
  CHECK(loaded.d_in == 2);
  CHECK(loaded.is_trace_preserving());

  const TempFile junk("qbench_io_test_junk.json", "{not json");
  check_throws_containing([&] { (void)io::load_channel(junk.path); },
                          "qbench_io_test_junk.json");

  const TempFile unitary_file("qbench_io_test_unitary.json",
                              cnot_unitary_json().dump());
  CHECK((io::load_unitary(unitary_file.path) - cnot_unitary()).norm() == 0.0);

  const TempFile data_file("qbench_io_test_data.json",
                           json{{"d", 2}, {"f_avg", 0.9}}.dump());
  const io::MeasuredData data = io::load_measured_data(data_file.path);
  CHECK(data.d == 2);
  REQUIRE(data.f_avg.has_value());
  CHECK(*data.f_avg == 0.9);
}

TEST_CASE("measured data accepts both schema forms") {
  const io::MeasuredData summary =
      io::measured_data_from_json({{"d", 2}, {"f_avg", 0.9}});
  CHECK(summary.mode == TaskMode::Qudit);
  CHECK(summary.certify().certified_schmidt_number == 2);

  json per_state = {{"d", 4},
                    {"mode", "qubits"},
                    {"z_fidelities", {1.0, 1.0, 1.0, 1.0}},
                    {"x_fidelities", {0.25, 0.25, 0.25, 0.25}}};
  const io::MeasuredData detailed = io::measured_data_from_json(per_state);
  CHECK(detailed.mode == TaskMode::Qubits);
  REQUIRE(detailed.per_state.size() == 8);
  const Certificate cert = detailed.certify();
  CHECK(cert.measured_f == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(cert.certified_schmidt_number == 1);

  // The certificate must agree with direct per-state certification.
  const Certificate reference = certify_from_counts(4, detailed.per_state);
  CHECK(cert.certified_schmidt_number == reference.certified_schmidt_number);
  CHECK(cert.measured_f == reference.measured_f);
}

TEST_CASE("measured data rejects malformed inputs") {
  check_throws_containing(
      [] { (void)io::measured_data_from_json({{"f_avg", 0.9}}); }, "\"d\"");
  check_throws_containing(
      [] {
        (void)io::measured_data_from_json({{"d", 2}, {"mode", "qutrits"}});
      },
      "mode");
  check_throws_containing(
      [] { (void)io::measured_data_from_json({{"d", 2}}); }, "z_fidelities");
  check_throws_containing(
      [] {
        (void)io::measured_data_from_json(
            {{"d", 2}, {"z_fidelities", {1.0, 1.0}}, {"x_fidelities", {1.0}}});
      },
      "length d");
  check_throws_containing(
      [] {
        (void)io::measured_data_from_json(
            {{"d", 2},
             {"z_fidelities", {1.0, "x"}},
             {"x_fidelities", {1.0, 1.0}}});
      },
      "numbers");

  // Out-of-range fidelities surface when certifying.
  const io::MeasuredData bad = io::measured_data_from_json(
      {{"d", 2}, {"z_fidelities", {1.0, 1.5}}, {"x_fidelities", {1.0, 1.0}}});
  CHECK_THROWS_AS((void)bad.certify(), std::invalid_argument);
}

TEST_CASE("certificates round trip through json with the exact schema") {
  const Certificate cert = certify(4, 0.86);
  const json j = io::certificate_to_json(cert);

  REQUIRE(j.is_object());
  CHECK(j.size() == 5);
  CHECK(j.contains("d"));
  CHECK(j.contains("f_avg"));
  CHECK(j.contains("thresholds"));
  CHECK(j.contains("certified_schmidt_number"));
  CHECK(j.contains("margin"));
  REQUIRE(j["thresholds"].size() == 3);
  CHECK(j["thresholds"][0][0].get<int>() == 1);
  CHECK(j["thresholds"][0][1].get<double>() == 0.625);

  const Certificate back = io::certificate_from_json(j);
  CHECK(back.d == cert.d);
  CHECK(back.measured_f == cert.measured_f);
  CHECK(back.certified_schmidt_number == cert.certified_schmidt_number);
  CHECK(back.margin == cert.margin);
  REQUIRE(back.thresholds.size() == cert.thresholds.size());
  for (std::size_t i = 0; i < cert.thresholds.size(); ++i) {
    CHECK(back.thresholds[i] == cert.thresholds[i]);
  }
}

TEST_CASE("fidelity reports serialize with a per-state breakdown") {
  const FidelityReport report =
      fidelity_direct(eb_measure_prepare(2), GateTask::memory(2));
  const json j = io::report_to_json(report);
  CHECK(j.at("d").get<int>() == 2);
  CHECK(j.at("f_z").get<double>() == report.f_z);
  CHECK(j.at("f_x").get<double>() == report.f_x);
  CHECK(j.at("f_avg").get<double>() == report.f_avg);
  REQUIRE(j.at("per_state").size() == 4);
  int z_count = 0;
  for (const json& entry : j.at("per_state")) {
    const std::string basis = entry.at("basis").get<std::string>();
    CHECK((basis == "Z" || basis == "X"));
    if (basis == "Z") ++z_count;
    CHECK(entry.at("index").get<int>() >= 0);
    CHECK(entry.at("index").get<int>() < 2);
    CHECK(entry.at("fidelity").get<double>() >= 0.0);
  }
  CHECK(z_count == 2);
}
