// Copyright 2026 The dicke-mps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dicke/io.hpp"
#include "dicke/runner.hpp"

using namespace dicke;
using cli::Command;
using cli::Format;
using cli::RunConfig;

namespace {

struct Outcome {
  int exit_code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("state command emits the dense state") {
  RunConfig config;
  config.command = Command::state;
  config.n = 4;
  config.k = 2;
  const Outcome outcome = invoke(config);
  REQUIRE(outcome.exit_code == 0);
  const DenseState state =
      io::state_from_json(io::json::parse(outcome.out));
  CHECK(max_abs_diff(state.amplitudes, dicke_state(4, 2).amplitudes) == 0.0);
}

TEST_CASE("state command supports csv") {
  RunConfig config;
  config.command = Command::state;
  config.n = 3;
  config.k = 1;
  config.format = Format::csv;
  const Outcome outcome = invoke(config);
  REQUIRE(outcome.exit_code == 0);
  const DenseState state = io::state_from_csv(outcome.out, 3, 2);
  CHECK(max_abs_diff(state.amplitudes, dicke_state(3, 1).amplitudes) == 0.0);
}

TEST_CASE("invalid instances exit with code 2 and a diagnostic") {
  RunConfig config;
  config.command = Command::state;
  config.n = 3;
  config.k = 9;
  const Outcome outcome = invoke(config);
  CHECK(outcome.exit_code == 2);
  CHECK(outcome.out.empty());
  CHECK(outcome.err.find("error:") == 0);

  RunConfig no_family;
  no_family.command = Command::state;
  no_family.n = 3;
  CHECK(invoke(no_family).exit_code == 2);

  RunConfig both;
  both.command = Command::state;
  both.n = 3;
  both.k = 1;
  both.kvec = OccupationVector{2, 1};
  CHECK(invoke(both).exit_code == 2);
}

TEST_CASE("mps command reports residuals next to the chain") {
  RunConfig config;
  config.command = Command::mps;
  config.n = 5;
  config.k = 2;
  config.strict = true;
  const Outcome outcome = invoke(config);
  REQUIRE(outcome.exit_code == 0);
  const io::json j = io::json::parse(outcome.out);
  REQUIRE(j.contains("residuals"));
  REQUIRE(j.at("residuals").size() == 5);
  for (double r : j.at("residuals").get<std::vector<double>>()) {
    CHECK(r <= 1e-12);
  }
  const mps::MpsChain chain = io::chain_from_json(j);
  CHECK(chain.chi == 3);

  // Spin and qudit chains work through the same command.
  RunConfig spin;
  spin.command = Command::mps;
  spin.n = 3;
  spin.k = 2;
  spin.two_s = 2;
  CHECK(invoke(spin).exit_code == 0);
  RunConfig qudit;
  qudit.command = Command::mps;
  qudit.n = 4;
  qudit.kvec = OccupationVector{1, 1, 2};
  CHECK(invoke(qudit).exit_code == 0);

  // Incompatible flags are rejected.
  RunConfig bad = qudit;
  bad.strict = true;
  CHECK(invoke(bad).exit_code == 2);
  RunConfig bad_ti = qudit;
  bad_ti.ti = true;
  CHECK(invoke(bad_ti).exit_code == 2);
}

TEST_CASE("schmidt command requires a cut and honors csv") {
  RunConfig config;
  config.command = Command::schmidt;
  config.n = 4;
  config.kvec = OccupationVector{2, 1, 1};
  CHECK(invoke(config).exit_code == 2);

  config.cut = 2;
  const Outcome json_outcome = invoke(config);
  REQUIRE(json_outcome.exit_code == 0);
  CHECK(io::json::parse(json_outcome.out).at("rank") == 4);

  config.format = Format::csv;
  const Outcome csv_outcome = invoke(config);
  REQUIRE(csv_outcome.exit_code == 0);
  CHECK(csv_outcome.out.rfind("cut,index,value\n", 0) == 0);
}

TEST_CASE("circuit command simulates on request") {
  RunConfig config;
  config.command = Command::circuit;
  config.n = 4;
  config.k = 2;
  config.simulate = true;
  const Outcome outcome = invoke(config);
  REQUIRE(outcome.exit_code == 0);
  const io::json j = io::json::parse(outcome.out);
  CHECK(j.at("gates").size() == 18);
  CHECK(j.at("simulation").at("fidelity").get<double>() >= 1.0 - 1e-12);
  CHECK(j.at("simulation").at("ancilla") == 2);

  // Spin and qudit instances have no circuit.
  RunConfig spin = config;
  spin.two_s = 2;
  CHECK(invoke(spin).exit_code == 2);
}

TEST_CASE("verify command reports per-check lines") {
  RunConfig config;
  config.command = Command::verify;
  config.n = 4;
  config.k = 2;
  const Outcome outcome = invoke(config);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.out.find("[PASS] contraction_matches_state") !=
        std::string::npos);
  CHECK(outcome.out.find("[FAIL]") == std::string::npos);
  CHECK(outcome.out.find("0 failed") != std::string::npos);
}

TEST_CASE("identical configurations produce identical bytes") {
  RunConfig config;
  config.command = Command::circuit;
  config.n = 6;
  config.k = 3;
  config.simulate = true;
  const Outcome first = invoke(config);
  const Outcome second = invoke(config);
  CHECK(first.out == second.out);
  CHECK(first.exit_code == 0);
}

TEST_CASE("output lands in the requested file") {
  const std::string path = "cli_test_output.json";
  RunConfig config;
  config.command = Command::state;
  config.n = 3;
  config.k = 1;
  config.output = path;
  const Outcome outcome = invoke(config);
  REQUIRE(outcome.exit_code == 0);
  CHECK(outcome.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  const DenseState state =
      io::state_from_json(io::json::parse(content.str()));
  CHECK(max_abs_diff(state.amplitudes, dicke_state(3, 1).amplitudes) == 0.0);
  file.close();
  std::remove(path.c_str());
}

TEST_CASE("flags outside their command are rejected") {
  RunConfig config;
  config.command = Command::state;
  config.n = 3;
  config.k = 1;
  config.simulate = true;
  CHECK(invoke(config).exit_code == 2);
  config.simulate = false;
  config.cut = 1;
  CHECK(invoke(config).exit_code == 2);
}
