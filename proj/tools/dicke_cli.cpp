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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dicke/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact matrix-product representations, Schmidt data, and preparation "
      "circuits for qubit, spin, and qudit Dicke states"};
  app.require_subcommand(1);

  dicke::cli::RunConfig config;
  std::vector<int> kvec_values;
  std::string format_name = "json";

  auto add_instance_options = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "number of sites")->required();
    sub->add_option("--k", config.k, "excitation weight (qubit or spin)");
    sub->add_option("--two-s", config.two_s,
                    "twice the spin; selects the spin family");
    sub->add_option("--kvec", kvec_values,
                    "per-level occupation counts; selects the qudit family")
        ->delimiter(',');
    sub->add_option("--output", config.output, "write the result to a file");
    sub->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* state = app.add_subcommand(
      "state", "print the dense Dicke state amplitudes");
  add_instance_options(state);

  CLI::App* mps = app.add_subcommand(
      "mps", "print the site matrices, boundaries, and canonicity residuals");
  add_instance_options(mps);
  mps->add_flag("--strict", config.strict,
                "apply the trailing-site correction (qubit chains)");
  mps->add_flag("--ti", config.ti,
                "site-independent chain (qubit and spin instances)");

  CLI::App* schmidt = app.add_subcommand(
      "schmidt", "print the Schmidt spectrum across a cut");
  add_instance_options(schmidt);
  schmidt->add_option("--cut", config.cut, "bipartition after this site");
  schmidt->add_option("--tol", config.tol, "rank-counting threshold");

  CLI::App* circuit = app.add_subcommand(
      "circuit", "print the preparation circuit (qubit instances)");
  add_instance_options(circuit);
  circuit->add_flag("--simulate", config.simulate,
                    "run the circuit and report fidelity and norm");
  circuit->add_flag("--two-level", config.two_level,
                    "use two-level ancilla swaps instead of cyclic shifts");
  circuit->add_option("--state-output", config.state_output,
                      "write the simulated, ancilla-projected state here");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the instance and print a pass/fail report");
  add_instance_options(verify);
  verify->add_option("--tol", config.tol, "amplitude tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (state->parsed()) config.command = dicke::cli::Command::state;
  if (mps->parsed()) config.command = dicke::cli::Command::mps;
  if (schmidt->parsed()) config.command = dicke::cli::Command::schmidt;
  if (circuit->parsed()) config.command = dicke::cli::Command::circuit;
  if (verify->parsed()) config.command = dicke::cli::Command::verify;
  if (!kvec_values.empty()) config.kvec = kvec_values;
  config.format = format_name == "csv" ? dicke::cli::Format::csv
                                       : dicke::cli::Format::json;

  return dicke::cli::run(config, std::cout, std::cerr);
}
