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

#include "dicke/runner.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "dicke/checks.hpp"
#include "dicke/circuit.hpp"
#include "dicke/core.hpp"
#include "dicke/io.hpp"
#include "dicke/mps.hpp"
#include "dicke/schmidt.hpp"

namespace dicke::cli {

namespace {

enum class Family { qubit, spin, qudit };

Family resolve_family(const RunConfig& config) {
  if (config.kvec.has_value()) {
    if (config.k.has_value() || config.two_s.has_value()) {
      throw std::domain_error("config: kvec excludes k and two_s");
    }
    return Family::qudit;
  }
  if (!config.k.has_value()) {
    throw std::domain_error("config: set either k or kvec");
  }
  return config.two_s.has_value() ? Family::spin : Family::qubit;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) {
    throw std::invalid_argument("config: cannot open output file " +
                                config.output);
  }
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) {
    throw std::invalid_argument("config: cannot open output file " + path);
  }
  file << text;
}

DenseState build_state(const RunConfig& config, Family family) {
  switch (family) {
    case Family::qubit:
      return dicke_state(config.n, *config.k);
    case Family::spin:
      return spin_dicke_state(config.n, *config.k, *config.two_s);
    case Family::qudit:
      return qudit_dicke_state(config.n, *config.kvec);
  }
  throw std::domain_error("config: unknown family");
}

void reject_flag(bool set, const char* flag, const char* context) {
  if (set) {
    throw std::domain_error(std::string("config: ") + flag +
                            " is only valid with " + context);
  }
}

int run_state(const RunConfig& config, std::ostream& out) {
  const DenseState state = build_state(config, resolve_family(config));
  if (config.format == Format::csv) {
    emit(config, out, io::state_to_csv(state));
  } else {
    emit(config, out, io::state_to_json(state).dump() + "\n");
  }
  return 0;
}

int run_mps(const RunConfig& config, std::ostream& out) {
  if (config.format == Format::csv) {
    throw std::domain_error("config: mps output is json only");
  }
  const Family family = resolve_family(config);
  if (config.strict && (config.ti || family != Family::qubit)) {
    throw std::domain_error("config: strict requires the plain qubit chain");
  }
  if (config.ti && family == Family::qudit) {
    throw std::domain_error("config: ti requires a qubit or spin instance");
  }
  mps::MpsChain chain;
  if (config.ti) {
    chain = mps::ti_chain(config.n, *config.k, config.two_s.value_or(1));
  } else {
    switch (family) {
      case Family::qubit:
        chain = mps::qubit_chain(config.n, *config.k, config.strict);
        break;
      case Family::spin:
        chain = mps::spin_chain(config.n, *config.k, *config.two_s);
        break;
      case Family::qudit:
        chain = mps::qudit_chain(config.n, *config.kvec);
        break;
    }
  }
  io::json j = io::chain_to_json(chain);
  j["residuals"] = mps::canonicity_residuals(chain);
  emit(config, out, j.dump() + "\n");
  return 0;
}

int run_schmidt(const RunConfig& config, std::ostream& out) {
  if (!config.cut.has_value()) {
    throw std::domain_error("config: schmidt requires a cut");
  }
  const DenseState state = build_state(config, resolve_family(config));
  const auto spectrum = schmidt::schmidt_spectrum(
      state, *config.cut, config.tol.value_or(kRankTol));
  if (config.format == Format::csv) {
    emit(config, out, io::spectrum_to_csv(spectrum));
  } else {
    emit(config, out, io::spectrum_to_json(spectrum).dump() + "\n");
  }
  return 0;
}

int run_circuit(const RunConfig& config, std::ostream& out) {
  if (resolve_family(config) != Family::qubit) {
    throw std::domain_error("config: circuits exist for qubit instances only");
  }
  if (config.format == Format::csv) {
    throw std::domain_error("config: circuit output is json only");
  }
  if (!config.state_output.empty() && !config.simulate) {
    throw std::domain_error("config: state-output requires simulate");
  }
  const auto style = config.two_level ? circuit::ShiftStyle::two_level
                                      : circuit::ShiftStyle::cyclic;
  const auto description = circuit::build_circuit(config.n, *config.k, style);
  io::json j = io::circuit_to_json(description);
  if (config.simulate) {
    const auto final_state = circuit::simulate(description);
    const DenseState target = dicke_state(config.n, *config.k);
    io::json sim;
    sim["ancilla"] = config.k.value();
    sim["fidelity"] =
        circuit::preparation_fidelity(final_state, target, *config.k);
    sim["norm"] = l2_norm(final_state.amplitudes);
    j["simulation"] = std::move(sim);
    if (!config.state_output.empty()) {
      const DenseState projected =
          circuit::project_ancilla(final_state, *config.k);
      write_file(config.state_output,
                 io::state_to_json(projected).dump() + "\n");
    }
  }
  emit(config, out, j.dump() + "\n");
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const double tol = config.tol.value_or(kAmplitudeTol);
  std::vector<checks::CheckResult> results;
  switch (resolve_family(config)) {
    case Family::qubit:
      results = checks::verify_qubit(config.n, *config.k, tol);
      break;
    case Family::spin:
      results = checks::verify_spin(config.n, *config.k, *config.two_s, tol);
      break;
    case Family::qudit:
      results = checks::verify_qudit(config.n, *config.kvec, tol);
      break;
  }
  std::string report;
  int failures = 0;
  for (const auto& r : results) {
    report += r.pass ? "[PASS] " : "[FAIL] ";
    report += r.name + ": " + r.detail + "\n";
    if (!r.pass) ++failures;
  }
  report += std::to_string(results.size()) + " checks, " +
            std::to_string(failures) + " failed\n";
  emit(config, out, report);
  return failures == 0 ? 0 : 1;
}

int run_impl(const RunConfig& config, std::ostream& out) {
  if (config.n < 1) throw std::domain_error("config: need n >= 1");
  if (config.command != Command::schmidt && config.cut.has_value()) {
    throw std::domain_error("config: cut is only valid with schmidt");
  }
  if (config.command != Command::circuit) {
    reject_flag(config.simulate, "simulate", "circuit");
    reject_flag(config.two_level, "two-level", "circuit");
    reject_flag(!config.state_output.empty(), "state-output", "circuit");
  }
  if (config.command != Command::mps) {
    reject_flag(config.strict, "strict", "mps");
    reject_flag(config.ti, "ti", "mps");
  }
  switch (config.command) {
    case Command::state:
      return run_state(config, out);
    case Command::mps:
      return run_mps(config, out);
    case Command::schmidt:
      return run_schmidt(config, out);
    case Command::circuit:
      return run_circuit(config, out);
    case Command::verify:
      return run_verify(config, out);
  }
  throw std::domain_error("config: unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(config, out);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dicke::cli
