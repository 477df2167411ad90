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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dicke/types.hpp"

namespace dicke::cli {

enum class Command { state, mps, schmidt, circuit, verify };
enum class Format { json, csv };

// One resolved invocation. The instance family follows from which weight
// fields are set: k alone selects qubits, k with two_s selects spins, kvec
// selects qudits. Exactly one family must be selected.
struct RunConfig {
  Command command = Command::state;
  int n = 0;
  std::optional<int> k;
  std::optional<int> two_s;
  std::optional<OccupationVector> kvec;
  std::optional<int> cut;        // schmidt only
  // Overrides the default tolerance: amplitude checks in verify, the rank
  // threshold in schmidt.
  std::optional<double> tol;
  Format format = Format::json;
  std::string output;            // empty writes to `out`
  bool simulate = false;         // circuit: run the gates and report fidelity
  bool strict = false;           // mps: trailing-site corrected qubit chain
  bool ti = false;               // mps: site-independent chain
  bool two_level = false;        // circuit: swap-based ancilla shifts
  std::string state_output;      // circuit --simulate: projected final state
};

// Executes one command, writing results to `out` and diagnostics to `err`.
// Returns 0 on success, 1 when a verification fails, 2 on domain errors or
// malformed configuration. Identical configs produce identical bytes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dicke::cli
