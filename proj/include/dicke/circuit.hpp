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

#include "dicke/types.hpp"

namespace dicke::circuit {

enum class GateKind {
  // Cyclic ancilla shift |a> -> |a+1 mod chi>, applied when the controlling
  // qubit equals qubit_control.
  ancilla_increment,
  // Inverse shift, same control.
  ancilla_decrement,
  // Two-level ancilla swap |level_a> <-> |level_b>, same control.
  ancilla_level_swap,
  // Qubit rotation [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]] on `site`,
  // applied when the ancilla equals ancilla_control.
  controlled_rotation,
};

struct Gate {
  GateKind kind = GateKind::ancilla_increment;
  int site = 0;              // 1-based system qubit
  int ancilla_control = -1;  // controlled_rotation only
  int qubit_control = -1;    // shift and swap kinds only
  double angle = 0.0;        // controlled_rotation only
  int level_a = -1;          // ancilla_level_swap only
  int level_b = -1;
  // The (site, sector) block this gate belongs to; kept for traceability.
  int block_i = 0;
  int block_l = 0;
};

// How the ancilla shift around each rotation is realized. The two styles
// produce identical final states; two_level replaces the cyclic shifts by
// the swap touching only the two ancilla levels the block acts on.
enum class ShiftStyle { cyclic, two_level };

struct CircuitDescription {
  int n = 0;
  int k = 0;
  int chi = 0;  // ancilla dimension k + 1
  std::vector<Gate> gates;
};

// State of n qubits plus one chi-level ancilla. The flat index is
// ancilla * 2^n + bits, with site 1 the least significant bit.
struct HybridState {
  int n = 0;
  int k = 0;
  std::vector<cplx> amplitudes;

  int chi() const { return k + 1; }
  std::int64_t qubit_dim() const { return std::int64_t{1} << n; }
  std::int64_t dim() const {
    return static_cast<std::int64_t>(amplitudes.size());
  }
};

// Rotation angle of block (i, l): 2 * atan2(g1, g0) with g_m the site-i
// qubit tensor entries of column l. Throws when both entries vanish.
double rotation_angle(int n, int k, int i, int l);

// The three gates of block (i, l): shift ancilla up, rotate the qubit on
// ancilla value l+1, shift back. Shifts fire only where the qubit is |0>.
std::vector<Gate> build_block(int n, int k, int i, int l,
                              ShiftStyle style = ShiftStyle::cyclic);

// All blocks of site i, ascending l over the sectors reachable at this
// site: max(0, i-n+k-1) <= l <= min(i-1, k-1).
std::vector<Gate> build_site_gates(int n, int k, int i,
                                   ShiftStyle style = ShiftStyle::cyclic);

// Full preparation circuit: sites ascending, 3k(n+1-k) gates. Starting from
// |0...0>|ancilla=0> it deterministically prepares the weight-k Dicke state
// on the qubits with the ancilla ending in |k>.
CircuitDescription build_circuit(int n, int k,
                                 ShiftStyle style = ShiftStyle::cyclic);

HybridState make_initial_state(int n, int k);

// Applies one gate in place. Parallel over the untouched index ranges; every
// output amplitude is written by exactly one iteration.
void apply_gate(HybridState& state, const Gate& gate);

// Runs the whole circuit on |0...0>|0>.
HybridState simulate(const CircuitDescription& circuit);

// Gates execute strictly in sequence, so the depth equals the gate count.
int depth(const CircuitDescription& circuit);

// The n-qubit component with the ancilla in |value> (not renormalized).
DenseState project_ancilla(const HybridState& state, int value);

// |<target| x <value| state>|^2.
double preparation_fidelity(const HybridState& state, const DenseState& target,
                            int value);

namespace reference {

// Single-threaded gate application that decodes every index. Independent
// route for testing the sliced kernels.
void apply_gate(HybridState& state, const Gate& gate);
HybridState simulate(const CircuitDescription& circuit);

}  // namespace reference

}  // namespace dicke::circuit
