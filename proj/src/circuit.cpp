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

#include "dicke/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "dicke/mps.hpp"

namespace dicke::circuit {

namespace {

void check_state(const HybridState& state) {
  if (state.n < 1 || state.k < 0) {
    throw std::invalid_argument("HybridState: malformed header");
  }
  if (state.dim() != static_cast<std::int64_t>(state.chi()) * state.qubit_dim()) {
    throw std::invalid_argument("HybridState: amplitude count mismatch");
  }
}

void check_gate(const HybridState& state, const Gate& gate) {
  if (gate.site < 1 || gate.site > state.n) {
    throw std::invalid_argument("apply_gate: site out of range");
  }
  switch (gate.kind) {
    case GateKind::ancilla_increment:
    case GateKind::ancilla_decrement:
      if (gate.qubit_control != 0 && gate.qubit_control != 1) {
        throw std::invalid_argument("apply_gate: bad qubit control");
      }
      break;
    case GateKind::ancilla_level_swap:
      if (gate.qubit_control != 0 && gate.qubit_control != 1) {
        throw std::invalid_argument("apply_gate: bad qubit control");
      }
      if (gate.level_a < 0 || gate.level_a >= state.chi() ||
          gate.level_b < 0 || gate.level_b >= state.chi() ||
          gate.level_a == gate.level_b) {
        throw std::invalid_argument("apply_gate: bad swap levels");
      }
      break;
    case GateKind::controlled_rotation:
      if (gate.ancilla_control < 0 || gate.ancilla_control >= state.chi()) {
        throw std::invalid_argument("apply_gate: bad ancilla control");
      }
      break;
  }
}

}  // namespace

double rotation_angle(int n, int k, int i, int l) {
  if (l < 0 || l > k) {
    throw std::domain_error("rotation_angle: need 0 <= l <= k");
  }
  const double g0 = mps::qubit_site_entry(n, k, i, l, 0);
  const double g1 = (l < k) ? mps::qubit_site_entry(n, k, i, l, 1) : 0.0;
  if (g0 == 0.0 && g1 == 0.0) {
    throw std::domain_error("rotation_angle: block outside the state support");
  }
  return 2.0 * std::atan2(g1, g0);
}

std::vector<Gate> build_block(int n, int k, int i, int l, ShiftStyle style) {
  if (k < 1 || k > n) throw std::domain_error("build_block: need 1 <= k <= n");
  if (l < 0 || l > k - 1) {
    throw std::domain_error("build_block: need 0 <= l <= k-1");
  }
  if (i < 1 || i > n) throw std::domain_error("build_block: need 1 <= i <= n");
  const double angle = rotation_angle(n, k, i, l);

  Gate shift_up;
  Gate shift_down;
  if (style == ShiftStyle::cyclic) {
    shift_up.kind = GateKind::ancilla_increment;
    shift_down.kind = GateKind::ancilla_decrement;
  } else {
    // The block only populates ancilla levels l and l+1; swapping them acts
    // like the cyclic shift there and is self-inverse.
    shift_up.kind = GateKind::ancilla_level_swap;
    shift_up.level_a = l;
    shift_up.level_b = l + 1;
    shift_down = shift_up;
  }
  shift_up.site = i;
  shift_up.qubit_control = 0;
  shift_up.block_i = i;
  shift_up.block_l = l;
  shift_down.site = i;
  shift_down.qubit_control = 0;
  shift_down.block_i = i;
  shift_down.block_l = l;

  Gate rot;
  rot.kind = GateKind::controlled_rotation;
  rot.site = i;
  rot.ancilla_control = l + 1;
  rot.angle = angle;
  rot.block_i = i;
  rot.block_l = l;

  return {shift_up, rot, shift_down};
}

std::vector<Gate> build_site_gates(int n, int k, int i, ShiftStyle style) {
  if (i < 1 || i > n) {
    throw std::domain_error("build_site_gates: need 1 <= i <= n");
  }
  std::vector<Gate> gates;
  if (k == 0) return gates;
  const int lmin = std::max(0, i - n + k - 1);
  const int lmax = std::min(i - 1, k - 1);
  for (int l = lmin; l <= lmax; ++l) {
    const auto block = build_block(n, k, i, l, style);
    gates.insert(gates.end(), block.begin(), block.end());
  }
  return gates;
}

CircuitDescription build_circuit(int n, int k, ShiftStyle style) {
  if (n < 1) throw std::domain_error("build_circuit: need n >= 1");
  if (k < 0 || 2 * k > n) {
    throw std::domain_error(
        "build_circuit: need 0 <= 2k <= n; prepare the complement weight "
        "n-k and flip all qubits instead");
  }
  CircuitDescription circuit;
  circuit.n = n;
  circuit.k = k;
  circuit.chi = k + 1;
  for (int i = 1; i <= n; ++i) {
    const auto site_gates = build_site_gates(n, k, i, style);
    circuit.gates.insert(circuit.gates.end(), site_gates.begin(),
                         site_gates.end());
  }
  return circuit;
}

HybridState make_initial_state(int n, int k) {
  if (n < 1 || n > 28) {
    throw std::domain_error("make_initial_state: need 1 <= n <= 28");
  }
  if (k < 0) throw std::domain_error("make_initial_state: need k >= 0");
  HybridState state;
  state.n = n;
  state.k = k;
  state.amplitudes.assign(
      static_cast<std::size_t>((k + 1) * (std::int64_t{1} << n)),
      cplx{0.0, 0.0});
  state.amplitudes[0] = 1.0;
  return state;
}

void apply_gate(HybridState& state, const Gate& gate) {
  check_state(state);
  check_gate(state, gate);
  const std::int64_t qdim = state.qubit_dim();
  const std::int64_t mask = std::int64_t{1} << (gate.site - 1);
  const int chi = state.chi();
  cplx* amp = state.amplitudes.data();

  switch (gate.kind) {
    case GateKind::ancilla_increment: {
#pragma omp parallel for schedule(static) if (qdim >= kParallelCutoff)
      for (std::int64_t b = 0; b < qdim; ++b) {
        if (((b & mask) != 0) != (gate.qubit_control == 1)) continue;
        cplx carry = amp[static_cast<std::int64_t>(chi - 1) * qdim + b];
        for (int a = chi - 1; a >= 1; --a) {
          amp[static_cast<std::int64_t>(a) * qdim + b] =
              amp[static_cast<std::int64_t>(a - 1) * qdim + b];
        }
        amp[b] = carry;
      }
      break;
    }
    case GateKind::ancilla_decrement: {
#pragma omp parallel for schedule(static) if (qdim >= kParallelCutoff)
      for (std::int64_t b = 0; b < qdim; ++b) {
        if (((b & mask) != 0) != (gate.qubit_control == 1)) continue;
        cplx carry = amp[b];
        for (int a = 0; a + 1 < chi; ++a) {
          amp[static_cast<std::int64_t>(a) * qdim + b] =
              amp[static_cast<std::int64_t>(a + 1) * qdim + b];
        }
        amp[static_cast<std::int64_t>(chi - 1) * qdim + b] = carry;
      }
      break;
    }
    case GateKind::ancilla_level_swap: {
      const std::int64_t offset_a =
          static_cast<std::int64_t>(gate.level_a) * qdim;
      const std::int64_t offset_b =
          static_cast<std::int64_t>(gate.level_b) * qdim;
#pragma omp parallel for schedule(static) if (qdim >= kParallelCutoff)
      for (std::int64_t b = 0; b < qdim; ++b) {
        if (((b & mask) != 0) != (gate.qubit_control == 1)) continue;
        std::swap(amp[offset_a + b], amp[offset_b + b]);
      }
      break;
    }
    case GateKind::controlled_rotation: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      const std::int64_t offset =
          static_cast<std::int64_t>(gate.ancilla_control) * qdim;
#pragma omp parallel for schedule(static) if (qdim >= kParallelCutoff)
      for (std::int64_t b = 0; b < qdim; ++b) {
        if ((b & mask) != 0) continue;  // each pair handled at its |0> leg
        const cplx x0 = amp[offset + b];
        const cplx x1 = amp[offset + (b | mask)];
        amp[offset + b] = c * x0 - s * x1;
        amp[offset + (b | mask)] = s * x0 + c * x1;
      }
      break;
    }
  }
}

HybridState simulate(const CircuitDescription& circuit) {
  HybridState state = make_initial_state(circuit.n, circuit.k);
  for (const Gate& gate : circuit.gates) {
    apply_gate(state, gate);
  }
  return state;
}

int depth(const CircuitDescription& circuit) {
  return static_cast<int>(circuit.gates.size());
}

DenseState project_ancilla(const HybridState& state, int value) {
  check_state(state);
  if (value < 0 || value >= state.chi()) {
    throw std::domain_error("project_ancilla: ancilla value out of range");
  }
  DenseState out(state.n, 2);
  const std::int64_t qdim = state.qubit_dim();
  const std::int64_t offset = static_cast<std::int64_t>(value) * qdim;
  for (std::int64_t b = 0; b < qdim; ++b) {
    out.amplitudes[b] = state.amplitudes[offset + b];
  }
  return out;
}

double preparation_fidelity(const HybridState& state, const DenseState& target,
                            int value) {
  check_state(state);
  if (target.d != 2 || target.n != state.n) {
    throw std::invalid_argument("preparation_fidelity: target mismatch");
  }
  if (value < 0 || value >= state.chi()) {
    throw std::domain_error("preparation_fidelity: ancilla value out of range");
  }
  const std::int64_t qdim = state.qubit_dim();
  const std::int64_t offset = static_cast<std::int64_t>(value) * qdim;
  cplx inner{0.0, 0.0};
  for (std::int64_t b = 0; b < qdim; ++b) {
    inner += std::conj(target.amplitudes[b]) * state.amplitudes[offset + b];
  }
  return std::norm(inner);
}

namespace reference {

void apply_gate(HybridState& state, const Gate& gate) {
  check_state(state);
  check_gate(state, gate);
  const std::int64_t qdim = state.qubit_dim();
  const std::int64_t mask = std::int64_t{1} << (gate.site - 1);
  const int chi = state.chi();
  const std::vector<cplx> in = state.amplitudes;
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);

  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    const std::int64_t a = idx / qdim;
    const std::int64_t b = idx % qdim;
    const int bit = (b & mask) ? 1 : 0;
    cplx value = in[idx];
    switch (gate.kind) {
      case GateKind::ancilla_increment:
        if (bit == gate.qubit_control) {
          value = in[((a + chi - 1) % chi) * qdim + b];
        }
        break;
      case GateKind::ancilla_decrement:
        if (bit == gate.qubit_control) {
          value = in[((a + 1) % chi) * qdim + b];
        }
        break;
      case GateKind::ancilla_level_swap:
        if (bit == gate.qubit_control) {
          if (a == gate.level_a) value = in[gate.level_b * qdim + b];
          if (a == gate.level_b) value = in[gate.level_a * qdim + b];
        }
        break;
      case GateKind::controlled_rotation:
        if (a == gate.ancilla_control) {
          const cplx x0 = in[a * qdim + (b & ~mask)];
          const cplx x1 = in[a * qdim + (b | mask)];
          value = (bit == 0) ? c * x0 - s * x1 : s * x0 + c * x1;
        }
        break;
    }
    state.amplitudes[idx] = value;
  }
}

HybridState simulate(const CircuitDescription& circuit) {
  HybridState state = make_initial_state(circuit.n, circuit.k);
  for (const Gate& gate : circuit.gates) {
    reference::apply_gate(state, gate);
  }
  return state;
}

}  // namespace reference

}  // namespace dicke::circuit
