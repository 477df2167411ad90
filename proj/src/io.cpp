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

#include "dicke/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dicke::io {

namespace {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument("expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index t = 0; t < v.size(); ++t) {
    out.push_back(complex_to_json(v(t)));
  }
  return out;
}

Eigen::VectorXcd vector_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw std::invalid_argument("boundary vector length mismatch");
  }
  Eigen::VectorXcd v(dim);
  for (int t = 0; t < dim; ++t) v(t) = complex_from_json(j[t]);
  return v;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out.push_back(complex_to_json(m(r, c)));
    }
  }
  return out;
}

Eigen::MatrixXcd matrix_from_json(const json& j, int chi) {
  if (!j.is_array() ||
      static_cast<int>(j.size()) != chi * chi) {
    throw std::invalid_argument("site matrix entry count mismatch");
  }
  Eigen::MatrixXcd m(chi, chi);
  int t = 0;
  for (int r = 0; r < chi; ++r) {
    for (int c = 0; c < chi; ++c) {
      m(r, c) = complex_from_json(j[t++]);
    }
  }
  return m;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field ") + key);
  }
  return j.at(key).get<int>();
}

const char* kind_name(circuit::GateKind kind) {
  switch (kind) {
    case circuit::GateKind::ancilla_increment:
      return "inc";
    case circuit::GateKind::ancilla_decrement:
      return "dec";
    case circuit::GateKind::ancilla_level_swap:
      return "swap";
    case circuit::GateKind::controlled_rotation:
      return "rot";
  }
  throw std::invalid_argument("unknown gate kind");
}

circuit::GateKind kind_from_name(const std::string& name) {
  if (name == "inc") return circuit::GateKind::ancilla_increment;
  if (name == "dec") return circuit::GateKind::ancilla_decrement;
  if (name == "swap") return circuit::GateKind::ancilla_level_swap;
  if (name == "rot") return circuit::GateKind::controlled_rotation;
  throw std::invalid_argument("unknown gate kind " + name);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

json state_to_json(const DenseState& state) {
  json j;
  j["n"] = state.n;
  j["d"] = state.d;
  json amps = json::array();
  for (const cplx& a : state.amplitudes) amps.push_back(complex_to_json(a));
  j["amplitudes"] = std::move(amps);
  return j;
}

DenseState state_from_json(const json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  DenseState state(n, d);
  if (!j.contains("amplitudes") || !j.at("amplitudes").is_array()) {
    throw std::invalid_argument("state: missing amplitudes");
  }
  const json& amps = j.at("amplitudes");
  if (static_cast<std::int64_t>(amps.size()) != state.dim()) {
    throw std::invalid_argument("state: amplitude count must equal d^n");
  }
  for (std::size_t t = 0; t < amps.size(); ++t) {
    state.amplitudes[t] = complex_from_json(amps[t]);
  }
  return state;
}

json chain_to_json(const mps::MpsChain& chain) {
  json j;
  j["n"] = chain.n;
  j["d"] = chain.d;
  j["chi"] = chain.chi;
  j["left"] = vector_to_json(chain.left);
  j["right"] = vector_to_json(chain.right);
  json sites = json::array();
  for (const auto& site : chain.sites) {
    json mats = json::array();
    for (const auto& mat : site) mats.push_back(matrix_to_json(mat));
    sites.push_back(std::move(mats));
  }
  j["sites"] = std::move(sites);
  return j;
}

mps::MpsChain chain_from_json(const json& j) {
  mps::MpsChain chain;
  chain.n = int_field(j, "n");
  chain.d = int_field(j, "d");
  chain.chi = int_field(j, "chi");
  if (chain.n < 1 || chain.d < 2 || chain.chi < 1) {
    throw std::invalid_argument("chain: malformed header");
  }
  chain.left = vector_from_json(j.at("left"), chain.chi);
  chain.right = vector_from_json(j.at("right"), chain.chi);
  if (!j.contains("sites") || !j.at("sites").is_array() ||
      static_cast<int>(j.at("sites").size()) != chain.n) {
    throw std::invalid_argument("chain: wrong site count");
  }
  for (const json& site : j.at("sites")) {
    if (!site.is_array() || static_cast<int>(site.size()) != chain.d) {
      throw std::invalid_argument("chain: wrong matrix count at a site");
    }
    std::vector<Eigen::MatrixXcd> mats;
    for (const json& mat : site) mats.push_back(matrix_from_json(mat, chain.chi));
    chain.sites.push_back(std::move(mats));
  }
  return chain;
}

json circuit_to_json(const circuit::CircuitDescription& circuit) {
  json j;
  j["n"] = circuit.n;
  j["k"] = circuit.k;
  j["chi"] = circuit.chi;
  json gates = json::array();
  for (const circuit::Gate& gate : circuit.gates) {
    json g;
    g["kind"] = kind_name(gate.kind);
    g["site"] = gate.site;
    if (gate.kind == circuit::GateKind::controlled_rotation) {
      g["ancilla_control"] = gate.ancilla_control;
      g["qubit_control"] = nullptr;
      g["angle"] = gate.angle;
    } else {
      g["ancilla_control"] = nullptr;
      g["qubit_control"] = gate.qubit_control;
      g["angle"] = nullptr;
    }
    if (gate.kind == circuit::GateKind::ancilla_level_swap) {
      g["levels"] = json::array({gate.level_a, gate.level_b});
    } else {
      g["levels"] = nullptr;
    }
    g["block"] = json::array({gate.block_i, gate.block_l});
    gates.push_back(std::move(g));
  }
  j["gates"] = std::move(gates);
  return j;
}

circuit::CircuitDescription circuit_from_json(const json& j) {
  circuit::CircuitDescription circuit;
  circuit.n = int_field(j, "n");
  circuit.k = int_field(j, "k");
  circuit.chi = int_field(j, "chi");
  if (circuit.chi != circuit.k + 1) {
    throw std::invalid_argument("circuit: chi must equal k+1");
  }
  if (!j.contains("gates") || !j.at("gates").is_array()) {
    throw std::invalid_argument("circuit: missing gates");
  }
  for (const json& g : j.at("gates")) {
    circuit::Gate gate;
    if (!g.contains("kind") || !g.at("kind").is_string()) {
      throw std::invalid_argument("gate: missing kind");
    }
    gate.kind = kind_from_name(g.at("kind").get<std::string>());
    gate.site = int_field(g, "site");
    if (gate.kind == circuit::GateKind::controlled_rotation) {
      gate.ancilla_control = int_field(g, "ancilla_control");
      if (!g.contains("angle") || !g.at("angle").is_number()) {
        throw std::invalid_argument("gate: rotation needs an angle");
      }
      gate.angle = g.at("angle").get<double>();
    } else {
      gate.qubit_control = int_field(g, "qubit_control");
    }
    if (gate.kind == circuit::GateKind::ancilla_level_swap) {
      const json& levels = g.at("levels");
      if (!levels.is_array() || levels.size() != 2) {
        throw std::invalid_argument("gate: swap needs two levels");
      }
      gate.level_a = levels[0].get<int>();
      gate.level_b = levels[1].get<int>();
    }
    if (g.contains("block") && g.at("block").is_array() &&
        g.at("block").size() == 2) {
      gate.block_i = g.at("block")[0].get<int>();
      gate.block_l = g.at("block")[1].get<int>();
    }
    circuit.gates.push_back(gate);
  }
  return circuit;
}

json spectrum_to_json(const schmidt::SchmidtSpectrum& spectrum) {
  json j;
  j["cut"] = spectrum.cut;
  j["rank"] = spectrum.rank;
  j["values"] = spectrum.values;
  return j;
}

schmidt::SchmidtSpectrum spectrum_from_json(const json& j) {
  schmidt::SchmidtSpectrum spectrum;
  spectrum.cut = int_field(j, "cut");
  spectrum.rank = int_field(j, "rank");
  if (!j.contains("values") || !j.at("values").is_array()) {
    throw std::invalid_argument("spectrum: missing values");
  }
  for (const json& v : j.at("values")) {
    if (!v.is_number()) throw std::invalid_argument("spectrum: bad value");
    spectrum.values.push_back(v.get<double>());
  }
  return spectrum;
}

std::string state_to_csv(const DenseState& state) {
  std::string out = "index,real,imag\n";
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    const cplx& a = state.amplitudes[idx];
    out += std::to_string(idx);
    out += ',';
    out += format_double(a.real());
    out += ',';
    out += format_double(a.imag());
    out += '\n';
  }
  return out;
}

DenseState state_from_csv(const std::string& text, int n, int d) {
  DenseState state(n, d);
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line) || line != "index,real,imag") {
    throw std::invalid_argument("state csv: bad header");
  }
  std::int64_t rows = 0;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    long long idx = 0;
    double re = 0.0;
    double im = 0.0;
    if (std::sscanf(line.c_str(), "%lld,%lf,%lf", &idx, &re, &im) != 3) {
      throw std::invalid_argument("state csv: bad row: " + line);
    }
    if (idx < 0 || idx >= state.dim()) {
      throw std::invalid_argument("state csv: index out of range");
    }
    state.amplitudes[idx] = {re, im};
    ++rows;
  }
  if (rows != state.dim()) {
    throw std::invalid_argument("state csv: row count must equal d^n");
  }
  return state;
}

std::string spectrum_to_csv(const schmidt::SchmidtSpectrum& spectrum) {
  std::string out = "cut,index,value\n";
  for (std::size_t t = 0; t < spectrum.values.size(); ++t) {
    out += std::to_string(spectrum.cut);
    out += ',';
    out += std::to_string(t);
    out += ',';
    out += format_double(spectrum.values[t]);
    out += '\n';
  }
  return out;
}

}  // namespace dicke::io
