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

#include <string>

#include "json.hpp"

#include "dicke/circuit.hpp"
#include "dicke/mps.hpp"
#include "dicke/schmidt.hpp"
#include "dicke/types.hpp"

// Round-trip-exact serialization. JSON uses the shortest representation
// that reparses to the identical double; CSV prints 17 significant digits.
// Key order is fixed, so equal inputs produce byte-identical output.
namespace dicke::io {

using json = nlohmann::ordered_json;

// {"n", "d", "amplitudes": [[re, im], ...]}
json state_to_json(const DenseState& state);
DenseState state_from_json(const json& j);

// {"n", "d", "chi", "left", "right", "sites"}; each site is a list of d
// matrices stored row-major as [re, im] pairs.
json chain_to_json(const mps::MpsChain& chain);
mps::MpsChain chain_from_json(const json& j);

// {"n", "k", "chi", "gates": [{"kind", "site", "ancilla_control",
// "qubit_control", "angle", "levels", "block"}]}. Fields a gate kind does
// not use are null.
json circuit_to_json(const circuit::CircuitDescription& circuit);
circuit::CircuitDescription circuit_from_json(const json& j);

// {"cut", "rank", "values"}
json spectrum_to_json(const schmidt::SchmidtSpectrum& spectrum);
schmidt::SchmidtSpectrum spectrum_from_json(const json& j);

// Header "index,real,imag"; one row per amplitude.
std::string state_to_csv(const DenseState& state);
DenseState state_from_csv(const std::string& text, int n, int d);

// Header "cut,index,value"; one row per singular value.
std::string spectrum_to_csv(const schmidt::SchmidtSpectrum& spectrum);

}  // namespace dicke::io
