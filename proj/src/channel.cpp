// Copyright 2026 The entqc Authors
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

#include "entqc/channel.hpp"

#include <algorithm>
#include <cmath>

namespace entqc {

QubitRegister alice_register() { return QubitRegister{kChannelLabels[0], kChannelLabels[1]}; }
QubitRegister bob_register() { return QubitRegister{kChannelLabels[2], kChannelLabels[3]}; }
QubitRegister channel_register() {
  return QubitRegister(std::vector<std::string>(kChannelLabels.begin(), kChannelLabels.end()));
}

ChannelSpec::ChannelSpec(std::string name_, const UnitaryOp& dressing_)
    : name(std::move(name_)), dressing([&] {
        if (dressing_.num_qubits() != 2) throw DimensionError("channel dressing must be a two-qubit unitary");
        return dressing_.relabeled(bob_register());
      }()) {}

GhzSpec GhzSpec::computational(double lambda0, double lambda1) {
  GhzSpec spec;
  spec.amplitudes = {lambda0, lambda1};
  for (auto& b : spec.local_bases) b = LocalBasis{{{1.0, 0.0}, {0.0, 1.0}}};
  return spec;
}

void GhzSpec::validate() const {
  if (amplitudes[0] < 0.0 || amplitudes[1] < 0.0) throw ContractError("GHZ amplitudes must be non-negative");
  if (std::abs(amplitudes[0] * amplitudes[0] + amplitudes[1] * amplitudes[1] - 1.0) > 1e-12) {
    throw ContractError("GHZ amplitudes must satisfy lambda0^2 + lambda1^2 = 1");
  }
  for (const auto& b : local_bases) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Complex overlap = std::conj(b[i][0]) * b[j][0] + std::conj(b[i][1]) * b[j][1];
        if (std::abs(overlap - (i == j ? 1.0 : 0.0)) > 1e-12) {
          throw ContractError("GHZ local basis is not orthonormal");
        }
      }
    }
  }
}

StateVector epr_pair_channel() {
  Amplitudes amps(16);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) amps[(i << 3) | (j << 2) | (i << 1) | j] = 0.5;
  }
  return StateVector(channel_register(), std::move(amps));
}

StateVector dressed_channel(const ChannelSpec& spec) {
  const auto bob = bob_register();
  return apply(spec.dressing.matrix(), bob.labels(), epr_pair_channel());
}

UnitaryOp bell_transform_matrix() {
  const double h = std::sqrt(0.5);
  // Columns: |00>,|01>,|10>,|11> -> (|00>-|11>), (|01>-|10>), (|01>+|10>), (|00>+|11>), over sqrt 2.
  return UnitaryOp(bob_register(), ComplexMatrix{{h, 0.0, 0.0, h},
                                                 {0.0, h, h, 0.0},
                                                 {0.0, -h, h, 0.0},
                                                 {-h, 0.0, 0.0, h}});
}

StateVector generalized_ghz(const GhzSpec& spec) {
  spec.validate();
  Amplitudes amps(16);
  for (int term = 0; term < 2; ++term) {
    for (std::size_t idx = 0; idx < 16; ++idx) {
      Complex a = spec.amplitudes[term];
      for (std::size_t q = 0; q < 4; ++q) a *= spec.local_bases[q][term][(idx >> (3 - q)) & 1U];
      amps[idx] += a;
    }
  }
  return StateVector(channel_register(), std::move(amps));
}

ChannelValidity is_valid_channel(const StateVector& state) {
  if (state.num_qubits() != 4) throw DimensionError("a channel state has exactly four qubits");
  const auto& labels = state.reg().labels();
  const std::array<std::string, 2> a{labels[0], labels[1]};
  const std::array<std::string, 2> b{labels[2], labels[3]};
  const auto quarter = 0.25 * ComplexMatrix::identity(4);
  const double dev = std::max(max_abs_diff(reduced_density(state, a).matrix(), quarter),
                              max_abs_diff(reduced_density(state, b).matrix(), quarter));
  return {dev <= 1e-10, dev};
}

const std::vector<std::string>& builtin_channel_names() {
  static const std::vector<std::string> names{"epr", "bell-transformed", "ghz"};
  return names;
}

NamedChannel builtin_channel(const std::string& name) {
  if (name == "epr") {
    ChannelSpec spec("epr", UnitaryOp::identity(bob_register()));
    return {name, spec, dressed_channel(spec)};
  }
  if (name == "bell-transformed") {
    ChannelSpec spec("bell-transformed", bell_transform_matrix());
    return {name, spec, dressed_channel(spec)};
  }
  if (name == "ghz") {
    const double h = std::sqrt(0.5);
    return {name, std::nullopt, generalized_ghz(GhzSpec::computational(h, h))};
  }
  throw LabelError("unknown channel name " + name);
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc, std::size_t dim) {
  if (!doc.is_array()) throw DimensionError("matrix must be a JSON array");
  std::vector<nlohmann::json> flat;
  if (dim > 1 && doc.size() == dim) {
    for (const auto& row : doc) {
      if (!row.is_array() || row.size() != dim) throw DimensionError("ragged matrix rows");
      for (const auto& e : row) flat.push_back(e);
    }
  } else {
    for (const auto& e : doc) flat.push_back(e);
  }
  if (flat.size() != dim * dim) {
    throw DimensionError("matrix needs " + std::to_string(dim * dim) + " entries");
  }
  std::vector<Complex> entries;
  entries.reserve(flat.size());
  for (const auto& e : flat) {
    if (e.is_number()) {
      entries.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ContractError("matrix entries must be [re, im] pairs");
    }
  }
  return ComplexMatrix(dim, dim, std::move(entries));
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : m.data()) out.push_back({v.real(), v.imag()});
  return out;
}

ChannelSpec channel_spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ContractError("channel document must be a JSON object");
  const std::string name = doc.value("name", std::string("custom"));
  if (doc.contains("dressing")) {
    return ChannelSpec(name, UnitaryOp(bob_register(), matrix_from_json(doc.at("dressing"), 4)));
  }
  if (doc.contains("u") && doc.contains("v")) {
    const UnitaryOp u(alice_register(), matrix_from_json(doc.at("u"), 4));
    const UnitaryOp v(bob_register(), matrix_from_json(doc.at("v"), 4));
    return ChannelSpec(name, UnitaryOp(bob_register(), v.matrix() * u.matrix().transpose()));
  }
  throw ContractError("channel document needs \"dressing\" or both \"u\" and \"v\"");
}

nlohmann::json to_json(const ChannelSpec& spec) {
  return {{"name", spec.name}, {"dressing", matrix_to_json(spec.dressing.matrix())}};
}

}  // namespace entqc
