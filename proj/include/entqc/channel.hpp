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

#pragma once

/**
 * @file
 * Four-qubit teleportation channels on (A1, A2, B1, B2).
 *
 * A channel is (1_A (x) D)|EPR>_{A1B1}|EPR>_{A2B2}. Only the two-qubit
 * dressing D acting on Bob's side is stored, since the protocol depends on
 * nothing else.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entqc/tensor_core.hpp"

namespace entqc {

/// Default qubit names of a channel, in serialized order.
inline const std::array<std::string, 4> kChannelLabels{"A1", "A2", "B1", "B2"};

QubitRegister alice_register();  // (A1, A2)
QubitRegister bob_register();    // (B1, B2)
QubitRegister channel_register();

struct ChannelSpec {
  std::string name;
  UnitaryOp dressing;  // acts on (B1, B2)

  /// Relabels `dressing` onto Bob's qubits; it must be a two-qubit unitary.
  ChannelSpec(std::string name, const UnitaryOp& dressing);
};

/// One orthonormal pair {|v0>, |v1>} for a single qubit.
using LocalBasis = std::array<std::array<Complex, 2>, 2>;

struct GhzSpec {
  std::array<double, 2> amplitudes{};
  std::array<LocalBasis, 4> local_bases{};

  /// Computational bases on every qubit.
  static GhzSpec computational(double lambda0, double lambda1);
  /// Throws ContractError unless the amplitudes and bases are valid to 1e-12.
  void validate() const;
};

StateVector epr_pair_channel();
StateVector dressed_channel(const ChannelSpec& spec);

/// Dressing that maps the product basis onto Bell states and turns the EPR
/// channel into the inseparable example channel.
UnitaryOp bell_transform_matrix();

StateVector generalized_ghz(const GhzSpec& spec);

struct ChannelValidity {
  bool valid = false;
  double max_deviation = 0.0;  // worst entry of either marginal minus I/4
};

/// Checks that both two-qubit marginals are I/4 within 1e-10.
ChannelValidity is_valid_channel(const StateVector& state);

/// Built-in names: "epr", "bell-transformed", "ghz".
const std::vector<std::string>& builtin_channel_names();

/// A resolved channel: the state always, the spec when one exists ("ghz" has none).
struct NamedChannel {
  std::string name;
  std::optional<ChannelSpec> spec;
  StateVector state;
};

/// Resolves a built-in name; throws LabelError for unknown names.
NamedChannel builtin_channel(const std::string& name);

/// Parses {"name": ..., "dressing": [[re, im] x16]} (flat or 4 rows of 4), or
/// the factored form {"u": ..., "v": ...} which stores V U^T.
ChannelSpec channel_spec_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ChannelSpec& spec);

/// [[re, im], ...] row-major matrix, flat or nested by rows.
ComplexMatrix matrix_from_json(const nlohmann::json& doc, std::size_t dim);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

}  // namespace entqc
