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
 * Sixteen-outcome teleportation of an unknown two-qubit state.
 *
 * Registers: the unknown state lives on (U1, U2), Alice measures
 * (A1, A2, U1, U2), Bob holds (B1, B2). Outcomes (alpha, beta) run over
 * 1..4 each and select the Pauli product sigma_alpha (x) sigma_beta with
 * 1..4 -> I, X, Y, Z.
 */

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "entqc/channel.hpp"
#include "entqc/tensor_core.hpp"

namespace entqc {

inline constexpr std::size_t kNumOutcomes = 16;

QubitRegister unknown_register();      // (U1, U2)
QubitRegister measured_register();     // (A1, A2, U1, U2)
QubitRegister protocol_register();     // (U1, U2, A1, A2, B1, B2)

struct Outcome {
  int alpha = 1;
  int beta = 1;

  std::size_t index() const { return static_cast<std::size_t>(4 * (alpha - 1) + (beta - 1)); }
  static Outcome from_index(std::size_t index);
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// sigma_alpha (x) sigma_beta on `reg`.
UnitaryOp pauli_product(Outcome outcome, const QubitRegister& reg);

/// Coefficients c_00, c_01, c_10, c_11 of the state to teleport.
class UnknownState {
 public:
  /// Throws ContractError unless sum |c_ij|^2 = 1 within 1e-12.
  explicit UnknownState(std::array<Complex, 4> coefficients);
  explicit UnknownState(const StateVector& state);

  const std::array<Complex, 4>& coefficients() const { return coefficients_; }
  StateVector state() const;

 private:
  std::array<Complex, 4> coefficients_;
};

class MeasurementBasis {
 public:
  /// Sixteen four-qubit kets on one register, in Outcome::index order.
  explicit MeasurementBasis(std::vector<StateVector> kets);

  const StateVector& ket(Outcome outcome) const { return kets_[outcome.index()]; }
  const std::vector<StateVector>& kets() const { return kets_; }

  /// max |<mu_i|mu_j> - delta_ij|
  double gram_deviation() const;
  /// max |sum_g |mu_g><mu_g| - I|
  double completeness_deviation() const;

 private:
  std::vector<StateVector> kets_;
};

/// Bob's recovery operators, one per outcome, on (B1, B2).
class CorrectionTable {
 public:
  explicit CorrectionTable(std::vector<UnitaryOp> ops);

  static CorrectionTable paulis();

  const UnitaryOp& op(Outcome outcome) const { return ops_[outcome.index()]; }
  const std::vector<UnitaryOp>& ops() const { return ops_; }

 private:
  std::vector<UnitaryOp> ops_;
};

/// |mu_ab> = (1_A (x) U_ab)|channel>_AU with the channel's Bob qubits renamed U.
MeasurementBasis measurement_basis(const StateVector& channel_state);
MeasurementBasis measurement_basis(const ChannelSpec& channel);

/// Partial inner product <mu|phi>_AU as a map from U to B: entry (b, u)
/// is sum_a conj(mu[a,u]) phi[a,b]. Both kets must share Alice's labels.
ComplexMatrix partial_inner_transfer(const StateVector& basis_ket, const StateVector& channel_state);

/// The operator Y with state = (1_A (x) Y)|EPR>|EPR>, read off the amplitudes.
ComplexMatrix bob_side_operator(const StateVector& channel_state);

struct Protocol {
  StateVector channel;  // physical resource on (A1, A2, B1, B2)
  MeasurementBasis basis;
  CorrectionTable corrections;
};

Protocol standard_protocol(const StateVector& channel_state);
Protocol standard_protocol(const ChannelSpec& channel);

struct TeleportOutcome {
  Outcome outcome;
  double probability = 0.0;
  StateVector bob_state;        // normalized, before correction
  StateVector corrected_state;  // after Bob's correction
  double fidelity = 0.0;        // against the unknown state
};

/// Full six-qubit contraction for each of the sixteen outcomes.
std::vector<TeleportOutcome> run_protocol(const Protocol& protocol, const UnknownState& unknown);
std::vector<TeleportOutcome> teleport_all_outcomes(const UnknownState& unknown, const ChannelSpec& channel);

/// sum_g p_g |bob_g><bob_g|, Bob's state before he learns the outcome.
ComplexMatrix average_bob_state(std::span<const TeleportOutcome> outcomes);

/// Channel state paired with each outcome, (1_A (x) C_g)|channel>.
std::vector<StateVector> paired_channel_states(const Protocol& protocol);

struct InvariancePairs {
  MeasurementBasis basis;
  std::vector<StateVector> channel_states;
};

/// |mu_g> -> (w_r^T (x) w_l)|mu_g> and |phi_g> -> (w_r^T (x) w_l)|phi_g>:
/// w_r^T on Alice's qubits, w_l on U (basis) or B (channel states).
InvariancePairs invariance_transform(const MeasurementBasis& basis,
                                     std::span<const StateVector> channel_states,
                                     const UnitaryOp& w_l, const UnitaryOp& w_r);
InvariancePairs invariance_transform(const Protocol& protocol, const UnitaryOp& w_l,
                                     const UnitaryOp& w_r);

/// Partial inner product of each matched (basis ket, channel state) pair.
std::vector<ComplexMatrix> matched_inner_products(const MeasurementBasis& basis,
                                                  std::span<const StateVector> channel_states);

/// Runs transformed pairs on an unchanged physical channel. The corrections
/// are C'_g = Y'_g Y_c^dagger, so that (1 (x) C'_g)|channel> = |phi'_g>.
Protocol realize_on_channel(const InvariancePairs& pairs, const StateVector& physical_channel);

/// Separable-measurement protocol for a channel: w_l = I, w_r = D^dagger.
/// The basis becomes Pauli-dressed EPR products and the corrections
/// become sigma_ab D^dagger.
Protocol series_form(const ChannelSpec& channel);

struct BasisSeparability {
  bool split_11_22 = false;  // (A1,U1) | (A2,U2)
  bool split_12_21 = false;  // (A1,U2) | (A2,U1)
  std::size_t max_rank_11_22 = 0;
  std::size_t max_rank_12_21 = 0;
};

BasisSeparability is_separable_basis(const MeasurementBasis& basis);

/// True iff the correction acts as a product of one-qubit operators on B1, B2.
bool is_local(const UnitaryOp& correction);

struct PovmCheck {
  bool valid = false;
  double max_deviation = 0.0;
};

/// (1/G) sum_g (1 (x) U_g)|phi><phi|(1 (x) U_g^dagger) against I/16, where the
/// unitaries act on the last two qubits of `channel_state`.
PovmCheck povm_check(std::span<const UnitaryOp> unitary_set, const StateVector& channel_state);

}  // namespace entqc
