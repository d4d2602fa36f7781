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

#include "entqc/teleport.hpp"

#include <algorithm>
#include <cmath>

namespace entqc {

namespace {

std::array<std::string, 2> slots_pair(const QubitRegister& reg, std::size_t a, std::size_t b) {
  return {reg.label(a), reg.label(b)};
}

StateVector as_channel(const StateVector& state) {
  if (state.num_qubits() != 4) throw DimensionError("a channel state has exactly four qubits");
  return state.relabeled(channel_register());
}

}  // namespace

QubitRegister unknown_register() { return QubitRegister{"U1", "U2"}; }
QubitRegister measured_register() { return QubitRegister{"A1", "A2", "U1", "U2"}; }
QubitRegister protocol_register() { return unknown_register() + channel_register(); }

Outcome Outcome::from_index(std::size_t index) {
  if (index >= kNumOutcomes) throw ContractError("outcome index out of range");
  return {static_cast<int>(index / 4) + 1, static_cast<int>(index % 4) + 1};
}

UnitaryOp pauli_product(Outcome outcome, const QubitRegister& reg) {
  return UnitaryOp(reg, kron(pauli(outcome.alpha), pauli(outcome.beta)));
}

UnknownState::UnknownState(std::array<Complex, 4> coefficients) : coefficients_(coefficients) {
  double sq = 0.0;
  for (const auto& c : coefficients_) sq += std::norm(c);
  if (std::abs(sq - 1.0) > 1e-12) throw ContractError("unknown state is not normalized");
}

UnknownState::UnknownState(const StateVector& state)
    : UnknownState([&] {
        if (state.num_qubits() != 2) throw DimensionError("unknown state has two qubits");
        return std::array<Complex, 4>{state[0], state[1], state[2], state[3]};
      }()) {}

StateVector UnknownState::state() const {
  return StateVector(unknown_register(), Amplitudes(coefficients_.begin(), coefficients_.end()));
}

MeasurementBasis::MeasurementBasis(std::vector<StateVector> kets) : kets_(std::move(kets)) {
  if (kets_.size() != kNumOutcomes) throw DimensionError("a joint measurement has sixteen kets");
  for (const auto& k : kets_) {
    if (!(k.reg() == kets_.front().reg()) || k.num_qubits() != 4) {
      throw LabelError("measurement kets must share one four-qubit register");
    }
  }
}

double MeasurementBasis::gram_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < kets_.size(); ++i) {
    for (std::size_t j = 0; j < kets_.size(); ++j) {
      const Complex g = inner(kets_[i], kets_[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double MeasurementBasis::completeness_deviation() const {
  ComplexMatrix sum(16, 16);
  for (const auto& k : kets_) sum += ComplexMatrix::outer(k.amplitudes(), k.amplitudes());
  return max_abs_diff(sum, ComplexMatrix::identity(16));
}

CorrectionTable::CorrectionTable(std::vector<UnitaryOp> ops) : ops_(std::move(ops)) {
  if (ops_.size() != kNumOutcomes) throw DimensionError("a correction table has sixteen entries");
  for (const auto& op : ops_) {
    if (op.num_qubits() != 2) throw DimensionError("corrections act on two qubits");
  }
}

CorrectionTable CorrectionTable::paulis() {
  std::vector<UnitaryOp> ops;
  for (std::size_t g = 0; g < kNumOutcomes; ++g) ops.push_back(pauli_product(Outcome::from_index(g), bob_register()));
  return CorrectionTable(std::move(ops));
}

MeasurementBasis measurement_basis(const StateVector& channel_state) {
  const StateVector on_au = as_channel(channel_state).relabeled(measured_register());
  const auto u = unknown_register();
  std::vector<StateVector> kets;
  kets.reserve(kNumOutcomes);
  for (std::size_t g = 0; g < kNumOutcomes; ++g) {
    kets.push_back(apply(pauli_product(Outcome::from_index(g), u), on_au));
  }
  return MeasurementBasis(std::move(kets));
}

MeasurementBasis measurement_basis(const ChannelSpec& channel) {
  return measurement_basis(dressed_channel(channel));
}

ComplexMatrix partial_inner_transfer(const StateVector& basis_ket, const StateVector& channel_state) {
  if (basis_ket.num_qubits() != 4 || channel_state.num_qubits() != 4) {
    throw DimensionError("partial inner product needs two four-qubit kets");
  }
  const auto& kl = basis_ket.reg().labels();
  const auto& cl = channel_state.reg().labels();
  if (kl[0] != cl[0] || kl[1] != cl[1]) {
    throw LabelError("basis ket and channel state must share Alice's qubits");
  }
  ComplexMatrix m(4, 4);
  for (std::size_t b = 0; b < 4; ++b) {
    for (std::size_t u = 0; u < 4; ++u) {
      Complex acc = 0.0;
      for (std::size_t a = 0; a < 4; ++a) acc += std::conj(basis_ket[a * 4 + u]) * channel_state[a * 4 + b];
      m(b, u) = acc;
    }
  }
  return m;
}

ComplexMatrix bob_side_operator(const StateVector& channel_state) {
  if (channel_state.num_qubits() != 4) throw DimensionError("a channel state has exactly four qubits");
  ComplexMatrix y(4, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) y(b, a) = 2.0 * channel_state[a * 4 + b];
  }
  return y;
}

Protocol standard_protocol(const StateVector& channel_state) {
  return Protocol{as_channel(channel_state), measurement_basis(channel_state), CorrectionTable::paulis()};
}

Protocol standard_protocol(const ChannelSpec& channel) { return standard_protocol(dressed_channel(channel)); }

std::vector<TeleportOutcome> run_protocol(const Protocol& protocol, const UnknownState& unknown) {
  const StateVector full = tensor(unknown.state(), protocol.channel);
  const auto bob = bob_register();
  std::vector<TeleportOutcome> outcomes;
  outcomes.reserve(kNumOutcomes);
  for (std::size_t g = 0; g < kNumOutcomes; ++g) {
    const Outcome outcome = Outcome::from_index(g);
    const StateVector& mu = protocol.basis.ket(outcome);
    // full index = u*16 + a*4 + b; mu index = a*4 + u.
    Amplitudes conditional(4);
    for (std::size_t b = 0; b < 4; ++b) {
      Complex acc = 0.0;
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t u = 0; u < 4; ++u) acc += std::conj(mu[a * 4 + u]) * full[u * 16 + a * 4 + b];
      }
      conditional[b] = acc;
    }
    double p = 0.0;
    for (const auto& c : conditional) p += std::norm(c);
    StateVector bob_state = StateVector::normalized(bob, std::move(conditional));
    StateVector corrected = apply(protocol.corrections.op(outcome).matrix(), bob.labels(), bob_state);
    const double f = fidelity_pure(corrected, unknown.state());
    outcomes.push_back(TeleportOutcome{outcome, p, std::move(bob_state), std::move(corrected), f});
  }
  return outcomes;
}

std::vector<TeleportOutcome> teleport_all_outcomes(const UnknownState& unknown, const ChannelSpec& channel) {
  return run_protocol(standard_protocol(channel), unknown);
}

ComplexMatrix average_bob_state(std::span<const TeleportOutcome> outcomes) {
  ComplexMatrix avg(4, 4);
  for (const auto& o : outcomes) {
    avg += o.probability * ComplexMatrix::outer(o.bob_state.amplitudes(), o.bob_state.amplitudes());
  }
  return avg;
}

std::vector<StateVector> paired_channel_states(const Protocol& protocol) {
  const auto& labels = protocol.channel.reg().labels();
  const std::array<std::string, 2> bob{labels[2], labels[3]};
  std::vector<StateVector> states;
  states.reserve(kNumOutcomes);
  for (const auto& c : protocol.corrections.ops()) states.push_back(apply(c.matrix(), bob, protocol.channel));
  return states;
}

InvariancePairs invariance_transform(const MeasurementBasis& basis,
                                     std::span<const StateVector> channel_states,
                                     const UnitaryOp& w_l, const UnitaryOp& w_r) {
  if (w_l.num_qubits() != 2 || w_r.num_qubits() != 2) throw DimensionError("w_l and w_r act on two qubits");
  if (channel_states.size() != kNumOutcomes) throw DimensionError("need one channel state per outcome");
  const ComplexMatrix left = w_l.matrix();
  const ComplexMatrix right_t = w_r.matrix().transpose();
  const auto transform = [&](const StateVector& s) {
    const auto& reg = s.reg();
    const StateVector alice_side = apply(right_t, slots_pair(reg, 0, 1), s);
    return apply(left, slots_pair(reg, 2, 3), alice_side);
  };
  std::vector<StateVector> kets;
  std::vector<StateVector> states;
  for (const auto& k : basis.kets()) kets.push_back(transform(k));
  for (const auto& s : channel_states) states.push_back(transform(s));
  return InvariancePairs{MeasurementBasis(std::move(kets)), std::move(states)};
}

InvariancePairs invariance_transform(const Protocol& protocol, const UnitaryOp& w_l, const UnitaryOp& w_r) {
  const auto states = paired_channel_states(protocol);
  return invariance_transform(protocol.basis, states, w_l, w_r);
}

std::vector<ComplexMatrix> matched_inner_products(const MeasurementBasis& basis,
                                                  std::span<const StateVector> channel_states) {
  if (channel_states.size() != kNumOutcomes) throw DimensionError("need one channel state per outcome");
  std::vector<ComplexMatrix> out;
  out.reserve(kNumOutcomes);
  for (std::size_t g = 0; g < kNumOutcomes; ++g) {
    out.push_back(partial_inner_transfer(basis.kets()[g], channel_states[g]));
  }
  return out;
}

Protocol realize_on_channel(const InvariancePairs& pairs, const StateVector& physical_channel) {
  const StateVector channel = as_channel(physical_channel);
  const ComplexMatrix yc = bob_side_operator(channel);
  if (!yc.is_unitary(1e-10)) throw ContractError("physical channel is not maximally entangled across A|B");
  const ComplexMatrix yc_dag = yc.adjoint();
  std::vector<UnitaryOp> ops;
  ops.reserve(kNumOutcomes);
  for (const auto& s : pairs.channel_states) {
    ops.emplace_back(bob_register(), bob_side_operator(s) * yc_dag);
  }
  return Protocol{channel, pairs.basis, CorrectionTable(std::move(ops))};
}

Protocol series_form(const ChannelSpec& channel) {
  const Protocol standard = standard_protocol(channel);
  const auto w_l = UnitaryOp::identity(bob_register());
  const auto w_r = channel.dressing.adjoint();
  return realize_on_channel(invariance_transform(standard, w_l, w_r), standard.channel);
}

BasisSeparability is_separable_basis(const MeasurementBasis& basis) {
  BasisSeparability out;
  for (const auto& k : basis.kets()) {
    const auto& reg = k.reg();
    out.max_rank_11_22 = std::max(out.max_rank_11_22, schmidt_rank(k, slots_pair(reg, 0, 2)));
    out.max_rank_12_21 = std::max(out.max_rank_12_21, schmidt_rank(k, slots_pair(reg, 0, 3)));
  }
  out.split_11_22 = out.max_rank_11_22 == 1;
  out.split_12_21 = out.max_rank_12_21 == 1;
  return out;
}

bool is_local(const UnitaryOp& correction) { return operator_schmidt_rank(correction.matrix()) == 1; }

PovmCheck povm_check(std::span<const UnitaryOp> unitary_set, const StateVector& channel_state) {
  if (unitary_set.empty()) throw ContractError("POVM check needs at least one unitary");
  if (channel_state.num_qubits() != 4) throw DimensionError("POVM check runs on a four-qubit state");
  const auto& reg = channel_state.reg();
  const auto targets = slots_pair(reg, 2, 3);
  ComplexMatrix avg(16, 16);
  for (const auto& u : unitary_set) {
    const StateVector v = apply(u.matrix(), targets, channel_state);
    avg += ComplexMatrix::outer(v.amplitudes(), v.amplitudes());
  }
  avg *= 1.0 / static_cast<double>(unitary_set.size());
  const double dev = max_abs_diff(avg, (1.0 / 16.0) * ComplexMatrix::identity(16));
  return {dev <= 1e-10, dev};
}

}  // namespace entqc
