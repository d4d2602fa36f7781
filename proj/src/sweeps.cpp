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

#include "entqc/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entqc/random.hpp"
#include "entqc/teleport.hpp"

namespace entqc {

namespace {

struct OutcomeErrors {
  double fidelity = 0.0;
  double probability = 0.0;
};

OutcomeErrors outcome_errors(const std::vector<TeleportOutcome>& outcomes) {
  OutcomeErrors e;
  for (const auto& o : outcomes) {
    e.fidelity = std::max(e.fidelity, std::abs(1.0 - o.fidelity));
    e.probability = std::max(e.probability, std::abs(o.probability - 1.0 / 16.0));
  }
  return e;
}

}  // namespace

TeleportSweepSummary teleport_sweep(std::size_t trials, std::uint64_t seed, Execution execution) {
  std::vector<TeleportSweepSummary> per_trial(trials);
  const auto quarter = 0.25 * ComplexMatrix::identity(4);
  for_each_index(static_cast<std::ptrdiff_t>(trials), execution, [&](std::ptrdiff_t i) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    const UnknownState unknown(haar_random_state(unknown_register(), rng));
    const ChannelSpec channel("haar", haar_random_unitary(2, rng));
    const auto outcomes = teleport_all_outcomes(unknown, channel);
    const auto errors = outcome_errors(outcomes);
    auto& r = per_trial[static_cast<std::size_t>(i)];
    r.trials = 1;
    r.max_fidelity_error = errors.fidelity;
    r.max_probability_error = errors.probability;
    r.max_no_signaling_error = max_abs_diff(average_bob_state(outcomes), quarter);
  });

  TeleportSweepSummary total;
  for (const auto& r : per_trial) {
    total.trials += r.trials;
    total.max_fidelity_error = std::max(total.max_fidelity_error, r.max_fidelity_error);
    total.max_probability_error = std::max(total.max_probability_error, r.max_probability_error);
    total.max_no_signaling_error = std::max(total.max_no_signaling_error, r.max_no_signaling_error);
  }
  return total;
}

InvarianceSweepSummary invariance_sweep(const ChannelSpec& channel, std::size_t trials,
                                        std::uint64_t seed, Execution execution) {
  const Protocol protocol = standard_protocol(channel);
  const auto paired = paired_channel_states(protocol);
  const auto before = matched_inner_products(protocol.basis, paired);

  std::vector<InvarianceSweepSummary> per_trial(trials);
  for_each_index(static_cast<std::ptrdiff_t>(trials), execution, [&](std::ptrdiff_t i) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    const UnitaryOp w_l = haar_random_unitary(2, rng);
    const UnitaryOp w_r = haar_random_unitary(2, rng);
    const UnknownState unknown(haar_random_state(unknown_register(), rng));

    const InvariancePairs pairs = invariance_transform(protocol.basis, paired, w_l, w_r);
    const auto after = matched_inner_products(pairs.basis, pairs.channel_states);
    auto& r = per_trial[static_cast<std::size_t>(i)];
    r.trials = 1;
    for (std::size_t g = 0; g < before.size(); ++g) {
      r.max_inner_product_deviation = std::max(r.max_inner_product_deviation, max_abs_diff(before[g], after[g]));
    }
    const auto errors = outcome_errors(run_protocol(realize_on_channel(pairs, protocol.channel), unknown));
    r.max_fidelity_error = errors.fidelity;
    r.max_probability_error = errors.probability;
  });

  InvarianceSweepSummary total;
  for (const auto& r : per_trial) {
    total.trials += r.trials;
    total.max_inner_product_deviation = std::max(total.max_inner_product_deviation, r.max_inner_product_deviation);
    total.max_fidelity_error = std::max(total.max_fidelity_error, r.max_fidelity_error);
    total.max_probability_error = std::max(total.max_probability_error, r.max_probability_error);
  }
  return total;
}

}  // namespace entqc
