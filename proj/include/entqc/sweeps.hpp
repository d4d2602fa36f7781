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
 * Seeded property sweeps over random states, channels and invariance
 * dressings. Trial i draws everything from Rng::stream(seed, i), so the
 * serial and parallel kernels see the same samples and fold their
 * per-trial results in index order.
 */

#include <cstddef>
#include <cstdint>

#include "entqc/channel.hpp"
#include "entqc/execution.hpp"

namespace entqc {

struct TeleportSweepSummary {
  std::size_t trials = 0;
  double max_fidelity_error = 0.0;     // max |1 - F| over trials and outcomes
  double max_probability_error = 0.0;  // max |p - 1/16|
  double max_no_signaling_error = 0.0; // max |avg Bob state - I/4|
};

/// Haar-random unknown state through a Haar-random channel dressing, per trial.
TeleportSweepSummary teleport_sweep(std::size_t trials, std::uint64_t seed,
                                    Execution execution = Execution::parallel);

struct InvarianceSweepSummary {
  std::size_t trials = 0;
  double max_inner_product_deviation = 0.0;  // matched pairs, before vs after
  double max_fidelity_error = 0.0;           // transformed protocol, end to end
  double max_probability_error = 0.0;
};

/// Haar-random (w_l, w_r) and unknown state per trial on a fixed channel.
InvarianceSweepSummary invariance_sweep(const ChannelSpec& channel, std::size_t trials,
                                        std::uint64_t seed,
                                        Execution execution = Execution::parallel);

}  // namespace entqc
