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
 * Report builders: the full reproduction suite, single-channel analysis,
 * and witness searches. Every check carries the tolerance it is judged
 * against; those tolerances are fixed here.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "entqc/channel.hpp"
#include "entqc/entanglement.hpp"
#include "entqc/execution.hpp"
#include "entqc/report.hpp"

namespace entqc {

struct ReproOptions {
  std::uint64_t seed = 1;
  int restarts = 64;
  double gradient_tol = 1e-8;
  /// Empty means every section.
  std::vector<std::string> sections;
  Execution execution = Execution::parallel;
};

/// Section names in run order.
const std::vector<std::string>& reproduction_section_names();

/// Throws LabelError for an unknown name.
Section run_reproduction_section(const std::string& name, const ReproOptions& options);
ReportDocument run_reproduction(const ReproOptions& options);

/// Marginals, pair table, triad table and witness search for one channel.
ReportDocument analyze_channel(const NamedChannel& channel, const WitnessOptions& witness);

/// {min_value, params[9], restarts, converged_fraction}
nlohmann::json witness_result_json(const WitnessSearchResult& result);

/// Names of the four triads and six pairs of a channel, in report order.
const std::vector<std::array<std::string, 3>>& channel_triads();
const std::vector<std::array<std::string, 2>>& channel_pairs();

}  // namespace entqc
