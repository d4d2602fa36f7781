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
 * Entanglement structure of four-qubit channel states.
 *
 * Pairs are tested with the partial-transpose criterion (exact for two
 * qubits). Triads are decomposed into two GHZ-type components whose
 * three-tangle certifies maximal GHZ character. The GHZ witness
 * W = 3/4 - |phi><phi| is minimized over local rotations by steepest
 * descent.
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "entqc/execution.hpp"
#include "entqc/tensor_core.hpp"

namespace entqc {

struct PairReport {
  std::array<std::string, 2> pair;
  DensityMatrix reduced;
  std::vector<double> pt_spectrum;  // ascending, transpose taken on pair[0]
  double min_pt_eigenvalue = 0.0;
  bool entangled = false;  // min_pt_eigenvalue < -1e-10
};

PairReport pair_analysis(const StateVector& state, const std::array<std::string, 2>& pair);

struct TriadReport {
  std::array<std::string, 3> triad;
  DensityMatrix reduced;
  std::vector<double> spectrum;  // ascending

  /// Signs read off the marginal: |phi0> = |000> + l1|011> + |101> + l2|110>,
  /// |phi1> = l3|001> + l4|010> + |100> + |111>.
  std::array<Complex, 4> signs{};
  std::array<StateVector, 2> components;  // normalized phi0, phi1
  /// max |rho - (|phi0><phi0| + |phi1><phi1|)/2|
  double reconstruction_error = 0.0;
  /// <phi_k|P|phi_k> with P the projector onto the support of rho.
  std::array<double, 2> ghz_component_fidelities{};
  std::array<double, 2> three_tangles{};

  /// Eigenvectors with eigenvalue above 1e-10 and their three-tangles.
  std::vector<StateVector> support;
  std::vector<double> support_tangles;
};

TriadReport triad_analysis(const StateVector& state, const std::array<std::string, 3>& triad);

/// Coffman-Kubo-Wootters three-tangle, 4|hyperdeterminant|.
/// Throws ContractError unless the state is normalized to 1e-10.
double three_tangle(const StateVector& state);

/// Three ZYZ Euler angles (theta, phi, lambda) per qubit.
using RotationParams = std::array<double, 9>;

/// (R1 (x) R2 (x) R3)(|000> + |111>)/sqrt 2.
StateVector ghz_witness_state(const RotationParams& params);
/// Tr(W rho) = 3/4 - <phi|rho|phi>.
double witness_value(const DensityMatrix& rho, const RotationParams& params);
RotationParams witness_gradient(const DensityMatrix& rho, const RotationParams& params);

struct WitnessOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  double gradient_tol = 1e-8;
  int max_iterations = 10000;
  double armijo = 1e-4;
  /// A restart counts as converged when it ends within this of the best.
  double agreement = 1e-6;
  Execution execution = Execution::parallel;
};

struct DescentResult {
  double value = 0.0;
  RotationParams params{};
  int iterations = 0;
  bool converged = false;  // gradient norm fell below tolerance
};

/// Steepest descent with backtracking (halving) line search from `start`.
DescentResult descend_witness(const DensityMatrix& rho, const RotationParams& start,
                              const WitnessOptions& options);

struct WitnessSearchResult {
  double min_value = 0.0;
  RotationParams parameters{};
  int restarts = 0;
  double converged_fraction = 0.0;
  std::vector<double> restart_values;
};

/// Restart k starts from angles drawn from Rng::stream(seed, k).
WitnessSearchResult minimize_witness(const DensityMatrix& rho, const WitnessOptions& options = {});

}  // namespace entqc
