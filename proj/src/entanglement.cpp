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

#include "entqc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entqc/random.hpp"

namespace entqc {

namespace {

using Single = std::array<Complex, 4>;  // row-major 2x2

Single euler_rotation(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex el = std::polar(1.0, lambda);
  const Complex ep = std::polar(1.0, phi);
  return {c, -el * s, ep * s, ep * el * c};
}

/// Derivative of euler_rotation with respect to angle `which` (0, 1, 2).
Single euler_rotation_derivative(double theta, double phi, double lambda, int which) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex el = std::polar(1.0, lambda);
  const Complex ep = std::polar(1.0, phi);
  const Complex i{0.0, 1.0};
  switch (which) {
    case 0: return {-0.5 * s, -el * (0.5 * c), ep * (0.5 * c), -ep * el * (0.5 * s)};
    case 1: return {0.0, 0.0, i * ep * s, i * ep * el * c};
    default: return {0.0, -i * el * s, 0.0, i * ep * el * c};
  }
}

/// (R1 (x) R2 (x) R3)(|000> + |111>)/sqrt 2 = sum_i col_i(R1) col_i(R2) col_i(R3) / sqrt 2.
Amplitudes rotated_ghz(const std::array<Single, 3>& r) {
  const double h = std::sqrt(0.5);
  Amplitudes out(8);
  for (std::size_t col = 0; col < 2; ++col) {
    for (std::size_t idx = 0; idx < 8; ++idx) {
      Complex a = h;
      for (std::size_t q = 0; q < 3; ++q) a *= r[q][2 * ((idx >> (2 - q)) & 1U) + col];
      out[idx] += a;
    }
  }
  return out;
}

std::array<Single, 3> rotations_of(const RotationParams& p) {
  return {euler_rotation(p[0], p[1], p[2]), euler_rotation(p[3], p[4], p[5]),
          euler_rotation(p[6], p[7], p[8])};
}

void require_three_qubits(const DensityMatrix& rho) {
  if (rho.reg().size() != 3) throw DimensionError("the GHZ witness acts on three qubits");
}

double expectation(const ComplexMatrix& m, std::span<const Complex> v) {
  const Amplitudes mv = m.apply(v);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * mv[i];
  return acc.real();
}

double norm2(const RotationParams& g) {
  double s = 0.0;
  for (double x : g) s += x * x;
  return s;
}

}  // namespace

// ------------------------------------------------------------------ pairs

PairReport pair_analysis(const StateVector& state, const std::array<std::string, 2>& pair) {
  if (state.num_qubits() != 4) throw DimensionError("pair analysis runs on four-qubit states");
  DensityMatrix reduced = reduced_density(state, pair);
  const std::array<std::string, 1> first{pair[0]};
  auto spectrum = hermitian_eigenvalues(partial_transpose(reduced, first));
  const double min_pt = spectrum.front();
  return PairReport{pair, std::move(reduced), std::move(spectrum), min_pt, min_pt < -1e-10};
}

// ------------------------------------------------------------------ triads

double three_tangle(const StateVector& state) {
  if (state.num_qubits() != 3) throw DimensionError("three-tangle needs a three-qubit state");
  if (!state.is_normalized(1e-10)) throw ContractError("three-tangle needs a normalized state");
  const auto a = [&](int i, int j, int k) { return state[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

TriadReport triad_analysis(const StateVector& state, const std::array<std::string, 3>& triad) {
  if (state.num_qubits() != 4) throw DimensionError("triad analysis runs on four-qubit states");
  DensityMatrix reduced = reduced_density(state, triad);
  const ComplexMatrix& rho = reduced.matrix();
  const QubitRegister& reg = reduced.reg();

  const std::array<Complex, 4> signs{8.0 * rho(3, 0), 8.0 * rho(6, 0), 8.0 * rho(1, 4), 8.0 * rho(2, 4)};
  Amplitudes phi0(8);
  Amplitudes phi1(8);
  phi0[0] = 1.0;
  phi0[3] = signs[0];
  phi0[5] = 1.0;
  phi0[6] = signs[1];
  phi1[1] = signs[2];
  phi1[2] = signs[3];
  phi1[4] = 1.0;
  phi1[7] = 1.0;
  std::array<StateVector, 2> components{StateVector::normalized(reg, std::move(phi0)),
                                        StateVector::normalized(reg, std::move(phi1))};

  ComplexMatrix rebuilt(8, 8);
  for (const auto& c : components) rebuilt += 0.5 * ComplexMatrix::outer(c.amplitudes(), c.amplitudes());
  const double reconstruction = max_abs_diff(rebuilt, rho);

  const HermitianEigen eig = hermitian_eigen(rho);
  ComplexMatrix support_projector(8, 8);
  std::vector<StateVector> support;
  std::vector<double> support_tangles;
  for (std::size_t k = 0; k < 8; ++k) {
    if (eig.values[k] <= 1e-10) continue;
    Amplitudes v(8);
    for (std::size_t r = 0; r < 8; ++r) v[r] = eig.vectors(r, k);
    support_projector += ComplexMatrix::outer(v, v);
    StateVector sv = StateVector::normalized(reg, std::move(v));
    support_tangles.push_back(three_tangle(sv));
    support.push_back(std::move(sv));
  }

  std::array<double, 2> fidelities{};
  std::array<double, 2> tangles{};
  for (std::size_t k = 0; k < 2; ++k) {
    fidelities[k] = expectation(support_projector, components[k].amplitudes());
    tangles[k] = three_tangle(components[k]);
  }

  return TriadReport{triad,          std::move(reduced), eig.values,        signs,
                     components,     reconstruction,     fidelities,        tangles,
                     std::move(support), std::move(support_tangles)};
}

// ----------------------------------------------------------------- witness

StateVector ghz_witness_state(const RotationParams& params) {
  return StateVector(numbered_register(3), rotated_ghz(rotations_of(params)));
}

double witness_value(const DensityMatrix& rho, const RotationParams& params) {
  require_three_qubits(rho);
  return 0.75 - expectation(rho.matrix(), rotated_ghz(rotations_of(params)));
}

RotationParams witness_gradient(const DensityMatrix& rho, const RotationParams& params) {
  require_three_qubits(rho);
  const auto rotations = rotations_of(params);
  const Amplitudes phi = rotated_ghz(rotations);
  const Amplitudes rho_phi = rho.matrix().apply(phi);
  RotationParams grad{};
  for (std::size_t q = 0; q < 3; ++q) {
    for (int which = 0; which < 3; ++which) {
      auto varied = rotations;
      varied[q] = euler_rotation_derivative(params[3 * q], params[3 * q + 1], params[3 * q + 2], which);
      const Amplitudes dphi = rotated_ghz(varied);
      Complex acc = 0.0;
      for (std::size_t i = 0; i < 8; ++i) acc += std::conj(dphi[i]) * rho_phi[i];
      grad[3 * q + static_cast<std::size_t>(which)] = -2.0 * acc.real();
    }
  }
  return grad;
}

DescentResult descend_witness(const DensityMatrix& rho, const RotationParams& start,
                              const WitnessOptions& options) {
  DescentResult result{witness_value(rho, start), start, 0, false};
  double step = 1.0;
  for (; result.iterations < options.max_iterations; ++result.iterations) {
    const RotationParams grad = witness_gradient(rho, result.params);
    const double gg = norm2(grad);
    if (std::sqrt(gg) < options.gradient_tol) {
      result.converged = true;
      break;
    }
    bool accepted = false;
    while (step > 1e-16) {
      RotationParams trial = result.params;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] -= step * grad[i];
      const double value = witness_value(rho, trial);
      if (value <= result.value - options.armijo * step * gg) {
        result.params = trial;
        result.value = value;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    // Line search exhausted: no representable descent along the gradient.
    if (!accepted) break;
    step = std::min(2.0 * step, 4.0);
  }
  return result;
}

WitnessSearchResult minimize_witness(const DensityMatrix& rho, const WitnessOptions& options) {
  require_three_qubits(rho);
  if (options.restarts < 1) throw ContractError("witness search needs at least one restart");
  const int n = options.restarts;
  std::vector<DescentResult> runs(static_cast<std::size_t>(n));

  for_each_index(n, options.execution, [&](std::ptrdiff_t k) {
    Rng rng = Rng::stream(options.seed, static_cast<std::uint64_t>(k));
    RotationParams start{};
    for (auto& x : start) x = rng.uniform(0.0, 2.0 * std::numbers::pi);
    runs[static_cast<std::size_t>(k)] = descend_witness(rho, start, options);
  });

  WitnessSearchResult out;
  out.restarts = n;
  std::size_t best = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    out.restart_values.push_back(runs[k].value);
    if (runs[k].value < runs[best].value) best = k;
  }
  out.min_value = runs[best].value;
  out.parameters = runs[best].params;
  const auto agreeing = std::count_if(runs.begin(), runs.end(), [&](const DescentResult& r) {
    return r.value - out.min_value <= options.agreement;
  });
  out.converged_fraction = static_cast<double>(agreeing) / static_cast<double>(n);
  return out;
}

}  // namespace entqc
