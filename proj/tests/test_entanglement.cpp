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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entqc/channel.hpp"
#include "entqc/entanglement.hpp"
#include "entqc/random.hpp"

namespace entqc {
namespace {

const QubitRegister kThree = numbered_register(3);

// Squared Wootters concurrence of a rank-2 two-qubit state. With M = rho rho~
// having two nonzero eigenvalues l1^2 >= l2^2, C^2 = (l1 - l2)^2 follows from
// Tr M and the second elementary symmetric function of its spectrum.
double concurrence_sq_rank2(const ComplexMatrix& rho) {
  const auto yy = kron(pauli(3), pauli(3));
  const auto m = rho * (yy * rho.conjugate() * yy);
  const double t1 = m.trace().real();
  const double t2 = (m * m).trace().real();
  const double e2 = std::max(0.0, 0.5 * (t1 * t1 - t2));
  return std::max(0.0, t1 - 2.0 * std::sqrt(e2));
}

// Coffman-Kubo-Wootters residual: C^2_{0(12)} - C^2_{01} - C^2_{02}.
double ckw_tangle(const StateVector& s) {
  const std::array<std::string, 1> a{"q0"};
  const auto rho_a = reduced_density(s, a).matrix();
  const double det = (rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0)).real();
  const std::array<std::string, 2> ab{"q0", "q1"};
  const std::array<std::string, 2> ac{"q0", "q2"};
  return 4.0 * det - concurrence_sq_rank2(reduced_density(s, ab).matrix()) -
         concurrence_sq_rank2(reduced_density(s, ac).matrix());
}

StateVector rotate_locally(const StateVector& s, Rng& rng) {
  StateVector out = s;
  for (std::size_t q = 0; q < s.num_qubits(); ++q) {
    const std::array<std::string, 1> t{s.reg().label(q)};
    out = apply(haar_random_unitary(1, rng).matrix(), t, out);
  }
  return out;
}

RotationParams random_params(Rng& rng) {
  RotationParams p{};
  for (auto& x : p) x = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return p;
}

DensityMatrix random_mixed3(Rng& rng, int terms) {
  ComplexMatrix m(8, 8);
  for (int k = 0; k < terms; ++k) {
    const auto s = haar_random_state(kThree, rng);
    m += (1.0 / terms) * ComplexMatrix::outer(s.amplitudes(), s.amplitudes());
  }
  return DensityMatrix(kThree, m);
}

StateVector ghz3() { return StateVector::normalized(kThree, Amplitudes{1, 0, 0, 0, 0, 0, 0, 1}); }

StateVector bell_channel() { return builtin_channel("bell-transformed").state; }

TEST(Pairs, PptExactOnSeparableMixtures) {
  Rng rng(1);
  const QubitRegister two{"q0", "q1"};
  const std::array<std::string, 1> first{"q0"};
  for (int t = 0; t < 500; ++t) {
    ComplexMatrix m(4, 4);
    const int terms = 1 + static_cast<int>(rng.uniform() * 4);
    for (int k = 0; k < terms; ++k) {
      const auto s = tensor(haar_random_state(QubitRegister{"q0"}, rng), haar_random_state(QubitRegister{"q1"}, rng));
      m += (1.0 / terms) * ComplexMatrix::outer(s.amplitudes(), s.amplitudes());
    }
    EXPECT_GE(hermitian_eigenvalues(partial_transpose(DensityMatrix(two, m), first)).front(), -1e-10);
  }
}

TEST(Pairs, PptDetectsPureEntangledStates) {
  Rng rng(2);
  const QubitRegister two{"q0", "q1"};
  const std::array<std::string, 1> first{"q0"};
  for (int t = 0; t < 500; ++t) {
    const auto s = haar_random_state(two, rng);
    // Pure two-qubit: min PT eigenvalue is -|c00 c11 - c01 c10|.
    const double expected = -std::abs(s[0] * s[3] - s[1] * s[2]);
    if (expected > -1e-6) continue;
    const double got = hermitian_eigenvalues(partial_transpose(DensityMatrix::from_pure(s), first)).front();
    EXPECT_LT(got, -1e-6);
    EXPECT_NEAR(got, expected, 1e-12);
  }
}

TEST(Pairs, BellTransformedChannelTable) {
  const auto state = bell_channel();
  const auto flat = pair_analysis(state, {"A1", "A2"});
  EXPECT_LT(max_abs_diff(flat.reduced.matrix(), 0.25 * ComplexMatrix::identity(4)), 1e-12);
  EXPECT_NEAR(flat.min_pt_eigenvalue, 0.25, 1e-12);
  EXPECT_FALSE(flat.entangled);
  for (const auto& pair : {std::array<std::string, 2>{"A1", "B1"}, std::array<std::string, 2>{"A2", "B2"}}) {
    const auto r = pair_analysis(state, pair);
    const std::vector<double> expected{0.0, 0.0, 0.5, 0.5};
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.pt_spectrum[k], expected[k], 1e-10);
    EXPECT_FALSE(r.entangled);
  }
}

TEST(Pairs, EprChannelPairsAreMaximallyEntangled) {
  const auto state = epr_pair_channel();
  const auto r = pair_analysis(state, {"A1", "B1"});
  EXPECT_NEAR(r.min_pt_eigenvalue, -0.5, 1e-12);
  EXPECT_TRUE(r.entangled);
  EXPECT_FALSE(pair_analysis(state, {"A1", "B2"}).entangled);
}

TEST(Pairs, WStateEveryPairEntangled) {
  Amplitudes amps(16);
  for (std::size_t k : {1U, 2U, 4U, 8U}) amps[k] = 0.5;
  const StateVector w(channel_register(), amps);
  for (const auto& pair : std::vector<std::array<std::string, 2>>{{"A1", "A2"}, {"A2", "B2"}, {"B1", "A1"}}) {
    const auto r = pair_analysis(w, pair);
    EXPECT_NEAR(r.min_pt_eigenvalue, (1.0 - std::numbers::sqrt2) / 4.0, 1e-10);
    EXPECT_TRUE(r.entangled);
  }
}

TEST(Pairs, UnknownLabelThrows) { EXPECT_THROW(pair_analysis(bell_channel(), {"A1", "C9"}), LabelError); }

TEST(Tangle, CanonicalValues) {
  EXPECT_NEAR(three_tangle(ghz3()), 1.0, 1e-15);
  EXPECT_NEAR(three_tangle(StateVector::normalized(kThree, Amplitudes{0, 1, 1, 0, 1, 0, 0, 0})), 0.0, 1e-15);
  EXPECT_NEAR(three_tangle(StateVector::basis(kThree, 5)), 0.0, 1e-15);
  EXPECT_THROW(three_tangle(StateVector(kThree, Amplitudes(8, 1.0))), ContractError);
}

TEST(Tangle, MatchesCkwResidualOracle) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto s = haar_random_state(kThree, rng);
    EXPECT_NEAR(three_tangle(s), ckw_tangle(s), 1e-9);
  }
}

TEST(Tangle, LocalUnitaryInvariant) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto s = haar_random_state(kThree, rng);
    EXPECT_NEAR(three_tangle(s), three_tangle(rotate_locally(s, rng)), 1e-9);
  }
}

TEST(Triads, TableRowsOfBellTransformedChannel) {
  const auto state = bell_channel();
  const auto first = triad_analysis(state, {"A1", "A2", "B1"});
  const std::array<Complex, 4> row1{-1.0, 1.0, -1.0, 1.0};
  const std::array<Complex, 4> row4{-1.0, -1.0, 1.0, 1.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(first.signs[k] - row1[k]), 1e-10);
  const auto last = triad_analysis(state, {"A2", "B1", "B2"});
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(last.signs[k] - row4[k]), 1e-10);
  EXPECT_NEAR(first.spectrum[7], 0.5, 1e-10);
  EXPECT_NEAR(first.spectrum[6], 0.5, 1e-10);
  EXPECT_NEAR(first.spectrum[5], 0.0, 1e-10);
  EXPECT_LT(first.reconstruction_error, 1e-10);
  for (double tau : first.three_tangles) EXPECT_NEAR(tau, 1.0, 1e-8);
}

TEST(Triads, GhzMarginalIsClassicalMixture) {
  const auto r = triad_analysis(builtin_channel("ghz").state, {"A1", "A2", "B1"});
  ASSERT_EQ(r.support.size(), 2U);
  for (double tau : r.support_tangles) EXPECT_NEAR(tau, 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.reduced.matrix()(0, 0)), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(r.reduced.matrix()(7, 7)), 0.5, 1e-15);
}

TEST(Witness, StateAtZeroIsGhz) {
  EXPECT_NEAR(fidelity_pure(ghz_witness_state(RotationParams{}), ghz3()), 1.0, 1e-15);
}

TEST(Witness, CanonicalValues) {
  EXPECT_NEAR(witness_value(DensityMatrix::from_pure(ghz3()), RotationParams{}), -0.25, 1e-15);
  const DensityMatrix mixed(kThree, 0.125 * ComplexMatrix::identity(8));
  Rng rng(5);
  for (int t = 0; t < 10; ++t) EXPECT_NEAR(witness_value(mixed, random_params(rng)), 0.625, 1e-14);
}

TEST(Witness, BoundedByLargestEigenvalue) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_mixed3(rng, 3);
    const double bound = 0.75 - hermitian_eigenvalues(rho.matrix()).back();
    EXPECT_GE(witness_value(rho, random_params(rng)), bound - 1e-12);
  }
}

TEST(Witness, GradientMatchesCentralDifferences) {
  Rng rng(7);
  constexpr double h = 1e-5;
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_mixed3(rng, 2);
    const auto p = random_params(rng);
    const auto g = witness_gradient(rho, p);
    for (std::size_t j = 0; j < p.size(); ++j) {
      auto up = p;
      auto down = p;
      up[j] += h;
      down[j] -= h;
      EXPECT_NEAR(g[j], (witness_value(rho, up) - witness_value(rho, down)) / (2 * h), 1e-6);
    }
  }
}

TEST(Witness, DescentConvergesAndNeverIncreases) {
  Rng rng(8);
  const auto rho = random_mixed3(rng, 2);
  const auto start = random_params(rng);
  WitnessOptions options;
  const auto result = descend_witness(rho, start, options);
  EXPECT_TRUE(result.converged);
  EXPECT_LE(result.value, witness_value(rho, start));
  EXPECT_NEAR(result.value, witness_value(rho, result.params), 1e-15);
}

TEST(Witness, PlantedGhzIsRecovered) {
  Rng rng(9);
  const auto planted = ghz_witness_state(random_params(rng));
  const auto rho = DensityMatrix::from_pure(planted);
  WitnessOptions options;
  options.restarts = 16;
  const auto result = minimize_witness(rho, options);
  EXPECT_NEAR(result.min_value, -0.25, 1e-4);
  EXPECT_NEAR(fidelity_pure(ghz_witness_state(result.parameters), planted), 1.0, 1e-4);
}

TEST(Witness, FlatLandscapeOfMaximallyMixed) {
  WitnessOptions options;
  options.restarts = 8;
  const auto result = minimize_witness(DensityMatrix(kThree, 0.125 * ComplexMatrix::identity(8)), options);
  EXPECT_NEAR(result.min_value, 0.625, 1e-6);
  EXPECT_DOUBLE_EQ(result.converged_fraction, 1.0);
}

TEST(Witness, TriadsOfBellTransformedChannelReachQuarter) {
  WitnessOptions options;
  options.restarts = 16;
  const auto rho = reduced_density(bell_channel(), std::array<std::string, 3>{"A1", "B1", "B2"});
  const auto result = minimize_witness(rho, options);
  EXPECT_NEAR(result.min_value, 0.25, 1e-3);
  EXPECT_GE(result.min_value, 0.25 - 1e-12);
  EXPECT_EQ(result.restarts, 16);
  EXPECT_EQ(result.restart_values.size(), 16U);
}

TEST(Witness, SerialAndParallelAgreeExactly) {
  Rng rng(10);
  const auto rho = random_mixed3(rng, 2);
  WitnessOptions options;
  options.restarts = 12;
  options.seed = 99;
  options.execution = Execution::serial;
  const auto serial = minimize_witness(rho, options);
  options.execution = Execution::parallel;
  const auto parallel = minimize_witness(rho, options);
  EXPECT_EQ(serial.min_value, parallel.min_value);
  EXPECT_EQ(serial.parameters, parallel.parameters);
  EXPECT_EQ(serial.restart_values, parallel.restart_values);
}

TEST(Witness, RejectsBadInputs) {
  WitnessOptions options;
  options.restarts = 0;
  EXPECT_THROW(minimize_witness(DensityMatrix::from_pure(ghz3()), options), ContractError);
  const DensityMatrix two(numbered_register(2), 0.25 * ComplexMatrix::identity(4));
  EXPECT_THROW(witness_value(two, RotationParams{}), DimensionError);
}

}  // namespace
}  // namespace entqc
