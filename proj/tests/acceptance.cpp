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

// Acceptance gate: one line per criterion, exit status 0 iff all pass.
// Each criterion is recomputed here from library primitives rather than read
// back from the report builders.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "entqc/channel.hpp"
#include "entqc/entanglement.hpp"
#include "entqc/random.hpp"
#include "entqc/sweeps.hpp"
#include "entqc/teleport.hpp"

using namespace entqc;

namespace {

struct Tolerances {
  double fidelity = 1e-10;
  double probability = 1e-10;
  double algebra = 1e-12;
  double spectrum = 1e-10;
  double amplitude = 1e-15;
  double tangle = 1e-8;
  double witness = 1e-3;
  double planted = 1e-4;
  double gradient = 1e-6;
};
constexpr Tolerances kTol{};

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kTeleportTrials = 1000;
constexpr std::size_t kInvarianceTrials = 100;
constexpr int kGradientPoints = 100;
constexpr int kRestarts = 64;

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* spec, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, spec, a, b, c);
  return buf;
}

double max_norm_error(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

StateVector bell_channel() { return builtin_channel("bell-transformed").state; }

Verdict perfect_teleportation() {
  double worst_f = 0.0;
  double worst_p = 0.0;
  for (std::size_t t = 0; t < kTeleportTrials; ++t) {
    Rng rng = Rng::stream(kSeed, t);
    const auto psi = haar_random_state(unknown_register(), rng);
    const ChannelSpec spec("random", haar_random_unitary(2, rng));
    for (const auto& o : teleport_all_outcomes(UnknownState(psi), spec)) {
      Complex overlap{};
      for (std::size_t k = 0; k < 4; ++k) overlap += std::conj(psi[k]) * o.corrected_state[k];
      worst_f = std::max(worst_f, std::abs(1.0 - std::norm(overlap)));
      worst_p = std::max(worst_p, std::abs(o.probability - 1.0 / 16.0));
    }
  }
  return {worst_f <= kTol.fidelity && worst_p <= kTol.probability,
          fmt("max|1-F| = %.3g, max|p-1/16| = %.3g over 1000 trials x 16 outcomes", worst_f, worst_p)};
}

Verdict measurement_algebra() {
  double worst_gram = 0.0;
  double worst_sum = 0.0;
  for (const char* name : {"epr", "bell-transformed"}) {
    const auto kets = measurement_basis(builtin_channel(name).state).kets();
    ComplexMatrix sum(16, 16);
    for (std::size_t i = 0; i < 16; ++i) {
      for (std::size_t j = 0; j < 16; ++j) {
        Complex g{};
        for (std::size_t k = 0; k < 16; ++k) g += std::conj(kets[i][k]) * kets[j][k];
        worst_gram = std::max(worst_gram, std::abs(g - (i == j ? 1.0 : 0.0)));
        for (std::size_t k = 0; k < 16; ++k) sum(j, k) += kets[i][j] * std::conj(kets[i][k]);
      }
    }
    worst_sum = std::max(worst_sum, max_abs_diff(sum, ComplexMatrix::identity(16)));
  }
  return {worst_gram <= kTol.algebra && worst_sum <= kTol.algebra,
          fmt("max|Gram - I| = %.3g, max|sum projectors - I| = %.3g", worst_gram, worst_sum)};
}

Verdict ghz_rejection() {
  const auto ghz = builtin_channel("ghz").state;
  const auto validity = is_valid_channel(ghz);
  const std::array<std::string, 2> alice{"A1", "A2"};
  const auto spectrum = hermitian_eigenvalues(reduced_density(ghz, alice).matrix());
  const auto nonzero = std::count_if(spectrum.begin(), spectrum.end(), [](double x) { return x > kTol.spectrum; });
  return {!validity.valid && nonzero == 2,
          fmt("valid = %g, marginal deviation = %.3g, nonzero A eigenvalues = %g", validity.valid ? 1.0 : 0.0,
              validity.max_deviation, static_cast<double>(nonzero))};
}

Verdict channel_amplitudes() {
  // Nonzero amplitudes of |A1 A2 B1 B2> in units of 1/(2 sqrt 2).
  const std::array<std::pair<std::size_t, double>, 8> expected{
      {{0b0000, 1}, {0b0011, -1}, {0b0101, 1}, {0b0110, -1}, {0b1001, 1}, {0b1010, 1}, {0b1100, 1}, {0b1111, 1}}};
  Amplitudes target(16);
  for (const auto& [index, sign] : expected) target[index] = sign / (2.0 * std::numbers::sqrt2);
  const auto state = dressed_channel(ChannelSpec("bell-transformed", bell_transform_matrix()));
  const double worst = max_norm_error(state.amplitudes(), target);
  return {worst <= kTol.amplitude, fmt("max|amplitude - expected| = %.3g", worst)};
}

ComplexMatrix pt_oracle(const ComplexMatrix& rho) {
  // Transpose on the first qubit of a two-qubit operator.
  ComplexMatrix out(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) out(2 * c + b, 2 * a + d) = rho(2 * a + b, 2 * c + d);
  return out;
}

Verdict pair_table() {
  const auto state = bell_channel();
  double single = 0.0;
  for (const char* q : {"A1", "A2", "B1", "B2"}) {
    const std::array<std::string, 1> keep{q};
    single = std::max(single, max_abs_diff(reduced_density(state, keep).matrix(), 0.5 * ComplexMatrix::identity(2)));
  }
  const ComplexMatrix bell_diag =
      0.25 * ComplexMatrix{{1.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 0.0}, {0.0, 1.0, 1.0, 0.0}, {1.0, 0.0, 0.0, 1.0}};
  const Complex i{0.0, 1.0};
  const ComplexMatrix phase = kron(ComplexMatrix{{1.0, 0.0}, {0.0, i}}, ComplexMatrix{{1.0, 0.0}, {0.0, -i}});
  double flat = 0.0;
  double diag = 0.0;
  double spectrum = 0.0;
  bool any_entangled = false;
  const std::vector<std::array<std::string, 2>> pairs{{"A1", "A2"}, {"A1", "B1"}, {"A1", "B2"},
                                                      {"A2", "B1"}, {"A2", "B2"}, {"B1", "B2"}};
  for (const auto& pair : pairs) {
    const auto rho = reduced_density(state, pair).matrix();
    const auto ev = hermitian_eigenvalues(pt_oracle(rho));
    any_entangled = any_entangled || ev.front() < -kTol.spectrum;
    const bool correlated = (pair[0] == "A1" && pair[1] == "B1") || (pair[0] == "A2" && pair[1] == "B2");
    if (!correlated) {
      flat = std::max(flat, max_abs_diff(rho, 0.25 * ComplexMatrix::identity(4)));
      continue;
    }
    const auto target = pair[0] == "A2" ? bell_diag : phase * bell_diag * phase.adjoint();
    diag = std::max(diag, max_abs_diff(rho, target));
    const std::array<double, 4> expected{0.0, 0.0, 0.5, 0.5};
    for (std::size_t k = 0; k < 4; ++k) spectrum = std::max(spectrum, std::abs(ev[k] - expected[k]));
  }
  return {single <= kTol.algebra && flat <= kTol.algebra && diag <= kTol.algebra && spectrum <= kTol.spectrum &&
              !any_entangled,
          fmt("singles %.3g, flat pairs %.3g, correlated pairs %.3g", single, flat, diag) +
              fmt(", PT spectrum dev %.3g, entangled pairs: ", spectrum) + (any_entangled ? "yes" : "none")};
}

Verdict w_state_control() {
  Amplitudes amps(16);
  for (std::size_t k : {1U, 2U, 4U, 8U}) amps[k] = 0.5;
  const StateVector w(channel_register(), amps);
  const double expected = (1.0 - std::numbers::sqrt2) / 4.0;
  double worst = 0.0;
  for (const auto& pair : std::vector<std::array<std::string, 2>>{
           {"A1", "A2"}, {"A1", "B1"}, {"A1", "B2"}, {"A2", "B1"}, {"A2", "B2"}, {"B1", "B2"}}) {
    const auto report = pair_analysis(w, pair);
    worst = std::max(worst, std::abs(report.min_pt_eigenvalue - expected));
    const double oracle = hermitian_eigenvalues(pt_oracle(reduced_density(w, pair).matrix())).front();
    worst = std::max(worst, std::abs(oracle - expected));
  }
  return {worst <= kTol.spectrum, fmt("max|min PT eigenvalue - (1-sqrt2)/4| = %.3g", worst)};
}

const std::vector<std::array<std::string, 3>>& triads() {
  static const std::vector<std::array<std::string, 3>> t{
      {"A1", "A2", "B1"}, {"A1", "A2", "B2"}, {"A1", "B1", "B2"}, {"A2", "B1", "B2"}};
  return t;
}

Verdict triad_structure() {
  const std::array<std::array<double, 4>, 4> signs{{
      {-1.0, 1.0, -1.0, 1.0},
      {1.0, 1.0, -1.0, -1.0},
      {-1.0, 1.0, 1.0, -1.0},
      {-1.0, -1.0, 1.0, 1.0},
  }};
  const auto reg = numbered_register(3);
  const auto state = bell_channel();
  double recon = 0.0;
  double fidelity = 0.0;
  double tangle = 0.0;
  for (std::size_t t = 0; t < 4; ++t) {
    const auto& l = signs[t];
    Amplitudes p0(8), p1(8);
    p0[0b000] = 1.0, p0[0b011] = l[0], p0[0b101] = 1.0, p0[0b110] = l[1];
    p1[0b001] = l[2], p1[0b010] = l[3], p1[0b100] = 1.0, p1[0b111] = 1.0;
    const auto phi0 = StateVector::normalized(reg, p0);
    const auto phi1 = StateVector::normalized(reg, p1);
    ComplexMatrix mix = 0.5 * (ComplexMatrix::outer(phi0.amplitudes(), phi0.amplitudes()) +
                               ComplexMatrix::outer(phi1.amplitudes(), phi1.amplitudes()));
    const auto rho = reduced_density(state, triads()[t]).matrix();
    recon = std::max(recon, max_abs_diff(rho, mix));
    // Returned components must be the same kets up to a global phase.
    const auto report = triad_analysis(state, triads()[t]);
    fidelity = std::max(fidelity, std::abs(1.0 - fidelity_pure(report.components[0].relabeled(reg), phi0)));
    fidelity = std::max(fidelity, std::abs(1.0 - fidelity_pure(report.components[1].relabeled(reg), phi1)));
    fidelity = std::max(fidelity, report.reconstruction_error);
    for (const auto& c : report.components) tangle = std::max(tangle, std::abs(1.0 - three_tangle(c)));
  }
  return {recon <= kTol.spectrum && fidelity <= kTol.spectrum && tangle <= kTol.tangle,
          fmt("max|rho - mixture| = %.3g, component fidelity error %.3g, max|1 - tau| = %.3g", recon, fidelity,
              tangle)};
}

Verdict witness_bound() {
  WitnessOptions options;
  options.restarts = kRestarts;
  options.seed = kSeed;
  const auto state = bell_channel();
  double worst = 0.0;
  for (const auto& triad : triads()) {
    worst = std::max(worst, std::abs(minimize_witness(reduced_density(state, triad), options).min_value - 0.25));
  }
  RotationParams planted_params{0.3, 1.1, -0.7, 2.0, 0.4, 1.9, -1.2, 0.8, 2.6};
  const auto planted = minimize_witness(DensityMatrix::from_pure(ghz_witness_state(planted_params)), options);
  const double planted_err = std::abs(planted.min_value + 0.25);
  return {worst <= kTol.witness && planted_err <= kTol.planted,
          fmt("max|min Tr(W rho) - 1/4| = %.3g over 4 triads, planted |min + 1/4| = %.3g", worst, planted_err)};
}

Verdict invariance() {
  const auto s = invariance_sweep(*builtin_channel("bell-transformed").spec, kInvarianceTrials, kSeed);
  return {s.trials == kInvarianceTrials && s.max_inner_product_deviation <= kTol.algebra &&
              s.max_fidelity_error <= kTol.fidelity,
          fmt("max|inner product change| = %.3g, max|1-F| = %.3g over 100 dressings", s.max_inner_product_deviation,
              s.max_fidelity_error)};
}

Verdict series_dichotomy() {
  const auto series = series_form(*builtin_channel("bell-transformed").spec);
  const std::array<std::string, 2> left{"A1", "U1"};
  std::size_t max_rank = 0;
  for (const auto& ket : series.basis.kets()) max_rank = std::max(max_rank, schmidt_rank(ket, left));
  std::size_t max_op_rank = 0;
  for (const auto& c : series.corrections.ops()) max_op_rank = std::max(max_op_rank, operator_schmidt_rank(c.matrix()));
  const auto epr = series_form(*builtin_channel("epr").spec);
  std::size_t epr_rank = 0;
  for (const auto& c : epr.corrections.ops()) epr_rank = std::max(epr_rank, operator_schmidt_rank(c.matrix()));
  return {max_rank == 1 && max_op_rank > 1 && epr_rank == 1,
          fmt("series basis max Schmidt rank %g, max correction operator rank %g, epr correction rank %g",
              static_cast<double>(max_rank), static_cast<double>(max_op_rank), static_cast<double>(epr_rank))};
}

Verdict gradient_check() {
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (int k = 0; k < kGradientPoints; ++k) {
    Rng rng = Rng::stream(kSeed + 77, static_cast<std::uint64_t>(k));
    const auto psi = haar_random_state(numbered_register(3), rng);
    const auto phi = haar_random_state(numbered_register(3), rng);
    const double w = rng.uniform();
    ComplexMatrix m = w * ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()) +
                      (1.0 - w) * ComplexMatrix::outer(phi.amplitudes(), phi.amplitudes());
    const DensityMatrix rho(numbered_register(3), m);
    RotationParams p{};
    for (auto& x : p) x = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const auto grad = witness_gradient(rho, p);
    for (std::size_t j = 0; j < p.size(); ++j) {
      auto up = p;
      auto down = p;
      up[j] += h;
      down[j] -= h;
      worst = std::max(worst, std::abs((witness_value(rho, up) - witness_value(rho, down)) / (2 * h) - grad[j]));
    }
  }
  return {worst <= kTol.gradient, fmt("max|analytic - central difference| = %.3g at 100 points", worst)};
}

}  // namespace

int main() {
  std::printf("tolerances: fidelity %.0e, probability %.0e, algebra %.0e, spectrum %.0e, amplitude %.0e,\n",
              kTol.fidelity, kTol.probability, kTol.algebra, kTol.spectrum, kTol.amplitude);
  std::printf("            tangle %.0e, witness %.0e, planted %.0e, gradient %.0e\n", kTol.tangle, kTol.witness,
              kTol.planted, kTol.gradient);

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"perfect teleportation", perfect_teleportation},
      {"measurement algebra", measurement_algebra},
      {"GHZ channel rejection", ghz_rejection},
      {"channel amplitudes", channel_amplitudes},
      {"pair table", pair_table},
      {"W-state control", w_state_control},
      {"triad structure", triad_structure},
      {"witness bound", witness_bound},
      {"invariance", invariance},
      {"series/total dichotomy", series_dichotomy},
      {"gradient check", gradient_check},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v{false, ""};
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, v.detail.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: %zu/%zu criteria passed in %.1f s\n", failures == 0 ? "PASS" : "FAIL", criteria.size() - failures,
              criteria.size(), seconds);
  return failures == 0 ? 0 : 1;
}
