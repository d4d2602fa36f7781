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

#include "entqc/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "entqc/random.hpp"
#include "entqc/sweeps.hpp"
#include "entqc/teleport.hpp"

namespace entqc {

namespace {

// Published reference values for the Bell-transformed channel.

/// Nonzero amplitudes of the channel state on (A1, A2, B1, B2), in units of 1/(2 sqrt 2).
const std::map<std::size_t, double>& expected_channel_signs() {
  static const std::map<std::size_t, double> signs{
      {0b0000, 1.0}, {0b0011, -1.0}, {0b0101, 1.0}, {0b0110, -1.0},
      {0b1001, 1.0}, {0b1010, 1.0},  {0b1100, 1.0}, {0b1111, 1.0}};
  return signs;
}

/// lambda_1..lambda_4 of the two GHZ components of each triad marginal.
const std::array<std::array<double, 4>, 4> kTriadSigns{{
    {-1.0, 1.0, -1.0, 1.0},
    {1.0, 1.0, -1.0, -1.0},
    {-1.0, 1.0, 1.0, -1.0},
    {-1.0, -1.0, 1.0, 1.0},
}};

/// Bell-diagonal pair marginal of (A2, B2).
ComplexMatrix pair_marginal_reference() {
  return 0.25 * ComplexMatrix{{1.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 0.0}, {0.0, 1.0, 1.0, 0.0}, {1.0, 0.0, 0.0, 1.0}};
}

const double kWStateMinPt = (1.0 - std::numbers::sqrt2) / 4.0;

constexpr double kAlgebraTol = 1e-12;
constexpr double kSpectrumTol = 1e-10;
constexpr double kTangleTol = 1e-8;
constexpr double kWitnessTol = 1e-3;
constexpr double kPlantedTol = 1e-4;
constexpr double kGradientTol = 1e-6;
constexpr std::size_t kTeleportTrials = 1000;
constexpr std::size_t kInvarianceTrials = 100;
constexpr int kGradientPoints = 100;

std::string join(std::span<const std::string> labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

StateVector w_state() {
  Amplitudes amps(16);
  for (std::size_t k : {1U, 2U, 4U, 8U}) amps[k] = 0.5;
  return StateVector(channel_register(), std::move(amps));
}

std::vector<std::array<std::string, 1>> single_qubits() {
  return {{"A1"}, {"A2"}, {"B1"}, {"B2"}};
}

DensityMatrix random_density3(Rng& rng) {
  ComplexMatrix g(8, 8);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex{re, im};
    }
  }
  ComplexMatrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint());
  m *= 1.0 / m.trace().real();
  return DensityMatrix(numbered_register(3), std::move(m));
}

RotationParams random_params(Rng& rng) {
  RotationParams p{};
  for (auto& x : p) x = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return p;
}

WitnessOptions witness_options(const ReproOptions& o) {
  WitnessOptions w;
  w.restarts = o.restarts;
  w.seed = o.seed;
  w.gradient_tol = o.gradient_tol;
  w.execution = o.execution;
  return w;
}

DensityMatrix triad_marginal(const StateVector& state, const std::array<std::string, 3>& triad) {
  return reduced_density(state, triad);
}


Section teleportation_section(const ReproOptions& o) {
  const auto s = teleport_sweep(kTeleportTrials, o.seed, o.execution);
  Section sec{"teleportation", "Haar-random unknown states through Haar-random channels", {}, {}};
  sec.checks.push_back(Check::equals("trials", static_cast<double>(s.trials), kTeleportTrials, 0.0));
  sec.checks.push_back(Check::at_most("max |1 - fidelity|", s.max_fidelity_error, 1e-10));
  sec.checks.push_back(Check::at_most("max |p - 1/16|", s.max_probability_error, 1e-10));
  sec.checks.push_back(Check::at_most("max |avg Bob state - I/4|", s.max_no_signaling_error, 1e-10));
  return sec;
}

Section measurement_section(const ReproOptions&) {
  Section sec{"measurement", "Orthonormality and completeness of the sixteen-ket joint measurement", {}, {}};
  for (const std::string name : {"epr", "bell-transformed"}) {
    const auto basis = measurement_basis(builtin_channel(name).state);
    sec.checks.push_back(Check::at_most(name + ": max |Gram - I16|", basis.gram_deviation(), kAlgebraTol));
    sec.checks.push_back(Check::at_most(name + ": max |sum projectors - I16|", basis.completeness_deviation(), kAlgebraTol));
  }
  return sec;
}

Section ghz_section(const ReproOptions&) {
  Section sec{"ghz-rejection", "Four-qubit GHZ state is not a perfect teleportation channel", {}, {}};
  const auto ghz = builtin_channel("ghz").state;
  const auto validity = is_valid_channel(ghz);
  sec.checks.push_back(Check::holds("rejected by is_valid_channel", !validity.valid));
  sec.checks.push_back(Check::info("marginal deviation from I/4", validity.max_deviation, 1e-10));
  const auto alice = alice_register();
  const auto spectrum = hermitian_eigenvalues(reduced_density(ghz, alice.labels()).matrix());
  const auto nonzero = std::count_if(spectrum.begin(), spectrum.end(), [](double x) { return x > kSpectrumTol; });
  sec.checks.push_back(Check::equals("nonzero eigenvalues of A marginal", static_cast<double>(nonzero), 2.0, 0.0));
  sec.checks.push_back(Check::equals("largest eigenvalue (lambda_0^2)", spectrum[3], 0.5, kSpectrumTol));
  sec.checks.push_back(Check::equals("second eigenvalue (lambda_1^2)", spectrum[2], 0.5, kSpectrumTol));
  return sec;
}

Section channel_amplitudes_section(const ReproOptions&) {
  Section sec{"channel-amplitudes", "Bell-transformed channel amplitudes", {}, {}};
  const auto state = builtin_channel("bell-transformed").state;
  const double unit = 1.0 / (2.0 * std::numbers::sqrt2);
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    const auto it = expected_channel_signs().find(i);
    const double expected = it == expected_channel_signs().end() ? 0.0 : it->second * unit;
    worst = std::max(worst, std::abs(state[i] - expected));
  }
  sec.checks.push_back(Check::at_most("max |amplitude - expected|", worst, 1e-15));
  sec.checks.push_back(Check::holds("valid channel", is_valid_channel(state).valid));
  return sec;
}

Section pairs_section(const ReproOptions&) {
  Section sec{"pairs", "Pairwise separability of the Bell-transformed channel", {}, {}};
  const auto state = builtin_channel("bell-transformed").state;
  const auto half = 0.5 * ComplexMatrix::identity(2);
  for (const auto& q : single_qubits()) {
    sec.checks.push_back(Check::at_most("rho_" + q[0] + " - I/2", max_abs_diff(reduced_density(state, q).matrix(), half), kAlgebraTol));
  }
  const auto quarter = 0.25 * ComplexMatrix::identity(4);
  const auto reference = pair_marginal_reference();
  // (A1,B1) equals the reference up to the local phase S (x) S^dagger.
  const Complex i{0.0, 1.0};
  const ComplexMatrix phase = kron(ComplexMatrix{{1.0, 0.0}, {0.0, i}}, ComplexMatrix{{1.0, 0.0}, {0.0, -i}});
  const ComplexMatrix reference_a1b1 = phase * reference * phase.adjoint();

  bool any_entangled = false;
  for (const auto& pair : channel_pairs()) {
    const auto report = pair_analysis(state, pair);
    any_entangled = any_entangled || report.entangled;
    const std::string tag = "(" + pair[0] + "," + pair[1] + ")";
    if (tag == "(A1,B1)" || tag == "(A2,B2)") {
      const auto& target = tag == "(A2,B2)" ? reference : reference_a1b1;
      sec.checks.push_back(Check::at_most(tag + " marginal - reference", max_abs_diff(report.reduced.matrix(), target), kAlgebraTol));
      if (tag == "(A1,B1)") {
        sec.checks.push_back(Check::info(tag + " entrywise distance to untransformed reference",
                                         max_abs_diff(report.reduced.matrix(), reference), kAlgebraTol));
      }
      const std::array<double, 4> expected{0.0, 0.0, 0.5, 0.5};
      double worst = 0.0;
      for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(report.pt_spectrum[k] - expected[k]));
      sec.checks.push_back(Check::at_most(tag + " PT spectrum - (0,0,1/2,1/2)", worst, kSpectrumTol));
    } else {
      sec.checks.push_back(Check::at_most(tag + " marginal - I/4", max_abs_diff(report.reduced.matrix(), quarter), kAlgebraTol));
    }
  }
  sec.checks.push_back(Check::holds("no pair entangled", !any_entangled));
  return sec;
}

Section w_state_section(const ReproOptions&) {
  Section sec{"w-state", "Pair entanglement of the symmetric four-qubit W state", {}, {}};
  const auto w = w_state();
  for (const auto& pair : channel_pairs()) {
    const auto report = pair_analysis(w, pair);
    sec.checks.push_back(Check::equals("(" + pair[0] + "," + pair[1] + ") min PT eigenvalue", report.min_pt_eigenvalue,
                                       kWStateMinPt, kSpectrumTol));
  }
  return sec;
}

Section triads_section(const ReproOptions&) {
  Section sec{"triads", "GHZ structure of the triad marginals", {}, {}};
  const auto state = builtin_channel("bell-transformed").state;
  for (std::size_t t = 0; t < channel_triads().size(); ++t) {
    const auto& triad = channel_triads()[t];
    const auto report = triad_analysis(state, triad);
    const std::string tag = "(" + join(triad) + ")";
    double sign_dev = 0.0;
    for (std::size_t k = 0; k < 4; ++k) sign_dev = std::max(sign_dev, std::abs(report.signs[k] - kTriadSigns[t][k]));
    sec.checks.push_back(Check::at_most(tag + " signs - table row", sign_dev, kSpectrumTol));
    sec.checks.push_back(Check::at_most(tag + " reconstruction error", report.reconstruction_error, kSpectrumTol));
    for (std::size_t k = 0; k < 2; ++k) {
      const std::string comp = tag + " phi" + std::to_string(k);
      sec.checks.push_back(Check::equals(comp + " support fidelity", report.ghz_component_fidelities[k], 1.0, kSpectrumTol));
      sec.checks.push_back(Check::equals(comp + " three-tangle", report.three_tangles[k], 1.0, kTangleTol));
    }
  }
  return sec;
}

Section witness_section(const ReproOptions& o) {
  Section sec{"witness", "GHZ witness minimized over local rotations", {}, nlohmann::json::object()};
  const auto state = builtin_channel("bell-transformed").state;
  const auto options = witness_options(o);
  for (const auto& triad : channel_triads()) {
    const auto rho = triad_marginal(state, triad);
    const auto result = minimize_witness(rho, options);
    const std::string tag = "(" + join(triad) + ")";
    sec.checks.push_back(Check::equals(tag + " min Tr(W rho)", result.min_value, 0.25, kWitnessTol));
    const double lambda_max = hermitian_eigenvalues(rho.matrix()).back();
    sec.checks.push_back(Check::holds(tag + " respects 3/4 - lambda_max bound", result.min_value >= 0.75 - lambda_max - 1e-12));
    sec.details[tag] = witness_result_json(result);
  }
  Rng rng = Rng::stream(o.seed, 0x5eed);
  const auto planted = ghz_witness_state(random_params(rng));
  const auto result = minimize_witness(DensityMatrix::from_pure(planted), options);
  sec.checks.push_back(Check::equals("planted GHZ min Tr(W rho)", result.min_value, -0.25, kPlantedTol));
  sec.details["planted"] = witness_result_json(result);
  return sec;
}

Section invariance_section(const ReproOptions& o) {
  Section sec{"invariance", "Protocol invariance under paired two-qubit dressings", {}, {}};
  const auto spec = *builtin_channel("bell-transformed").spec;
  const auto s = invariance_sweep(spec, kInvarianceTrials, o.seed, o.execution);
  sec.checks.push_back(Check::equals("trials", static_cast<double>(s.trials), kInvarianceTrials, 0.0));
  sec.checks.push_back(Check::at_most("max |inner product after - before|", s.max_inner_product_deviation, kAlgebraTol));
  sec.checks.push_back(Check::at_most("max |1 - fidelity| (transformed protocol)", s.max_fidelity_error, 1e-10));
  sec.checks.push_back(Check::at_most("max |p - 1/16| (transformed protocol)", s.max_probability_error, 1e-10));
  return sec;
}

Section series_section(const ReproOptions& o) {
  Section sec{"series", "Separable measurement forces nonlocal corrections for an inseparable channel", {}, {}};
  const auto bell = *builtin_channel("bell-transformed").spec;
  const Protocol series = series_form(bell);
  const auto sep = is_separable_basis(series.basis);
  sec.checks.push_back(Check::holds("bell-transformed: series basis separable (A1,U1)|(A2,U2)", sep.split_11_22));
  const auto nonlocal = std::count_if(series.corrections.ops().begin(), series.corrections.ops().end(),
                                      [](const UnitaryOp& c) { return !is_local(c); });
  sec.checks.push_back(Check::holds("bell-transformed: some series correction nonlocal", nonlocal > 0));
  sec.checks.push_back(Check::info("bell-transformed: nonlocal series corrections", static_cast<double>(nonlocal), 1e-10));
  const auto standard_sep = is_separable_basis(measurement_basis(bell));
  sec.checks.push_back(Check::holds("bell-transformed: standard basis inseparable in both splits",
                                    !standard_sep.split_11_22 && !standard_sep.split_12_21));

  Rng rng = Rng::stream(o.seed, 0x5e71e5);
  const UnknownState unknown(haar_random_state(unknown_register(), rng));
  double worst = 0.0;
  for (const auto& out : run_protocol(series, unknown)) worst = std::max(worst, std::abs(1.0 - out.fidelity));
  sec.checks.push_back(Check::at_most("bell-transformed: series protocol max |1 - fidelity|", worst, 1e-10));

  const Protocol epr = series_form(*builtin_channel("epr").spec);
  const bool all_local = std::all_of(epr.corrections.ops().begin(), epr.corrections.ops().end(),
                                     [](const UnitaryOp& c) { return is_local(c); });
  sec.checks.push_back(Check::holds("epr: all series corrections local", all_local));
  return sec;
}

Section gradient_section(const ReproOptions& o) {
  Section sec{"gradient", "Analytic witness gradient against central differences", {}, {}};
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (int k = 0; k < kGradientPoints; ++k) {
    Rng rng = Rng::stream(o.seed ^ 0x9a7d, static_cast<std::uint64_t>(k));
    const auto rho = random_density3(rng);
    const auto params = random_params(rng);
    const auto grad = witness_gradient(rho, params);
    for (std::size_t j = 0; j < params.size(); ++j) {
      auto up = params;
      auto down = params;
      up[j] += h;
      down[j] -= h;
      const double fd = (witness_value(rho, up) - witness_value(rho, down)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - grad[j]));
    }
  }
  sec.checks.push_back(Check::at_most("max |analytic - finite difference|", worst, kGradientTol));
  return sec;
}

using SectionFn = Section (*)(const ReproOptions&);

const std::vector<std::pair<std::string, SectionFn>>& section_table() {
  static const std::vector<std::pair<std::string, SectionFn>> table{
      {"teleportation", teleportation_section},
      {"measurement", measurement_section},
      {"ghz-rejection", ghz_section},
      {"channel-amplitudes", channel_amplitudes_section},
      {"pairs", pairs_section},
      {"w-state", w_state_section},
      {"triads", triads_section},
      {"witness", witness_section},
      {"invariance", invariance_section},
      {"series", series_section},
      {"gradient", gradient_section},
  };
  return table;
}

}  // namespace

const std::vector<std::array<std::string, 3>>& channel_triads() {
  static const std::vector<std::array<std::string, 3>> triads{
      {"A1", "A2", "B1"}, {"A1", "A2", "B2"}, {"A1", "B1", "B2"}, {"A2", "B1", "B2"}};
  return triads;
}

const std::vector<std::array<std::string, 2>>& channel_pairs() {
  static const std::vector<std::array<std::string, 2>> pairs{
      {"A1", "A2"}, {"A1", "B1"}, {"A1", "B2"}, {"A2", "B1"}, {"A2", "B2"}, {"B1", "B2"}};
  return pairs;
}

const std::vector<std::string>& reproduction_section_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : section_table()) out.push_back(name);
    return out;
  }();
  return names;
}

Section run_reproduction_section(const std::string& name, const ReproOptions& options) {
  for (const auto& [n, fn] : section_table()) {
    if (n == name) return fn(options);
  }
  throw LabelError("unknown section " + name);
}

ReportDocument run_reproduction(const ReproOptions& options) {
  ReportDocument doc{"reproduce", {}};
  const auto& wanted = options.sections;
  const auto& known = reproduction_section_names();
  for (const auto& w : wanted) {
    if (std::find(known.begin(), known.end(), w) == known.end()) throw LabelError("unknown section " + w);
  }
  for (const auto& [name, fn] : section_table()) {
    if (wanted.empty() || std::find(wanted.begin(), wanted.end(), name) != wanted.end()) {
      doc.sections.push_back(fn(options));
    }
  }
  return doc;
}

nlohmann::json witness_result_json(const WitnessSearchResult& result) {
  return {{"min_value", result.min_value},
          {"params", result.parameters},
          {"restarts", result.restarts},
          {"converged_fraction", result.converged_fraction}};
}

ReportDocument analyze_channel(const NamedChannel& channel, const WitnessOptions& witness) {
  ReportDocument doc{"analyze", {}};
  const StateVector& state = channel.state;

  Section validity{"channel", "Maximal entanglement across A|B", {}, {{"name", channel.name}}};
  const auto v = is_valid_channel(state);
  validity.checks.push_back(Check::info("valid channel", v.valid ? 1.0 : 0.0, 1e-10));
  validity.checks.push_back(Check::info("max marginal deviation from I/4", v.max_deviation, 1e-10));
  doc.sections.push_back(std::move(validity));

  Section marginals{"marginals", "Single-qubit reduced states", {}, {}};
  const auto half = 0.5 * ComplexMatrix::identity(2);
  for (const auto& q : single_qubits()) {
    marginals.checks.push_back(
        Check::info("rho_" + q[0] + " distance to I/2", max_abs_diff(reduced_density(state, q).matrix(), half), 1e-12));
  }
  doc.sections.push_back(std::move(marginals));

  Section pairs{"pairs", "Partial-transpose test on every pair", {}, nlohmann::json::array()};
  for (const auto& pair : channel_pairs()) {
    const auto r = pair_analysis(state, pair);
    const std::string tag = "(" + pair[0] + "," + pair[1] + ")";
    pairs.checks.push_back(Check::info(tag + " min PT eigenvalue", r.min_pt_eigenvalue, 1e-10));
    pairs.details.push_back({{"pair", r.pair},
                             {"pt_spectrum", r.pt_spectrum},
                             {"entangled", r.entangled},
                             {"reduced", matrix_to_json(r.reduced.matrix())}});
  }
  doc.sections.push_back(std::move(pairs));

  Section triads{"triads", "Triad marginals as GHZ mixtures", {}, nlohmann::json::array()};
  Section witness_sec{"witness", "GHZ witness search per triad", {}, nlohmann::json::object()};
  for (const auto& triad : channel_triads()) {
    const auto r = triad_analysis(state, triad);
    const std::string tag = "(" + join(triad) + ")";
    triads.checks.push_back(Check::info(tag + " reconstruction error", r.reconstruction_error, 1e-10));
    triads.checks.push_back(Check::info(tag + " phi0 three-tangle", r.three_tangles[0], 1e-8));
    triads.checks.push_back(Check::info(tag + " phi1 three-tangle", r.three_tangles[1], 1e-8));
    nlohmann::json signs = nlohmann::json::array();
    for (const auto& s : r.signs) signs.push_back({s.real(), s.imag()});
    triads.details.push_back({{"triad", r.triad},
                              {"spectrum", r.spectrum},
                              {"signs", signs},
                              {"component_fidelities", r.ghz_component_fidelities},
                              {"three_tangles", r.three_tangles},
                              {"support_tangles", r.support_tangles}});

    const auto result = minimize_witness(triad_marginal(state, triad), witness);
    witness_sec.checks.push_back(Check::info(tag + " min Tr(W rho)", result.min_value, witness.agreement));
    witness_sec.details[tag] = witness_result_json(result);
  }
  doc.sections.push_back(std::move(triads));
  doc.sections.push_back(std::move(witness_sec));
  return doc;
}

}  // namespace entqc
