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

#include "entqc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "entqc/channel.hpp"
#include "entqc/entanglement.hpp"
#include "entqc/random.hpp"
#include "entqc/reproduce.hpp"
#include "entqc/teleport.hpp"

namespace entqc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Malformed command-line input; reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string builtin_list() {
  std::string out;
  for (const auto& n : builtin_channel_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

NamedChannel resolve_channel(const std::string& arg) {
  const auto& names = builtin_channel_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return builtin_channel(arg);
  if (!std::filesystem::is_regular_file(arg)) {
    throw UsageError("unknown channel '" + arg + "'; built-in channels: " + builtin_list() +
                     " (or a path to a channel JSON file)");
  }
  std::ifstream in(arg);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse channel file " + arg + ": " + e.what());
  }
  ChannelSpec spec = channel_spec_from_json(doc);
  StateVector state = dressed_channel(spec);
  std::string name = spec.name;
  return NamedChannel{std::move(name), std::move(spec), std::move(state)};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream is(text);
  while (std::getline(is, current, ',')) parts.push_back(current);
  return parts;
}

double parse_real(const std::string& token) {
  const auto first = token.find_first_not_of(' ');
  const auto last = token.find_last_not_of(' ');
  if (first == std::string::npos) throw UsageError("empty number in --state");
  const std::string t = token.substr(first, last - first + 1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError("invalid number '" + t + "' in --state");
  }
  return v;
}

UnknownState parse_state(const std::string& text, std::ostream& err) {
  const auto parts = split_commas(text);
  if (parts.size() != 8) throw UsageError("--state needs 8 comma-separated reals (4 [re,im] pairs)");
  std::array<Complex, 4> c{};
  double sq = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    c[k] = Complex{parse_real(parts[2 * k]), parse_real(parts[2 * k + 1])};
    sq += std::norm(c[k]);
  }
  const double norm = std::sqrt(sq);
  const double off = std::abs(norm - 1.0);
  if (off >= 1e-6) throw UsageError("--state has norm " + std::to_string(norm) + "; expected 1");
  if (off > 1e-12) {
    err << "warning: --state norm off by " << off << "; normalizing\n";
    for (auto& x : c) x /= norm;
  }
  return UnknownState(c);
}

nlohmann::json state_json(const StateVector& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : s.amplitudes()) out.push_back({a.real(), a.imag()});
  return out;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + output);
  file << text;
  if (!file) throw UsageError("failed writing output file " + output);
}

struct CommonFlags {
  std::string channel = "bell-transformed";
  std::uint64_t seed = 1;
  int restarts = 64;
  double tol = 1e-8;
  std::string output;
  std::string format = "json";
};

WitnessOptions witness_flags(const CommonFlags& f) {
  if (f.restarts < 1) throw UsageError("--restarts must be at least 1");
  if (!(f.tol > 0.0)) throw UsageError("--tol must be positive");
  WitnessOptions w;
  w.restarts = f.restarts;
  w.seed = f.seed;
  w.gradient_tol = f.tol;
  return w;
}

int cmd_teleport(const CommonFlags& f, const std::string& state_text, std::ostream& out, std::ostream& err) {
  const NamedChannel channel = resolve_channel(f.channel);
  std::optional<UnknownState> unknown;
  if (!state_text.empty()) {
    unknown.emplace(parse_state(state_text, err));
  } else {
    Rng rng(f.seed);
    unknown.emplace(haar_random_state(unknown_register(), rng));
  }

  const auto validity = is_valid_channel(channel.state);
  if (!validity.valid) {
    err << "channel '" << channel.name
        << "' violates the maximal-entanglement requirement Tr_B = Tr_A = I/4 (max deviation "
        << validity.max_deviation << " > 1e-10); it cannot teleport an unknown two-qubit state\n";
    return kExitCheckFailed;
  }

  constexpr double tol = 1e-10;
  const auto outcomes = run_protocol(standard_protocol(channel.state), *unknown);
  bool pass = true;
  nlohmann::json doc;
  doc["command"] = "teleport";
  doc["channel"] = channel.name;
  doc["unknown_state"] = state_json(unknown->state());
  doc["tolerance"] = tol;
  doc["outcomes"] = nlohmann::json::array();
  std::ostringstream text;
  text << "channel " << channel.name << "\n";
  text << "alpha beta probability         fidelity\n";
  for (const auto& o : outcomes) {
    pass = pass && std::abs(1.0 - o.fidelity) <= tol;
    doc["outcomes"].push_back({{"alpha", o.outcome.alpha},
                               {"beta", o.outcome.beta},
                               {"probability", o.probability},
                               {"fidelity", o.fidelity},
                               {"bob_state", state_json(o.bob_state)},
                               {"corrected_state", state_json(o.corrected_state)}});
    char line[96];
    std::snprintf(line, sizeof line, "%5d %4d %.17g %.17g\n", o.outcome.alpha, o.outcome.beta, o.probability,
                  o.fidelity);
    text << line;
  }
  doc["pass"] = pass;
  text << (pass ? "PASS" : "FAIL") << ": all corrected fidelities within " << tol << " of 1\n";
  emit(f.format == "text" ? text.str() : dump_json(doc), f.output, out);
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_analyze(const CommonFlags& f, std::ostream& out) {
  const NamedChannel channel = resolve_channel(f.channel);
  const ReportDocument doc = analyze_channel(channel, witness_flags(f));
  emit(f.format == "text" ? doc.to_text() : dump_json(doc.to_json()), f.output, out);
  return kExitOk;
}

int cmd_witness(const CommonFlags& f, const std::string& triad_text, std::ostream& out) {
  const NamedChannel channel = resolve_channel(f.channel);
  const auto parts = split_commas(triad_text);
  if (parts.size() != 3) throw UsageError("--triad needs three comma-separated qubit labels");
  const std::array<std::string, 3> triad{parts[0], parts[1], parts[2]};
  const auto result = minimize_witness(reduced_density(channel.state, triad), witness_flags(f));
  nlohmann::json doc = witness_result_json(result);
  doc["channel"] = channel.name;
  doc["triad"] = triad;
  emit(dump_json(doc), f.output, out);
  return kExitOk;
}

int cmd_reproduce(const CommonFlags& f, const std::vector<std::string>& sections, std::ostream& out) {
  ReproOptions options;
  options.seed = f.seed;
  options.restarts = witness_flags(f).restarts;
  options.gradient_tol = f.tol;
  options.sections = sections;
  const ReportDocument doc = run_reproduction(options);
  emit(f.format == "text" ? doc.to_text() : dump_json(doc.to_json()), f.output, out);
  return doc.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Teleportation of unknown two-qubit states through four-qubit channels", "entqc"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string state_text;
  std::string triad_text = "A1,A2,B1";
  std::vector<std::string> sections;

  const auto add_common = [&](CLI::App* sub, bool witness) {
    sub->add_option("--seed", flags.seed, "Random seed")->envname("ENTQC_SEED");
    sub->add_option("--output", flags.output, "Write the report to this path instead of stdout");
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (witness) {
      sub->add_option("--restarts", flags.restarts, "Witness search restarts");
      sub->add_option("--tol", flags.tol, "Witness search gradient-norm tolerance");
    }
  };

  auto* teleport = app.add_subcommand("teleport", "Run all sixteen outcomes of the protocol");
  teleport->add_option("--channel", flags.channel, "Built-in channel name or channel JSON path");
  teleport->add_option("--state", state_text, "Unknown state as 8 comma-separated reals (re,im pairs)");
  add_common(teleport, false);

  auto* analyze = app.add_subcommand("analyze", "Entanglement structure of a channel");
  analyze->add_option("--channel", flags.channel, "Built-in channel name or channel JSON path");
  add_common(analyze, true);

  auto* witness = app.add_subcommand("witness", "Minimize the GHZ witness on one triad");
  witness->add_option("--channel", flags.channel, "Built-in channel name or channel JSON path");
  witness->add_option("--triad", triad_text, "Three comma-separated qubit labels");
  add_common(witness, true);

  auto* reproduce = app.add_subcommand("reproduce", "Run the full reproduction suite");
  reproduce->add_option("--section", sections, "Run only these sections")
      ->check(CLI::IsMember(reproduction_section_names()));
  add_common(reproduce, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*teleport) return cmd_teleport(flags, state_text, out, err);
    if (*analyze) return cmd_analyze(flags, out);
    if (*witness) return cmd_witness(flags, triad_text, out);
    return cmd_reproduce(flags, sections, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"entqc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace entqc
