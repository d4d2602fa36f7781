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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace entqc {

/// One numeric result together with the tolerance it was judged against.
struct Check {
  enum class Relation { equals, at_most, informational };

  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::equals;
  bool pass = false;

  /// |value - expected| <= tolerance
  static Check equals(std::string name, double value, double expected, double tolerance);
  /// value <= bound
  static Check at_most(std::string name, double value, double bound);
  /// Boolean verdict stored as 1/0 against expected 1.
  static Check holds(std::string name, bool condition);
  /// Reported but never gates the section; `tolerance` is the threshold
  /// used when the value feeds a classification.
  static Check info(std::string name, double value, double tolerance = 0.0);

  bool gates() const { return relation != Relation::informational; }
};

struct Section {
  std::string name;
  std::string title;
  std::vector<Check> checks;
  nlohmann::json details = nlohmann::json::object();

  bool pass() const;
};

struct ReportDocument {
  std::string command;
  std::vector<Section> sections;

  bool pass() const;
  nlohmann::json to_json() const;
  /// Human-readable rendering derived from to_json().
  std::string to_text() const;
};

/// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace entqc
