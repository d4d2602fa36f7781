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

#include "entqc/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entqc {

namespace {

const char* relation_name(Check::Relation r) {
  switch (r) {
    case Check::Relation::equals: return "equals";
    case Check::Relation::at_most: return "at_most";
    case Check::Relation::informational: return "info";
  }
  return "info";
}

std::string format_number(const nlohmann::json& v) {
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(10);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

}  // namespace

Check Check::equals(std::string name, double value, double expected, double tolerance) {
  const bool ok = std::isfinite(value) && std::abs(value - expected) <= tolerance;
  return {std::move(name), value, expected, tolerance, Relation::equals, ok};
}

Check Check::at_most(std::string name, double value, double bound) {
  const bool ok = std::isfinite(value) && value <= bound;
  return {std::move(name), value, 0.0, bound, Relation::at_most, ok};
}

Check Check::holds(std::string name, bool condition) {
  return {std::move(name), condition ? 1.0 : 0.0, 1.0, 0.0, Relation::equals, condition};
}

Check Check::info(std::string name, double value, double tolerance) {
  return {std::move(name), value, 0.0, tolerance, Relation::informational, true};
}

bool Section::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.gates() || c.pass; });
}

bool ReportDocument::pass() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.pass(); });
}

nlohmann::json ReportDocument::to_json() const {
  nlohmann::json doc;
  doc["command"] = command;
  doc["pass"] = pass();
  doc["sections"] = nlohmann::json::array();
  for (const auto& s : sections) {
    nlohmann::json js;
    js["name"] = s.name;
    js["title"] = s.title;
    js["pass"] = s.pass();
    js["checks"] = nlohmann::json::array();
    for (const auto& c : s.checks) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["value"] = c.value;
      if (c.relation == Check::Relation::equals) jc["expected"] = c.expected;
      jc["tolerance"] = c.tolerance;
      jc["relation"] = relation_name(c.relation);
      jc["pass"] = c.pass;
      js["checks"].push_back(std::move(jc));
    }
    if (!s.details.empty()) js["details"] = s.details;
    doc["sections"].push_back(std::move(js));
  }
  return doc;
}

std::string ReportDocument::to_text() const {
  const nlohmann::json doc = to_json();
  std::ostringstream os;
  os << doc["command"].get<std::string>() << ": " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& s : doc["sections"]) {
    os << "\n== " << s["name"].get<std::string>() << " -- " << s["title"].get<std::string>() << " ["
       << (s["pass"].get<bool>() ? "PASS" : "FAIL") << "]\n";
    for (const auto& c : s["checks"]) {
      const std::string rel = c["relation"].get<std::string>();
      os << "  " << (rel == "info" ? "[INFO]" : (c["pass"].get<bool>() ? "[PASS]" : "[FAIL]")) << " "
         << c["name"].get<std::string>() << ": " << format_number(c["value"]);
      if (c.contains("expected")) os << " (expected " << format_number(c["expected"]) << ")";
      if (rel == "at_most") os << " (<= " << format_number(c["tolerance"]) << ")";
      if (rel == "equals") os << " tol " << format_number(c["tolerance"]);
      os << "\n";
    }
  }
  return os.str();
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace entqc
