/*
   Copyright 2026 The qmads Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qmads {

inline constexpr const char* kToolVersion = "0.4.0";
inline constexpr const char* kReportSchema = "qmads-report/1";

/// Distinct marks a difference that is required to be nonzero and is.
enum class Verdict { InIdeal, Zero, NotInIdeal, NonZero, Distinct };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::InIdeal: return "in-ideal";
    case Verdict::Zero: return "zero";
    case Verdict::NotInIdeal: return "not-in-ideal";
    case Verdict::NonZero: return "nonzero";
    case Verdict::Distinct: return "distinct";
  }
  return "?";
}

inline bool passing(Verdict v) { return v == Verdict::InIdeal || v == Verdict::Zero || v == Verdict::Distinct; }

struct ReportItem {
  std::string id;
  Verdict verdict = Verdict::Zero;
  std::string strategy;
  std::optional<std::uint64_t> seed;
  int degree = 0;
  double elapsed_ms = 0;
  std::string detail;  // remainder or witness for failures
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string braiding;
  std::string algebra;
  std::string identity;
  std::string anchor;
  std::vector<ReportItem> items;  // in the order the checks are enumerated

  bool passed() const {
    for (const auto& it : items)
      if (!passing(it.verdict)) return false;
    return !items.empty();
  }
  std::size_t passed_count() const {
    std::size_t n = 0;
    for (const auto& it : items) n += passing(it.verdict);
    return n;
  }
  void append(const VerificationReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

  nlohmann::ordered_json to_json(bool include_timing = true) const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = tool_version;
    j["braiding"] = braiding;
    j["algebra"] = algebra;
    j["identity"] = identity;
    j["anchor"] = anchor;
    j["status"] = passed() ? "pass" : "fail";
    j["passed"] = passed_count();
    j["total"] = items.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& it : items) {
      nlohmann::ordered_json e;
      e["id"] = it.id;
      e["verdict"] = to_string(it.verdict);
      e["strategy"] = it.strategy;
      if (it.seed) e["seed"] = *it.seed;
      else e["seed"] = nullptr;
      e["degree"] = it.degree;
      if (include_timing) e["elapsed_ms"] = it.elapsed_ms;
      if (!it.detail.empty()) e["detail"] = it.detail;
      arr.push_back(std::move(e));
    }
    j["items"] = std::move(arr);
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << identity << " [" << anchor << "]\n";
    os << "  braiding: " << braiding << "\n  algebra:  " << algebra << "\n";
    std::size_t w = 4;
    for (const auto& it : items) w = std::max(w, it.id.size());
    for (const auto& it : items) {
      os << "  " << std::left << std::setw(static_cast<int>(w)) << it.id << "  " << std::setw(12)
         << to_string(it.verdict) << " " << std::setw(8) << it.strategy;
      os << " seed=" << (it.seed ? std::to_string(*it.seed) : std::string("-"));
      os << " deg=" << it.degree << " " << std::fixed << std::setprecision(1) << it.elapsed_ms << "ms";
      if (!it.detail.empty()) os << "\n      " << it.detail;
      os << "\n";
    }
    os << "  status: " << (passed() ? "pass" : "fail") << " (" << passed_count() << "/" << items.size() << ")\n";
    return os.str();
  }
};

/// Wall-clock milliseconds since construction.
class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace qmads
