#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcrystal {
namespace cli {

/// One verification outcome.  A failing report always carries a witness
/// (counterexample or diagnostic); max_error is present exactly for
/// numeric checks.
struct CheckReport {
  std::string check;
  std::map<std::string, std::string> params;
  enum class Status { Pass, Fail, Skipped } status = Status::Pass;
  std::optional<double> max_error;
  std::optional<std::string> witness;
};

inline CheckReport pass_report(std::string check, std::map<std::string, std::string> params,
                               std::optional<std::string> witness = std::nullopt,
                               std::optional<double> max_error = std::nullopt) {
  return {std::move(check), std::move(params), CheckReport::Status::Pass, max_error,
          std::move(witness)};
}

inline CheckReport fail_report(std::string check, std::map<std::string, std::string> params,
                               std::string witness,
                               std::optional<double> max_error = std::nullopt) {
  return {std::move(check), std::move(params), CheckReport::Status::Fail, max_error,
          std::move(witness)};
}

inline const char* status_name(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::Pass: return "pass";
    case CheckReport::Status::Fail: return "fail";
    case CheckReport::Status::Skipped: return "skipped";
  }
  return "?";
}

inline std::string params_key(const std::map<std::string, std::string>& params) {
  std::string k;
  for (const auto& [a, b] : params) k += a + "=" + b + ";";
  return k;
}

/// Deterministic report order: by (check name, serialized params).
inline void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check != b.check) return a.check < b.check;
    return params_key(a.params) < params_key(b.params);
  });
}

inline std::string emit_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["check"] = r.check;
    o["params"] = r.params;
    o["status"] = status_name(r.status);
    if (r.max_error) o["max_error"] = *r.max_error;
    if (r.witness) o["witness"] = *r.witness;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

inline std::string emit_text(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += std::string("[") + status_name(r.status) + "] " + r.check;
    if (!r.params.empty()) {
      out += " (";
      bool first = true;
      for (const auto& [k, v] : r.params) {
        if (!first) out += ", ";
        out += k + "=" + v;
        first = false;
      }
      out += ")";
    }
    if (r.max_error) out += " max_error=" + std::to_string(*r.max_error);
    if (r.witness) out += " :: " + *r.witness;
    out += "\n";
  }
  return out;
}

inline std::string emit(const std::vector<CheckReport>& reports, const std::string& format) {
  if (format == "json") return emit_json(reports);
  if (format == "text") return emit_text(reports);
  throw std::invalid_argument("unknown format: " + format);
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckReport::Status::Fail) return false;
  return true;
}

}  // namespace cli
}  // namespace qcrystal
