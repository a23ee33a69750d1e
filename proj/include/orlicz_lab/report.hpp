#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orlicz_lab {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.3.0";

/// Finite doubles as numbers; infinities and NaN as the strings "inf", "-inf", "nan".
json number(double v);
json number_list(const std::vector<double>& v);

struct CheckRecord {
  std::string name;
  /// pass | fail | estimate
  std::string status;
  json values = json::object();
  json slacks = json::object();
  json witnesses = json::object();
};

/// Plot-ready grid: one row per point, cells already converted with number().
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct ReportEnvelope {
  std::string command;
  json config = json::object();
  std::optional<double> wall_time_seconds;
  std::vector<CheckRecord> checks;
  std::optional<Table> table;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  bool any_failed() const;
};

json to_json(const ReportEnvelope& r);
/// Single JSON document with sorted keys.
std::string render_json(const ReportEnvelope& r);
/// The table when present, otherwise one row per check.
std::string render_csv(const ReportEnvelope& r);

/// Writes to `path`, or to standard output when `path` is empty or "-".
/// Throws std::runtime_error naming the path on IO failure.
void emit(const ReportEnvelope& r, const std::string& format, const std::string& path);

}  // namespace orlicz_lab
