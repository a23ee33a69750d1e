#include "orlicz_lab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace orlicz_lab {

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json number_list(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

bool ReportEnvelope::any_failed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

json to_json(const ReportEnvelope& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["command"] = r.command;
  j["config"] = r.config;
  if (r.wall_time_seconds) j["wall_time_seconds"] = *r.wall_time_seconds;
  json checks = json::array();
  std::size_t passed = 0, failed = 0, estimates = 0;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", c.status}, {"values", c.values}, {"slacks", c.slacks},
                      {"witnesses", c.witnesses}});
    if (c.status == "pass") ++passed;
    else if (c.status == "fail") ++failed;
    else ++estimates;
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", passed}, {"fail", failed}, {"estimate", estimates}};
  if (r.table) {
    json rows = json::array();
    for (const auto& row : r.table->rows) rows.push_back(row);
    j["table"] = {{"columns", r.table->columns}, {"rows", std::move(rows)}};
  }
  return j;
}

std::string render_json(const ReportEnvelope& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string csv_cell(const json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_number()) return v.dump();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_null()) return "";
  return csv_cell(json(v.dump()));
}

}  // namespace

std::string render_csv(const ReportEnvelope& r) {
  std::ostringstream os;
  if (r.table) {
    for (std::size_t k = 0; k < r.table->columns.size(); ++k) os << (k ? "," : "") << r.table->columns[k];
    os << "\n";
    for (const auto& row : r.table->rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_cell(row[k]);
      os << "\n";
    }
    return os.str();
  }
  os << "name,status,values,slacks,witnesses\n";
  for (const auto& c : r.checks)
    os << csv_cell(c.name) << "," << c.status << "," << csv_cell(c.values.dump()) << ","
       << csv_cell(c.slacks.dump()) << "," << csv_cell(c.witnesses.dump()) << "\n";
  return os.str();
}

void emit(const ReportEnvelope& r, const std::string& format, const std::string& path) {
  std::string text;
  if (format == "json") text = render_json(r);
  else if (format == "csv") text = render_csv(r);
  else throw std::invalid_argument("unknown output format '" + format + "' (expected json or csv)");
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace orlicz_lab
