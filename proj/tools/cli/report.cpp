#include "cli/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace profin::cli {

#ifndef PROFIN_VERSION
#define PROFIN_VERSION "0.0.0"
#endif

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const json& i) { return i.at("status") == "error"; }));
}

int Report::exit_code() const {
  const auto bad = failed();
  if (bad == 0) return kExitOk;
  return bad == items.size() ? kExitFailure : kExitPartial;
}

json ok_item(const std::string& name) {
  json j;
  j["item"] = name;
  j["status"] = "ok";
  return j;
}

json error_item(const std::string& name, const std::string& kind, const std::string& message) {
  json j;
  j["item"] = name;
  j["status"] = "error";
  j["error"] = kind;
  j["message"] = message;
  return j;
}

json big(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json fraction(const Rational& value) { return to_fraction_string(value); }

std::string render_json(const Report& report) {
  json out;
  out["tool"] = "profin";
  out["version"] = PROFIN_VERSION;
  out["command"] = report.command;
  out["job"] = report.job;
  out["items"] = report.items;
  json summary = report.summary;
  summary["items"] = report.items.size();
  summary["failed"] = report.failed();
  out["summary"] = summary;
  return out.dump(2) + "\n";
}

namespace {

void flatten(const json& value, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items()) flatten(sub, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_null()) {
    text = "";
  } else {
    text = value.dump();
  }
  out.emplace_back(prefix, text);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string render_csv(const Report& report) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& item : report.items) {
    rows.emplace_back();
    flatten(item, "", rows.back());
    for (const auto& [key, _] : rows.back()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_field(columns[c]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return kv.first == columns[c]; });
      if (it != row.end()) out << csv_field(it->second);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace profin::cli
