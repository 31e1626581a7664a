#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "profin/rational.hpp"

namespace profin::cli {

using json = nlohmann::ordered_json;

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitPartial = 2;

struct Report {
  std::string command;
  json job = json::object();
  /// Every item carries "item" and "status" ("ok" or "error") first.
  std::vector<json> items;
  json summary = json::object();

  std::size_t failed() const;
  int exit_code() const;
};

json ok_item(const std::string& name);
json error_item(const std::string& name, const std::string& kind, const std::string& message);

/// Integers that fit in 64 bits as numbers, larger ones as decimal strings.
json big(const BigInt& value);
/// "num/den".
json fraction(const Rational& value);

std::string render_json(const Report& report);
/// One row per item; nested objects become dotted columns and arrays are
/// written as compact JSON. Columns appear in first-seen order.
std::string render_csv(const Report& report);

}  // namespace profin::cli
