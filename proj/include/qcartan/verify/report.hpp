#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcartan::verify {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kOrderVersion = 1;
inline constexpr const char* kPhiChoice = "glaisher";

enum class Status { Ok, IntegralityViolation, SkippedBudget, Error };

std::string to_string(Status s);

struct CheckReport {
  std::string task;
  Json params = Json::object();
  std::vector<std::string> lhs, rhs;
  bool equal = false;
  long assertions = 0;  // assertions that passed
  std::vector<std::string> failed_assertions;
  long millis = 0;
  Status status = Status::Ok;
  std::string detail;
  std::optional<int> local_case;
  Json extra = Json::object();

  /// Records a named sub-assertion.
  void check(bool ok, const std::string& what);
  /// Sets lhs, rhs and equal together so equal always reflects lhs == rhs.
  void set_sides(std::vector<std::string> l, std::vector<std::string> r);

  bool passed() const { return status == Status::Ok && equal && failed_assertions.empty(); }
};

Json to_json(const CheckReport& r);
CheckReport from_json(const Json& j);

/// Flat projection, one row per report.
std::string csv_header();
std::string to_csv_row(const CheckReport& r);

/// 0 if every report passed (budget skips excepted), 3 if any integrality violation, else 1.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace qcartan::verify
