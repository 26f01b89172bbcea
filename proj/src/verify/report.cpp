#include "qcartan/verify/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qcartan::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::IntegralityViolation: return "integrality_violation";
    case Status::SkippedBudget: return "skipped_budget";
    case Status::Error: return "error";
  }
  return "error";
}

namespace {

Status status_from_string(const std::string& s) {
  if (s == "ok") return Status::Ok;
  if (s == "integrality_violation") return Status::IntegralityViolation;
  if (s == "skipped_budget") return Status::SkippedBudget;
  if (s == "error") return Status::Error;
  throw std::invalid_argument("unknown status: " + s);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

void CheckReport::check(bool ok, const std::string& what) {
  if (ok) ++assertions;
  else failed_assertions.push_back(what);
}

void CheckReport::set_sides(std::vector<std::string> l, std::vector<std::string> r) {
  lhs = std::move(l);
  rhs = std::move(r);
  equal = lhs == rhs;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["task"] = r.task;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["assertions"] = r.assertions;
  j["failed_assertions"] = r.failed_assertions;
  j["millis"] = r.millis;
  j["phi_choice"] = kPhiChoice;
  j["order_version"] = kOrderVersion;
  j["status"] = to_string(r.status);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.local_case) j["case"] = *r.local_case;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

CheckReport from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported report schema");
  CheckReport r;
  r.task = j.at("task").get<std::string>();
  r.params = j.at("params");
  r.lhs = j.at("lhs").get<std::vector<std::string>>();
  r.rhs = j.at("rhs").get<std::vector<std::string>>();
  r.equal = j.at("equal").get<bool>();
  r.assertions = j.at("assertions").get<long>();
  r.failed_assertions = j.value("failed_assertions", std::vector<std::string>{});
  r.millis = j.at("millis").get<long>();
  r.status = status_from_string(j.value("status", std::string("ok")));
  r.detail = j.value("detail", std::string());
  if (j.contains("case")) r.local_case = j.at("case").get<int>();
  if (j.contains("extra")) r.extra = j.at("extra");
  return r;
}

std::string csv_header() {
  return "schema,task,params,equal,assertions,failed_assertions,millis,phi_choice,order_version,status,case,lhs,rhs";
}

std::string to_csv_row(const CheckReport& r) {
  std::ostringstream os;
  os << kSchemaVersion << ',' << csv_field(r.task) << ',' << csv_field(r.params.dump()) << ','
     << (r.equal ? "true" : "false") << ',' << r.assertions << ',' << csv_field(join(r.failed_assertions, ";")) << ','
     << r.millis << ',' << kPhiChoice << ',' << kOrderVersion << ',' << to_string(r.status) << ','
     << (r.local_case ? std::to_string(*r.local_case) : std::string()) << ',' << csv_field(join(r.lhs, ";")) << ','
     << csv_field(join(r.rhs, ";"));
  return os.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
  bool mismatch = false;
  for (const auto& r : reports) {
    if (r.status == Status::IntegralityViolation) return 3;
    if (r.status == Status::SkippedBudget) continue;
    if (!r.passed()) mismatch = true;
  }
  return mismatch ? 1 : 0;
}

}  // namespace qcartan::verify
