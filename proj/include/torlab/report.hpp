#pragma once

#include <string>

#include "json.hpp"

namespace torlab {

using json = nlohmann::json;

enum class Status { Pass, Fail, Unknown };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

/// fail dominates unknown, unknown dominates pass.
inline Status worst(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Unknown || b == Status::Unknown) return Status::Unknown;
  return Status::Pass;
}

/// Outcome of an instance check: overall status plus one entry per sub-assertion.
struct Report {
  Status status = Status::Pass;
  json assertions = json::array();
  json witnesses = json::array();

  /// Records a sub-assertion; a false condition fails the report.
  bool expect(const std::string& name, bool ok, json detail = nullptr) {
    record(name, ok ? Status::Pass : Status::Fail, std::move(detail));
    return ok;
  }
  void record(const std::string& name, Status s, json detail = nullptr) {
    json a = {{"name", name}, {"status", to_string(s)}};
    if (!detail.is_null()) a["detail"] = std::move(detail);
    assertions.push_back(std::move(a));
    status = worst(status, s);
  }
  void merge(const std::string& prefix, const Report& other) {
    for (auto a : other.assertions) {
      a["name"] = prefix + "/" + a["name"].get<std::string>();
      assertions.push_back(std::move(a));
    }
    for (const auto& w : other.witnesses) witnesses.push_back(w);
    status = worst(status, other.status);
  }
  json to_json() const { return {{"status", to_string(status)}, {"assertions", assertions}, {"witnesses", witnesses}}; }
};

}  // namespace torlab
