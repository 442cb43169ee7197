#include "gfree/report.hpp"

namespace gfree {

const char* status_name(Status s) {
  switch (s) {
    case Status::Checked: return "checked";
    case Status::Vacuous: return "vacuous";
    case Status::Error: return "error";
  }
  return "error";
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["pass"] = pass;
  j["status"] = status_name(status);
  j["witness"] = witness;
  j["counterexample"] = counterexample ? nlohmann::json(*counterexample) : nlohmann::json();
  j["runtime_ms"] = runtime_ms;
  j["details"] = details;
  return j;
}

}  // namespace gfree
