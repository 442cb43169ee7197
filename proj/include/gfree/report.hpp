#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

namespace gfree {

enum class Status { Checked, Vacuous, Error };

const char* status_name(Status s);

/// Outcome of one named check. pass implies status == Checked, and a
/// counterexample (graph6) is attached exactly when a checked claim fails.
struct Report {
  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  Status status = Status::Checked;
  nlohmann::json witness;  // null when absent
  std::optional<std::string> counterexample;
  long long runtime_ms = 0;
  // Per-clause or per-instance outcomes.
  nlohmann::json details = nlohmann::json::array();

  nlohmann::json to_json() const;
  std::string dump(int indent = -1) const { return to_json().dump(indent); }
};

/// Wall-clock stopwatch for runtime_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gfree
