#pragma once

// Line-oriented reports: one JSON object per line. The first line echoes the
// command and tolerances, the last carries the status and exit code.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppt/matrix.hpp"

namespace ppt::cli {

enum class ExitCode : int { ok = 0, check_failed = 1, usage = 2 };

class Report {
 public:
  Report(std::vector<std::string> command, const ToleranceConfig& tol);

  void check(const std::string& name, bool pass, std::optional<double> residual = {},
             nlohmann::json witness = nullptr);
  /// A computed quantity that is not itself pass/fail.
  void value(const std::string& name, nlohmann::json v);
  /// Any other record; `type` becomes the "type" key.
  void record(const std::string& type, nlohmann::json fields);

  bool all_pass() const noexcept { return all_pass_; }

  /// Prints every line and the status line; returns the exit code.
  int finish(std::ostream& out, bool human, ExitCode code,
             const std::string& message = {}) const;

 private:
  std::vector<nlohmann::json> lines_;
  bool all_pass_ = true;
};

nlohmann::json tolerance_json(const ToleranceConfig& tol);

}  // namespace ppt::cli
