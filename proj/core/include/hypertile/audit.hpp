#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace hypertile {

/// Outcome of one verification check: a pass/fail verdict, the smallest
/// slack seen across the scanned inequality instances, an optional
/// witness (grid point of minimal slack or first violation), and the
/// scan parameters that make the run self-describing.
struct AuditReport {
  std::string check;
  bool passed = false;
  double min_slack = 0.0;
  std::optional<double> witness;
  nlohmann::json grid = nlohmann::json::object();
};

}  // namespace hypertile
