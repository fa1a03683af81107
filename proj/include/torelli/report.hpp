#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace torelli {

struct ReportCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;

  friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

struct ReplicationReport {
  int genus = 5;
  std::vector<ReportCheck> checks;

  bool overall_pass() const;
  friend bool operator==(const ReplicationReport&, const ReplicationReport&) = default;
};

/// Recomputes every reference value (forms on the twist data, surgery values,
/// cocycle coefficients, obstruction value, projections). Throws
/// std::invalid_argument for genus < 5.
ReplicationReport build_report(int genus);

std::string report_text(const ReplicationReport& r);
std::string report_json(const ReplicationReport& r);
/// Inverse of report_json. Throws std::invalid_argument on malformed input.
ReplicationReport report_from_json(std::string_view text);

}  // namespace torelli
