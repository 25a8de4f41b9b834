#pragma once

// Verification reports: a sorted array of check entries
//   {check, inputs, lhs, rhs, gap, status, witness}
// where lhs/rhs/gap are exact extended reals as strings ("-1/2", "+inf") or
// null, and witness is null or an object.

#include <string>
#include <vector>

#include "json.hpp"
#include "latconv/ext_real.hpp"
#include "latconv/status.hpp"

namespace latconv {

struct ReportEntry {
  std::string check;
  std::string inputs;
  nlohmann::json lhs = nullptr, rhs = nullptr, gap = nullptr;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json witness = nullptr;
};

nlohmann::json ext_json(const ExtReal& x);

class Report {
 public:
  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void merge(std::vector<ReportEntry> more);
  /// Orders entries by (check, inputs).
  void sort();
  const std::vector<ReportEntry>& entries() const { return entries_; }

  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;

  std::size_t count(CheckStatus s) const;
  /// 0 all pass, 1 some failure, 2 only skips or hypothesis violations besides passes.
  int exit_code() const;

 private:
  std::vector<ReportEntry> entries_;
};

/// Checks a parsed report against the documented shape; returns a problem or "".
std::string validate_report_json(const nlohmann::json& j);

}  // namespace latconv
