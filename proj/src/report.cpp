#include "latconv/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latconv {

using nlohmann::json;

json ext_json(const ExtReal& x) { return x.str(); }

void Report::merge(std::vector<ReportEntry> more) {
  for (auto& e : more) entries_.push_back(std::move(e));
}

void Report::sort() {
  std::stable_sort(entries_.begin(), entries_.end(), [](const ReportEntry& a, const ReportEntry& b) {
    return a.check != b.check ? a.check < b.check : a.inputs < b.inputs;
  });
}

json Report::to_json() const {
  json out = json::array();
  for (const auto& e : entries_) {
    out.push_back({{"check", e.check},
                   {"inputs", e.inputs},
                   {"lhs", e.lhs},
                   {"rhs", e.rhs},
                   {"gap", e.gap},
                   {"status", to_string(e.status)},
                   {"witness", e.witness}});
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string plain(const json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "check,inputs,lhs,rhs,gap,status,witness\n";
  for (const auto& e : entries_) {
    os << csv_field(e.check) << ',' << csv_field(e.inputs) << ',' << csv_field(plain(e.lhs)) << ','
       << csv_field(plain(e.rhs)) << ',' << csv_field(plain(e.gap)) << ',' << to_string(e.status) << ','
       << csv_field(plain(e.witness)) << '\n';
  }
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << to_string(e.status) << "  " << e.check;
    if (!e.inputs.empty()) os << "  " << e.inputs;
    if (!e.lhs.is_null()) os << "  lhs=" << plain(e.lhs);
    if (!e.rhs.is_null()) os << "  rhs=" << plain(e.rhs);
    if (!e.gap.is_null()) os << "  gap=" << plain(e.gap);
    if (e.status != CheckStatus::Pass && !e.witness.is_null()) os << "  witness=" << e.witness.dump();
    os << '\n';
  }
  os << entries_.size() << " checks: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail)
     << " fail, " << count(CheckStatus::Skipped) << " skipped, " << count(CheckStatus::HypothesisViolation)
     << " hypothesis_violation\n";
  return os.str();
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const ReportEntry& e) { return e.status == s; }));
}

int Report::exit_code() const {
  if (count(CheckStatus::Fail) > 0) return 1;
  if (count(CheckStatus::Skipped) + count(CheckStatus::HypothesisViolation) > 0) return 2;
  return 0;
}

std::string validate_report_json(const json& j) {
  static const std::set<std::string> statuses = {"pass", "fail", "skipped", "hypothesis_violation"};
  static const std::set<std::string> keys = {"check", "inputs", "lhs", "rhs", "gap", "status", "witness"};
  if (!j.is_array()) return "report is not an array";
  std::pair<std::string, std::string> prev;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    std::string where = "entry " + std::to_string(i);
    if (!e.is_object()) return where + " is not an object";
    for (auto it = e.begin(); it != e.end(); ++it) {
      if (!keys.count(it.key())) return where + " has unknown key " + it.key();
    }
    for (const auto& k : keys) {
      if (!e.contains(k)) return where + " lacks " + k;
    }
    if (!e["check"].is_string() || !e["inputs"].is_string()) return where + ": check and inputs must be strings";
    for (const char* k : {"lhs", "rhs", "gap"}) {
      if (!e[k].is_null() && !e[k].is_string()) return where + ": " + k + " must be a string or null";
      if (e[k].is_string()) {
        try {
          ExtReal::parse(e[k].get<std::string>());
        } catch (const std::exception&) {
          return where + ": " + k + " is not an extended real";
        }
      }
    }
    if (!e["status"].is_string() || !statuses.count(e["status"].get<std::string>())) return where + ": bad status";
    if (!e["witness"].is_null() && !e["witness"].is_object()) return where + ": witness must be an object or null";
    std::pair<std::string, std::string> key{e["check"], e["inputs"]};
    if (i > 0 && key < prev) return where + " is out of order";
    prev = key;
  }
  return "";
}

}  // namespace latconv
