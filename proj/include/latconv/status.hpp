#pragma once

#include <string>

namespace latconv {

enum class CheckStatus { Pass, Fail, Skipped, HypothesisViolation };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
    case CheckStatus::HypothesisViolation:
      return "hypothesis_violation";
  }
  return "fail";
}

}  // namespace latconv
