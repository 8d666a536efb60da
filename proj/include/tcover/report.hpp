#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tcover/log_real.hpp"

namespace tcover {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

/// One evaluated inequality lhs <= rhs.
struct ConditionPoint {
  std::string label;
  std::int64_t index = 0;
  LogReal lhs;
  LogReal rhs;
  /// Present when lhs comes from an empirical law: a z = 3 interval.
  std::optional<std::pair<LogReal, LogReal>> lhs_interval;
  Verdict verdict = Verdict::pass;
  /// Reported but excluded from the overall verdict.
  bool informational = false;

  /// ln rhs - ln lhs; +inf when lhs <= 0 < rhs, -inf when rhs <= 0 < lhs.
  double margin() const;
};

ConditionPoint evaluate_point(std::string label, std::int64_t index, LogReal lhs, LogReal rhs);
/// PASS if hi <= rhs, FAIL if lo > rhs, otherwise INCONCLUSIVE.
ConditionPoint evaluate_interval(std::string label, std::int64_t index, LogReal lhs, LogReal lo, LogReal hi,
                                 LogReal rhs);

struct ConditionReport {
  std::string id;
  std::vector<ConditionPoint> points;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  void add(ConditionPoint p) { points.push_back(std::move(p)); }
  /// Conjunction over non-informational points: any FAIL wins, then any
  /// INCONCLUSIVE, else PASS (also for an empty range).
  Verdict overall() const;
  const ConditionPoint* find(const std::string& label, std::int64_t index) const;
};

nlohmann::json to_json(const LogReal& x);
nlohmann::json to_json(const ConditionPoint& p);
nlohmann::json to_json(const ConditionReport& r);

/// 0 PASS, 1 FAIL, 2 INCONCLUSIVE.
int exit_code(Verdict v);

}  // namespace tcover
