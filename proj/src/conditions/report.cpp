#include "tcover/report.hpp"

#include <cmath>
#include <limits>

namespace tcover {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

double ConditionPoint::margin() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const bool lhs_pos = lhs.sign() > 0;
  const bool rhs_pos = rhs.sign() > 0;
  if (lhs_pos && rhs_pos) return rhs.log_abs() - lhs.log_abs();
  if (!lhs_pos && rhs_pos) return inf;
  if (lhs_pos && !rhs_pos) return -inf;
  return lhs <= rhs ? inf : -inf;
}

ConditionPoint evaluate_point(std::string label, std::int64_t index, LogReal lhs, LogReal rhs) {
  ConditionPoint p;
  p.label = std::move(label);
  p.index = index;
  p.lhs = lhs;
  p.rhs = rhs;
  p.verdict = lhs <= rhs ? Verdict::pass : Verdict::fail;
  return p;
}

ConditionPoint evaluate_interval(std::string label, std::int64_t index, LogReal lhs, LogReal lo, LogReal hi,
                                 LogReal rhs) {
  ConditionPoint p = evaluate_point(std::move(label), index, lhs, rhs);
  p.lhs_interval = std::make_pair(lo, hi);
  if (hi <= rhs) {
    p.verdict = Verdict::pass;
  } else if (lo > rhs) {
    p.verdict = Verdict::fail;
  } else {
    p.verdict = Verdict::inconclusive;
  }
  return p;
}

Verdict ConditionReport::overall() const {
  bool inconclusive = false;
  for (const auto& p : points) {
    if (p.informational) continue;
    if (p.verdict == Verdict::fail) return Verdict::fail;
    if (p.verdict == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::pass;
}

const ConditionPoint* ConditionReport::find(const std::string& label, std::int64_t index) const {
  for (const auto& p : points) {
    if (p.label == label && p.index == index) return &p;
  }
  return nullptr;
}

nlohmann::json to_json(const LogReal& x) {
  return nlohmann::json{{"sign", x.sign()}, {"log_abs", x.log_abs()}, {"decimal", x.to_string(10)}};
}

nlohmann::json to_json(const ConditionPoint& p) {
  nlohmann::json j{{"label", p.label},
                   {"index", p.index},
                   {"lhs", to_json(p.lhs)},
                   {"rhs", to_json(p.rhs)},
                   {"verdict", to_string(p.verdict)},
                   {"informational", p.informational}};
  const double m = p.margin();
  // JSON has no infinities; +inf means the lhs vanishes
  j["margin"] = std::isfinite(m) ? nlohmann::json(m) : nlohmann::json(m > 0 ? "+inf" : "-inf");
  if (p.lhs_interval) {
    j["lhs_interval"] = {to_json(p.lhs_interval->first), to_json(p.lhs_interval->second)};
  }
  return j;
}

nlohmann::json to_json(const ConditionReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  return nlohmann::json{{"id", r.id},
                        {"verdict", to_string(r.overall())},
                        {"points", points},
                        {"warnings", r.warnings},
                        {"notes", r.notes}};
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::inconclusive:
      return 2;
  }
  return 1;
}

}  // namespace tcover
