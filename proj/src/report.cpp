#include "pdsaw/report.hpp"

#include "pdsaw/stats.hpp"

namespace pdsaw {

using nlohmann::json;

json stat_report_json(const Object& object) {
  json report;
  Kind kind = kind_of(object);
  report["kind"] = kind_name(kind);
  report["n"] = object_size(object);
  for (const auto& stat : statistic_names(kind)) {
    // last descent and first zero are undefined for empty objects
    if (object_size(object) == 0 && (stat == "last_descent" || stat == "first_zero")) continue;
    report[stat] = statistic_value(object, stat);
  }
  report["factors"] = factor_sizes(object);
  return report;
}

json trace_json(const RuleTrace& trace) {
  json out = json::array();
  for (const auto& app : trace.applied) out.push_back({{"rule", app.rule}, {"at", app.at}});
  return out;
}

namespace {

json bigint_json(const BigInt& value) {
  // JSON numbers are kept within int64; anything larger goes out as a string.
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return static_cast<std::int64_t>(value);
  return value.str();
}

}  // namespace

json poly_json(const QPoly& poly, const std::string& var) {
  json coeffs = json::object();
  for (const auto& [exp, coeff] : poly.coeffs()) coeffs[std::to_string(exp)] = bigint_json(coeff);
  return {{"var", var}, {"coeffs", coeffs}, {"pretty", poly.str()}};
}

json series_json(const RationalSeries& series, const std::string& var) {
  json coeffs = json::array();
  for (const BigInt& coeff : series.integer_coefficients()) coeffs.push_back(bigint_json(coeff));
  return {{"var", var}, {"coeffs", coeffs}};
}

json verify_report_json(const VerifyReport& report) {
  json failures = json::array();
  for (const auto& failure : report.failures)
    failures.push_back(
        {{"input", failure.input}, {"expected", failure.expected}, {"actual", failure.actual}});
  return {{"suite", report.suite},
          {"params", report.params},
          {"cases", report.cases},
          {"failures", failures}};
}

}  // namespace pdsaw
