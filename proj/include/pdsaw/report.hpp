#pragma once

#include <json.hpp>

#include "pdsaw/bijections.hpp"
#include "pdsaw/objects.hpp"
#include "pdsaw/qpoly.hpp"
#include "pdsaw/rational_series.hpp"
#include "pdsaw/verify.hpp"

namespace pdsaw {

// Flat statistics report, carrying exactly the statistics defined for the
// object's kind plus "kind" and "n".
nlohmann::json stat_report_json(const Object& object);

nlohmann::json trace_json(const RuleTrace& trace);

// {"var":"q","coeffs":{"0":2,"1":1}}; exponents as string keys so Laurent
// polynomials serialize uniformly.
nlohmann::json poly_json(const QPoly& poly, const std::string& var = "q");

// {"var":"t","coeffs":[...]}; requires integral coefficients.
nlohmann::json series_json(const RationalSeries& series, const std::string& var = "t");

nlohmann::json verify_report_json(const VerifyReport& report);

}  // namespace pdsaw
