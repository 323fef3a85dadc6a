#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdsaw/enumerate.hpp"

namespace pdsaw {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::string params;
  std::uint64_t cases = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  // Uniform size bound; -1 selects the per-suite default sizes used by the
  // acceptance run (e.g. roundtrip: symmetric side 6, asymmetric side 7).
  int max_n = -1;
  std::uint64_t cap = kDefaultCap;
  int jobs = 1;
};

// Suites: counts, roundtrip, thm1, thm2, thm3, kz, fz, touchard, williams,
// cf, free-gf, symmetry.
const std::vector<std::string>& verify_suite_names();
VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options = {});
std::vector<VerifyReport> run_all_suites(const VerifyOptions& options = {});

}  // namespace pdsaw
