#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace nashgadgets::cli {

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Claim> claims;
  double seconds = 0;
  bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Runs one suite ("all" is expanded by the caller). BadParameter on an
/// unknown name.
SuiteResult run_suite(const std::string& name, unsigned long long seed);

}  // namespace nashgadgets::cli
