#pragma once

#include <iosfwd>
#include <string>

namespace nashgadgets::cli {

struct RunConfig {
  std::string command;
  std::string in;
  std::string out;
  std::string bsys_out;
  std::string gadget;
  std::string u = "0";
  int k = 2;
  bool simple_bot = false;
  bool normalize = false;
  bool augment_irrational = false;

  std::string property = "ne";
  std::string profile;
  std::string pure;
  std::string eps = "1/1024";
  int grid = 0;
  std::string b1;
  std::string b2;
  std::size_t cell_budget = 400000;

  int max_support = 0;
  double tolerance = 1e-12;
  std::size_t budget = 2000000;
  unsigned long long seed = 1;

  std::string suite = "all";
  int count = 10;
  int max_vars = 3;
  int max_equations = 3;
};

/// Exit status: 0 when every check passes, 1 on a verification failure.
/// Library errors propagate to the caller.
int run(const RunConfig& cfg, std::ostream& os);

}  // namespace nashgadgets::cli
