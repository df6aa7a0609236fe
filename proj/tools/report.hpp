#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "nashgadgets/analysis.hpp"
#include "nashgadgets/systems.hpp"

namespace nashgadgets::cli {

/// Plain text lines followed by a JSON-lines block.
class Report {
 public:
  void line(const std::string& text) { lines_.push_back(text); }
  void record(nlohmann::json j) { records_.push_back(std::move(j)); }
  void print(std::ostream& os) const;

 private:
  std::vector<std::string> lines_;
  std::vector<nlohmann::json> records_;
};

std::string strategy_str(const Strategy& s);
std::string profile_str(const MixedProfile& x);
nlohmann::json profile_json(const MixedProfile& x);
nlohmann::json verdict_json(const Verdict& v);
std::string join_ints(const std::vector<int>& v, int offset = 1);

struct PlantedSystem {
  QuadraticSystem sys;
  std::vector<Rational> solution;
};

/// Random integer system with a solution in [-1, 1]^n.
PlantedSystem plant_system(std::mt19937_64& rng, int n, int ell);

}  // namespace nashgadgets::cli
