#include "report.hpp"

#include <ostream>

namespace nashgadgets::cli {

void Report::print(std::ostream& os) const {
  for (const auto& l : lines_) os << l << '\n';
  if (records_.empty()) return;
  os << "--- json\n";
  for (const auto& r : records_) os << r.dump() << '\n';
}

std::string strategy_str(const Strategy& s) {
  std::string out = "(";
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (a) out += ", ";
    out += s[a].str();
  }
  return out + ")";
}

std::string profile_str(const MixedProfile& x) {
  std::string out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (p) out += " ";
    out += strategy_str(x[p]);
  }
  return out;
}

nlohmann::json profile_json(const MixedProfile& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : x) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : s) row.push_back(v.literal());
    j.push_back(row);
  }
  return j;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = status_name(v.status);
  j["exact"] = v.exact;
  if (v.resolution) j["resolution"] = v.resolution->str();
  if (v.deviation) {
    j["deviation"] = {{"player", v.deviation->player + 1},
                      {"action", v.deviation->action},
                      {"gain", v.deviation->gain.literal()}};
  }
  if (v.coalition) {
    nlohmann::json gains = nlohmann::json::array();
    for (const auto& g : v.coalition->gains) gains.push_back(g.literal());
    std::vector<int> members;
    for (int p : v.coalition->members) members.push_back(p + 1);
    j["coalition"] = {{"profile", profile_json(v.coalition->profile)}, {"members", members}, {"gains", gains}};
  }
  if (!v.payoffs.empty()) {
    nlohmann::json pay = nlohmann::json::array();
    for (const auto& p : v.payoffs) pay.push_back(p.literal());
    j["payoffs"] = pay;
  }
  if (v.cells) j["cells"] = v.cells;
  return j;
}

std::string join_ints(const std::vector<int>& v, int offset) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + offset);
  }
  return out + "}";
}

PlantedSystem plant_system(std::mt19937_64& rng, int n, int ell) {
  std::uniform_int_distribution<int> coef(-3, 3), den(1, 4);
  PlantedSystem out;
  out.sys.var_count = n;
  for (int i = 0; i < n; ++i) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(-d, d);
    out.solution.emplace_back(num(rng), d);
  }
  for (int k = 0; k < ell; ++k) {
    std::vector<Term> terms;
    Rational value(0);
    while (terms.empty()) {
      value = 0;
      for (int i = 0; i <= n; ++i) {
        for (int j = std::max(i, 1); j <= n; ++j) {
          int c = coef(rng);
          if (c == 0) continue;
          terms.push_back({c, i, j});
          Rational v(c);
          if (i > 0) v *= out.solution[i - 1];
          v *= out.solution[j - 1];
          value += v;
        }
      }
    }
    for (auto& t : terms) t.c *= value.den();
    mpz_class constant = -value.num();
    if (constant != 0) terms.push_back({constant, 0, 0});
    out.sys.equations.push_back(canonical_terms(terms));
  }
  return out;
}

}  // namespace nashgadgets::cli
