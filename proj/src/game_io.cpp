#include <fstream>
#include <sstream>

#include "nashgadgets/errors.hpp"
#include "nashgadgets/game.hpp"

namespace nashgadgets {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kBadParameter, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kBadParameter, "cannot write " + path);
  out << text;
}

std::string format_game(const StrategicGame& game) {
  std::ostringstream os;
  os << "game 1\n";
  for (const auto& [k, v] : game.meta()) os << "# meta " << k << ' ' << v << '\n';
  os << "players " << game.players() << '\n';
  os << "actions";
  for (int c : game.action_counts()) os << ' ' << c;
  os << '\n';
  for (int p = 0; p < game.players(); ++p) {
    os << "labels " << p + 1;
    for (const auto& l : game.labels(p)) os << ' ' << l;
    os << '\n';
  }
  for (std::size_t idx = 0; idx < game.cell_count(); ++idx) {
    os << "payoff";
    for (int a : game.profile_at(idx)) os << ' ' << a;
    os << " :";
    for (int p = 0; p < game.players(); ++p) os << ' ' << game.payoff(idx, p).str();
    os << '\n';
  }
  return os.str();
}

namespace {

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw SyntaxError(line, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw SyntaxError(line, "bad integer '" + s + "'");
  }
}

}  // namespace

StrategicGame parse_game(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  int players = -1;
  StrategicGame game;
  bool have_actions = false;
  std::map<std::string, std::string> meta;
  std::vector<char> seen;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (tok[0][0] == '#') {
      if (tok[0] == "#" && tok.size() >= 3 && tok[1] == "meta") {
        std::string value;
        for (std::size_t i = 3; i < tok.size(); ++i) value += (i > 3 ? " " : "") + tok[i];
        meta[tok[2]] = value;
      }
      continue;
    }
    if (!header) {
      if (tok.size() != 2 || tok[0] != "game" || tok[1] != "1") throw SyntaxError(line, "expected 'game 1' header");
      header = true;
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "players") {
      if (tok.size() != 2) throw SyntaxError(line, "players takes one value");
      players = to_int(tok[1], line);
      if (players < 2) throw SyntaxError(line, "need at least 2 players");
    } else if (kw == "actions") {
      if (players < 0) throw SyntaxError(line, "actions before players");
      if (static_cast<int>(tok.size()) != players + 1) throw SyntaxError(line, "actions needs one count per player");
      std::vector<int> counts;
      for (int p = 0; p < players; ++p) {
        counts.push_back(to_int(tok[p + 1], line));
        if (counts.back() < 1) throw SyntaxError(line, "action counts must be positive");
      }
      game = StrategicGame(counts);
      seen.assign(game.cell_count(), 0);
      have_actions = true;
    } else if (kw == "labels") {
      if (!have_actions) throw SyntaxError(line, "labels before actions");
      if (tok.size() < 2) throw SyntaxError(line, "labels needs a player");
      int p = to_int(tok[1], line);
      if (p < 1 || p > players) throw SyntaxError(line, "label player out of range");
      std::vector<std::string> ls(tok.begin() + 2, tok.end());
      if (static_cast<int>(ls.size()) != game.actions(p - 1)) throw SyntaxError(line, "label count differs from action count");
      game.set_labels(p - 1, ls);
    } else if (kw == "payoff") {
      if (!have_actions) throw SyntaxError(line, "payoff before actions");
      if (static_cast<int>(tok.size()) != 2 * players + 2 || tok[players + 1] != ":") {
        throw SyntaxError(line, "payoff line must read 'payoff i1 .. im : r1 .. rm'");
      }
      PureProfile a(players);
      for (int p = 0; p < players; ++p) {
        a[p] = to_int(tok[p + 1], line);
        if (a[p] < 0 || a[p] >= game.actions(p)) throw SyntaxError(line, "action index out of range");
      }
      std::vector<Rational> u;
      for (int p = 0; p < players; ++p) {
        try {
          u.push_back(Rational::parse(tok[players + 2 + p]));
        } catch (const Error&) {
          throw SyntaxError(line, "bad payoff literal '" + tok[players + 2 + p] + "'");
        }
      }
      std::size_t idx = game.index(a);
      if (seen[idx]) throw SyntaxError(line, "duplicate payoff entry");
      seen[idx] = 1;
      game.set_payoffs(a, u);
    } else {
      throw SyntaxError(line, "unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw SyntaxError(line, "missing 'game 1' header");
  if (!have_actions) throw SyntaxError(line, "missing actions line");
  for (char s : seen) {
    if (!s) throw SyntaxError(line, "payoff table incomplete");
  }
  game.meta() = meta;
  return game;
}

std::string format_profile(const MixedProfile& x) {
  std::ostringstream os;
  os << "prof 1\n";
  for (const auto& s : x) {
    for (std::size_t a = 0; a < s.size(); ++a) os << (a ? " " : "") << s[a].literal();
    os << '\n';
  }
  return os.str();
}

MixedProfile parse_profile(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  MixedProfile x;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = split_ws(raw);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (first && tok.size() == 2 && tok[0] == "prof") {
      if (tok[1] != "1") throw SyntaxError(line, "unsupported profile version");
      first = false;
      continue;
    }
    first = false;
    x.push_back(parse_literals(tok, line));
  }
  if (x.empty()) throw SyntaxError(line, "empty profile");
  return x;
}

}  // namespace nashgadgets
