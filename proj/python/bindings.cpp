#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nashgadgets/analysis.hpp"
#include "nashgadgets/errors.hpp"
#include "nashgadgets/gadgets.hpp"
#include "nashgadgets/game.hpp"
#include "nashgadgets/symmetrize.hpp"
#include "nashgadgets/systems.hpp"

namespace py = pybind11;
using namespace nashgadgets;

namespace {

// Values cross the boundary as literal strings ("3/4", "alg 1 -1/6 6") so
// nothing is rounded on the way in or out.
using TextProfile = std::vector<std::vector<std::string>>;

QuadAlgebraic to_value(const std::string& s) {
  auto v = parse_literals(split_ws(s));
  if (v.size() != 1) throw Error(ErrorCode::kSyntaxError, "expected one literal, got '" + s + "'");
  return v[0];
}

MixedProfile to_profile(const TextProfile& p) {
  MixedProfile x;
  for (const auto& s : p) {
    Strategy st;
    for (const auto& v : s) st.push_back(to_value(v));
    x.push_back(std::move(st));
  }
  return x;
}

std::vector<std::string> to_text(const std::vector<QuadAlgebraic>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.literal());
  return out;
}

TextProfile to_text(const MixedProfile& x) {
  TextProfile out;
  for (const auto& s : x) out.push_back(to_text(s));
  return out;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["status"] = status_name(v.status);
  d["exact"] = v.exact;
  d["cells"] = v.cells;
  d["payoffs"] = to_text(v.payoffs);
  if (v.deviation) {
    py::dict w;
    w["player"] = v.deviation->player;
    w["action"] = v.deviation->action;
    w["gain"] = v.deviation->gain.literal();
    d["deviation"] = w;
  }
  if (v.coalition) {
    py::dict w;
    w["profile"] = to_text(v.coalition->profile);
    w["members"] = v.coalition->members;
    w["gains"] = to_text(v.coalition->gains);
    d["coalition"] = w;
  }
  if (v.resolution) d["resolution"] = v.resolution->str();
  if (!v.B1.empty() || !v.B2.empty()) {
    d["B1"] = v.B1;
    d["B2"] = v.B2;
  }
  return d;
}

BilinearSystem bilinear_from_text(const std::string& text, bool normalize, bool augment) {
  auto first = split_ws(text.substr(0, text.find('\n')));
  if (!first.empty() && first[0] == "bsys") return parse_bilinear(text);
  QuadraticSystem sys = parse_system(text);
  if (augment) sys = augment_irrational(sys);
  if (normalize) sys = normalize_to_promise(sys);
  return bilinearize_homogenize(sys);
}

StrategicGame reduce(const std::string& gadget, const std::string& text, bool normalize, bool augment,
                     bool simple_bot) {
  BilinearSystem bsys = bilinear_from_text(text, normalize, augment);
  if (gadget[0] != 'd') return build_G(parse_gadget_kind(gadget), bsys, simple_bot);
  auto g0 = build_G0(bsys);
  auto info = symmetrization_info(g0);
  bool prime = gadget == "dp0" || gadget == "dp1";
  auto d0 = prime ? build_D0(build_GplusPrime(g0), D0Variant::kRolePrime)
                  : build_D0(build_Gplus(g0).first, D0Variant::kRoleSum);
  if (gadget == "d0" || gadget == "dp0") return d0;
  if (gadget != "d1" && gadget != "d4" && gadget != "dp1") {
    throw Error(ErrorCode::kBadParameter, "unknown gadget '" + gadget + "'");
  }
  DVariant v = gadget == "d1" ? DVariant::kD1 : (gadget == "d4" ? DVariant::kD4 : DVariant::kDPrime1);
  return extend_symmetric(d0, info, v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact three-player game gadgets and equilibrium checks";

  static py::exception<Error> error(m, "NashGadgetsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(std::string(error_code_name(e.code())) + ": " + e.what());
      exc.attr("code") = error_code_name(e.code());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<StrategicGame>(m, "Game")
      .def(py::init<std::vector<int>>(), py::arg("action_counts"))
      .def_property_readonly("players", &StrategicGame::players)
      .def_property_readonly("action_counts", &StrategicGame::action_counts)
      .def("labels", &StrategicGame::labels, py::arg("player"))
      .def("find_action", &StrategicGame::find_action, py::arg("player"), py::arg("label"))
      .def("payoffs",
           [](const StrategicGame& g, const PureProfile& a) {
             std::vector<std::string> out;
             for (const auto& r : g.payoffs(a)) out.push_back(r.str());
             return out;
           },
           py::arg("actions"))
      .def("set_payoffs",
           [](StrategicGame& g, const PureProfile& a, const std::vector<std::string>& u) {
             std::vector<Rational> v;
             for (const auto& s : u) v.push_back(Rational::parse(s));
             g.set_payoffs(a, v);
           },
           py::arg("actions"), py::arg("payoffs"))
      .def_property_readonly("meta", [](const StrategicGame& g) { return g.meta(); })
      .def("to_text", &format_game)
      .def_static("from_text", &parse_game, py::arg("text"))
      .def("__eq__", [](const StrategicGame& a, const StrategicGame& b) { return a == b; })
      .def("__repr__", [](const StrategicGame& g) {
        std::string s = "Game(actions=[";
        for (int p = 0; p < g.players(); ++p) s += (p ? ", " : "") + std::to_string(g.actions(p));
        return s + "])";
      });

  m.def("build_H1", [](const std::string& u) { return build_H1(Rational::parse(u)); }, py::arg("u"));
  m.def("build_H2", &build_H2, py::arg("k"));
  m.def("build_H3", [](const std::string& u) { return build_H3(Rational::parse(u)); }, py::arg("u"));
  m.def("build_H4", [](const std::string& u) { return build_H4(Rational::parse(u)); }, py::arg("u"));
  m.def("build_H5", &build_H5);
  m.def("reduce", &reduce, py::arg("gadget"), py::arg("system"), py::arg("normalize") = true,
        py::arg("augment") = false, py::arg("simple_bot") = false,
        "Builds gadget g0..g5, d0, d1, d4, dp0 or dp1 from qsys or bsys text.");
  m.def("bilinearize",
        [](const std::string& text, bool normalize, bool augment) {
          return format_bilinear(bilinear_from_text(text, normalize, augment));
        },
        py::arg("system"), py::arg("normalize") = true, py::arg("augment") = false);

  m.def("eval_payoff",
        [](const StrategicGame& g, const TextProfile& x) { return to_text(eval_payoff(g, to_profile(x))); },
        py::arg("game"), py::arg("profile"));
  m.def("is_zero_sum", &is_zero_sum, py::arg("game"));
  m.def("is_symmetric", [](const StrategicGame& g) { return is_symmetric_game(g); }, py::arg("game"));

  m.def("check_ne", [](const StrategicGame& g, const TextProfile& x) { return verdict_dict(check_NE(g, to_profile(x))); },
        py::arg("game"), py::arg("profile"));
  m.def("check_pareto",
        [](const StrategicGame& g, const TextProfile& x, std::size_t budget) {
          SearchOptions o;
          o.cell_budget = budget;
          return verdict_dict(check_pareto(g, to_profile(x), o));
        },
        py::arg("game"), py::arg("profile"), py::arg("cell_budget") = SearchOptions{}.cell_budget);
  m.def("check_strong",
        [](const StrategicGame& g, const TextProfile& x, std::size_t budget) {
          SearchOptions o;
          o.cell_budget = budget;
          return verdict_dict(check_strong(g, to_profile(x), o));
        },
        py::arg("game"), py::arg("profile"), py::arg("cell_budget") = SearchOptions{}.cell_budget);
  m.def("check_coalition",
        [](const StrategicGame& g, const TextProfile& x, std::vector<int> b1, std::vector<int> b2,
           std::vector<int> b3) {
          CoalitionQuery q;
          q.B1 = std::move(b1);
          q.B2 = std::move(b2);
          q.B3 = std::move(b3);
          return verdict_dict(coalition_feasible(g, to_profile(x), q));
        },
        py::arg("game"), py::arg("profile"), py::arg("B1"), py::arg("B2"), py::arg("B3"));

  m.def("find_equilibria",
        [](const StrategicGame& g, int max_support, std::size_t budget) {
          SolveOptions o;
          o.max_support = max_support;
          o.budget = budget;
          py::list out;
          for (const auto& e : find_equilibria(g, o)) {
            py::dict d;
            d["profile"] = to_text(e.profile);
            d["payoffs"] = to_text(e.payoffs);
            d["exact"] = e.flag == Exactness::kExact;
            std::vector<std::vector<double>> approx;
            for (const auto& s : e.profile) {
              approx.emplace_back();
              for (const auto& v : s) approx.back().push_back(v.to_double());
            }
            d["approx"] = approx;
            out.append(d);
          }
          return out;
        },
        py::arg("game"), py::arg("max_support") = 0, py::arg("budget") = SolveOptions{}.budget);

  m.def("value", [](const std::string& s) { return to_value(s).to_double(); }, py::arg("literal"),
        "Float value of an exact literal.");
}
