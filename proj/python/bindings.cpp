// Python bindings. Structured results cross the boundary as plain dicts built
// from the same JSON documents the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pwordle/closedform.hpp"
#include "pwordle/error.hpp"
#include "pwordle/report.hpp"
#include "pwordle/verify.hpp"

namespace py = pybind11;
using namespace pwordle;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Permutation to_perm(const std::vector<int>& v) { return Permutation(v); }

Strategy coerce_strategy(const py::object& obj, std::optional<int> n) {
  if (py::isinstance<Strategy>(obj)) return obj.cast<Strategy>();
  if (py::isinstance<py::str>(obj)) return parse_strategy(obj.cast<std::string>(), n);
  throw py::type_error("expected a Strategy or a strategy string");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation wordle: strategies, generating functions, scans and checks";

  // Translators run newest first, so the subclass is registered last.
  auto& base = py::register_exception<Error>(m, "PwordleError", PyExc_ValueError);
  py::register_exception<ScanRefused>(m, "ScanRefused", base.ptr());

  m.attr("MAX_LENGTH") = kMaxLength;

  // Permutations are plain lists of 1-based values on the Python side.
  m.def("parse_permutation", [](const std::string& s) { return parse_permutation(s).to_vector(); });
  m.def("compose", [](const std::vector<int>& p, const std::vector<int>& q) {
    return compose(to_perm(p), to_perm(q)).to_vector();
  }, "result[i] = p[q[i]]");
  m.def("invert", [](const std::vector<int>& p) { return invert(to_perm(p)).to_vector(); });
  m.def("is_derangement", [](const std::vector<int>& p) { return is_derangement(to_perm(p)); });
  m.def("is_cyclic", [](const std::vector<int>& p) { return is_cyclic(to_perm(p)); });
  m.def("excedance_count", [](const std::vector<int>& p) { return excedance_count(to_perm(p)); });
  m.def("enumerate_permutations", [](int n, const std::string& cls) {
    std::vector<std::vector<int>> out;
    for_each_permutation(n, parse_perm_class(cls), [&](const Permutation& p) {
      out.push_back(p.to_vector());
      return true;
    });
    return out;
  }, py::arg("n"), py::arg("cls") = "all");

  py::class_<Strategy>(m, "Strategy")
      .def_property_readonly("length", &Strategy::length)
      .def_property_readonly("top", [](const Strategy& s) { return s.top().to_vector(); })
      .def_property_readonly("components", [](const Strategy& s) {
        std::vector<std::vector<int>> out;
        for (const auto& c : s.components()) out.push_back(c.to_vector());
        return out;
      })
      .def_property_readonly("strategy_class", [](const Strategy& s) { return to_string(s.strategy_class()); })
      .def_property_readonly("is_inductive", &Strategy::is_inductive)
      .def("label", &Strategy::label)
      .def("__str__", &Strategy::to_string)
      .def("__repr__", [](const Strategy& s) { return "Strategy('" + s.to_string() + "')"; })
      .def("__eq__", [](const Strategy& a, const Strategy& b) { return a.to_string() == b.to_string(); })
      .def("__hash__", [](const Strategy& s) { return std::hash<std::string>{}(s.to_string()); });

  m.def("cyclic_shift", &cyclic_shift, py::arg("n"));
  m.def("cyclic_shift_left_top", &cyclic_shift_left_top, py::arg("n"));
  m.def("inductive", [](const std::vector<int>& top) { return inductive(to_perm(top)); }, py::arg("top"));
  m.def("from_components", [](const std::vector<std::vector<int>>& comps) {
    std::vector<Permutation> ps;
    for (const auto& c : comps) ps.push_back(to_perm(c));
    return from_components(std::move(ps));
  });
  m.def("mirror", &mirror);
  m.def("parse_strategy", &parse_strategy, py::arg("text"), py::arg("n") = py::none());

  m.def("play", [](const std::vector<int>& secret, const py::object& strategy) {
    const Permutation s = to_perm(secret);
    return to_python(report::to_json(play(s, coerce_strategy(strategy, s.size()))));
  }, py::arg("secret"), py::arg("strategy"), "Game trace as a dict.");

  m.def("generating_function", [](const py::object& strategy, std::optional<int> n, const std::string& method) {
    if (method != "decomposition" && method != "playback") throw py::value_error("method: decomposition or playback");
    const GfMethod gm = method == "playback" ? GfMethod::playback : GfMethod::decomposition;
    return to_python(report::to_json(generating_function(coerce_strategy(strategy, n), gm)));
  }, py::arg("strategy"), py::arg("n") = py::none(), py::arg("method") = "decomposition",
     "{'n', 'coeffs': {round: count}, 'loops'}");

  m.def("coefficients", [](const py::object& strategy, std::optional<int> n) {
    const GFCoefficients gf = generating_function(coerce_strategy(strategy, n));
    return py::make_tuple(gf.coefficients, gf.loop_count);
  }, py::arg("strategy"), py::arg("n") = py::none(), "(a_1..a_max list, loop count)");

  m.def("average_guesses", [](const py::object& strategy, std::optional<int> n) -> py::object {
    const AverageGuesses avg = average_guesses(generating_function(coerce_strategy(strategy, n)));
    if (avg.infinite) return py::float_(std::numeric_limits<double>::infinity());
    return py::module_::import("fractions").attr("Fraction")(avg.value.numerator(), avg.value.denominator());
  }, py::arg("strategy"), py::arg("n") = py::none(), "Exact Fraction, or inf when some secret loops.");

  m.def("rho_class_counts", [](const py::object& strategy, std::optional<int> n) {
    const RhoCounts r = rho_class_counts(coerce_strategy(strategy, n));
    return py::make_tuple(r[0], r[1], r[2]);
  }, py::arg("strategy"), py::arg("n") = py::none());

  m.def("average_j2_over_derangements", [](const std::vector<int>& component) {
    const Rational r = average_j2_over_derangements(to_perm(component));
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
  });

  m.def("scan_cost_estimate", [](int n, const std::string& cls) {
    return scan_cost_estimate(n, parse_strategy_class(cls));
  });
  m.def("scan", [](int n, const std::string& cls, int threads, double max_cost, bool keep_rows) {
    ScanOptions opt;
    opt.threads = threads;
    opt.max_cost = max_cost;
    opt.keep_rows = keep_rows;
    ScanResult res;
    {
      py::gil_scoped_release release;
      res = scan(n, parse_strategy_class(cls), opt);
    }
    return to_python(report::to_json(res));
  }, py::arg("n"), py::arg("cls"), py::arg("threads") = 0, py::arg("max_cost") = 1e10, py::arg("keep_rows") = true);

  m.def("theorem_ids", [] {
    std::vector<std::string> ids;
    for (const auto& t : theorem_catalog()) ids.push_back(t.id);
    return ids;
  });
  m.def("verify", [](const std::string& id, std::optional<int> min_n, std::optional<int> max_n, int threads,
                     double max_cost, std::optional<std::string> family) {
    VerifyOptions opt;
    opt.threads = threads;
    opt.max_cost = max_cost;
    if (family) opt.family = parse_strategy_class(*family);
    std::optional<std::pair<int, int>> range;
    if (min_n || max_n) {
      const auto& info = theorem_info(id);
      range = std::pair{min_n.value_or(info.default_min), max_n.value_or(info.default_max)};
    }
    VerificationReport rep;
    {
      py::gil_scoped_release release;
      rep = verify(id, range, opt);
    }
    return to_python(report::to_json(rep));
  }, py::arg("id"), py::arg("min_n") = py::none(), py::arg("max_n") = py::none(), py::arg("threads") = 0,
     py::arg("max_cost") = 1e10, py::arg("family") = py::none());
  m.def("check_sequence", [](const std::string& name) { return to_python(report::to_json(check_sequence(name))); });

  m.def("table1", [] {
    py::list out;
    for (const auto& r : table1()) {
      py::dict d;
      d["secret"] = r.secret.to_vector();
      d["j2_2341"] = r.j2_cyclic_shift.to_vector();
      d["j2_2143"] = r.j2_involution.to_vector();
      out.append(d);
    }
    return out;
  });
  m.def("table2", [] {
    py::list out;
    for (const auto& r : table2()) {
      py::dict d;
      d["n"] = r.n;
      d["top"] = r.top.to_vector();
      d["reference"] = r.reference;
      d["computed"] = r.computed.coefficients;
      d["matches"] = r.matches;
      d["duplicate_row"] = r.duplicate_of_previous;
      out.append(d);
    }
    return out;
  });

  auto cf = m.def_submodule("closedform", "Exact closed forms and reference sequences");
  cf.def("eulerian", &closedform::eulerian);
  cf.def("eulerian_second", &closedform::eulerian_second);
  cf.def("lucas", &closedform::lucas);
  cf.def("derangement_count", &closedform::derangement_count);
  cf.def("binomial", &closedform::binomial);
  cf.def("factorial", &closedform::factorial);
  cf.def("rho1_closed_form", &closedform::rho1_closed_form);
  cf.def("rho1_binomial_sum", &closedform::rho1_binomial_sum);
  cf.def("der2ex_count", &closedform::der2ex_count);
  cf.def("cs_rho2_count", &closedform::cs_rho2_count);
  cf.def("csl_rho2_count", &closedform::csl_rho2_count);
  cf.def("csl_cubic", &closedform::csl_cubic);
  cf.def("reference_sequence", [](const std::string& name) {
    const auto& t = closedform::reference_sequence(name);
    return py::make_tuple(t.offset, t.values);
  }, "(offset, values)");
  cf.def("reference_sequence_names", &closedform::reference_sequence_names);
}
