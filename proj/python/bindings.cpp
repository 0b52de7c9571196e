#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dparity/cli.hpp"
#include "dparity/dihedral.hpp"
#include "dparity/errors.hpp"
#include "dparity/parity_engine.hpp"
#include "dparity/regulator.hpp"
#include "dparity/surgery.hpp"
#include "dparity/tate.hpp"

namespace py = pybind11;
using namespace dparity;

namespace {

// Python ints cross the boundary as decimal strings, so size is unbounded.
Integer to_integer(const py::int_& x) { return Integer(py::str(py::handle(x)).cast<std::string>()); }

py::int_ to_py(const Integer& z) { return py::int_(py::module_::import("builtins").attr("int")(z.get_str())); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

WeierstrassCurve curve_from(const std::vector<py::int_>& a) {
  if (a.size() != 5) throw std::invalid_argument("expected [a1, a2, a3, a4, a6]");
  Coefficients c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = to_integer(a[i]);
  return WeierstrassCurve(c);
}

py::list coefficients(const WeierstrassCurve& e) {
  py::list out;
  for (const auto& x : e.coefficients()) out.append(to_py(x));
  return out;
}

SubgroupTag group_from(const std::string& name) {
  const auto g = parse_local_group(name);
  if (!g) throw std::invalid_argument("group must be one of 1, D2, Cp, D2p");
  return *g;
}

LocalSetting setting_from(int p, const py::int_& ell, int r, const std::string& gv, const std::string& iv,
                          const std::string& base, std::optional<bool> eta) {
  const auto b = BaseReduction::parse(base);
  if (!b) throw std::invalid_argument("bad reduction descriptor '" + base + "'");
  return LocalSetting{p, to_integer(ell), r, group_from(gv), group_from(iv), *b, eta};
}

py::dict verdict_dict(const LocalSetting& s, const LocalVerdict& v) {
  py::dict d;
  d["setting"] = s.to_string();
  d["w_ratio"] = v.w_ratio;
  d["c_parity"] = v.c_parity;
  d["equal"] = v.equal;
  d["case_trace"] = py::dict(py::arg("w") = v.w_trace.to_string(), py::arg("c") = v.c_trace.to_string());
  return d;
}

std::vector<std::vector<int>> table_list(const ParityTable& t) {
  std::vector<std::vector<int>> out;
  for (const auto& row : t) out.emplace_back(row.begin(), row.end());
  return out;
}

RationalRep rep_from(int p, const std::string& name) {
  if (name == "trivial") return RationalRep::trivial(p);
  if (name == "eta") return RationalRep::eta(p);
  if (name == "rho2") return RationalRep::rho2(p);
  if (name == "sum") return RationalRep::trivial(p) + RationalRep::eta(p) + RationalRep::rho2(p);
  throw std::invalid_argument("rep must be trivial, eta, rho2 or sum");
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for the local p-parity identity in D_2p^n extensions";

  py::register_exception<SingularCurveError>(m, "SingularCurveError", PyExc_ValueError);
  py::register_exception<InadmissibleSettingError>(m, "InadmissibleSettingError", PyExc_ValueError);
  py::register_exception<InvalidGroupError>(m, "InvalidGroupError", PyExc_ValueError);
  py::register_exception<CrtError>(m, "CrtError", PyExc_ValueError);
  py::register_exception<UnsupportedCaseError>(m, "UnsupportedCaseError", PyExc_RuntimeError);

  m.def("invariants", [](const std::vector<py::int_>& a) {
    const auto e = curve_from(a);
    const auto& inv = e.invariants();
    py::dict d;
    d["b2"] = to_py(inv.b2);
    d["b4"] = to_py(inv.b4);
    d["b6"] = to_py(inv.b6);
    d["b8"] = to_py(inv.b8);
    d["c4"] = to_py(inv.c4);
    d["c6"] = to_py(inv.c6);
    d["discriminant"] = to_py(inv.discriminant);
    d["j"] = to_py(inv.j);
    return d;
  }, py::arg("a"), "b/c invariants, discriminant and j of [a1, a2, a3, a4, a6]");

  m.def("local_reduction", [](const std::vector<py::int_>& a, const py::int_& ell) {
    const auto d = local_reduction(curve_from(a), to_integer(ell));
    py::dict out;
    out["kodaira"] = d.kodaira.to_string();
    out["delta"] = d.delta;
    out["tamagawa"] = d.tamagawa;
    out["conductor_exponent"] = d.conductor_exponent;
    out["split"] = to_string(d.split);
    out["reduction_class"] = to_string(d.reduction_class);
    out["minimal_model"] = coefficients(d.minimal_model);
    return out;
  }, py::arg("a"), py::arg("ell"), "Tate's algorithm at ell");

  m.def("verify_local", [](int p, const py::int_& ell, int r, const std::string& gv, const std::string& iv,
                           const std::string& base, std::optional<bool> eta) {
    const auto s = setting_from(p, ell, r, gv, iv, base, eta);
    return verdict_dict(s, verify_local(s));
  }, py::arg("p"), py::arg("ell"), py::arg("r"), py::arg("gv"), py::arg("iv"), py::arg("base"),
        py::arg("eta_equals_chi") = py::none(),
        "Root-number ratio and (-1)^ord_p C_v for one local setting; groups are 1, D2, Cp, D2p and the base is "
        "good, split(n), nonsplit(n), addmult(n) or addgood(delta)");

  m.def("enumerate_settings", [](int p, int max_n, std::vector<int> ells, std::vector<int> r_values, bool strict) {
    EnumerationBounds b;
    b.max_n = max_n;
    b.ells.assign(ells.begin(), ells.end());
    b.r_values = std::move(r_values);
    b.strict = strict;
    std::vector<std::string> out;
    for (const auto& s : enumerate_settings(p, b)) out.push_back(s.to_string());
    return out;
  }, py::arg("p"), py::arg("max_n") = 3, py::arg("ells") = std::vector<int>{2, 3, 5, 7, 11},
        py::arg("r_values") = std::vector<int>{1, 2}, py::arg("strict") = false);

  m.def("sweep", [](int p, int max_n, std::vector<int> ells, std::vector<int> r_values, bool strict) {
    EnumerationBounds b;
    b.max_n = max_n;
    b.ells.assign(ells.begin(), ells.end());
    b.r_values = std::move(r_values);
    b.strict = strict;
    py::list failures;
    std::size_t total = 0;
    for (const auto& s : enumerate_settings(p, b)) {
      ++total;
      const auto v = verify_local(s);
      if (!v.equal) failures.append(verdict_dict(s, v));
    }
    return py::make_tuple(total, failures);
  }, py::arg("p"), py::arg("max_n") = 10, py::arg("ells") = std::vector<int>{2, 3, 5, 7, 11, 13},
        py::arg("r_values") = std::vector<int>{1, 2}, py::arg("strict") = false,
        "(number of settings, list of unequal verdicts)");

  m.def("generate_table", [](const std::string& route) {
    if (route != "c" && route != "w") throw std::invalid_argument("route must be 'c' or 'w'");
    return table_list(generate_table(route == "c" ? TableRoute::CParity : TableRoute::WRatio));
  }, py::arg("route"), "rows e = 6, 4, 3, 2; columns p mod 12 = 1, 5, 7, 11");
  m.def("printed_table", [] { return table_list(kPrintedTable); });

  m.def("irreducibles", [](int p, int n) {
    std::vector<std::vector<std::string>> out;
    for (const auto& chi : irreducibles(p, n)) {
      std::vector<std::string> row;
      for (const auto& v : chi.values()) row.push_back(v.to_string());
      out.push_back(std::move(row));
    }
    return out;
  }, py::arg("p"), py::arg("n"), "character table of D_2p^n as strings in Z[zeta]");
  m.def("inner_product_irreducibles", [](int p, int n, std::size_t i, std::size_t j) {
    const auto irr = irreducibles(p, n);
    return inner_product(irr.at(i), irr.at(j));
  }, py::arg("p"), py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("verify_reduction_identity", &verify_reduction_identity, py::arg("p"), py::arg("N"));

  m.def("regulator_constant", [](int p, const std::string& rep) {
    return to_py(regulator_constant(rep_from(p, rep)).representative());
  }, py::arg("p"), py::arg("rep"), "squarefree representative of C_Theta(rep) mod squares");
  m.def("t_theta_member", [](int p) {
    const GroupSpec g{GroupSpec::Kind::Dihedral, p, 1};
    return t_theta_member(trivial_character(g) + eta_character(p, 1) + dihedral_two_dim(p, 1, 1), p);
  }, py::arg("p"), "whether 1 + eta + I(chi) lies in T_Theta,p");

  m.def("crt", [](const std::vector<std::pair<py::int_, py::int_>>& pairs) {
    std::vector<std::pair<Integer, Integer>> c;
    for (const auto& [r, mod] : pairs) c.emplace_back(to_integer(r), to_integer(mod));
    return to_py(crt(c));
  }, py::arg("congruences"), "smallest nonnegative solution of [(residue, modulus), ...]");

  m.def("make_semistable", [](const std::vector<py::int_>& a, const py::int_& p0, const py::int_& v, int n) {
    SurgeryPlan plan;
    plan.p0 = to_integer(p0);
    plan.v = to_integer(v);
    plan.n = n;
    const auto res = make_semistable(curve_from(a), plan);
    py::dict out;
    out["curve"] = coefficients(res.curve);
    out["n"] = res.plan.n;
    out["c"] = to_py(res.plan.c);
    out["plan"] = res.plan.to_string();
    return out;
  }, py::arg("a"), py::arg("p0"), py::arg("v"), py::arg("n") = 8);
  m.def("certify", [](const std::vector<py::int_>& a, const py::int_& p0, const py::int_& v) {
    const auto r = certify(curve_from(a), to_integer(p0), to_integer(v));
    py::dict out;
    out["pass"] = r.pass;
    out["semistable_away_from_p0"] = r.semistable_away_from_p0;
    out["j_valuation_at_v"] = r.j_valuation_at_v;
    py::list additive;
    for (const auto& l : r.additive_away_from_p0) additive.append(to_py(l));
    out["additive_away_from_p0"] = additive;
    out["report"] = r.to_string();
    return out;
  }, py::arg("a"), py::arg("p0"), py::arg("v"));
  m.def("closeness_check", [](const std::vector<py::int_>& a, const std::vector<py::int_>& b, const py::int_& p0) {
    return closeness_check(curve_from(a), curve_from(b), to_integer(p0));
  }, py::arg("a"), py::arg("b"), py::arg("p0"));

  py::class_<CliResult>(m, "CliResult")
      .def_readonly("code", &CliResult::code)
      .def_readonly("out", &CliResult::out)
      .def_readonly("err", &CliResult::err);
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "dparity");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return CliResult{code, out.str(), err.str()};
  }, py::arg("args"), "run the command line with the given arguments (without the program name)");
}
