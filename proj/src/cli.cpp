#include "dparity/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dparity/dihedral.hpp"
#include "dparity/errors.hpp"
#include "dparity/regulator.hpp"
#include "dparity/surgery.hpp"
#include "dparity/tate.hpp"

namespace dparity::cli {

using json = nlohmann::json;

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::optional<Integer> parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) return std::nullopt;
  return z;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

}  // namespace

std::vector<WeierstrassCurve> parse_curves(std::istream& in) {
  std::vector<WeierstrassCurve> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (skip_line(line)) continue;
    const auto t = tokens(line);
    if (t.size() != 5) throw ParseError(lineno, "expected 5 integers a1 a2 a3 a4 a6, got " + std::to_string(t.size()));
    Coefficients a;
    for (std::size_t i = 0; i < 5; ++i) {
      const auto z = parse_integer(t[i]);
      if (!z) throw ParseError(lineno, "not an integer: '" + t[i] + "'");
      a[i] = *z;
    }
    try {
      out.emplace_back(a);
    } catch (const SingularCurveError&) {
      throw ParseError(lineno, "singular curve (zero discriminant)");
    }
  }
  return out;
}

std::vector<WeierstrassCurve> parse_curve_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_curves(in);
}

std::map<Integer, Completion> parse_completions(std::istream& in) {
  std::map<Integer, Completion> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (skip_line(line)) continue;
    const auto t = tokens(line);
    if (t.size() != 3 && t.size() != 4) throw ParseError(lineno, "expected 'prime G_v I_v [eta_eq_chi]'");
    const auto ell = parse_integer(t[0]);
    if (!ell || !is_probable_prime(*ell)) throw ParseError(lineno, "not a prime: '" + t[0] + "'");
    const auto g = parse_local_group(t[1]), i = parse_local_group(t[2]);
    if (!g || !i) throw ParseError(lineno, "groups must be one of 1, D2, Cp, D2p");
    Completion c{*g, *i, std::nullopt};
    if (t.size() == 4) {
      const std::string& f = t[3];
      if (f == "eta=chi" || f == "true" || f == "1")
        c.eta_equals_chi = true;
      else if (f == "eta!=chi" || f == "false" || f == "0")
        c.eta_equals_chi = false;
      else
        throw ParseError(lineno, "bad eta flag '" + f + "'");
    }
    if (!out.emplace(*ell, c).second) throw ParseError(lineno, "prime " + t[0] + " listed twice");
  }
  return out;
}

std::map<Integer, Completion> parse_completion_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_completions(in);
}

namespace {

// Raised for bad option values; mapped to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::ostream& out;
  json records = json::array();
  int passed = 0;
  int failed = 0;

  void tally(bool ok) { ok ? ++passed : ++failed; }
};

Integer integer_option(const std::string& name, const std::string& value) {
  const auto z = parse_integer(value);
  if (!z) throw UsageError(name + " must be an integer, got '" + value + "'");
  return *z;
}

void require_parity_prime(int p) {
  if (p < 5) throw UsageError("p must be ≥ 5");
  if (!is_probable_prime(p)) throw UsageError("p must be a prime ≥ 5");
}

std::string sign(int s) { return s > 0 ? "+1" : "-1"; }

// reduce -------------------------------------------------------------------

void cmd_reduce(Report& r, const std::string& file, const std::string& ell_text) {
  const Integer ell = integer_option("--ell", ell_text);
  if (!is_probable_prime(ell)) throw UsageError("--ell must be prime");
  for (const auto& e : parse_curve_file(file)) {
    const auto d = local_reduction(e, ell);
    r.out << e.to_string() << " | l=" << ell << " kodaira=" << d.kodaira.to_string() << " delta=" << d.delta
          << " c=" << d.tamagawa << " f=" << d.conductor_exponent << " split=" << to_string(d.split)
          << " class=" << to_string(d.reduction_class) << '\n';
    r.records.push_back({{"curve", e.to_string()},
                         {"ell", ell.get_str()},
                         {"kodaira", d.kodaira.to_string()},
                         {"delta", d.delta},
                         {"tamagawa", d.tamagawa},
                         {"conductor_exponent", d.conductor_exponent},
                         {"split", to_string(d.split)},
                         {"reduction_class", to_string(d.reduction_class)}});
    r.tally(true);
  }
}

// chars --------------------------------------------------------------------

std::string element_name(const GroupElement& x) {
  std::string out;
  if (x.a != 0) out = x.a == 1 ? "s" : "s^" + std::to_string(x.a);
  if (x.b != 0) out += "t";
  return out.empty() ? "1" : out;
}

std::string irreducible_name(std::size_t index) {
  if (index == 0) return "1";
  if (index == 1) return "eta";
  return "I(chi_" + std::to_string(index - 1) + ")";
}

void cmd_chars(Report& r, int p, int n, bool verify_reduction) {
  if (verify_reduction) {
    if (n < 2) throw UsageError("--verify-reduction needs --n >= 2");
    irreducibles(p, n);  // validates p and n
    const bool ok = verify_reduction_identity(p, n);
    const auto lower = SubgroupTag::dihedral(n - 1);
    const auto tau = dihedral_two_dim(p, n, 1);
    const auto m = multiplicities(induce(lower, restrict_to(lower, tau), n));
    std::string decomposition;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0)
        decomposition += (decomposition.empty() ? "" : " + ") + (m[i] == 1 ? "" : std::to_string(m[i]) + " ") +
                         irreducible_name(i);
    r.out << "reduction identity p=" << p << " N=" << n << ": " << (ok ? "true" : "false") << '\n';
    r.out << "Ind Res I(chi_1) = " << decomposition << '\n';
    r.records.push_back({{"p", p}, {"N", n}, {"holds", ok}, {"decomposition", decomposition}});
    r.tally(ok);
    return;
  }
  const auto irr = irreducibles(p, n);
  const GroupSpec& g = irr.front().group();
  r.out << "character table of " << g.to_string() << '\n';
  std::string header = "class";
  json classes = json::array();
  for (int c = 0; c < g.class_count(); ++c) {
    const auto name = element_name(class_representative(g, c));
    header += "\t" + name;
    classes.push_back({{"representative", name}, {"size", g.class_size(c)}});
  }
  r.out << header << '\n';
  json rows = json::array();
  for (std::size_t i = 0; i < irr.size(); ++i) {
    std::string line = irreducible_name(i);
    json values = json::array();
    for (const auto& v : irr[i].values()) {
      line += "\t" + v.to_string();
      values.push_back(v.to_string());
    }
    r.out << line << '\n';
    rows.push_back({{"character", irreducible_name(i)}, {"values", values}});
  }
  r.records.push_back({{"group", g.to_string()}, {"classes", classes}, {"characters", rows}});
  r.tally(true);
}

// regulator ----------------------------------------------------------------

void cmd_regulator(Report& r, int p, const std::string& rep_name, bool membership) {
  require_parity_prime(p);
  if (membership) {
    const GroupSpec g{GroupSpec::Kind::Dihedral, p, 1};
    const auto sigma = trivial_character(g) + eta_character(p, 1) + dihedral_two_dim(p, 1, 1);
    const auto rep = t_theta_report(sigma, p);
    static const char* names[] = {"1", "eta", "rho2"};
    for (int i = 0; i < 3; ++i)
      r.out << "<sigma," << names[i] << "> = " << rep.multiplicities[i] << "  ord_p C(" << names[i]
            << ") mod 2 = " << rep.ord_parities[i] << '\n';
    r.out << "1+eta+I(chi) in T_Theta,p for p=" << p << ": " << (rep.member ? "true" : "false") << '\n';
    r.records.push_back({{"p", p},
                         {"multiplicities", rep.multiplicities},
                         {"ord_parities", rep.ord_parities},
                         {"member", rep.member}});
    r.tally(rep.member);
    return;
  }
  std::vector<std::pair<std::string, RationalRep>> reps;
  auto add = [&](const std::string& name) {
    if (name == "trivial") reps.emplace_back(name, RationalRep::trivial(p));
    else if (name == "eta") reps.emplace_back(name, RationalRep::eta(p));
    else if (name == "rho2") reps.emplace_back(name, RationalRep::rho2(p));
    else if (name == "sum") reps.emplace_back(name, RationalRep::trivial(p) + RationalRep::eta(p) + RationalRep::rho2(p));
    else throw UsageError("--rep must be one of trivial, eta, rho2, sum");
  };
  if (rep_name.empty())
    for (const char* name : {"trivial", "eta", "rho2", "sum"}) add(name);
  else
    add(rep_name);
  for (const auto& [name, rep] : reps) {
    const auto c = regulator_constant(rep);
    const int parity = c.ord_parity(p);
    r.out << "C_Theta(" << name << ") = " << c.to_string() << " mod squares, ord_p parity " << parity << '\n';
    r.records.push_back({{"rep", name}, {"square_class", c.to_string()}, {"ordp_parity", parity}});
    r.tally(true);
  }
}

// verify-local -------------------------------------------------------------

json verdict_json(const LocalSetting& s, const LocalVerdict& v) {
  return {{"setting", s.to_string()},
          {"w_ratio", v.w_ratio},
          {"c_parity", v.c_parity},
          {"equal", v.equal},
          {"case_trace", {{"w", v.w_trace.to_string()}, {"c", v.c_trace.to_string()}}}};
}

void emit_verdict(Report& r, const LocalSetting& s) {
  const auto v = verify_local(s);
  r.out << s.to_string() << " | w=" << sign(v.w_ratio) << " c=" << sign(v.c_parity)
        << " equal=" << (v.equal ? "yes" : "NO") << " | w: " << v.w_trace.to_string()
        << " | c: " << v.c_trace.to_string() << '\n';
  r.records.push_back(verdict_json(s, v));
  r.tally(v.equal);
}

const char* const kRowNames[4] = {"II/II*", "III/III*", "IV/IV*", "I0*"};

void print_table(std::ostream& out, const std::string& title, const ParityTable& t) {
  out << title << '\n' << "e\tkodaira\tp=1\tp=5\tp=7\tp=11 (mod 12)\n";
  for (std::size_t row = 0; row < 4; ++row) {
    out << kTableDefects[row] << '\t' << kRowNames[row];
    for (int v : t[row]) out << '\t' << (v == 0 ? "?" : sign(v));
    out << '\n';
  }
}

json table_json(const ParityTable& t) {
  json rows = json::array();
  for (const auto& row : t) rows.push_back(row);
  return rows;
}

void cmd_emit_table(Report& r) {
  const auto by_c = generate_table(TableRoute::CParity);
  const auto by_w = generate_table(TableRoute::WRatio);
  print_table(r.out, "generated from ord_p C_v:", by_c);
  print_table(r.out, "generated from root numbers:", by_w);
  print_table(r.out, "reference:", kPrintedTable);
  const bool c_ok = by_c == kPrintedTable, w_ok = by_w == kPrintedTable, cw = by_c == by_w;
  r.out << "C route vs reference: " << (c_ok ? "match" : "MISMATCH") << '\n'
        << "W route vs reference: " << (w_ok ? "match" : "MISMATCH") << '\n'
        << "C route vs W route: " << (cw ? "match" : "MISMATCH") << '\n';
  r.records.push_back({{"table_c", table_json(by_c)},
                       {"table_w", table_json(by_w)},
                       {"reference", table_json(kPrintedTable)},
                       {"match", c_ok && w_ok && cw}});
  r.tally(c_ok && w_ok && cw);
}

struct LocalOptions {
  int p = 0;
  bool sweep = false, emit_table = false, strict = false;
  int max_n = 10;
  std::vector<std::string> ells;
  std::vector<int> rs;
  std::string gv, iv, base, eta;
};

void cmd_verify_local(Report& r, const LocalOptions& o) {
  require_parity_prime(o.p);
  if (!o.sweep && !o.emit_table && o.base.empty())
    throw UsageError("verify-local needs --sweep, --emit-table, or a setting (--ell --gv --iv --base)");
  if (o.sweep) {
    EnumerationBounds b;
    b.max_n = o.max_n;
    b.strict = o.strict;
    b.r_values = o.rs.empty() ? std::vector<int>{1, 2} : o.rs;
    b.ells.clear();
    if (o.ells.empty()) {
      for (int l : {2, 3, 5, 7, 11, 13}) b.ells.push_back(l);
      if (o.p > 13) b.ells.push_back(o.p);
    } else {
      for (const auto& l : o.ells) b.ells.push_back(integer_option("--ell", l));
    }
    std::size_t before = r.records.size();
    for (const auto& s : enumerate_settings(o.p, b)) emit_verdict(r, s);
    r.out << "settings=" << r.records.size() - before << " equal=" << r.passed << " failures=" << r.failed << '\n';
  }
  if (!o.base.empty()) {
    if (o.ells.size() != 1) throw UsageError("a single setting needs exactly one --ell");
    const auto g = parse_local_group(o.gv), i = parse_local_group(o.iv);
    if (!g || !i) throw UsageError("--gv and --iv must be one of 1, D2, Cp, D2p");
    const auto base = BaseReduction::parse(o.base);
    if (!base) throw UsageError("--base must be good, split(n), nonsplit(n), addmult(n) or addgood(delta)");
    std::optional<bool> flag;
    if (o.eta == "true" || o.eta == "eta=chi") flag = true;
    else if (o.eta == "false" || o.eta == "eta!=chi") flag = false;
    else if (!o.eta.empty()) throw UsageError("--eta must be true or false");
    const int r_value = o.rs.empty() ? 1 : o.rs.front();
    const LocalSetting s{o.p, integer_option("--ell", o.ells.front()), r_value, *g, *i, *base, flag};
    try {
      validate(s);
    } catch (const InadmissibleSettingError& e) {
      throw UsageError(e.what());
    }
    emit_verdict(r, s);
  }
  if (o.emit_table) cmd_emit_table(r);
}

// verify-global -------------------------------------------------------------

void cmd_verify_global(Report& r, const std::string& file, int p, const std::string& completion_file) {
  require_parity_prime(p);
  if (completion_file.empty()) throw UsageError("verify-global needs --completion <file>");
  const auto curves = parse_curve_file(file);
  const auto completion = parse_completion_file(completion_file);
  for (const auto& e : curves) {
    json rec{{"curve", e.to_string()}};
    try {
      const auto g = global_parity(e, p, completion);
      json primes = json::array();
      for (const auto& q : g.primes) {
        r.out << e.to_string() << " | " << q.setting.to_string() << " | w=" << sign(q.verdict.w_ratio)
              << " c=" << sign(q.verdict.c_parity) << '\n';
        primes.push_back(verdict_json(q.setting, q.verdict));
      }
      r.out << e.to_string() << " | W=" << sign(g.w_product) << " C=" << sign(g.c_product)
            << " equal=" << (g.equal ? "yes" : "NO") << '\n';
      rec["primes"] = primes;
      rec["w_product"] = g.w_product;
      rec["c_product"] = g.c_product;
      rec["equal"] = g.equal;
      r.tally(g.equal);
    } catch (const Error& ex) {
      r.out << e.to_string() << " | error: " << ex.what() << '\n';
      rec["error"] = ex.what();
      r.tally(false);
    }
    r.records.push_back(rec);
  }
}

// surgery --------------------------------------------------------------------

void cmd_surgery(Report& r, const std::string& file, const std::string& p0_text, const std::string& v_text, int n) {
  SurgeryPlan plan;
  plan.p0 = integer_option("--p0", p0_text);
  plan.v = integer_option("--v", v_text);
  plan.n = n;
  if (!is_probable_prime(plan.p0)) throw UsageError("--p0 must be prime");
  if (plan.v == 2 || !is_probable_prime(plan.v) || plan.v == plan.p0)
    throw UsageError("--v must be an odd prime different from --p0");
  if (n < 1) throw UsageError("--n must be positive");
  for (const auto& e : parse_curve_file(file)) {
    json rec{{"input", e.to_string()}};
    try {
      const auto res = make_semistable(e, plan);
      const auto report = certify(res.curve, plan.p0, plan.v);
      const bool close = closeness_check(e, res.curve, plan.p0);
      r.out << "input:   " << e.to_string() << '\n'
            << "output:  " << res.curve.to_string() << '\n'
            << "plan:    " << res.plan.to_string() << '\n'
            << "certify: " << report.to_string() << '\n'
            << "close at p0: " << (close ? "yes" : "NO") << '\n';
      rec["output"] = res.curve.to_string();
      rec["plan"] = res.plan.to_string();
      rec["certify"] = report.to_string();
      rec["pass"] = report.pass && close;
      r.tally(report.pass && close);
    } catch (const Error& ex) {
      r.out << "input:   " << e.to_string() << " | error: " << ex.what() << '\n';
      rec["error"] = ex.what();
      r.tally(false);
    }
    r.records.push_back(rec);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-parity of elliptic curves in dihedral extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "also write a JSON document to this path");

  std::string file, ell_text, p0_text, v_text, completion_file, rep_name;
  int p = 0, n = 1, surgery_n = 8;
  bool verify_reduction = false, membership = false;
  LocalOptions lo;

  auto* reduce = app.add_subcommand("reduce", "Tate's algorithm at one prime for each curve");
  reduce->add_option("curve-file", file)->required();
  reduce->add_option("--ell", ell_text, "residue characteristic")->required();

  auto* chars = app.add_subcommand("chars", "character table of D_2p^n");
  chars->add_option("--p", p)->required();
  chars->add_option("--n", n);
  chars->add_flag("--verify-reduction", verify_reduction);

  auto* regulator = app.add_subcommand("regulator", "regulator constants for Theta");
  regulator->add_option("--p", p)->required();
  regulator->add_option("--rep", rep_name, "trivial, eta, rho2 or sum");
  regulator->add_flag("--membership", membership);

  auto* local = app.add_subcommand("verify-local", "compare root-number ratio with ord_p C_v");
  local->add_option("--p", lo.p)->required();
  local->add_flag("--sweep", lo.sweep);
  local->add_flag("--emit-table", lo.emit_table);
  local->add_flag("--strict", lo.strict, "drop settings tame inertia cannot realise");
  local->add_option("--n", lo.max_n, "largest multiplicative index in a sweep");
  local->add_option("--ell", lo.ells)->delimiter(',');
  local->add_option("--r", lo.rs)->delimiter(',');
  local->add_option("--gv", lo.gv);
  local->add_option("--iv", lo.iv);
  local->add_option("--base", lo.base);
  local->add_option("--eta", lo.eta, "eta_v = chi (addmult with I_v = D2p)");

  auto* global = app.add_subcommand("verify-global", "products over the bad primes of each curve");
  global->add_option("curve-file", file)->required();
  global->add_option("--p", p)->required();
  global->add_option("--completion", completion_file)->required();

  auto* surgery = app.add_subcommand("surgery", "semistable close curve with non-integral j");
  surgery->add_option("curve-file", file)->required();
  surgery->add_option("--p0", p0_text)->required();
  surgery->add_option("--v", v_text)->required();
  surgery->add_option("--n", surgery_n, "starting closeness exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kAllPass : kUsageError;
  }

  Report r{out};
  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  try {
    if (reduce->parsed()) cmd_reduce(r, file, ell_text);
    else if (chars->parsed()) cmd_chars(r, p, n, verify_reduction);
    else if (regulator->parsed()) cmd_regulator(r, p, rep_name, membership);
    else if (local->parsed()) cmd_verify_local(r, lo);
    else if (global->parsed()) cmd_verify_global(r, file, p, completion_file);
    else if (surgery->parsed()) cmd_surgery(r, file, p0_text, v_text, surgery_n);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidGroupError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerdictFailure;
  }

  out << "summary: " << r.passed << " passed, " << r.failed << " failed\n";
  if (!json_path.empty()) {
    const json doc{{"command", command},
                   {"records", r.records},
                   {"summary", {{"passed", r.passed}, {"failed", r.failed}}}};
    std::ofstream f(json_path);
    if (!f) {
      err << "error: cannot write " << json_path << '\n';
      return kUsageError;
    }
    f << doc.dump(2) << '\n';
  }
  return r.failed == 0 ? kAllPass : kVerdictFailure;
}

}  // namespace dparity::cli
