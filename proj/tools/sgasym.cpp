// sgasym command-line driver.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input error.

#include "CLI11.hpp"
#include "sgasym/json_io.hpp"
#include "sgasym/verify.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sgasym;

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::string out;
  std::string problem;
  std::uint64_t seed = 20240601;
};

struct ProblemFile {
  std::optional<std::string> C, D, branch;
  std::optional<std::pair<int, int>> n_range;
  std::optional<std::vector<std::string>> ps;
  std::optional<int> ansatz_N_max;
  std::optional<int> oracle_m;
  std::optional<double> oracle_tol;
};

ProblemFile load_problem(const std::string& path) {
  ProblemFile pf;
  if (path.empty()) return pf;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open problem file '" + path + "'");
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw UsageError("problem file must hold a JSON object");
    if (j.contains("C")) pf.C = j.at("C").get<std::string>();
    if (j.contains("D")) pf.D = j.at("D").get<std::string>();
    if (j.contains("branch")) pf.branch = j.at("branch").get<std::string>();
    if (j.contains("n_range")) {
      auto r = j.at("n_range").get<std::vector<int>>();
      if (r.size() != 2 || r[0] < 0 || r[1] < r[0]) throw UsageError("n_range must be [lo, hi] with 0 <= lo <= hi");
      pf.n_range = std::pair{r[0], r[1]};
    }
    if (j.contains("ps")) pf.ps = j.at("ps").get<std::vector<std::string>>();
    if (j.contains("ansatz_N_max")) pf.ansatz_N_max = j.at("ansatz_N_max").get<int>();
    if (j.contains("oracle")) {
      const json& o = j.at("oracle");
      if (o.contains("m")) pf.oracle_m = o.at("m").get<int>();
      if (o.contains("tol")) pf.oracle_tol = o.at("tol").get<double>();
    }
  } catch (const json::exception& e) {
    throw UsageError("problem file '" + path + "': " + e.what());
  }
  return pf;
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

// Flag value when given, else the problem-file value, else an error.
Rational require_rational(const std::string& flag, const std::optional<std::string>& file, const char* name) {
  if (!flag.empty()) return parse_rational(flag, name);
  if (file) return parse_rational(*file, name);
  throw UsageError(std::string("missing --") + name);
}

struct Check {
  std::string name;
  CheckStatus status;
  std::string details;
};

struct RunOutput {
  json input = json::object();
  json result = json::object();
  std::vector<Check> checks;
  std::string text;

  void check(std::string name, bool ok, std::string details = {}) {
    checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
  }
  int exit_status() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) return 1;
    }
    return 0;
  }
};

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string sci(double v, int precision = 3) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(precision) << v;
  return os.str();
}

std::string fixed(double v, int precision = 10) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

// Renders rows with columns padded to their widest cell.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c]) + (c + 1 < r.size() ? 2 : 0)) << r[c];
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string C, D, branch;
  int n_max = -1;
};

RunOutput cmd_spectrum(const SpectrumArgs& a, const ProblemFile& pf) {
  RunOutput out;
  Rational C = require_rational(a.C, pf.C, "C");
  Rational D = require_rational(a.D, pf.D, "D");
  Branch branch;
  try {
    branch = parse_branch(!a.branch.empty() ? a.branch : pf.branch.value_or("plus"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  int lo = 0, hi = a.n_max;
  if (hi < 0) {
    if (!pf.n_range) throw UsageError("missing --n-max");
    std::tie(lo, hi) = *pf.n_range;
  }
  if ((1 - 4 * C).sign() < 0) throw UsageError("1 - 4C = " + (1 - 4 * C).to_string() + " < 0: no real levels");
  if (D.sign() <= 0) throw UsageError("D must be positive for bound states");

  out.input = {{"C", C.to_string()}, {"D", D.to_string()}, {"n_range", {lo, hi}}, {"branch", to_string(branch)}};
  json levels = json::array();
  json rejected = json::array();
  std::vector<std::vector<std::string>> rows{{"n", "branch", "E_hat", "value", "note"}};
  for (int n = lo; n <= hi; ++n) {
    try {
      EnergyLevel lv = discrete_energy(C, D, n, branch);
      levels.push_back(to_json_value(lv));
      std::string note;
      if (lv.E_hat.is_rational()) {
        Algebraic res = quantization_residual(to_abc({C, D, lv.E_hat.rational_value()}), n, branch);
        out.check("quantization n=" + std::to_string(n), res.is_zero(), "residual " + res.to_string());
      } else {
        note = "irrational; minimal polynomial degree 2";
      }
      rows.push_back({std::to_string(n), to_string(branch), lv.E_hat.to_string(), fixed(lv.E_hat.to_double(), 12), note});
    } catch (const std::domain_error& e) {
      rejected.push_back({{"n", n}, {"reason", e.what()}});
      rows.push_back({std::to_string(n), to_string(branch), "-", "-", std::string("rejected: ") + e.what()});
    }
  }
  out.result = {{"levels", levels},
                {"rejected", rejected},
                {"notes", {"levels use sqrt(1-4C); the variant with sqrt(1-4c), c = 4D, does not satisfy the quantization condition"}}};
  out.text = table(rows);
  return out;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string C, D;
  int k = 3;
  int m = 0;
  double tol = 0;
  double rel_tol = 1e-3;
};

RunOutput cmd_oracle(const OracleArgs& a, const ProblemFile& pf) {
  RunOutput out;
  Rational C = require_rational(a.C, pf.C, "C");
  Rational D = require_rational(a.D, pf.D, "D");
  OracleOptions opt;
  opt.m = a.m > 0 ? a.m : pf.oracle_m.value_or(opt.m);
  opt.tol = a.tol > 0 ? a.tol : pf.oracle_tol.value_or(opt.tol);
  if (a.k < 1) throw UsageError("--k must be >= 1");
  if (opt.m < 3) throw UsageError("oracle m must be >= 3");
  SpectrumReport rep;
  try {
    rep = solve_radial(C, D, a.k, opt);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  out.input = {{"C", C.to_string()}, {"D", D.to_string()}, {"k", a.k}, {"m", opt.m}, {"tol", opt.tol}};
  out.result = to_json_value(rep);
  std::vector<std::vector<std::string>> rows{{"n", "closed-form", "numeric", "rel-error", "converged"}};
  for (const auto& lv : rep.levels) {
    out.check("level n=" + std::to_string(lv.n), lv.rel_error <= a.rel_tol, "rel_error " + sci(lv.rel_error));
    rows.push_back({std::to_string(lv.n), lv.closed_form.to_string(), fixed(lv.numeric), sci(lv.rel_error),
                    rep.converged ? "yes" : "no"});
  }
  out.check("converged", rep.converged);
  out.text = table(rows) + "refinement ratio " + fixed(rep.refinement_ratio, 4) + "\n" + rep.note + "\n";
  return out;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  std::string C, D, branch;
  int n = 0;
  std::vector<std::string> ps;
  bool check_zero_mode = false;
  int m = 40000;
  double zero_mode_tol = 1e-2;
};

RunOutput cmd_family(const FamilyArgs& a, const ProblemFile& pf) {
  RunOutput out;
  Rational C = require_rational(a.C, pf.C, "C");
  Rational D = require_rational(a.D, pf.D, "D");
  Branch branch;
  try {
    branch = parse_branch(!a.branch.empty() ? a.branch : pf.branch.value_or("plus"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> p_text = !a.ps.empty() ? a.ps : pf.ps.value_or(std::vector<std::string>{"3"});
  std::vector<Rational> ps;
  for (const auto& s : p_text) {
    ps.push_back(parse_rational(s, "p"));
    if (ps.back().sign() <= 0) throw UsageError("p must be positive, got " + s);
  }
  if (a.m < 3) throw UsageError("--m must be >= 3");
  std::vector<FamilyMember> members;
  try {
    members = family_members(C, D, a.n, branch, ps);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  out.input = {{"C", C.to_string()}, {"D", D.to_string()}, {"n", a.n}, {"branch", to_string(branch)}, {"ps", p_text},
               {"check_zero_mode", a.check_zero_mode}};
  json jm = json::array();
  std::vector<std::vector<std::string>> rows{{"p", "inv_square", "terms", "wf_exponent", "zero-mode"}};
  for (const auto& mem : members) {
    const GeneralizedProblem& gp = mem.problem;
    std::string tag = "p=" + gp.p.to_string();
    json j = to_json_value(gp);
    j["source"] = to_json_value(mem.source);
    j["certificate"] = {{"n", mem.n}, {"branch", to_string(mem.branch)}};
    j["notes"] = family_notes(gp.p);

    DiffOp expected = DiffOp::derivative(2) + DiffOp::multiply(gp.bracket_expoly());
    out.check(tag + " substitution identity", substituted_operator(mem.source, gp.p) == expected);
    Algebraic q = quantization_residual(mem.source, mem.n, mem.branch);
    out.check(tag + " quantization", q.is_zero(), "residual " + q.to_string());

    std::string zm = "-";
    if (a.check_zero_mode) {
      Grid g = suggest_zero_mode_grid(gp.p, D, a.n, a.m);
      double r = zero_mode_residual(gp, g);
      j["zero_mode"] = {{"residual", r}, {"grid", to_json_value(g)}};
      out.check(tag + " zero mode", r < a.zero_mode_tol, "residual " + sci(r));
      zm = sci(r);
    }
    std::string terms;
    for (const auto& t : gp.power_terms) terms += "(" + t.coeff.to_string() + ", " + t.exponent.to_string() + ") ";
    rows.push_back({gp.p.to_string(), gp.inv_square.to_string(), terms, gp.wf_exponent.to_string(), zm});
    jm.push_back(std::move(j));
  }
  out.result = {{"members", jm}};
  out.text = table(rows);
  for (const auto& mem : members) {
    for (const auto& note : family_notes(mem.problem.p)) out.text += "note: " + note + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- symmetry

struct SymmetryArgs {
  int N = 0;
  int N_max = 0;
  bool all_roots = false;
  bool fields = false;
};

RunOutput cmd_symmetry(const SymmetryArgs& a, const ProblemFile& pf) {
  RunOutput out;
  int lo = 1, hi = 1;
  if (a.N > 0) {
    lo = hi = a.N;
  } else if (a.N_max > 0) {
    hi = a.N_max;
  } else if (pf.ansatz_N_max) {
    hi = *pf.ansatz_N_max;
  }
  if (a.N < 0 || a.N_max < 0 || hi < 1) throw UsageError("ansatz degree must be >= 1");
  if (hi > 16) throw UsageError("ansatz degree above 16 is not supported");
  out.input = {{"N_range", {lo, hi}}, {"all_roots", a.all_roots}};
  json sols = json::array();
  std::ostringstream text;
  for (int N = lo; N <= hi; ++N) {
    std::vector<SymmetrySolution> list;
    if (a.all_roots) {
      list = ansatz_solve_all(N);
    } else if (auto s = ansatz_solve(N)) {
      list.push_back(*s);
    }
    if (list.empty()) text << "N=" << N << ": no solution\n";
    for (const auto& s : list) {
      bool ok = true;
      for (const Rational& D : {Rational(1, 2), Rational(1), Rational(7, 3)}) {
        ok = ok && beta_ode_residual(s.C, D, s.E_hat(D), s.beta(D)).is_zero();
      }
      out.check("N=" + std::to_string(N) + " E/D^2=" + s.E_over_D2.to_string() + " beta residual", ok);
      sols.push_back(to_json_value(s));
      text << "N=" << N << "  C=" << s.C.to_string() << "  E/D^2=" << s.E_over_D2.to_string() << "\n  g:";
      for (const auto& gc : s.g) {
        text << "  g" << gc.l << " = " << gc.coeff.to_string();
        if (gc.d_power) text << "*D" << (gc.d_power > 1 ? "^" + std::to_string(gc.d_power) : "");
      }
      text << "\n";
      for (const auto& note : s.notes) text << "  note: " << note << "\n";
    }
  }
  out.result = {{"solutions", sols}};
  if (a.fields) {
    json jf = json::array();
    auto record = [&](const std::string& name, const UPPoly& residual) {
      out.check("field " + name, residual.is_zero(), residual.is_zero() ? "" : residual.render());
      jf.push_back({{"name", name}, {"residual", residual.render()}});
      text << "field " << name << ": " << (residual.is_zero() ? "symmetry" : "NOT a symmetry") << "\n";
    };
    auto s1 = *ansatz_solve(1);
    ExpPoly f = kratzer_half_state();
    record("D=1/2 alpha=delta=x^{-1/2}e^{x/2}",
           determining_residual(s1.Q(Rational(1, 2)), build_vector_field(s1, f, f, 0, Rational(1, 2))));
    for (int n = 0; n <= 2; ++n) record("oscillator n=" + std::to_string(n), oscillator_field_check(n));
    for (const auto& nf : free_particle_fields()) record("free particle " + nf.label, determining_residual(ExpPoly(1), nf.field));
    bool none = !oscillator_beta_solve(1, 0) && !oscillator_beta_solve(3, 3);
    out.check("oscillator has no Laurent beta", none);
    out.result["fields"] = jf;
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- algebra

struct AlgebraArgs {
  int max_n = 10;
  std::string D = "1/2";
  bool literal = false;
};

RunOutput cmd_algebra(const AlgebraArgs& a, const ProblemFile&) {
  RunOutput out;
  Rational D = parse_rational(a.D, "D");
  if (a.max_n < 0 || a.max_n > 40) throw UsageError("--max-n must be in [0, 40]");
  RelationOptions ro;
  ro.literal = a.literal;
  VerificationReport rep = verify_relations(D, a.max_n, ro);
  out.input = {{"D", D.to_string()}, {"max_n", a.max_n}, {"literal", a.literal}};

  json tab = json::array();
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> counts;  // family -> (pass, fail)
  for (const auto& e : rep.entries) {
    std::string family = e.name.substr(0, e.name.find(' '));
    if (!counts.count(family)) order.push_back(family);
    (e.pass ? counts[family].first : counts[family].second)++;
    int m = std::stoi(e.name.substr(e.name.find("m=") + 2));
    int n = std::stoi(e.name.substr(e.name.find("n=") + 2));
    tab.push_back({{"family", family}, {"m", m}, {"n", n}, {"pass", e.pass}, {"detail", e.detail}});
    if (!e.pass) out.check(e.name, false, e.detail);
  }
  std::vector<std::vector<std::string>> rows{{"family", "checked", "pass", "fail"}};
  for (const auto& f : order) {
    auto [p, q] = counts[f];
    rows.push_back({f, std::to_string(p + q), std::to_string(p), std::to_string(q)});
    if (q == 0) out.check(f, true, std::to_string(p) + " relations");
  }
  SpanMembership zz = span_membership(vf_commutator(gen_z(2), gen_z(1)), make_generators(D, a.max_n));
  out.result = {{"table", tab}, {"span_Z2_Z1", to_json_value(zz)}};
  out.text = table(rows) + "[Z_-2, Z_-1] in span: " + (zz.member ? "yes" : "no") +
             (zz.offending ? ", offending term " + render(*zz.offending) : std::string()) + "\n";
  return out;
}

// ---------------------------------------------------------------- verify-all

struct VerifyArgs {
  bool skip_numeric = false;
  std::string inject_fault;
};

RunOutput cmd_verify_all(const VerifyArgs& a, const Globals& g) {
  RunOutput out;
  if (!a.inject_fault.empty() &&
      std::find(known_faults().begin(), known_faults().end(), a.inject_fault) == known_faults().end()) {
    throw UsageError("unknown fault '" + a.inject_fault + "'");
  }
  VerifyOptions opt;
  opt.skip_numeric = a.skip_numeric;
  opt.inject_fault = a.inject_fault;
  opt.seed = g.seed;
  out.input = {{"skip_numeric", a.skip_numeric}, {"inject_fault", a.inject_fault}, {"seed", g.seed}};
  std::ostringstream text;
  for (const auto& rec : verify_all(opt)) {
    std::string details;
    for (const auto& d : rec.details) details += (details.empty() ? "" : "; ") + d;
    out.checks.push_back({rec.id + " " + rec.name, rec.status, details});
    text << std::left << std::setw(4) << rec.id << std::setw(5) << to_string(rec.status) << rec.name << "  ("
         << fixed(rec.seconds, 2) << " s)\n";
    for (const auto& d : rec.details) {
      if (rec.status != CheckStatus::pass || d.rfind("ok: ", 0) != 0) text << "      " << d << "\n";
    }
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- output

void emit(const std::string& command, const RunOutput& out, const Globals& g) {
  std::string body;
  if (g.json) {
    json checks = json::array();
    for (const auto& c : out.checks) {
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
    }
    json rep = {{"tool", "sgasym"},
                {"version", kVersion},
                {"command", command},
                {"input", out.input},
                {"checks", checks},
                {"result", out.result},
                {"exit_status", out.exit_status()},
                {"timestamp", timestamp()}};
    body = rep.dump(2) + "\n";
  } else {
    body = out.text;
    for (const auto& c : out.checks) {
      if (c.status == CheckStatus::fail) body += "FAILED: " + c.name + (c.details.empty() ? "" : " (" + c.details + ")") + "\n";
    }
  }
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot write '" + g.out + "'");
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact su(1,1) spectra, isospectral families, point symmetries and their algebra"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_option("--out", g.out, "Write the report to PATH");
  app.add_option("--problem", g.problem, "Problem file (JSON)");
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Discrete levels E = -D^2/[(2n+1) +/- sqrt(1-4C)]^2");
  spectrum->add_option("--C", sa.C, "Coefficient of 1/x^2");
  spectrum->add_option("--D", sa.D, "Coefficient of 1/x");
  spectrum->add_option("--n-max", sa.n_max, "Highest level");
  spectrum->add_option("--branch", sa.branch, "plus or minus");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Finite-difference check of the plus-branch levels");
  oracle->add_option("--C", oa.C, "Coefficient of 1/x^2");
  oracle->add_option("--D", oa.D, "Coefficient of 1/x");
  oracle->add_option("--k", oa.k, "Number of levels")->capture_default_str();
  oracle->add_option("--m", oa.m, "Interior points of the coarse grid (default 20000)");
  oracle->add_option("--tol", oa.tol, "Bisection tolerance (default 1e-12)");
  oracle->add_option("--rel-tol", oa.rel_tol, "Accepted relative error")->capture_default_str();

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "Transformed equations under s = x^p");
  family->add_option("--C", fa.C, "Coefficient of 1/x^2");
  family->add_option("--D", fa.D, "Coefficient of 1/x");
  family->add_option("--n", fa.n, "Level")->capture_default_str();
  family->add_option("--branch", fa.branch, "plus or minus");
  family->add_option("--p", fa.ps, "Substitution exponents (repeatable)");
  family->add_flag("--check-zero-mode", fa.check_zero_mode, "Verify each member numerically");
  family->add_option("--m", fa.m, "Grid points for the zero-mode check")->capture_default_str();
  family->add_option("--zero-mode-tol", fa.zero_mode_tol, "Accepted zero-mode residual")->capture_default_str();

  SymmetryArgs ya;
  auto* symmetry = app.add_subcommand("symmetry", "Laurent ansatz for the beta equation");
  symmetry->add_option("--N", ya.N, "Ansatz degree");
  symmetry->add_option("--N-max", ya.N_max, "Solve for every degree 1..N-max");
  symmetry->add_flag("--all-roots", ya.all_roots, "Report every energy root, not just the principal one");
  symmetry->add_flag("--fields", ya.fields, "Verify the closed-form symmetry fields");

  AlgebraArgs la;
  auto* algebra = app.add_subcommand("algebra", "Commutation table of X, Y_-n, Z_-n");
  algebra->add_option("--max-n", la.max_n, "Largest index")->capture_default_str();
  algebra->add_option("--D", la.D, "Coefficient D (X = 2D d/dx)")->capture_default_str();
  algebra->add_flag("--literal", la.literal, "Use right-hand sides without the 2D factors");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
  verify->add_flag("--skip-numeric", va.skip_numeric, "Skip the floating-point oracle");
  verify->add_option("--inject-fault", va.inject_fault, "Fail-path fixture: su11-sign or algebra-sign");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ProblemFile pf = load_problem(g.problem);
    RunOutput out;
    std::string command;
    if (*spectrum) {
      command = "spectrum";
      out = cmd_spectrum(sa, pf);
    } else if (*oracle) {
      command = "oracle";
      out = cmd_oracle(oa, pf);
    } else if (*family) {
      command = "family";
      out = cmd_family(fa, pf);
    } else if (*symmetry) {
      command = "symmetry";
      out = cmd_symmetry(ya, pf);
    } else if (*algebra) {
      command = "algebra";
      out = cmd_algebra(la, pf);
    } else {
      command = "verify-all";
      out = cmd_verify_all(va, g);
    }
    emit(command, out, g);
    return out.exit_status();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
