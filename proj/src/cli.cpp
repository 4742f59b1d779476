#include "polpoisson/cli.hpp"

#include "polpoisson/dynamics.hpp"
#include "polpoisson/io.hpp"
#include "polpoisson/poisson.hpp"
#include "polpoisson/sampling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace polpoisson {

namespace {

struct Paint {
  bool on;
  std::string pass() const { return on ? "\033[32mPASS\033[0m" : "PASS"; }
  std::string fail() const { return on ? "\033[31mFAIL\033[0m" : "FAIL"; }
  std::string error() const { return on ? "\033[31merror\033[0m" : "error"; }
};

std::vector<double> parse_floats(const std::string& text, std::size_t expected, const char* flag)
{
  std::vector<double> out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(std::string(flag) + ": '" + item + "' is not a number");
      out.push_back(v);
    }
  }
  if (out.empty())
    out.assign(expected, 0.0);
  if (out.size() != expected)
    throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(expected) + " values, got " +
                                std::to_string(out.size()));
  return out;
}

std::string format_combination(const std::map<std::size_t, Rational>& coeffs, const char* symbol)
{
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : coeffs) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (mag != 1)
      os << to_string(mag) << '*';
    os << symbol << l + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string describe_algebra(const LieAlgebra& algebra)
{
  std::ostringstream os;
  os << algebra.name() << " (dim " << algebra.dim() << ")\n";
  auto brackets = algebra.brackets();
  if (brackets.empty())
    os << "  all brackets vanish\n";
  for (const auto& e : brackets)
    os << "  [e" << e.i + 1 << ",e" << e.j + 1 << "] = " << format_combination(e.coeffs, "e") << '\n';
  for (const auto& e : algebra.to_maurer_cartan().d)
    os << "  d omega" << e.l + 1 << " = " << (e.coeff == 1 ? "" : e.coeff == -1 ? "-" : to_string(e.coeff) + "*") << "omega" << e.i + 1
       << "^omega" << e.j + 1 << '\n';
  return os.str();
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  Paint paint;
};

int cmd_validate(Context& ctx, const std::string& file)
{
  ProblemFile problem = load_problem(file);
  bool ok = true;
  if (problem.algebra) {
    auto report = problem.algebra->validate();
    if (!report.ok()) {
      ok = false;
      for (const auto& v : report.violations)
        ctx.err << ctx.paint.error() << ": lie_algebra: " << v.describe() << '\n';
    }
  }
  if (!ok)
    return exit_input_error;
  ctx.out << "ok: k=" << problem.manifold.k() << " n=" << problem.manifold.n();
  if (problem.algebra)
    ctx.out << ", Lie algebra valid";
  ctx.out << ", " << problem.hamiltonians.size() << " polarized Hamiltonian(s)\n";
  return exit_ok;
}

int cmd_bracket(Context& ctx, const std::string& file, const std::string& h_name, const std::string& k_name,
                bool linear, bool json)
{
  ProblemFile problem = load_problem(file);
  const auto& h = problem.hamiltonian(h_name);
  const auto& k = problem.hamiltonian(k_name);
  PolarizedHamiltonian result = PolarizedHamiltonian::zero(problem.manifold);
  if (linear) {
    if (!problem.algebra)
      throw std::invalid_argument("--linear needs a lie_algebra in the problem file");
    result = linear_bracket(*problem.algebra, h, k);
  } else {
    result = subordinate_bracket(h, k);
  }
  if (json)
    ctx.out << hamiltonian_to_json(result).dump() << '\n';
  else
    ctx.out << result.to_string() << '\n';
  return exit_ok;
}

int cmd_field(Context& ctx, const std::string& file, const std::string& h_name, bool linear, bool json)
{
  ProblemFile problem = load_problem(file);
  const auto& h = problem.hamiltonian(h_name);
  FoliateField field = FoliateField::zero(problem.manifold);
  if (linear) {
    if (!problem.algebra)
      throw std::invalid_argument("--linear needs a lie_algebra in the problem file");
    field = linear_hamiltonian_field(*problem.algebra, h);
  } else {
    field = hamiltonian_field(h);
  }
  if (json)
    ctx.out << field_to_json(field).dump() << '\n';
  else
    ctx.out << field.to_string() << '\n';
  return exit_ok;
}

struct FlowOptions {
  std::string x0;
  std::string y0;
  double t = 1.0;
  double dt = 1e-3;
  std::string out_path;
  bool json = false;
};

int cmd_flow(Context& ctx, const std::string& file, const std::string& h_name, const FlowOptions& opt)
{
  ProblemFile problem = load_problem(file);
  const auto& h = problem.hamiltonian(h_name);
  const auto& m = problem.manifold;
  State s0{parse_floats(opt.x0, m.k() * m.n(), "--x0"), parse_floats(opt.y0, m.n(), "--y0")};
  Trajectory traj = rk4_flow(h, s0, opt.t, opt.dt);
  auto drift = conservation_report(traj);

  std::ostream* report = &ctx.out;
  if (opt.out_path.empty()) {
    write_csv(ctx.out, traj);
    report = &ctx.err;
  } else {
    std::ofstream csv(opt.out_path);
    if (!csv)
      throw std::invalid_argument("--out: cannot write '" + opt.out_path + "'");
    write_csv(csv, traj);
  }
  if (opt.json) {
    *report << Json{{"steps", traj.states.size() - 1}, {"overflow", traj.overflow}, {"drift", drift}}.dump() << '\n';
  } else {
    char buf[64];
    *report << "steps: " << traj.states.size() - 1 << (traj.overflow ? " (overflow, truncated)" : "") << '\n';
    for (std::size_t p = 0; p < drift.size(); ++p) {
      std::snprintf(buf, sizeof buf, "%.6e", drift[p]);
      *report << "drift H_" << p + 1 << ": " << buf << '\n';
    }
  }
  return traj.overflow ? exit_verification_failure : exit_ok;
}

int cmd_verify(Context& ctx, const std::string& file, std::size_t samples, std::uint64_t seed, bool linear, bool json)
{
  ProblemFile problem = load_problem(file);
  const auto& m = problem.manifold;
  if (samples == 0)
    throw std::invalid_argument("--samples must be positive");
  Bracket bracket = Bracket::subordinate();
  if (linear) {
    if (!problem.algebra)
      throw std::invalid_argument("--linear needs a lie_algebra in the problem file");
    bracket = Bracket::linear_unchecked(*problem.algebra);
  }

  SampleGenerator gen(seed);
  std::vector<PolarizedHamiltonian> hs;
  for (const auto& named : problem.hamiltonians)
    hs.push_back(named.hamiltonian);
  for (std::size_t i = 0; i < samples; ++i)
    hs.push_back(gen.hamiltonian(m, 2));

  AxiomReport report = verify_axioms(bracket, m, hs);

  AxiomResult contraction{"contraction i(X_H) theta = -dH", true, {}};
  AxiomResult homomorphism{"bracket of fields [X_H, X_K] = X_{K,H}", true, {}};
  AxiomResult duality{"duality <dH, X_K> = {H,K} = -<dK, X_H>", true, {}};
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    const auto& k = hs[(i + 1) % hs.size()];
    auto xh = hamiltonian_field(h);
    auto xk = hamiltonian_field(k);
    if (contraction.passed && !(contract_theta(xh) == -differential(h))) {
      contraction.passed = false;
      contraction.witness = "H = {" + h.to_string() + "}";
    }
    auto hk = subordinate_bracket(h, k);
    if (homomorphism.passed && !(lie_bracket(xh, xk) == hamiltonian_field(-hk))) {
      homomorphism.passed = false;
      homomorphism.witness = "H = {" + h.to_string() + "}, K = {" + k.to_string() + "}";
    }
    auto lhs = pair(differential(h), xk);
    auto rhs = pair(differential(k), xh);
    for (std::size_t p = 0; p < m.k() && duality.passed; ++p)
      if (!(lhs[p] == hk.component(p)) || !(rhs[p] == -hk.component(p))) {
        duality.passed = false;
        duality.witness = "H = {" + h.to_string() + "}, K = {" + k.to_string() + "}";
      }
  }
  report.results.push_back(contraction);
  report.results.push_back(homomorphism);
  report.results.push_back(duality);

  if (json) {
    Json arr = Json::array();
    for (const auto& r : report.results)
      arr.push_back({{"check", r.axiom}, {"passed", r.passed}, {"witness", r.witness}});
    ctx.out << Json{{"bracket", bracket.name()}, {"samples", samples}, {"seed", seed}, {"results", arr}}.dump()
            << '\n';
  } else {
    ctx.out << "bracket: " << bracket.name() << ", samples: " << samples << ", seed: " << seed << '\n';
    for (const auto& r : report.results) {
      ctx.out << (r.passed ? ctx.paint.pass() : ctx.paint.fail()) << ' ' << r.axiom;
      if (!r.passed)
        ctx.out << "\n  witness: " << r.witness;
      ctx.out << '\n';
    }
  }
  return report.all_passed() ? exit_ok : exit_verification_failure;
}

int cmd_examples(Context& ctx, bool json)
{
  if (json) {
    Json arr = Json::array();
    for (const auto& name : builtin_algebra_names()) {
      auto algebra = builtin_algebra(name);
      arr.push_back({{"name", name},
                     {"structure_constants", lie_algebra_to_json(algebra)},
                     {"maurer_cartan", maurer_cartan_to_json(algebra.to_maurer_cartan())}});
    }
    ctx.out << arr.dump(2) << '\n';
    return exit_ok;
  }
  for (const auto& name : builtin_algebra_names())
    ctx.out << describe_algebra(builtin_algebra(name));
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliEnvironment& env)
{
  CLI::App app{"Polarized k-symplectic brackets, fields and flows in the Darboux model", "polpoisson"};
  app.require_subcommand(1);

  bool json = false;

  std::string file;
  std::string h_name;
  std::string k_name;
  bool linear = false;

  auto* validate = app.add_subcommand("validate", "Check a problem file");
  validate->add_option("file", file, "Problem file")->required();

  auto* bracket = app.add_subcommand("bracket", "Bracket two named Hamiltonians");
  bracket->add_option("file", file)->required();
  bracket->add_option("H", h_name)->required();
  bracket->add_option("K", k_name)->required();
  bracket->add_flag("--linear", linear, "Use the linear bracket of the file's Lie algebra");
  bracket->add_flag("--json", json);

  auto* lbracket = app.add_subcommand("lbracket", "Alias for bracket --linear");
  lbracket->add_option("file", file)->required();
  lbracket->add_option("H", h_name)->required();
  lbracket->add_option("K", k_name)->required();
  lbracket->add_flag("--json", json);

  auto* field = app.add_subcommand("field", "Print the Hamiltonian vector field X_H");
  field->add_option("file", file)->required();
  field->add_option("H", h_name)->required();
  field->add_flag("--linear", linear, "Field of the linear bracket");
  field->add_flag("--json", json);

  FlowOptions flow_opt;
  auto* flow = app.add_subcommand("flow", "Integrate Hamilton's equations with RK4");
  flow->add_option("file", file)->required();
  flow->add_option("H", h_name)->required();
  flow->add_option("--x0", flow_opt.x0, "k*n comma-separated values x_1_1,...,x_k_n");
  flow->add_option("--y0", flow_opt.y0, "n comma-separated values");
  flow->add_option("--t", flow_opt.t, "Final time")->capture_default_str();
  flow->add_option("--dt", flow_opt.dt, "Step size")->capture_default_str();
  flow->add_option("--out", flow_opt.out_path, "CSV output path (default stdout)");
  flow->add_flag("--json", json);

  std::size_t samples = 50;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Exact axiom and identity checks on seeded samples");
  verify->add_option("file", file)->required();
  verify->add_option("--samples", samples)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--linear", linear);
  verify->add_flag("--json", json);

  auto* examples = app.add_subcommand("examples", "Print the catalog Lie algebras");
  examples->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_input_error;
  }

  Context ctx{out, err, Paint{env.color}};
  try {
    if (validate->parsed())
      return cmd_validate(ctx, file);
    if (bracket->parsed())
      return cmd_bracket(ctx, file, h_name, k_name, linear, json);
    if (lbracket->parsed())
      return cmd_bracket(ctx, file, h_name, k_name, true, json);
    if (field->parsed())
      return cmd_field(ctx, file, h_name, linear, json);
    if (flow->parsed()) {
      flow_opt.json = json;
      return cmd_flow(ctx, file, h_name, flow_opt);
    }
    if (verify->parsed())
      return cmd_verify(ctx, file, samples, seed, linear, json);
    if (examples->parsed())
      return cmd_examples(ctx, json);
  } catch (const ProblemError& e) {
    for (const auto& d : e.diagnostics())
      err << ctx.paint.error() << ": " << d << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << ctx.paint.error() << ": " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace polpoisson
