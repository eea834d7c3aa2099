#include "clonebound/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "clonebound/bound_optimizer.hpp"
#include "clonebound/buzek_hillery.hpp"
#include "clonebound/errors.hpp"
#include "clonebound/rational.hpp"

namespace clonebound::cli {

namespace {

using nlohmann::json;

constexpr double kResidualTol = kStateTol;
constexpr int kVerifyRandomPairs = 50;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string csv_num(double v) { return fmt::format("{:.9g}", v); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

double number_flag(const std::string& name, const std::string& text) {
  try {
    return parse_number(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

std::uint64_t count_flag(const std::string& name, const std::string& text, std::uint64_t min) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError(name + ": expected a non-negative integer, got '" + text + "'");
  if (v < min) throw UsageError(name + ": must be >= " + std::to_string(min));
  return v;
}

std::array<double, 3> triple_flag(const std::string& name, const std::string& text) {
  std::array<double, 3> v{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) == (comma == std::string::npos))
      throw UsageError(name + ": expected three comma-separated numbers, got '" + text + "'");
    v[i] = number_flag(name, text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma + 1;
  }
  return v;
}

BlochVector unit_flag(const std::string& name, const std::string& text) {
  const auto v = triple_flag(name, text);
  const BlochVector b{v[0], v[1], v[2]};
  try {
    require_unit(b);
  } catch (const InvalidBloch& e) {
    throw UsageError(name + ": " + e.what());
  }
  return b;
}

std::string axis_string(const BlochVector& v) {
  return csv_num(v.x) + "," + csv_num(v.y) + "," + csv_num(v.z);
}

struct Flags {
  explicit Flags(CLI::App* s) : sub(s) {}

  CLI::App* sub = nullptr;
  std::string eta, t, t_xy, t_diag, params, axis_a, axis_b, input, shots, seed, resolution,
      method, format, out;
};

bool given(const Flags& f, const char* name) {
  const CLI::Option* opt = f.sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

GeneralClonerParams as_general(const AnyClonerParams& p) {
  if (const auto* fam = std::get_if<ClonerParams>(&p)) return to_general(*fam);
  return std::get<GeneralClonerParams>(p);
}

AnyClonerParams resolve_params(const Flags& f, const RunConfig& defaults) {
  const bool family_flags = given(f, "--t") || given(f, "--t_xy");
  if (given(f, "--params")) {
    if (family_flags || given(f, "--eta") || given(f, "--t_diag"))
      throw UsageError("--params cannot be combined with --eta/--t/--t_xy/--t_diag");
    try {
      return params_from_json(json::parse(f.params));
    } catch (const json::exception& e) {
      throw UsageError(std::string("--params: malformed cloner parameters: ") + e.what());
    }
  }
  const auto& base = std::get<ClonerParams>(defaults.params);
  const double eta = given(f, "--eta") ? number_flag("--eta", f.eta) : base.eta;
  if (given(f, "--t_diag")) {
    if (family_flags) throw UsageError("--t_diag cannot be combined with --t/--t_xy");
    const auto d = triple_flag("--t_diag", f.t_diag);
    GeneralClonerParams g;
    g.eta = eta;
    g.t = {{{d[0], 0.0, 0.0}, {0.0, d[1], 0.0}, {0.0, 0.0, d[2]}}};
    return g;
  }
  ClonerParams p = base;
  p.eta = eta;
  if (given(f, "--t")) p.t = number_flag("--t", f.t);
  if (given(f, "--t_xy")) p.t_xy = number_flag("--t_xy", f.t_xy);
  return p;
}

void validate_params(const AnyClonerParams& p) {
  try {
    as_general(p).validate();
  } catch (const InvalidState& e) {
    throw UsageError(e.what());
  }
}

struct Outcome {
  std::string text;
  int status = kExitOk;
};

Outcome cmd_verify(const RunConfig& c, OutputFormat format) {
  const GeneralClonerParams g = as_general(c.params);
  const TwoQubitState rho_z = general_output_state(g, kAxisZ);

  const double covariance = covariance_constraint_residual(g.t);
  const double axial = std::max(axial_covariance_residual(rho_z, kAxisZ),
                                axial_covariance_residual(output_state(g, kAxisX), kAxisX));
  const double no_signal = max_no_signaling_residual(g, kVerifyRandomPairs, c.seed);
  const auto eigen = hermitian_eigenvalues4(rho_z.matrix());
  const double min_eig = eigen[3];

  const bool covariance_ok = covariance <= kResidualTol;
  const bool axial_ok = axial <= kResidualTol;
  const bool no_signal_ok = no_signal <= kResidualTol;
  const bool positivity_ok = min_eig >= -kFeasibilityTol;
  const bool all_ok = covariance_ok && axial_ok && no_signal_ok && positivity_ok;

  Outcome o;
  o.status = all_ok ? kExitOk : kExitCheckFailed;
  if (format == OutputFormat::Csv) {
    const auto row = [](const char* name, double v, bool ok) {
      return std::string(name) + "," + csv_num(v) + "," + (ok ? "true" : "false") + "\n";
    };
    o.text = "check,value,pass\n" + row("covariance", covariance, covariance_ok) +
             row("axial_invariance", axial, axial_ok) + row("no_signaling", no_signal, no_signal_ok) +
             row("positivity", min_eig, positivity_ok);
    return o;
  }
  json j{{"params", params_to_json(c.params)},
         {"covariance_residual", covariance},
         {"covariance_pass", covariance_ok},
         {"axial_residual", axial},
         {"axial_pass", axial_ok},
         {"no_signaling_residual", no_signal},
         {"no_signaling_pass", no_signal_ok},
         {"eigenvalues", eigen},
         {"min_eigenvalue", min_eig},
         {"positivity_pass", positivity_ok},
         {"fidelity", (1.0 + g.eta) / 2.0},
         {"pass", all_ok}};
  if (const auto* fam = std::get_if<ClonerParams>(&c.params))
    j["closed_form_eigenvalues"] = positivity_eigenvalues(*fam).values;
  o.text = dump(j);
  return o;
}

Outcome cmd_optimize(const RunConfig& c, OutputFormat format) {
  if (c.method != "grid" && c.method != "closed_form")
    throw UsageError("--method must be grid or closed_form");
  const BoundResult closed = max_eta_closed_form();
  std::optional<BoundResult> grid;
  if (c.method == "grid") {
    try {
      grid = max_eta_grid(c.resolution);
    } catch (const InvalidResolution& e) {
      throw UsageError(e.what());
    }
  }
  const double discrepancy = grid ? closed.eta_max - grid->eta_max : 0.0;

  Outcome o;
  o.status = discrepancy >= -kFeasibilityTol ? kExitOk : kExitCheckFailed;
  if (format == OutputFormat::Csv) {
    const auto row = [](const BoundResult& r) {
      return fmt::format("{},{},{},{},{},{}\n", r.method == BoundMethod::Grid ? "grid" : "closed_form",
                         r.resolution, csv_num(r.eta_max), csv_num(r.t_star), csv_num(r.t_xy_star),
                         csv_num(r.fidelity_max));
    };
    o.text = "method,resolution,eta_max,t_star,t_xy_star,fidelity_max\n" + row(closed);
    if (grid) o.text += row(*grid);
    return o;
  }
  const ExactBound exact = max_eta_exact();
  json j{{"closed_form", closed},
         {"eta_max_exact", exact.eta_max.to_string()},
         {"t_star_exact", exact.t_star.to_string()},
         {"t_xy_star_exact", exact.t_xy_star.to_string()},
         {"fidelity_max_exact", exact.fidelity_max.to_string()}};
  if (grid) {
    j["grid"] = *grid;
    j["discrepancy"] = discrepancy;
  }
  o.text = dump(j);
  return o;
}

Outcome cmd_clone(const RunConfig& c, OutputFormat format) {
  const OneQubitState rho_in = bloch_to_density(c.input);
  const TwoQubitState out = bh_clone(rho_in);
  const OneQubitState clone1 = partial_trace(out, Qubit::First);
  const OneQubitState clone2 = partial_trace(out, Qubit::Second);
  const double f1 = overlap_fidelity(rho_in, clone1);
  const double f2 = overlap_fidelity(rho_in, clone2);

  Outcome o;
  if (format == OutputFormat::Csv) {
    o.text = "clone,fidelity,bloch_x,bloch_y,bloch_z\n";
    o.text += "1," + csv_num(f1) + "," + axis_string(density_to_bloch(clone1)) + "\n";
    o.text += "2," + csv_num(f2) + "," + axis_string(density_to_bloch(clone2)) + "\n";
    return o;
  }
  o.text = dump(json{{"input", c.input},
                     {"output", matrix_to_json(out.matrix())},
                     {"pauli", pauli_decompose(out.matrix())},
                     {"clone1_bloch", density_to_bloch(clone1)},
                     {"clone2_bloch", density_to_bloch(clone2)},
                     {"fidelity_clone1", f1},
                     {"fidelity_clone2", f2},
                     {"trace", out.matrix().trace().real()}});
  return o;
}

Outcome cmd_signal(const RunConfig& c, OutputFormat format) {
  const SignalReport r = monte_carlo_signal(as_general(c.params), c.axis_a, c.axis_b, c.shots, c.seed);
  Outcome o;
  o.status = r.not_physical ? kExitCheckFailed : kExitOk;
  if (format == OutputFormat::Csv) {
    o.text =
        "axis_a_x,axis_a_y,axis_a_z,axis_b_x,axis_b_y,axis_b_z,trace_distance,helstrom_probability,"
        "mc_estimate,mc_shots,seed\n";
    o.text += axis_string(r.axis_a) + "," + axis_string(r.axis_b) + "," + csv_num(r.trace_distance) +
              "," + csv_num(r.helstrom_probability) + "," + (r.mc_estimate ? csv_num(*r.mc_estimate) : "") +
              "," + std::to_string(r.mc_shots) + "," + std::to_string(r.seed) + "\n";
    return o;
  }
  json j = r;
  j["params"] = params_to_json(c.params);
  o.text = dump(j);
  return o;
}

Outcome cmd_sweep(const RunConfig& c, OutputFormat format) {
  const int n = c.sweep_resolution;
  if (n < 3) throw UsageError("--resolution must be >= 3");
  std::string text;
  json rows = json::array();
  if (format == OutputFormat::Csv)
    text = "eta,t,t_xy,lambda1,lambda2,lambda3,lambda4,min_eigenvalue,feasible,fidelity\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const ClonerParams p{grid_value(i, n), grid_value(j, n), grid_value(k, n)};
        const PositivityEigenvalues ev = positivity_eigenvalues(p);
        const bool ok = feasible(p);
        if (format == OutputFormat::Csv) {
          text += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_num(p.eta), csv_num(p.t),
                              csv_num(p.t_xy), csv_num(ev.values[0]), csv_num(ev.values[1]),
                              csv_num(ev.values[2]), csv_num(ev.values[3]), csv_num(ev.min()),
                              ok ? "true" : "false", csv_num(clone_fidelity(p)));
        } else {
          rows.push_back(json{{"eta", p.eta},
                              {"t", p.t},
                              {"t_xy", p.t_xy},
                              {"eigenvalues", ev.values},
                              {"min_eigenvalue", ev.min()},
                              {"feasible", ok},
                              {"fidelity", clone_fidelity(p)}});
        }
      }
  return {format == OutputFormat::Csv ? text : dump(rows), kExitOk};
}

void add_output_flags(Flags& f) {
  f.sub->add_option("--format", f.format, "Output format: json or csv (default json; csv for sweep)")
      ->check(CLI::IsMember({"json", "csv"}));
  f.sub->add_option("--out", f.out, "Write the report to PATH instead of stdout");
}

void add_param_flags(Flags& f) {
  f.sub->add_option("--eta", f.eta, "Shrinking factor (fractions like 2/3 accepted)")->default_str("2/3");
  f.sub->add_option("--t", f.t, "Diagonal correlation t = t_xx = t_yy = t_zz")->default_str("1/3");
  f.sub->add_option("--t_xy", f.t_xy, "Antisymmetric correlation t_xy = -t_yx")->default_str("0");
  f.sub->add_option("--t_diag", f.t_diag,
                    "Non-family diagonal tensor a,b,c = t_xx,t_yy,t_zz (output for input z)");
  f.sub->add_option("--params", f.params,
                    R"(Parameters as JSON: {"eta","t","t_xy"} or {"eta","t":[[3x3]]})");
}

}  // namespace

json defaults_as_json() {
  const RunConfig d;
  return json{{"params", params_to_json(d.params)},
              {"axis_a", d.axis_a},
              {"axis_b", d.axis_b},
              {"input", d.input},
              {"shots", d.shots},
              {"seed", d.seed},
              {"optimize_resolution", d.resolution},
              {"sweep_resolution", d.sweep_resolution},
              {"method", d.method},
              {"format", "json"},
              {"sweep_format", "csv"}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal qubit cloning under the no-signaling constraint", "clone-bound"};
  app.require_subcommand(1);

  RunConfig config;

  Flags verify{app.add_subcommand("verify", "Check covariance, axial invariance, no-signaling and positivity")};
  add_param_flags(verify);
  verify.sub->add_option("--seed", verify.seed, "Seed for the random axis pairs")->default_str("1");
  add_output_flags(verify);

  Flags optimize{app.add_subcommand("optimize", "Maximize eta: closed form and grid search")};
  optimize.sub->add_option("--method", optimize.method, "grid (both routes) or closed_form")
      ->default_str("grid")
      ->check(CLI::IsMember({"grid", "closed_form"}));
  optimize.sub->add_option("--resolution", optimize.resolution, "Grid points per axis (>= 3)")
      ->default_str("2001");
  add_output_flags(optimize);

  Flags clone{app.add_subcommand("clone", "Run the Buzek-Hillery cloner on a pure input")};
  clone.sub->add_option("--input", clone.input, "Input Bloch vector x,y,z (unit norm)")->default_str("0,0,1");
  add_output_flags(clone);

  Flags signal{app.add_subcommand("signal", "Distinguish Alice's axis from Bob's clones")};
  add_param_flags(signal);
  signal.sub->add_option("--axis-a", signal.axis_a, "First measurement axis x,y,z")->default_str("0,0,1");
  signal.sub->add_option("--axis-b", signal.axis_b, "Second measurement axis x,y,z")->default_str("1,0,0");
  signal.sub->add_option("--shots", signal.shots, "Monte-Carlo rounds (>= 1)")->default_str("100000");
  signal.sub->add_option("--seed", signal.seed, "Seed for the Monte-Carlo stream")->default_str("1");
  add_output_flags(signal);

  Flags sweep{app.add_subcommand("sweep", "Tabulate the positivity eigenvalues over (eta, t, t_xy)")};
  sweep.sub->add_option("--resolution", sweep.resolution, "Grid points per axis (>= 3)")->default_str("13");
  add_output_flags(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Flags* active = nullptr;
  for (Flags* f : {&verify, &optimize, &clone, &signal, &sweep})
    if (f->sub->parsed()) active = f;
  config.subcommand = active->sub->get_name();

  Outcome outcome;
  try {
    const Flags& f = *active;
    if (given(f, "--format")) config.output_format = f.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (given(f, "--out")) config.output_path = f.out;
    if (given(f, "--seed")) config.seed = count_flag("--seed", f.seed, 0);
    if (given(f, "--shots")) config.shots = count_flag("--shots", f.shots, 1);
    if (given(f, "--method")) config.method = f.method;
    if (given(f, "--axis-a")) config.axis_a = unit_flag("--axis-a", f.axis_a);
    if (given(f, "--axis-b")) config.axis_b = unit_flag("--axis-b", f.axis_b);
    if (given(f, "--input")) config.input = unit_flag("--input", f.input);
    if (given(f, "--resolution")) {
      const auto r = static_cast<int>(count_flag("--resolution", f.resolution, 3));
      (config.subcommand == "sweep" ? config.sweep_resolution : config.resolution) = r;
    }
    if (f.sub->get_option_no_throw("--eta") != nullptr) {
      config.params = resolve_params(f, config);
      validate_params(config.params);
    }

    const OutputFormat format = config.output_format.value_or(
        config.subcommand == "sweep" ? OutputFormat::Csv : OutputFormat::Json);
    if (config.subcommand == "verify") outcome = cmd_verify(config, format);
    else if (config.subcommand == "optimize") outcome = cmd_optimize(config, format);
    else if (config.subcommand == "clone") outcome = cmd_clone(config, format);
    else if (config.subcommand == "signal") outcome = cmd_signal(config, format);
    else outcome = cmd_sweep(config, format);
  } catch (const UsageError& e) {
    err << "clone-bound " << config.subcommand << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "clone-bound " << config.subcommand << ": " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "clone-bound: cannot write '" << *config.output_path << "'\n";
      return kExitUsage;
    }
    file << outcome.text;
    file.close();
    if (!file) {
      err << "clone-bound: failed writing '" << *config.output_path << "'\n";
      return kExitUsage;
    }
  } else {
    out << outcome.text;
  }
  return outcome.status;
}

}  // namespace clonebound::cli
