#include "hulthen/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "hulthen/cli/table.hpp"
#include "hulthen/eigensolver.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/verify.hpp"
#include "hulthen/wavefn.hpp"

namespace hulthen::cli {

namespace {

using nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kModes = {"closed_c0", "closed_c0zero", "oracle_approx",
                                         "oracle_exact"};

// Rows are emitted in (n, l, D, alpha) order regardless of how they were produced.
using RowKey = std::tuple<int, int, int, double, int>;

struct KeyedTable {
  Table table;
  std::vector<std::pair<RowKey, std::vector<Cell>>> pending;

  void add(RowKey key, std::vector<Cell> row) { pending.emplace_back(key, std::move(row)); }

  Table& finish() {
    std::stable_sort(pending.begin(), pending.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, row] : pending) table.add_row(std::move(row));
    pending.clear();
    return table;
  }
};

std::vector<double> alphas_or(const RunConfig& c, std::vector<double> fallback) {
  return c.alphas.empty() ? fallback : c.alphas;
}

std::vector<int> dims_or(const RunConfig& c, std::vector<int> fallback) {
  return c.dims.empty() ? fallback : c.dims;
}

ordered_json config_echo(const RunConfig& c) {
  ordered_json j;
  j["command"] = to_string(c.command);
  j["units"] = c.units;
  j["Z"] = c.Z;
  j["mu"] = c.mu;
  j["hbar"] = c.hbar;
  j["e2"] = c.e2;
  j["c0"] = c.c0;
  j["alphas"] = c.alphas;
  j["dims"] = c.dims;
  j["n_max"] = c.n_max;
  j["l_max"] = c.l_max;
  j["n"] = c.n;
  j["l"] = c.l;
  j["format"] = c.format == Format::csv ? "csv" : "json";
  j["pretty"] = c.pretty;
  j["samples"] = c.samples;
  j["sample_r_max"] = c.sample_r_max ? ordered_json(*c.sample_r_max) : ordered_json(nullptr);
  j["grid_m"] = c.grid_m ? ordered_json(*c.grid_m) : ordered_json(nullptr);
  j["grid_r_max"] = c.grid_r_max ? ordered_json(*c.grid_r_max) : ordered_json(nullptr);
  j["tol"] = c.tol;
  j["modes"] = c.modes;
  j["suite"] = c.suite;
  j["perturb_c0"] = c.perturb_c0;
  return j;
}

ordered_json base_meta(const RunConfig& c) {
  ordered_json meta;
  meta["version"] = kVersion;
  meta["schema"] = kSchema;
  meta["config"] = config_echo(c);
  return meta;
}

void emit(std::ostream& out, const RunConfig& c, const Table& table, const ordered_json& meta) {
  if (c.format == Format::json) {
    write_json(out, table, meta);
  } else if (c.pretty) {
    write_pretty(out, table);
  } else {
    write_csv(out, table);
  }
}

void check_ranges(const RunConfig& c) {
  if (c.n_max < 0) throw InvalidParams("--nmax must be >= 0");
  if (c.l_max < 0) throw InvalidParams("--lmax must be >= 0");
}

OracleOptions oracle_options(const RunConfig& c) {
  OracleOptions o;
  o.r_max = c.grid_r_max;
  o.m = c.grid_m;
  o.eigen_tol = c.tol;
  return o;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_ranges(c);
  KeyedTable kt;
  kt.table.columns = {"n", "l", "D", "alpha", "c0", "energy", "eps_tilde", "bound",
                      "within_validity"};
  for (double alpha : alphas_or(c, {0.1})) {
    for (int D : dims_or(c, {3})) {
      const PhysicalParams p = c.params(alpha, D);
      p.validate();
      for (int l = 0; l <= c.l_max; ++l) {
        for (int n = 0; n <= c.n_max; ++n) {
          const EnergyLevel level = evaluate_level(p, {n, l});
          if (!level.bound) continue;
          kt.add({n, l, D, alpha, 0},
                 {std::int64_t{n}, std::int64_t{l}, std::int64_t{D}, alpha, p.c0, level.energy,
                  level.eps_tilde, true, level.within_validity});
        }
      }
    }
  }
  const Table& table = kt.finish();
  if (table.rows.empty()) err << "warning: no bound states\n";
  emit(out, c, table, base_meta(c));
  return kSuccess;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto alphas = alphas_or(c, {0.1});
  const auto dims = dims_or(c, {3});
  if (alphas.size() != 1 || dims.size() != 1) {
    throw InvalidParams("wavefunction takes a single --alpha and a single --D");
  }
  if (c.samples < 2) throw InvalidParams("--samples must be >= 2");
  const PhysicalParams p = c.params(alphas[0], dims[0]);
  const QuantumNumbers q{c.n, c.l};

  const auto psi = RadialWavefunction::build(p, q, Normalization::closed);
  const double numeric = normalization_numeric(p, q);

  double r_max = 25.0 / (p.alpha * psi.eps_tilde);
  if (c.sample_r_max) r_max = *c.sample_r_max;
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw InvalidParams("--sample-rmax must be > 0");

  Table table;
  table.columns = {"r", "R", "R2"};
  const double dr = r_max / c.samples;
  double trapezoid = 0.0;
  double prev_r = 0.0, prev_r2 = 0.0;  // R(0) = 0
  for (int i = 1; i <= c.samples; ++i) {
    const double r = dr * i;
    const double R = psi(r);
    table.add_row({r, R, R * R});
    trapezoid += 0.5 * (r - prev_r) * (prev_r2 + R * R);
    prev_r = r;
    prev_r2 = R * R;
  }

  ordered_json meta = base_meta(c);
  meta["state"] = {{"n", c.n}, {"l", c.l}, {"D", p.D}, {"alpha", p.alpha}};
  meta["energy"] = psi.energy;
  meta["eps_tilde"] = psi.eps_tilde;
  meta["nu"] = psi.nu;
  meta["norm_closed"] = psi.norm;
  meta["norm_numeric"] = numeric;
  meta["norm_rel_diff"] = std::abs(psi.norm - numeric) / numeric;
  meta["sample_r_max"] = r_max;
  meta["trapezoid_norm"] = trapezoid;
  if (c.format == Format::csv) {
    err << "note: norm closed=" << format_double(psi.norm)
        << " numeric=" << format_double(numeric)
        << " trapezoid=" << format_double(trapezoid) << "\n";
  }
  emit(out, c, table, meta);
  return kSuccess;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_ranges(c);
  VerifyOptions opts;
  if (!c.alphas.empty()) opts.alphas = c.alphas;
  if (!c.dims.empty()) opts.dims = c.dims;
  opts.n_max = c.n_max;
  opts.l_max = c.l_max;
  opts.c0 = c.c0;
  opts.c0_perturbation = c.perturb_c0;
  for (double a : opts.alphas) c.params(a, opts.dims.front()).validate();
  for (int D : opts.dims) c.params(opts.alphas.front(), D).validate();

  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), c.suite) == all.end()) {
      throw InvalidParams("unknown suite '" + c.suite + "'");
    }
    names = {c.suite};
  }

  ordered_json report;
  report["meta"] = base_meta(c);
  report["suites"] = ordered_json::array();
  bool all_pass = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, opts);
    all_pass = all_pass && r.pass();
    ordered_json s;
    s["name"] = r.name;
    s["pass"] = r.pass();
    s["checks"] = r.checks;
    s["failures"] = r.failures;
    s["skipped"] = r.skipped;
    s["metric"] = r.metric;
    s["max_error"] = std::isfinite(r.max_error) ? ordered_json(r.max_error) : ordered_json(nullptr);
    s["tolerance"] = r.tolerance;
    s["first_failure"] = r.first_failure;
    report["suites"].push_back(s);
    if (!r.pass()) err << "FAIL " << r.name << ": " << r.first_failure << "\n";
  }
  report["pass"] = all_pass;
  out << report.dump(c.pretty ? 2 : -1) << "\n";
  return all_pass ? kSuccess : kVerificationFailure;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_ranges(c);
  auto has = [&](const char* m) {
    return std::find(c.modes.begin(), c.modes.end(), m) != c.modes.end();
  };
  for (const auto& m : c.modes) {
    if (std::find(kModes.begin(), kModes.end(), m) == kModes.end()) {
      throw InvalidParams("unknown mode '" + m + "'");
    }
  }
  const bool closed_c0 = has("closed_c0"), closed_zero = has("closed_c0zero");
  const bool oracle_approx = has("oracle_approx"), oracle_exact = has("oracle_exact");

  KeyedTable kt;
  auto& cols = kt.table.columns;
  cols = {"n", "l", "D", "alpha"};
  if (closed_c0) cols.push_back("E_closed_c0");
  if (closed_zero) cols.push_back("E_closed_c0zero");
  if (oracle_approx) cols.push_back("E_oracle_approx");
  if (oracle_exact) cols.push_back("E_oracle_exact");
  if (oracle_exact && closed_c0) cols.insert(cols.end(), {"dev_abs_c0", "dev_rel_c0"});
  if (oracle_exact && closed_zero) cols.insert(cols.end(), {"dev_abs_c0zero", "dev_rel_c0zero"});
  if (oracle_exact && closed_c0 && closed_zero) cols.push_back("improvement_ratio");

  const OracleOptions opts = oracle_options(c);
  auto oracle = [&](const PhysicalParams& p, int l, CentrifugalMode mode, int count) {
    std::vector<double> energies(count, kNaN);
    try {
      for (const auto& level : solve_bound_states(p, l, mode, count, opts)) {
        energies[level.n] = level.energy;
      }
    } catch (const NoBoundState&) {
      err << "note: oracle found no bound state for l=" << l << " D=" << p.D
          << " alpha=" << format_double(p.alpha) << "\n";
    }
    return energies;
  };

  for (double alpha : alphas_or(c, {0.025, 0.05})) {
    for (int D : dims_or(c, {3})) {
      const PhysicalParams p = c.params(alpha, D);
      p.validate();
      PhysicalParams p_zero = p;
      p_zero.c0 = 0.0;
      for (int l = 0; l <= c.l_max; ++l) {
        int count = 0;
        while (count <= c.n_max && evaluate_level(p, {count, l}).bound) ++count;
        if (count == 0) continue;
        std::vector<double> approx, exact;
        if (oracle_approx) approx = oracle(p, l, CentrifugalMode::approx, count);
        if (oracle_exact) exact = oracle(p, l, CentrifugalMode::exact, count);

        for (int n = 0; n < count; ++n) {
          const double e_c0 = energy_formula(p, {n, l});
          const double e_zero = energy_formula(p_zero, {n, l});
          std::vector<Cell> row = {std::int64_t{n}, std::int64_t{l}, std::int64_t{D}, alpha};
          if (closed_c0) row.push_back(e_c0);
          if (closed_zero) row.push_back(e_zero);
          if (oracle_approx) row.push_back(approx[n]);
          double dev_c0 = kNaN, dev_zero = kNaN;
          if (oracle_exact) {
            const double ex = exact[n];
            row.push_back(ex);
            dev_c0 = std::abs(e_c0 - ex);
            dev_zero = std::abs(e_zero - ex);
            if (closed_c0) row.insert(row.end(), {dev_c0, dev_c0 / std::abs(ex)});
            if (closed_zero) row.insert(row.end(), {dev_zero, dev_zero / std::abs(ex)});
            if (closed_c0 && closed_zero) row.push_back(dev_c0 / dev_zero);
          }
          kt.add({n, l, D, alpha, 0}, std::move(row));
        }
      }
    }
  }
  const Table& table = kt.finish();
  if (table.rows.empty()) err << "warning: no bound states\n";
  emit(out, c, table, base_meta(c));
  return kSuccess;
}

int cmd_degeneracy(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_ranges(c);
  KeyedTable kt;
  kt.table.columns = {"n",         "l",      "D",      "direction",      "partner_l",
                      "partner_D", "alpha",  "energy", "partner_energy", "difference",
                      "bound"};
  int omitted = 0;
  for (double alpha : alphas_or(c, {0.1})) {
    for (int D : dims_or(c, {3, 4, 5})) {
      const PhysicalParams p = c.params(alpha, D);
      p.validate();
      for (int l = 0; l <= c.l_max; ++l) {
        for (int n = 0; n <= c.n_max; ++n) {
          for (int direction : {1, -1}) {
            DegeneracyPartner partner;
            try {
              partner = degeneracy_partner({n, l}, D, direction);
            } catch (const OutOfRange&) {
              ++omitted;
              continue;
            }
            const PhysicalParams pp = c.params(alpha, partner.D);
            const EnergyLevel mine = evaluate_level(p, {n, l});
            const EnergyLevel theirs = evaluate_level(pp, partner.q);
            kt.add({n, l, D, alpha, -direction},
                   {std::int64_t{n}, std::int64_t{l}, std::int64_t{D}, std::int64_t{direction},
                    std::int64_t{partner.q.l}, std::int64_t{partner.D}, alpha, mine.energy,
                    theirs.energy, mine.energy - theirs.energy, mine.bound});
          }
        }
      }
    }
  }
  if (omitted > 0) {
    err << "note: omitted " << omitted << " boundary rows with partner l < 0 or D < 2\n";
  }
  emit(out, c, kt.finish(), base_meta(c));
  return kSuccess;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::spectrum: return cmd_spectrum(c, out, err);
    case Command::wavefunction: return cmd_wavefunction(c, out, err);
    case Command::verify: return cmd_verify(c, out, err);
    case Command::compare: return cmd_compare(c, out, err);
    case Command::degeneracy: return cmd_degeneracy(c, out, err);
  }
  throw InvalidParams("unknown command");
}

}  // namespace

PhysicalParams RunConfig::params(double alpha, int D) const {
  PhysicalParams p;
  p.alpha = alpha;
  p.Z = Z;
  p.D = D;
  p.c0 = c0;
  if (units == "paper") {
    p.hbar = 1.0;
    p.mu = 0.5;
    p.e2 = 1.0;
  } else {
    p.hbar = hbar;
    p.mu = mu;
    p.e2 = e2;
  }
  return p;
}

const char* to_string(Command command) {
  switch (command) {
    case Command::spectrum: return "spectrum";
    case Command::wavefunction: return "wavefunction";
    case Command::verify: return "verify";
    case Command::compare: return "compare";
    case Command::degeneracy: return "degeneracy";
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kSuccess;
  try {
    code = dispatch(config, buffer, err);
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }

  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out << " for writing\n";
      return kUsageError;
    }
    file << buffer.str();
  }
  return code;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig c;
  CLI::App app{"Bound states of the D-dimensional Hulthen potential", "hulthen"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Read key = value options from a file");
  app.allow_config_extras(false);

  const std::map<std::string, Command> commands = {{"spectrum", Command::spectrum},
                                                   {"wavefunction", Command::wavefunction},
                                                   {"verify", Command::verify},
                                                   {"compare", Command::compare},
                                                   {"degeneracy", Command::degeneracy}};
  const std::map<std::string, Format> formats = {{"csv", Format::csv}, {"json", Format::json}};

  std::string command, format = "csv";
  app.add_option("command", command, "spectrum | wavefunction | verify | compare | degeneracy")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("--alpha", c.alphas, "Screening parameter(s), comma separated")->delimiter(',');
  app.add_option("--D", c.dims, "Spatial dimension(s), comma separated")->delimiter(',');
  app.add_option("--Z", c.Z, "Charge number");
  auto* mu = app.add_option("--mu", c.mu, "Reduced mass (custom units)");
  auto* hbar = app.add_option("--hbar", c.hbar, "Reduced Planck constant (custom units)");
  auto* e2 = app.add_option("--e2", c.e2, "Squared elementary charge (custom units)");
  app.add_option("--units", c.units, "paper (hbar = 2mu = e2 = 1) or custom")
      ->check(CLI::IsMember({"paper", "custom"}));
  app.add_option("--c0", c.c0, "Centrifugal approximation constant");
  app.add_option("--nmax", c.n_max, "Largest radial quantum number");
  app.add_option("--lmax", c.l_max, "Largest angular momentum");
  app.add_option("--n", c.n, "Radial quantum number (wavefunction)");
  app.add_option("--l", c.l, "Angular momentum (wavefunction)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember(formats));
  app.add_flag("--pretty", c.pretty, "Aligned human-readable table");
  app.add_option("--out", c.out, "Output path (default standard output)");
  app.add_option("--samples", c.samples, "Wavefunction sample count");
  app.add_option("--sample-rmax", c.sample_r_max, "Largest sampled radius");
  app.add_option("--grid-m", c.grid_m, "Oracle grid points");
  app.add_option("--grid-rmax", c.grid_r_max, "Oracle box size");
  app.add_option("--tol", c.tol, "Oracle eigenvalue tolerance")->envname("HULTHEN_TOL");
  app.add_option("--modes", c.modes, "compare modes, comma separated")
      ->delimiter(',')
      ->check(CLI::IsMember(kModes));
  app.add_option("--suite", c.suite, "verify suite name or all");
  app.add_option("--perturb-c0", c.perturb_c0)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    exit_code = app.exit(e, out, err);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    return std::nullopt;
  }

  c.command = commands.at(command);
  c.format = formats.at(format);
  if (c.units == "paper" && (mu->count() + hbar->count() + e2->count()) > 0) {
    err << "error: --mu, --hbar and --e2 require --units custom\n";
    exit_code = kUsageError;
    return std::nullopt;
  }
  if (!(c.tol > 0.0)) {
    err << "error: --tol must be > 0\n";
    exit_code = kUsageError;
    return std::nullopt;
  }
  exit_code = kSuccess;
  return c;
}

}  // namespace hulthen::cli
