#include "dzeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "dzeta/oracle.hpp"
#include "dzeta/report_io.hpp"
#include "dzeta/zeta.hpp"

namespace dzeta {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_path;
  std::string format;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "Run configuration file (one 'key = value' per line)");
  cmd->add_option("--set", opts.overrides,
                  "Override a config key, e.g. --set model.lambda=0.5");
  cmd->add_option("--output", opts.output_path,
                  "Output file (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

RunConfig resolve_config(const CommonOpts& opts) {
  RunConfig rc;
  if (!opts.config_path.empty()) {
    rc = RunConfig::from_file(opts.config_path);
  }
  for (const std::string& kv : opts.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    }
    rc.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!opts.format.empty()) rc.output_format = opts.format;
  if (!opts.output_path.empty()) rc.output_path = opts.output_path;
  rc.validate();
  return rc;
}

Report make_report(const std::string& command, const RunConfig& rc) {
  Report rep;
  rep.command = command;
  rep.config = rc.resolved_entries();
  return rep;
}

void append_free_energy_scalars(Report& rep, const FreeEnergyReport& fe) {
  rep.scalar("a", fe.a);
  rep.scalar("series_partial", fe.series_partial);
  rep.scalar("k_used", static_cast<std::int64_t>(fe.k_used));
  rep.scalar("correction", fe.correction);
  rep.scalar("remainder_value", fe.remainder_value);
  rep.scalar("remainder_bound", fe.remainder_bound);
  rep.scalar("total", fe.total);
  rep.scalar("oracle_value", fe.oracle_value.value_or(kNaN));
  rep.scalar("discrepancy", fe.discrepancy.value_or(kNaN));
  rep.scalar("tail_bound", fe.tail_bound);
  rep.scalar("series_error", fe.series_error);
  rep.scalar("series_converged", fe.series_converged);
  rep.scalar("cancellation_warning", fe.cancellation_warning);
}

int cmd_free_energy(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const DisorderDistribution dist = rc.make_disorder();
  const FreeEnergyReport fe = quenched_free_energy(
      rc.model, dist, rc.series, rc.quadrature, /*attach_oracle=*/true);

  Report rep = make_report("free-energy", rc);
  append_free_energy_scalars(rep, fe);
  write_output(rep.render(rc.output_format), rc.output_path, out);
  if (!fe.series_converged) {
    err << "series did not settle within k_max = " << rc.series.k_max
        << " terms; reduce series.a or raise series.k_max\n";
    return 2;
  }
  return 0;
}

int cmd_moments(const RunConfig& rc, int k_max_override, std::ostream& out,
                std::ostream& err) {
  const DisorderDistribution dist = rc.make_disorder();
  const int k_max = k_max_override > 0 ? k_max_override : rc.series.k_max;
  const MomentTable table = moment_table(rc.model, dist, k_max, rc.quadrature);
  const MomentGrowthReport growth = verify_moment_growth(rc.model, dist, table);

  Report rep = make_report("moments", rc);
  rep.scalar("k_max", static_cast<std::int64_t>(k_max));
  const bool have_bound = growth.error.empty();
  rep.scalar("alpha", have_bound ? growth.alpha : kNaN);
  rep.scalar("beta", have_bound ? growth.beta : kNaN);
  rep.scalar("beta_m0_variant", have_bound ? growth.beta_m0 : kNaN);
  rep.scalar("growth_bound_ok", have_bound ? growth.ok : false);
  if (!have_bound) rep.scalar("growth_bound_note", growth.error);

  rep.columns = {"k",      "log_moment",   "error_estimate", "log_bound",
                 "margin", "pass",         "log_bound_m0",   "margin_m0"};
  for (int k = 1; k <= k_max; ++k) {
    const double lm = table.log_moments[k - 1];
    std::vector<Report::Cell> row;
    row.emplace_back(static_cast<std::int64_t>(k));
    row.emplace_back(lm);
    row.emplace_back(table.error_estimates[k - 1]);
    if (have_bound) {
      const MomentGrowthRow& g = growth.rows[k - 1];
      row.emplace_back(g.log_bound);
      row.emplace_back(g.margin);
      row.emplace_back(g.pass);
      row.emplace_back(g.log_bound_m0);
      row.emplace_back(g.log_bound_m0 - lm);
    } else {
      row.emplace_back(kNaN);
      row.emplace_back(kNaN);
      row.emplace_back(false);
      row.emplace_back(kNaN);
      row.emplace_back(kNaN);
    }
    rep.rows.push_back(std::move(row));
  }
  write_output(rep.render(rc.output_format), rc.output_path, out);
  if (have_bound && !growth.ok) {
    err << "moment growth bound violated; see margins\n";
    return 2;
  }
  return 0;
}

int cmd_phi(const RunConfig& rc, const std::vector<std::string>& s_args,
            bool split, std::ostream& out) {
  const DisorderDistribution dist = rc.make_disorder();

  std::vector<std::complex<double>> points;
  if (s_args.empty()) {
    for (double re : {0.0, 0.5, 1.0, 1.5, 2.0}) points.emplace_back(re, 0.0);
  } else {
    for (const std::string& s : s_args) {
      const auto comma = s.find(',');
      const double re = std::stod(s.substr(0, comma));
      const double im =
          comma == std::string::npos ? 0.0 : std::stod(s.substr(comma + 1));
      points.emplace_back(re, im);
    }
  }

  const double log_z0 =
      log_partition_function(rc.model, 0.0, rc.quadrature);
  Report rep = make_report("phi", rc);
  rep.scalar("z0", std::exp(log_z0));
  rep.columns = {"s_re",    "s_im", "phi_re", "phi_im",
                 "phi_abs", "z0_bound", "phi1", "phi2"};
  for (const auto& s : points) {
    const std::complex<double> value = phi(s, rc.model, dist, rc.quadrature);
    double phi1 = kNaN, phi2 = kNaN;
    if (split && s.imag() == 0.0 && s.real() > 0.0) {
      const PhiSplit parts =
          phi_split(s.real(), rc.series.a, rc.model, dist, rc.quadrature);
      phi1 = parts.phi1;
      phi2 = parts.phi2;
    }
    rep.rows.push_back({s.real(), s.imag(), value.real(), value.imag(),
                        std::abs(value), std::exp(-s.real() * log_z0), phi1,
                        phi2});
  }
  write_output(rep.render(rc.output_format), rc.output_path, out);
  return 0;
}

int cmd_sweep_a(const RunConfig& rc, std::vector<double> a_values,
                std::ostream& out, std::ostream& err) {
  if (a_values.empty()) a_values = {0.5, 1.0, 2.0};
  for (double a : a_values) {
    if (!(a > 0.0)) {
      throw std::invalid_argument("sweep-a requires every a > 0");
    }
  }
  const DisorderDistribution dist = rc.make_disorder();
  const double oracle = quenched_direct(rc.model, dist, rc.quadrature);

  Report rep = make_report("sweep-a", rc);
  rep.columns = {"a",
                 "k_used",
                 "series_partial",
                 "correction",
                 "remainder_value",
                 "remainder_bound",
                 "total",
                 "tail_bound",
                 "series_converged",
                 "cancellation_warning",
                 "discrepancy"};
  double total_min = std::numeric_limits<double>::infinity();
  double total_max = -std::numeric_limits<double>::infinity();
  bool all_converged = true;
  for (double a : a_values) {
    SeriesConfig scfg = rc.series;
    scfg.a = a;
    const FreeEnergyReport fe =
        quenched_free_energy(rc.model, dist, scfg, rc.quadrature);
    if (fe.series_converged) {
      total_min = std::min(total_min, fe.total);
      total_max = std::max(total_max, fe.total);
    } else {
      all_converged = false;
    }
    rep.rows.push_back({fe.a, static_cast<std::int64_t>(fe.k_used),
                        fe.series_partial, fe.correction, fe.remainder_value,
                        fe.remainder_bound, fe.total, fe.tail_bound,
                        fe.series_converged, fe.cancellation_warning,
                        fe.total - oracle});
  }
  rep.scalar("oracle_value", oracle);
  rep.scalar("total_spread",
             total_max >= total_min ? total_max - total_min : kNaN);
  write_output(rep.render(rc.output_format), rc.output_path, out);
  if (!all_converged) {
    err << "series did not settle for at least one a; such rows are flagged "
           "series_converged=false\n";
    return 2;
  }
  return 0;
}

struct CheckRow {
  std::string name;
  std::string status;  // pass | fail | skip
  double margin;
  std::string detail;
};

int cmd_validate(const RunConfig& rc, std::ostream& out) {
  const DisorderDistribution dist = rc.make_disorder();
  const ModelParams& params = rc.model;
  const QuadratureConfig& qcfg = rc.quadrature;
  std::vector<CheckRow> checks;

  const double log_z0 = log_partition_function(params, 0.0, qcfg);

  // Z(h) >= Z(0) > 0 and Z(h) = Z(-h) on pseudo-random h in [-10, 10].
  {
    std::mt19937_64 rng(rc.mc.seed);
    double min_gap = std::numeric_limits<double>::infinity();
    double max_asym = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double h = -10.0 + 20.0 * u;
      const double lz = log_partition_function(params, h, qcfg);
      const double lz_neg = log_partition_function(params, -h, qcfg);
      min_gap = std::min(min_gap, lz - log_z0);
      max_asym = std::max(max_asym, std::abs(lz - lz_neg));
    }
    checks.push_back({"partition_lower_bound",
                      min_gap >= -1e-9 ? "pass" : "fail", min_gap,
                      "min ln Z(h) - ln Z(0) over 1000 h in [-10,10]"});
    checks.push_back({"partition_evenness",
                      max_asym <= 1e-9 ? "pass" : "fail", 1e-9 - max_asym,
                      "max |ln Z(h) - ln Z(-h)|"});
  }

  // Geometric growth of moments and their log-convexity.
  {
    const int k_max = 12;
    const MomentTable table = moment_table(params, dist, k_max, qcfg);
    const MomentGrowthReport growth = verify_moment_growth(params, dist, table);
    if (!growth.error.empty()) {
      checks.push_back({"moment_growth_bound", "skip", kNaN, growth.error});
    } else {
      double min_margin = std::numeric_limits<double>::infinity();
      for (const auto& row : growth.rows) {
        min_margin = std::min(min_margin, row.margin);
      }
      checks.push_back({"moment_growth_bound",
                        growth.ok ? "pass" : "fail", min_margin,
                        "min of ln(alpha) + k ln(beta) - ln E[Z^k], k <= 12"});
    }
    double min_convexity = std::numeric_limits<double>::infinity();
    for (int k = 2; k < k_max; ++k) {
      const double gap = table.log_moments[k] + table.log_moments[k - 2] -
                         2.0 * table.log_moments[k - 1];
      const double slack = 2.0 * (table.error_estimates[k] +
                                  2.0 * table.error_estimates[k - 1] +
                                  table.error_estimates[k - 2]);
      min_convexity = std::min(min_convexity, gap + slack);
    }
    checks.push_back({"moment_log_convexity",
                      min_convexity >= 0.0 ? "pass" : "fail", min_convexity,
                      "min slackened convexity gap of k -> ln E[Z^k]"});
  }

  // Phi(0) = 1 within 1e-12.
  {
    const double phi0 = phi({0.0, 0.0}, params, dist, qcfg).real();
    const double err = std::abs(phi0 - 1.0);
    checks.push_back({"phi_normalization", err <= 1e-12 ? "pass" : "fail",
                      1e-12 - err, "|phi(0) - 1|"});
  }

  // |R(a)| <= exp(-Z(0)a)/(Z(0)a) on an a-grid.
  {
    double min_margin = std::numeric_limits<double>::infinity();
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
      const double r = remainder(a, params, dist, qcfg);
      const double bound = remainder_bound(a, params, qcfg);
      min_margin = std::min(min_margin, bound + 1e-12 - std::abs(r));
    }
    checks.push_back({"remainder_bound", min_margin >= 0.0 ? "pass" : "fail",
                      min_margin,
                      "min of bound - |R(a)| over a in {0.5,1,2,5}"});
  }

  // Series + correction + remainder against the direct average.
  const double direct = quenched_direct(params, dist, qcfg);
  {
    const FreeEnergyReport fe =
        quenched_free_energy(params, dist, rc.series, qcfg);
    const double diff = std::abs(fe.total - direct);
    const bool ok = fe.series_converged && diff <= 1e-6;
    checks.push_back({"series_identity", ok ? "pass" : "fail", 1e-6 - diff,
                      "|series total - direct quenched average|, a = " +
                          format_double(rc.series.a)});
  }

  // E[ln Z] <= ln E[Z]; equality only for a degenerate measure.
  {
    const double log_mean_z = moment(params, dist, 1, qcfg).log_value;
    const double gap = log_mean_z - direct;
    bool ok;
    std::string detail = "ln E[Z] - E[ln Z] = " + format_double(gap);
    if (dist.is_degenerate()) {
      ok = std::abs(gap) <= 1e-10;
      detail += " (degenerate: equality expected)";
    } else {
      ok = gap >= -1e-10;
    }
    checks.push_back({"jensen_gap", ok ? "pass" : "fail", gap, detail});
  }

  Report rep = make_report("validate", rc);
  bool all_ok = true;
  int n_pass = 0, n_fail = 0, n_skip = 0;
  rep.columns = {"check", "status", "margin", "detail"};
  for (const auto& c : checks) {
    if (c.status == "fail") {
      all_ok = false;
      ++n_fail;
    } else if (c.status == "skip") {
      ++n_skip;
    } else {
      ++n_pass;
    }
  }
  rep.scalar("passed", static_cast<std::int64_t>(n_pass));
  rep.scalar("failed", static_cast<std::int64_t>(n_fail));
  rep.scalar("skipped", static_cast<std::int64_t>(n_skip));
  rep.scalar("all_ok", all_ok);
  for (const auto& c : checks) {
    rep.rows.push_back({c.name, c.status, c.margin, c.detail});
  }
  write_output(rep.render(rc.output_format), rc.output_path, out);
  return all_ok ? 0 : 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quenched average free energy of the zero-dimensional "
               "random-field phi^4 model"};
  app.name("dzeta");
  app.require_subcommand(1);

  CommonOpts opts;
  int k_max_override = 0;
  std::vector<std::string> s_args;
  bool split = false;
  std::vector<double> a_values;

  CLI::App* fe = app.add_subcommand(
      "free-energy", "Moment series + correction + remainder, with the "
                     "direct-quadrature value attached");
  add_common_options(fe, opts);

  CLI::App* mo = app.add_subcommand(
      "moments", "ln E[Z^k] table with geometric growth bound margins");
  add_common_options(mo, opts);
  mo->add_option("--k-max", k_max_override, "Highest moment order")
      ->check(CLI::PositiveNumber);

  CLI::App* ph = app.add_subcommand(
      "phi", "Evaluate phi(s) = E[Z(h)^-s] on one or more s values");
  add_common_options(ph, opts);
  ph->add_option("--s", s_args, "Evaluation point 're' or 're,im' (repeatable)");
  ph->add_flag("--split", split,
               "Also report the head/tail split at t = series.a for real s > 0");

  CLI::App* sw = app.add_subcommand(
      "sweep-a", "Free energy for several split points a");
  add_common_options(sw, opts);
  sw->add_option("--a", a_values, "Split point (repeatable; default 0.5 1 2)");

  CLI::App* va = app.add_subcommand(
      "validate", "Run the full invariant suite and report margins");
  add_common_options(va, opts);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const RunConfig rc = resolve_config(opts);
    if (fe->parsed()) return cmd_free_energy(rc, out, err);
    if (mo->parsed()) return cmd_moments(rc, k_max_override, out, err);
    if (ph->parsed()) return cmd_phi(rc, s_args, split, out);
    if (sw->parsed()) return cmd_sweep_a(rc, a_values, out, err);
    if (va->parsed()) return cmd_validate(rc, out);
    err << "no subcommand given\n";
    return 1;
  } catch (const ConvergenceError& e) {
    err << "non-convergence: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "non-convergence: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dzeta
